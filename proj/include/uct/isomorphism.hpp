#pragma once

#include <optional>
#include <span>
#include <vector>

#include "uct/graph.hpp"

namespace uct {

/// Stable colour refinement (1-dimensional Weisfeiler-Leman) run jointly on both graphs,
/// so equal colours are comparable across them. Returns one colour vector per graph.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> refine_colours(const Graph& g, const Graph& h);

/// Backtracking isomorphism search for small graphs (<= 512 vertices each).
/// Returns mapping with mapping[v] = image of g-vertex v in h, verified edge by edge,
/// or nullopt when the graphs are not isomorphic. Throws GraphTooLargeForOracle.
std::optional<std::vector<Vertex>> iso_check(const Graph& g, const Graph& h);

/// True iff mapping is a bijection V(g) -> V(h) preserving adjacency and non-adjacency.
bool verify_isomorphism(const Graph& g, const Graph& h, std::span<const Vertex> mapping);

}  // namespace uct
