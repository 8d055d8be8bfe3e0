#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "uct/graph.hpp"

namespace uct {

using Component = std::vector<Vertex>;

/// Connected components, each sorted ascending, ordered by their smallest vertex.
std::vector<Component> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Hop distances between every pair of vertices; kInfinity across components.
class DistanceMatrix {
 public:
  using value_type = std::uint32_t;
  static constexpr value_type kInfinity = std::numeric_limits<value_type>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kInfinity) {}

  std::size_t size() const noexcept { return n_; }
  value_type operator()(Vertex u, Vertex v) const noexcept { return d_[u * n_ + v]; }
  std::span<const value_type> row(Vertex u) const noexcept { return {d_.data() + u * n_, n_}; }
  std::span<value_type> row(Vertex u) noexcept { return {d_.data() + u * n_, n_}; }
  /// Largest finite entry.
  value_type max_finite() const noexcept;
  bool all_finite() const noexcept;

 private:
  std::size_t n_ = 0;
  std::vector<value_type> d_;
};

/// Single-source BFS over the bit rows.
std::vector<DistanceMatrix::value_type> bfs_distances(const Graph& g, Vertex source);
/// BFS from every vertex, parallel over sources.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Throws DisconnectedGraph.
std::uint32_t diameter(const Graph& g);
std::uint32_t diameter(const DistanceMatrix& d);

struct TriameterResult {
  std::uint32_t value = 0;
  /// Lexicographically first triple u < v < w attaining the value (all equal for V < 3).
  std::array<Vertex, 3> triple{};
};

/// Exact maximum of d(u,v)+d(u,w)+d(v,w) over unordered triples. Pairs whose distance
/// cannot beat the current best are skipped, and the search stops once 3*diam is reached.
/// Throws DisconnectedGraph.
TriameterResult triameter(const Graph& g);
TriameterResult triameter(const DistanceMatrix& d);

struct CliqueResult {
  std::size_t size = 0;
  std::vector<Vertex> vertices;  // ascending
};

/// Exact maximum clique by branch and bound with a greedy-colouring bound.
CliqueResult maximum_clique(const Graph& g);
inline std::size_t clique_number(const Graph& g) { return maximum_clique(g).size; }
bool is_clique(const Graph& g, std::span<const Vertex> vertices);

struct Bipartition {
  std::vector<Vertex> part_a;  // contains the smallest vertex
  std::vector<Vertex> part_b;
};

/// Proper 2-colouring of every component, or nullopt if some component has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);
/// The bipartition if g is complete bipartite with both parts non-empty. Throws DisconnectedGraph.
std::optional<Bipartition> is_complete_bipartite(const Graph& g);
/// Checks that every cross pair is an edge and no pair inside a part is.
bool verify_complete_bipartite(const Graph& g, const Bipartition& parts);

/// A(G): u ~ v iff d(u,v) = diam(G). Throws DisconnectedGraph.
Graph antipodal(const Graph& g);

}  // namespace uct
