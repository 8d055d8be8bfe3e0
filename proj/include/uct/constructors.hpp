#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "uct/graph.hpp"
#include "uct/limits.hpp"
#include "uct/tri_ring.hpp"

namespace uct {

/// Mixed-radix bijection between vertex indices and digit tuples (first digit most
/// significant). Every constructed graph orders its vertices this way, so ring elements,
/// Hamming tuples and product pairs are recovered from the vertex index alone.
class VertexLabeling {
 public:
  explicit VertexLabeling(std::vector<std::uint64_t> radices);

  std::span<const std::uint64_t> radices() const noexcept { return radices_; }
  std::uint64_t size() const noexcept { return size_; }
  std::vector<std::uint64_t> digits(std::uint64_t vertex) const;
  std::uint64_t vertex_of(std::span<const std::uint64_t> digits) const;

 private:
  std::vector<std::uint64_t> radices_;
  std::uint64_t size_ = 1;
};

/// Labeling of the Cayley graph of spec: matrix entries (triangular) or the residue (Z_m).
VertexLabeling cayley_labeling(const RingSpec& spec);
/// Labeling of H(l, q) and its antipodal graph: l coordinates over 0..q-1.
VertexLabeling hamming_labeling(std::uint32_t l, std::uint32_t q);

/// Human-readable vertex name for a matrix: rows of the upper triangle, e.g. "[1,0;2]".
std::string matrix_label(const TriMatrix& a);

/// C_R: vertices in canonical ring order, x ~ y iff x - y is a unit (determinant rule for
/// triangular rings, gcd rule for Z_m). Throws RingTooLarge and the field errors.
Graph unitary_cayley(const RingSpec& spec, const Limits& limits = {});
/// Triangular rings only: x ~ y iff all diagonal entries differ. Must equal unitary_cayley.
Graph unitary_cayley_by_diagonal(const RingSpec& spec, const Limits& limits = {});

/// H(l, q): l-tuples over 0..q-1 in base-q order, adjacent iff they differ in one coordinate.
Graph hamming_graph(std::uint32_t l, std::uint32_t q, const Limits& limits = {});
/// A(H(n, q)) built directly: adjacent iff the tuples differ in every coordinate.
Graph antipodal_hamming_direct(std::uint32_t n, std::uint32_t q, const Limits& limits = {});

/// G • H on V(G) x V(H), vertex (u, v) at index u*|V(H)| + v:
/// (u1,v1) ~ (u2,v2) iff v1v2 in E(H) and (u1u2 in E(G) or u1 = u2).
Graph semistrong_product(const Graph& g, const Graph& h, const Limits& limits = {});

Graph complete_graph(std::size_t m, const Limits& limits = {});
/// Parts are the index ranges [0, a) and [a, a+b).
Graph complete_bipartite(std::size_t a, std::size_t b, const Limits& limits = {});

struct DiagonalQuotient {
  /// Vertices are the q^n diagonals in base-q order; two classes are adjacent iff some pair
  /// of representatives is adjacent in C_{T_n(F)}.
  Graph graph;
  /// True iff "some pair adjacent" and "every pair adjacent" gave the same edge set.
  bool every_pair_agrees = false;
  std::uint64_t class_size = 0;
};

/// Quotient of C_{T_n(F)} by equality of main diagonals. Throws RingTooLarge/GraphTooLarge.
DiagonalQuotient diagonal_quotient(const RingSpec& spec, const Limits& limits = {});

/// Base-q code of the diagonal of the matrix with the given ring encoding.
std::uint64_t diagonal_code(const TriangularRing& ring, std::uint64_t code);
/// Base-q code of the strictly-upper part of the matrix with the given ring encoding.
std::uint64_t strict_upper_code(const TriangularRing& ring, std::uint64_t code);
/// The map a -> (strict-upper part, diagonal) as product indices of K_m • A(H(n,q)):
/// result[code] = strict_upper_code * q^n + diagonal_code. A permutation of 0..|T_n|-1.
std::vector<Vertex> product_correspondence(const TriangularRing& ring);

/// diag(a, ..., a) for every a in the field, in element order.
std::vector<std::uint64_t> scalar_matrix_codes(const TriangularRing& ring);

}  // namespace uct
