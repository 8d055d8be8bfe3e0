#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace uct {

using Vertex = std::uint32_t;

/// Fixed-size bitset over vertex indices, laid out in 64-bit words like a Graph row.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool test(Vertex v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void set(Vertex v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Vertex v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  std::size_t count() const noexcept;
  bool none() const noexcept;
  /// Smallest member, or size() if empty.
  std::size_t first() const noexcept;
  std::vector<Vertex> members() const;

  std::span<std::uint64_t> words() noexcept { return words_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph stored as a dense symmetric bit matrix.
/// Built through GraphBuilder, which enforces no loops and symmetry.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return stride_; }
  std::span<const std::uint64_t> row(Vertex v) const noexcept { return {bits_.data() + v * stride_, stride_}; }
  bool has_edge(Vertex u, Vertex v) const noexcept {
    return (bits_[u * stride_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  std::size_t degree(Vertex v) const noexcept;
  std::size_t edge_count() const noexcept;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<std::size_t> degrees() const;

  /// Optional per-vertex labels used only for export; empty when absent.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const&;
  Graph with_labels(std::vector<std::string> labels) &&;

  /// Labeled equality: same vertex count and identical adjacency. Labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) noexcept { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> labels_;
};

class GraphBuilder {
 public:
  /// Throws GraphTooLarge above the hard vertex ceiling.
  explicit GraphBuilder(std::size_t vertex_count);

  std::size_t vertex_count() const noexcept { return g_.n_; }
  /// Adds the undirected edge uv. Loops are rejected with InvalidArgument.
  void add_edge(Vertex u, Vertex v);
  /// Sets the half-row of u only; callers filling every row in parallel use this and
  /// finish with build(), which symmetrizes.
  void set_arc(Vertex u, Vertex v) noexcept {
    g_.bits_[u * g_.stride_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  }
  /// Whole half-row of u for word-at-a-time filling; same contract as set_arc.
  std::span<std::uint64_t> row_words(Vertex u) noexcept { return {g_.bits_.data() + u * g_.stride_, g_.stride_}; }
  void set_labels(std::vector<std::string> labels);

  /// Symmetrizes arcs into edges and returns the graph. Throws InvalidArgument on loops.
  Graph build() &&;

 private:
  Graph g_;
};

/// Subgraph induced on the given vertices, renumbered in the order given.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Applies a relabeling: vertex v of g becomes mapping[v]. mapping must be a permutation.
Graph relabel(const Graph& g, std::span<const Vertex> mapping);

}  // namespace uct
