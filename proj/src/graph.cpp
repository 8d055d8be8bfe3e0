#include "uct/graph.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "uct/error.hpp"
#include "uct/limits.hpp"
#include "uct/parallel.hpp"

namespace uct {

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t VertexSet::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return size_;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

std::size_t Graph::degree(Vertex v) const noexcept {
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t total = 0;
  for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total / 2;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::uint64_t w = r[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(n_);
  for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

Graph Graph::with_labels(std::vector<std::string> labels) const& {
  Graph copy = *this;
  return std::move(copy).with_labels(std::move(labels));
}

Graph Graph::with_labels(std::vector<std::string> labels) && {
  if (!labels.empty() && labels.size() != n_) {
    throw Error(ErrorKind::InvalidArgument, "label count does not match vertex count");
  }
  labels_ = std::move(labels);
  return std::move(*this);
}

GraphBuilder::GraphBuilder(std::size_t vertex_count) {
  if (vertex_count > kHardVertexCeiling) {
    throw Error(ErrorKind::GraphTooLarge,
                std::to_string(vertex_count) + " vertices exceeds the hard ceiling " + std::to_string(kHardVertexCeiling));
  }
  g_.n_ = vertex_count;
  g_.stride_ = (vertex_count + 63) / 64;
  g_.bits_.assign(g_.n_ * g_.stride_, 0);
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= g_.n_ || v >= g_.n_) throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
  if (u == v) throw Error(ErrorKind::InvalidArgument, "loops are not allowed");
  set_arc(u, v);
  set_arc(v, u);
}

void GraphBuilder::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != g_.n_) {
    throw Error(ErrorKind::InvalidArgument, "label count does not match vertex count");
  }
  g_.labels_ = std::move(labels);
}

namespace {

// In-place transpose of a 64x64 bit block, rows as words, bit j of row i = column j.
void transpose64(std::array<std::uint64_t, 64>& a) {
  std::uint64_t mask = 0x00000000FFFFFFFFull;
  for (unsigned width = 32; width != 0; width >>= 1, mask ^= mask << width) {
    for (unsigned k = 0; k < 64; k = (k + width + 1) & ~width) {
      const std::uint64_t t = ((a[k] >> width) ^ a[k + width]) & mask;
      a[k] ^= t << width;
      a[k + width] ^= t;
    }
  }
}

}  // namespace

Graph GraphBuilder::build() && {
  const std::size_t n = g_.n_;
  for (Vertex u = 0; u < n; ++u) {
    if (g_.has_edge(u, u)) throw Error(ErrorKind::InvalidArgument, "loop at vertex " + std::to_string(u));
  }
  // OR the matrix with its transpose one 64x64 block pair at a time.
  const std::size_t blocks = g_.stride_;
  auto load = [&](std::size_t bi, std::size_t bj, std::array<std::uint64_t, 64>& a) {
    for (std::size_t r = 0; r < 64; ++r) {
      const std::size_t row = bi * 64 + r;
      a[r] = row < n ? g_.bits_[row * g_.stride_ + bj] : 0;
    }
  };
  parallel_for(0, blocks, [&](std::size_t bi) {
    std::array<std::uint64_t, 64> a{}, b{};
    for (std::size_t bj = bi; bj < blocks; ++bj) {
      load(bi, bj, a);
      load(bj, bi, b);
      std::array<std::uint64_t, 64> at = a, bt = b;
      transpose64(at);
      transpose64(bt);
      for (std::size_t r = 0; r < 64; ++r) {
        if (bi * 64 + r < n) g_.bits_[(bi * 64 + r) * g_.stride_ + bj] = a[r] | bt[r];
        if (bj * 64 + r < n) g_.bits_[(bj * 64 + r) * g_.stride_ + bi] = b[r] | at[r];
      }
    }
  });
  return std::move(g_);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  GraphBuilder b(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.has_edge(vertices[i], vertices[j])) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    labels.reserve(vertices.size());
    for (Vertex v : vertices) labels.push_back(g.labels()[v]);
    b.set_labels(std::move(labels));
  }
  return std::move(b).build();
}

Graph relabel(const Graph& g, std::span<const Vertex> mapping) {
  const std::size_t n = g.vertex_count();
  if (mapping.size() != n) throw Error(ErrorKind::InvalidArgument, "mapping size does not match the graph");
  std::vector<bool> seen(n, false);
  for (Vertex m : mapping) {
    if (m >= n || seen[m]) throw Error(ErrorKind::InvalidArgument, "mapping is not a permutation");
    seen[m] = true;
  }
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v) b.add_edge(mapping[u], mapping[v]);
    }
  }
  return std::move(b).build();
}

}  // namespace uct
