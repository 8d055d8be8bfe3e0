#include "uct/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "uct/error.hpp"
#include "uct/limits.hpp"

namespace uct {

std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> refine_colours(const Graph& g, const Graph& h) {
  const Graph* graphs[2] = {&g, &h};
  std::vector<std::uint32_t> colour[2];
  for (int s = 0; s < 2; ++s) {
    colour[s].resize(graphs[s]->vertex_count());
    for (Vertex v = 0; v < colour[s].size(); ++v) colour[s][v] = static_cast<std::uint32_t>(graphs[s]->degree(v));
  }

  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::vector<std::uint32_t>> signature[2];
    for (int s = 0; s < 2; ++s) {
      signature[s].resize(colour[s].size());
      for (Vertex v = 0; v < colour[s].size(); ++v) {
        auto& sig = signature[s][v];
        for (Vertex u : graphs[s]->neighbors(v)) sig.push_back(colour[s][u]);
        std::sort(sig.begin(), sig.end());
        sig.insert(sig.begin(), colour[s][v]);
        ids.emplace(sig, 0);
      }
    }
    std::uint32_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (int s = 0; s < 2; ++s) {
      for (Vertex v = 0; v < colour[s].size(); ++v) colour[s][v] = ids.at(signature[s][v]);
    }
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {std::move(colour[0]), std::move(colour[1])};
}

bool verify_isomorphism(const Graph& g, const Graph& h, std::span<const Vertex> mapping) {
  const std::size_t n = g.vertex_count();
  if (h.vertex_count() != n || mapping.size() != n) return false;
  std::vector<bool> used(n, false);
  for (Vertex m : mapping) {
    if (m >= n || used[m]) return false;
    used[m] = true;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v) != h.has_edge(mapping[u], mapping[v])) return false;
    }
  }
  return true;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h, std::vector<std::uint32_t> cg, std::vector<std::uint32_t> ch)
      : g_(g), h_(h), cg_(std::move(cg)), ch_(std::move(ch)), n_(g.vertex_count()),
        map_(n_, kUnmapped), used_(n_, false) {}

  std::optional<std::vector<Vertex>> run() {
    plan_order();
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr Vertex kUnmapped = ~Vertex{0};

  // Visit order: start in the smallest colour class, then always take the vertex with the
  // most already-ordered neighbours so adjacency constraints bite early.
  void plan_order() {
    std::map<std::uint32_t, std::size_t> class_size;
    for (auto c : cg_) ++class_size[c];
    std::vector<bool> placed(n_, false);
    std::vector<std::size_t> links(n_, 0);
    order_.reserve(n_);
    for (std::size_t step = 0; step < n_; ++step) {
      Vertex pick = kUnmapped;
      for (Vertex v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        if (pick == kUnmapped || links[v] > links[pick] ||
            (links[v] == links[pick] && class_size[cg_[v]] < class_size[cg_[pick]])) {
          pick = v;
        }
      }
      placed[pick] = true;
      order_.push_back(pick);
      for (Vertex u : g_.neighbors(pick)) ++links[u];
    }
  }

  bool consistent(Vertex x, Vertex y) const {
    for (std::size_t i = 0; i < depth_; ++i) {
      const Vertex gx = order_[i];
      if (g_.has_edge(x, gx) != h_.has_edge(y, map_[gx])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const Vertex x = order_[depth];
    for (Vertex y = 0; y < n_; ++y) {
      if (used_[y] || ch_[y] != cg_[x]) continue;
      depth_ = depth;
      if (!consistent(x, y)) continue;
      map_[x] = y;
      used_[y] = true;
      if (extend(depth + 1)) return true;
      used_[y] = false;
      map_[x] = kUnmapped;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<std::uint32_t> cg_, ch_;
  std::size_t n_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
  std::size_t depth_ = 0;
};

}  // namespace

std::optional<std::vector<Vertex>> iso_check(const Graph& g, const Graph& h) {
  if (g.vertex_count() > kIsoOracleVertexCap || h.vertex_count() > kIsoOracleVertexCap) {
    throw Error(ErrorKind::GraphTooLargeForOracle,
                "isomorphism oracle is limited to " + std::to_string(kIsoOracleVertexCap) + " vertices");
  }
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;

  auto dg = g.degrees();
  auto dh = h.degrees();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;

  auto [cg, ch] = refine_colours(g, h);
  auto hist_g = cg;
  auto hist_h = ch;
  std::sort(hist_g.begin(), hist_g.end());
  std::sort(hist_h.begin(), hist_h.end());
  if (hist_g != hist_h) return std::nullopt;

  auto mapping = IsoSearch(g, h, std::move(cg), std::move(ch)).run();
  if (mapping && !verify_isomorphism(g, h, *mapping)) {
    throw Error(ErrorKind::InvalidArgument, "internal error: isomorphism witness failed verification");
  }
  return mapping;
}

}  // namespace uct
