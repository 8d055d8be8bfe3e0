#include "uct/graph_algorithms.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <queue>
#include <random>

#include "uct/error.hpp"
#include "uct/parallel.hpp"

namespace uct {
namespace {

void require_connected(const DistanceMatrix& d) {
  if (!d.all_finite()) throw Error(ErrorKind::DisconnectedGraph, "graph is not connected");
}

template <typename Fn>
void for_each_member(std::span<const std::uint64_t> words, Fn&& fn) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::uint64_t w = words[i]; w != 0; w &= w - 1) {
      fn(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
    }
  }
}

}  // namespace

std::vector<Component> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  VertexSet unvisited(n);
  for (Vertex v = 0; v < n; ++v) unvisited.set(v);

  std::vector<Component> out;
  auto free_words = unvisited.words();
  while (!unvisited.none()) {
    const auto root = static_cast<Vertex>(unvisited.first());
    Component comp{root};
    unvisited.reset(root);
    for (std::size_t head = 0; head < comp.size(); ++head) {
      auto r = g.row(comp[head]);
      for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t fresh = r[i] & free_words[i];
        free_words[i] &= ~fresh;
        for (; fresh != 0; fresh &= fresh - 1) comp.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(fresh)));
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

DistanceMatrix::value_type DistanceMatrix::max_finite() const noexcept {
  value_type best = 0;
  for (auto x : d_) {
    if (x != kInfinity) best = std::max(best, x);
  }
  return best;
}

bool DistanceMatrix::all_finite() const noexcept {
  return std::none_of(d_.begin(), d_.end(), [](value_type x) { return x == kInfinity; });
}

namespace {

void bfs_into(const Graph& g, Vertex source, std::span<DistanceMatrix::value_type> dist) {
  const std::size_t stride = g.words_per_row();
  std::fill(dist.begin(), dist.end(), DistanceMatrix::kInfinity);
  std::vector<std::uint64_t> visited(stride, 0), frontier(stride, 0), next(stride, 0);
  visited[source >> 6] |= std::uint64_t{1} << (source & 63);
  frontier = visited;
  dist[source] = 0;

  for (DistanceMatrix::value_type level = 1;; ++level) {
    std::fill(next.begin(), next.end(), 0);
    for_each_member(frontier, [&](Vertex v) {
      auto r = g.row(v);
      for (std::size_t i = 0; i < stride; ++i) next[i] |= r[i];
    });
    bool any = false;
    for (std::size_t i = 0; i < stride; ++i) {
      next[i] &= ~visited[i];
      visited[i] |= next[i];
      any = any || next[i] != 0;
    }
    if (!any) break;
    for_each_member(next, [&](Vertex v) { dist[v] = level; });
    frontier.swap(next);
  }
}

}  // namespace

std::vector<DistanceMatrix::value_type> bfs_distances(const Graph& g, Vertex source) {
  std::vector<DistanceMatrix::value_type> dist(g.vertex_count());
  bfs_into(g, source, dist);
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix d(g.vertex_count());
  parallel_for(0, g.vertex_count(), [&](std::size_t s) { bfs_into(g, static_cast<Vertex>(s), d.row(static_cast<Vertex>(s))); });
  return d;
}

std::uint32_t diameter(const DistanceMatrix& d) {
  require_connected(d);
  return d.max_finite();
}

namespace {

// True iff every vertex reaches every other within two steps. Per source, neighbour rows
// are OR-ed in, random ones first (row order tends to cluster similar neighbourhoods),
// and the scan stops as soon as the two-hop set is everything.
bool within_two_hops(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t stride = g.words_per_row();
  const std::uint64_t tail = n % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n % 64)) - 1;
  std::atomic<bool> ok{true};
  parallel_for(0, n, [&](std::size_t ui) {
    if (!ok.load(std::memory_order_relaxed)) return;
    const auto u = static_cast<Vertex>(ui);
    auto full = [&](const std::vector<std::uint64_t>& r) {
      for (std::size_t i = 0; i + 1 < stride; ++i) {
        if (r[i] != ~std::uint64_t{0}) return false;
      }
      return (r[stride - 1] & tail) == tail;
    };
    auto ru = g.row(u);
    std::vector<std::uint64_t> reached(ru.begin(), ru.end());
    reached[u >> 6] |= std::uint64_t{1} << (u & 63);
    if (full(reached)) return;
    auto absorb = [&](Vertex w) {
      auto rw = g.row(w);
      for (std::size_t i = 0; i < stride; ++i) reached[i] |= rw[i];
    };
    // A few random neighbours usually settle it; the full sweep keeps the answer exact.
    std::mt19937_64 rng(ui);
    std::size_t absorbed = 0;
    for (int tries = 0; tries < 4096 && absorbed < 256; ++tries) {
      const auto w = static_cast<Vertex>(rng() % n);
      if (!g.has_edge(u, w)) continue;
      absorb(w);
      if (++absorbed % 8 == 0 && full(reached)) return;
    }
    for (std::size_t i = 0; i < stride; ++i) {
      for (std::uint64_t bits = ru[i]; bits != 0; bits &= bits - 1) {
        absorb(static_cast<Vertex>(i * 64 + std::countr_zero(bits)));
        if (++absorbed % 64 == 0 && full(reached)) return;
      }
    }
    if (full(reached)) return;
    ok.store(false, std::memory_order_relaxed);
  });
  return ok.load();
}

// Above this size a full distance matrix is not materialised.
constexpr std::size_t kMatrixVertexLimit = 16384;

}  // namespace

// Works row by row so large dense graphs never need the V x V distance matrix.
std::uint32_t diameter(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 0;
  if (!is_connected(g)) throw Error(ErrorKind::DisconnectedGraph, "graph is not connected");
  if (g.edge_count() == n * (n - 1) / 2) return 1;
  if (within_two_hops(g)) return 2;

  std::vector<std::uint32_t> ecc(n, 0);
  parallel_for(0, n, [&](std::size_t s) {
    const auto dist = bfs_distances(g, static_cast<Vertex>(s));
    ecc[s] = *std::max_element(dist.begin(), dist.end());
  });
  return *std::max_element(ecc.begin(), ecc.end());
}

TriameterResult triameter(const DistanceMatrix& d) {
  require_connected(d);
  const std::size_t n = d.size();
  TriameterResult result;
  if (n < 3) {
    // Triples with repeated vertices: for two vertices the best is d(u,v)+d(u,v)+0.
    if (n == 2) result = {2 * d(0, 1), {0, 0, 1}};
    return result;
  }

  const std::uint32_t diam = d.max_finite();
  const std::uint32_t bound = 3 * diam;

  // Best triple per first vertex; a shared marker stops work past the first row that
  // reaches the bound, so the combined answer stays the lexicographic first.
  std::vector<TriameterResult> per_row(n);
  std::atomic<std::size_t> bound_row{n};

  parallel_for(0, n - 2, [&](std::size_t ui) {
    if (ui > bound_row.load(std::memory_order_relaxed)) return;
    const auto u = static_cast<Vertex>(ui);
    auto du = d.row(u);
    TriameterResult best{0, {u, u + 1, u + 2}};
    bool found = false;
    for (Vertex v = u + 1; v + 1 < n && !found; ++v) {
      const std::uint32_t duv = du[v];
      if (duv + 2 * diam <= best.value) continue;
      auto dv = d.row(v);
      for (Vertex w = v + 1; w < n; ++w) {
        const std::uint32_t s = duv + du[w] + dv[w];
        if (s > best.value) {
          best = {s, {u, v, w}};
          if (s == bound) {
            found = true;
            break;
          }
        }
      }
    }
    per_row[ui] = best;
    if (found) {
      std::size_t cur = bound_row.load();
      while (ui < cur && !bound_row.compare_exchange_weak(cur, ui)) {
      }
    }
  });

  const std::size_t last = std::min(bound_row.load(), n - 3);
  for (std::size_t ui = 0; ui <= last; ++ui) {
    if (per_row[ui].value > result.value) result = per_row[ui];
  }
  return result;
}

namespace {

// Triameter when diam(g) <= 2, where d(u,v) is 1 on edges and 2 elsewhere. For a pair
// (u,v) the best third vertex w > v is found with word operations on the two rows.
TriameterResult triameter_two_hop(const Graph& g, std::uint32_t diam) {
  const std::size_t n = g.vertex_count();
  const std::size_t stride = g.words_per_row();
  const std::uint32_t bound = 3 * diam;
  std::vector<TriameterResult> per_row(n);
  std::atomic<std::size_t> bound_row{n};

  parallel_for(0, n - 2, [&](std::size_t ui) {
    if (ui > bound_row.load(std::memory_order_relaxed)) return;
    const auto u = static_cast<Vertex>(ui);
    auto ru = g.row(u);
    TriameterResult best{0, {u, u + 1, u + 2}};
    bool found = false;
    for (Vertex v = u + 1; v + 1 < n && !found; ++v) {
      const std::uint32_t duv = g.has_edge(u, v) ? 1 : 2;
      if (duv + 4 <= best.value) continue;
      auto rv = g.row(v);
      // Candidates by (d(u,w) + d(v,w)): 4 off both rows, 3 in exactly one, 2 in both.
      for (std::uint32_t extra : {4u, 3u, 2u}) {
        const std::uint32_t sum = duv + extra;
        if (sum <= best.value) break;
        std::size_t w = n;
        for (std::size_t i = (v + 1) / 64; i < stride && w == n; ++i) {
          std::uint64_t cand = extra == 4 ? ~(ru[i] | rv[i]) : extra == 3 ? (ru[i] ^ rv[i]) : (ru[i] & rv[i]);
          if (i == (v + 1) / 64) cand &= ~std::uint64_t{0} << ((v + 1) & 63);
          if (i == stride - 1 && n % 64 != 0) cand &= (std::uint64_t{1} << (n % 64)) - 1;
          if (cand != 0) w = i * 64 + static_cast<std::size_t>(std::countr_zero(cand));
        }
        if (w == n) continue;
        best = {sum, {u, v, static_cast<Vertex>(w)}};
        if (sum == bound) found = true;
        break;
      }
    }
    per_row[ui] = best;
    if (found) {
      std::size_t cur = bound_row.load();
      while (ui < cur && !bound_row.compare_exchange_weak(cur, ui)) {
      }
    }
  });

  TriameterResult result;
  const std::size_t last = std::min(bound_row.load(), n - 3);
  for (std::size_t ui = 0; ui <= last; ++ui) {
    if (per_row[ui].value > result.value) result = per_row[ui];
  }
  return result;
}

}  // namespace

TriameterResult triameter(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n >= 3) {
    const std::uint32_t diam = diameter(g);
    if (diam <= 2) return triameter_two_hop(g, diam);
  }
  if (n > kMatrixVertexLimit) {
    throw Error(ErrorKind::GraphTooLarge, "triameter beyond diameter 2 needs a distance matrix; graph too large");
  }
  return triameter(all_pairs_distances(g));
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

namespace {

// Bitset branch and bound in the style of BBMC: candidates are coloured greedily into
// independent sets, and colour counts bound the clique size reachable from each branch.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g), stride_(g.words_per_row()) {}

  CliqueResult run() {
    const std::size_t n = g_.vertex_count();
    if (n == 0) return {};
    std::vector<std::uint64_t> all(stride_, 0);
    for (Vertex v = 0; v < n; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
    best_ = {1, {0}};
    expand(all);
    std::sort(best_.vertices.begin(), best_.vertices.end());
    return best_;
  }

 private:
  void expand(std::vector<std::uint64_t>& candidates) {
    std::vector<Vertex> order;
    std::vector<std::uint32_t> colour;
    colour_sort(candidates, order, colour);

    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + colour[i] <= best_.size) return;
      const Vertex v = order[i];
      current_.push_back(v);

      std::vector<std::uint64_t> next(stride_);
      bool empty = true;
      auto r = g_.row(v);
      for (std::size_t w = 0; w < stride_; ++w) {
        next[w] = candidates[w] & r[w];
        empty = empty && next[w] == 0;
      }
      if (empty) {
        if (current_.size() > best_.size) best_ = {current_.size(), current_};
      } else {
        expand(next);
      }
      current_.pop_back();
      candidates[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
  }

  void colour_sort(const std::vector<std::uint64_t>& candidates, std::vector<Vertex>& order,
                   std::vector<std::uint32_t>& colour) const {
    std::vector<std::uint64_t> uncoloured = candidates;
    std::vector<std::uint64_t> available(stride_);
    std::uint32_t k = 0;
    bool remaining = true;
    while (remaining) {
      ++k;
      available = uncoloured;
      for (std::size_t w = 0; w < stride_; ++w) {
        while (available[w] != 0) {
          const auto v = static_cast<Vertex>(w * 64 + std::countr_zero(available[w]));
          const std::uint64_t bit = std::uint64_t{1} << (v & 63);
          available[w] &= ~bit;
          uncoloured[w] &= ~bit;
          auto r = g_.row(v);
          for (std::size_t x = w; x < stride_; ++x) available[x] &= ~r[x];
          order.push_back(v);
          colour.push_back(k);
        }
      }
      remaining = std::any_of(uncoloured.begin(), uncoloured.end(), [](std::uint64_t x) { return x != 0; });
    }
  }

  const Graph& g_;
  std::size_t stride_;
  CliqueResult best_;
  std::vector<Vertex> current_;
};

}  // namespace

CliqueResult maximum_clique(const Graph& g) { return CliqueSearch(g).run(); }

std::optional<Bipartition> bipartition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (Vertex v : g.neighbors(u)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          queue.push(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? parts.part_a : parts.part_b).push_back(v);
  return parts;
}

bool verify_complete_bipartite(const Graph& g, const Bipartition& parts) {
  if (parts.part_a.size() + parts.part_b.size() != g.vertex_count()) return false;
  for (Vertex a : parts.part_a) {
    for (Vertex b : parts.part_b) {
      if (!g.has_edge(a, b)) return false;
    }
  }
  for (const auto* part : {&parts.part_a, &parts.part_b}) {
    for (std::size_t i = 0; i < part->size(); ++i) {
      for (std::size_t j = i + 1; j < part->size(); ++j) {
        if (g.has_edge((*part)[i], (*part)[j])) return false;
      }
    }
  }
  return true;
}

std::optional<Bipartition> is_complete_bipartite(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::DisconnectedGraph, "graph is not connected");
  auto parts = bipartition(g);
  if (!parts || parts->part_a.empty() || parts->part_b.empty()) return std::nullopt;
  if (!verify_complete_bipartite(g, *parts)) return std::nullopt;
  return parts;
}

Graph antipodal(const Graph& g) {
  const DistanceMatrix d = all_pairs_distances(g);
  const std::uint32_t diam = diameter(d);
  const std::size_t n = g.vertex_count();
  GraphBuilder b(n);
  if (diam > 0) {
    parallel_for(0, n, [&](std::size_t u) {
      auto du = d.row(static_cast<Vertex>(u));
      for (Vertex v = 0; v < n; ++v) {
        if (du[v] == diam) b.set_arc(static_cast<Vertex>(u), v);
      }
    });
  }
  b.set_labels(g.labels());
  return std::move(b).build();
}

}  // namespace uct
