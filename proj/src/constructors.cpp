#include "uct/constructors.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "uct/error.hpp"
#include "uct/parallel.hpp"

namespace uct {
namespace {

void check_vertex_cap(std::uint64_t vertices, const Limits& limits, const std::string& what) {
  if (vertices > limits.vertex_cap) {
    throw Error(ErrorKind::GraphTooLarge,
                what + " needs " + std::to_string(vertices) + " vertices; cap is " + std::to_string(limits.vertex_cap));
  }
}

std::vector<std::string> tuple_labels(const VertexLabeling& labeling) {
  std::vector<std::string> labels(labeling.size());
  for (std::uint64_t v = 0; v < labeling.size(); ++v) {
    std::string s = "(";
    auto d = labeling.digits(v);
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    labels[v] = s + ")";
  }
  return labels;
}

// Flat table of decoded entries, one row of entry_count() elements per ring element.
std::vector<Element> decode_all(const TriangularRing& ring) {
  const std::size_t width = ring.entry_count();
  std::vector<Element> table(ring.order() * width);
  for (std::uint64_t code = 0; code < ring.order(); ++code) {
    ring.decode_into(code, std::span<Element>(table.data() + code * width, width));
  }
  return table;
}

std::vector<std::string> matrix_labels(const TriangularRing& ring) {
  std::vector<std::string> labels(ring.order());
  for (std::uint64_t code = 0; code < ring.order(); ++code) labels[code] = matrix_label(ring.decode(code));
  return labels;
}

}  // namespace

VertexLabeling::VertexLabeling(std::vector<std::uint64_t> radices) : radices_(std::move(radices)) {
  for (auto r : radices_) {
    if (r == 0) throw Error(ErrorKind::InvalidArgument, "radix must be positive");
    if (size_ > kHardVertexCeiling / r) throw Error(ErrorKind::GraphTooLarge, "labeling exceeds the hard ceiling");
    size_ *= r;
  }
}

std::vector<std::uint64_t> VertexLabeling::digits(std::uint64_t vertex) const {
  if (vertex >= size_) throw Error(ErrorKind::InvalidArgument, "vertex outside the labeling");
  std::vector<std::uint64_t> d(radices_.size());
  for (std::size_t i = radices_.size(); i-- > 0;) {
    d[i] = vertex % radices_[i];
    vertex /= radices_[i];
  }
  return d;
}

std::uint64_t VertexLabeling::vertex_of(std::span<const std::uint64_t> digits) const {
  if (digits.size() != radices_.size()) throw Error(ErrorKind::DimensionMismatch, "digit count mismatch");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= radices_[i]) throw Error(ErrorKind::InvalidArgument, "digit outside its radix");
    v = v * radices_[i] + digits[i];
  }
  return v;
}

VertexLabeling cayley_labeling(const RingSpec& spec) {
  if (!spec.is_triangular()) return VertexLabeling({spec.modulus});
  return VertexLabeling(std::vector<std::uint64_t>(triangle_size(spec.n), spec.field_order()));
}

VertexLabeling hamming_labeling(std::uint32_t l, std::uint32_t q) {
  return VertexLabeling(std::vector<std::uint64_t>(l, q));
}

std::string matrix_label(const TriMatrix& a) {
  std::string s = "[";
  for (std::uint32_t i = 0; i < a.dimension(); ++i) {
    if (i) s += ';';
    for (std::uint32_t j = i; j < a.dimension(); ++j) {
      if (j > i) s += ',';
      s += std::to_string(a.at(i, j));
    }
  }
  return s + "]";
}

Graph unitary_cayley(const RingSpec& spec, const Limits& limits) {
  validate(spec, limits);
  if (!spec.is_triangular()) {
    const IntegersMod ring(spec.modulus);
    const std::size_t n = spec.modulus;
    GraphBuilder b(n);
    parallel_for(0, n, [&](std::size_t x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (ring.is_unit(ring.sub(x, y))) b.set_arc(static_cast<Vertex>(x), static_cast<Vertex>(y));
      }
    });
    std::vector<std::string> labels(n);
    for (std::size_t x = 0; x < n; ++x) labels[x] = std::to_string(x);
    b.set_labels(std::move(labels));
    return std::move(b).build();
  }

  const TriangularRing ring = make_triangular_ring(spec, limits);
  const FieldTable& f = ring.field();
  const std::size_t n = ring.order();
  const std::size_t width = ring.entry_count();
  const auto table = decode_all(ring);
  const auto& diag = ring.diagonal_positions();
  const std::size_t dim = diag.size();
  const std::size_t q = f.order();

  // det(x - y) is the product of the diagonal entries of x - y, so per row it is a
  // function of y's diagonal alone: evaluate it once per diagonal, then look it up.
  std::size_t diagonals = 1;
  for (std::size_t i = 0; i < dim; ++i) diagonals *= q;
  std::vector<std::uint32_t> diag_index(n);
  for (std::size_t y = 0; y < n; ++y) {
    std::uint32_t code = 0;
    for (auto pos : diag) code = static_cast<std::uint32_t>(code * q + table[y * width + pos]);
    diag_index[y] = code;
  }
  std::vector<Element> diag_digits(diagonals * dim);
  for (std::size_t d = 0; d < diagonals; ++d) {
    std::size_t rest = d;
    for (std::size_t i = dim; i-- > 0;) {
      diag_digits[d * dim + i] = static_cast<Element>(rest % q);
      rest /= q;
    }
  }

  GraphBuilder b(n);
  parallel_for(0, n, [&](std::size_t x) {
    std::vector<char> unit(diagonals);
    const Element* ex = table.data() + x * width;
    for (std::size_t d = 0; d < diagonals; ++d) {
      Element det = 1;
      for (std::size_t i = 0; i < dim; ++i) det = f.mul(det, f.sub(ex[diag[i]], diag_digits[d * dim + i]));
      unit[d] = det != 0;
    }
    auto row = b.row_words(static_cast<Vertex>(x));
    for (std::size_t w = 0; w < row.size(); ++w) {
      std::uint64_t word = 0;
      const std::size_t end = std::min(n, (w + 1) * 64);
      for (std::size_t y = w * 64; y < end; ++y) {
        word |= static_cast<std::uint64_t>(unit[diag_index[y]]) << (y & 63);
      }
      row[w] = word;
    }
  });
  b.set_labels(matrix_labels(ring));
  return std::move(b).build();
}

Graph unitary_cayley_by_diagonal(const RingSpec& spec, const Limits& limits) {
  const TriangularRing ring = make_triangular_ring(spec, limits);
  const std::size_t n = ring.order();
  const std::size_t width = ring.entry_count();
  const auto table = decode_all(ring);
  const auto& diag = ring.diagonal_positions();

  GraphBuilder b(n);
  parallel_for(0, n, [&](std::size_t x) {
    const Element* ex = table.data() + x * width;
    for (std::size_t y = 0; y < n; ++y) {
      const Element* ey = table.data() + y * width;
      bool all_differ = true;
      for (auto pos : diag) all_differ = all_differ && ex[pos] != ey[pos];
      if (all_differ) b.set_arc(static_cast<Vertex>(x), static_cast<Vertex>(y));
    }
  });
  b.set_labels(matrix_labels(ring));
  return std::move(b).build();
}

Graph hamming_graph(std::uint32_t l, std::uint32_t q, const Limits& limits) {
  if (l < 1 || q < 2) throw Error(ErrorKind::InvalidArgument, "Hamming graph needs l >= 1 and q >= 2");
  check_vertex_cap(saturating_pow(q, l), limits, "H(" + std::to_string(l) + "," + std::to_string(q) + ")");
  const VertexLabeling labeling = hamming_labeling(l, q);
  const std::size_t n = labeling.size();

  GraphBuilder b(n);
  parallel_for(0, n, [&](std::size_t v) {
    auto d = labeling.digits(v);
    for (std::size_t i = 0; i < l; ++i) {
      const auto original = d[i];
      for (std::uint64_t a = 0; a < q; ++a) {
        if (a == original) continue;
        d[i] = a;
        b.set_arc(static_cast<Vertex>(v), static_cast<Vertex>(labeling.vertex_of(d)));
      }
      d[i] = original;
    }
  });
  b.set_labels(tuple_labels(labeling));
  return std::move(b).build();
}

Graph antipodal_hamming_direct(std::uint32_t n, std::uint32_t q, const Limits& limits) {
  if (n < 1 || q < 2) throw Error(ErrorKind::InvalidArgument, "antipodal Hamming graph needs n >= 1 and q >= 2");
  check_vertex_cap(saturating_pow(q, n), limits, "A(H(" + std::to_string(n) + "," + std::to_string(q) + "))");
  const VertexLabeling labeling = hamming_labeling(n, q);
  const std::size_t count = labeling.size();
  std::vector<std::vector<std::uint64_t>> tuples(count);
  for (std::size_t v = 0; v < count; ++v) tuples[v] = labeling.digits(v);

  GraphBuilder b(count);
  parallel_for(0, count, [&](std::size_t u) {
    for (std::size_t v = 0; v < count; ++v) {
      bool all_differ = true;
      for (std::size_t i = 0; i < n && all_differ; ++i) all_differ = tuples[u][i] != tuples[v][i];
      if (all_differ) b.set_arc(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  });
  b.set_labels(tuple_labels(labeling));
  return std::move(b).build();
}

Graph semistrong_product(const Graph& g, const Graph& h, const Limits& limits) {
  const std::size_t ng = g.vertex_count();
  const std::size_t nh = h.vertex_count();
  const bool overflow = nh != 0 && ng > kHardVertexCeiling / nh;
  check_vertex_cap(overflow ? kHardVertexCeiling + 1 : ng * nh, limits, "semistrong product");

  GraphBuilder b(ng * nh);
  parallel_for(0, ng, [&](std::size_t u1) {
    auto partners = g.neighbors(static_cast<Vertex>(u1));
    partners.push_back(static_cast<Vertex>(u1));
    for (Vertex v1 = 0; v1 < nh; ++v1) {
      const auto from = static_cast<Vertex>(u1 * nh + v1);
      for (Vertex v2 : h.neighbors(v1)) {
        for (Vertex u2 : partners) b.set_arc(from, static_cast<Vertex>(u2 * nh + v2));
      }
    }
  });

  std::vector<std::string> labels(ng * nh);
  for (std::size_t u = 0; u < ng; ++u) {
    for (std::size_t v = 0; v < nh; ++v) {
      const std::string lu = g.labels().empty() ? std::to_string(u) : g.labels()[u];
      const std::string lv = h.labels().empty() ? std::to_string(v) : h.labels()[v];
      labels[u * nh + v] = "(" + lu + "," + lv + ")";
    }
  }
  b.set_labels(std::move(labels));
  return std::move(b).build();
}

Graph complete_graph(std::size_t m, const Limits& limits) {
  check_vertex_cap(m, limits, "K_" + std::to_string(m));
  GraphBuilder b(m);
  for (Vertex u = 0; u < m; ++u) {
    for (Vertex v = u + 1; v < m; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph complete_bipartite(std::size_t a, std::size_t b_size, const Limits& limits) {
  check_vertex_cap(a + b_size, limits, "K_{" + std::to_string(a) + "," + std::to_string(b_size) + "}");
  GraphBuilder b(a + b_size);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = static_cast<Vertex>(a); v < a + b_size; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

std::uint64_t diagonal_code(const TriangularRing& ring, std::uint64_t code) {
  std::vector<Element> entries(ring.entry_count());
  ring.decode_into(code, entries);
  std::uint64_t out = 0;
  for (auto pos : ring.diagonal_positions()) out = out * ring.field().order() + entries[pos];
  return out;
}

std::uint64_t strict_upper_code(const TriangularRing& ring, std::uint64_t code) {
  std::vector<Element> entries(ring.entry_count());
  ring.decode_into(code, entries);
  std::uint64_t out = 0;
  for (auto pos : ring.strict_positions()) out = out * ring.field().order() + entries[pos];
  return out;
}

std::vector<Vertex> product_correspondence(const TriangularRing& ring) {
  const std::uint64_t hamming_size = saturating_pow(ring.field().order(), ring.dimension());
  std::vector<Vertex> phi(ring.order());
  for (std::uint64_t code = 0; code < ring.order(); ++code) {
    phi[code] = static_cast<Vertex>(strict_upper_code(ring, code) * hamming_size + diagonal_code(ring, code));
  }
  return phi;
}

std::vector<std::uint64_t> scalar_matrix_codes(const TriangularRing& ring) {
  std::vector<std::uint64_t> out;
  std::vector<Element> diag(ring.dimension());
  const std::vector<Element> strict(ring.strict_positions().size(), 0);
  for (Element a = 0; a < ring.field().order(); ++a) {
    std::fill(diag.begin(), diag.end(), a);
    out.push_back(ring.encode(ring.compose(strict, diag)));
  }
  return out;
}

DiagonalQuotient diagonal_quotient(const RingSpec& spec, const Limits& limits) {
  if (!spec.is_triangular()) throw Error(ErrorKind::InvalidArgument, "diagonal quotient needs a triangular ring");
  const TriangularRing ring = make_triangular_ring(spec, limits);
  const auto q = static_cast<std::uint32_t>(ring.field().order());
  const std::uint64_t classes = saturating_pow(q, spec.n);
  check_vertex_cap(classes, limits, "diagonal quotient");

  const Graph cayley = unitary_cayley(spec, limits);
  std::vector<VertexSet> members(classes, VertexSet(cayley.vertex_count()));
  std::vector<std::uint64_t> class_of(ring.order());
  for (std::uint64_t code = 0; code < ring.order(); ++code) {
    class_of[code] = diagonal_code(ring, code);
    members[class_of[code]].set(static_cast<Vertex>(code));
  }
  const std::uint64_t class_size = ring.order() / classes;

  // Edge counts between classes: row popcounts against each class mask.
  std::vector<std::uint64_t> between(classes * classes, 0);
  parallel_for(0, classes, [&](std::size_t c1) {
    for (Vertex x : members[c1].members()) {
      auto r = cayley.row(x);
      for (std::size_t c2 = 0; c2 < classes; ++c2) {
        auto mask = members[c2].words();
        std::uint64_t hits = 0;
        for (std::size_t w = 0; w < r.size(); ++w) hits += static_cast<std::uint64_t>(std::popcount(r[w] & mask[w]));
        between[c1 * classes + c2] += hits;
      }
    }
  });

  GraphBuilder some(classes);
  bool agrees = true;
  for (std::size_t c1 = 0; c1 < classes; ++c1) {
    for (std::size_t c2 = c1 + 1; c2 < classes; ++c2) {
      const std::uint64_t count = between[c1 * classes + c2];
      const bool some_pair = count > 0;
      const bool every_pair = count == class_size * class_size;
      if (some_pair != every_pair) agrees = false;
      if (some_pair) some.add_edge(static_cast<Vertex>(c1), static_cast<Vertex>(c2));
    }
  }
  // A class adjacent to itself would need a unit difference with equal diagonals.
  for (std::size_t c = 0; c < classes; ++c) {
    if (between[c * classes + c] != 0) agrees = false;
  }
  some.set_labels(tuple_labels(hamming_labeling(spec.n, q)));
  return {std::move(some).build(), agrees, class_size};
}

}  // namespace uct
