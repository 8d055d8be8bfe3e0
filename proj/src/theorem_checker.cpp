#include "uct/theorem_checker.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "uct/constructors.hpp"
#include "uct/error.hpp"
#include "uct/isomorphism.hpp"
#include "uct/parallel.hpp"

namespace uct {

using json = nlohmann::json;

namespace {

struct ClaimInfo {
  Claim claim;
  std::string_view id;
  std::string_view short_name;
  std::string_view alias;
};

// Each claim answers to its id, a short name, or an alias on the command line.
constexpr ClaimInfo kClaims[] = {
    {Claim::Regularity, "cayley.regularity", "regularity", "prop0"},
    {Claim::AdjacencyRule, "cayley.adjacency_rule", "adjacency", "prop1"},
    {Claim::BinaryComponents, "cayley.binary_components", "components", "theorem1"},
    {Claim::Diameter, "cayley.connected_diameter", "diameter", "theorem2"},
    {Claim::Triameter, "cayley.triameter", "triameter", "triameter"},
    {Claim::Clique, "cayley.clique_number", "clique", "clique"},
    {Claim::Product, "cayley.semistrong_product", "product", "theorem3"},
    {Claim::Quotient, "cayley.diagonal_quotient", "quotient", "quotient"},
    {Claim::IntegersMod, "zn.structure", "zn", "zn"},
};

constexpr std::string_view kConstructClaim = "ring.construct";

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) { return saturating_pow(base, exp); }

bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

void require(Claim claim, const RingSpec& spec) {
  if (applicable(claim, spec)) return;
  const bool kind_ok = (claim == Claim::IntegersMod) != spec.is_triangular();
  throw Error(kind_ok ? ErrorKind::WrongField : ErrorKind::InvalidArgument,
              std::string(claim_id(claim)) + " does not apply to " + spec.to_string());
}

template <typename Body>
Verdict timed(Claim claim, SpecContext& ctx, Body&& body) {
  require(claim, ctx.spec());
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  v.claim_id = std::string(claim_id(claim));
  v.spec = ctx.spec();
  v.certificate = json::object();
  body(v);
  v.pass = v.pass && v.expected == v.computed;
  v.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

std::vector<std::uint64_t> diagonal_digits(const TriangularRing& ring, std::uint64_t code) {
  std::vector<Element> entries(ring.entry_count());
  ring.decode_into(code, entries);
  std::vector<std::uint64_t> out;
  for (auto pos : ring.diagonal_positions()) out.push_back(entries[pos]);
  return out;
}

std::uint64_t diagonal_matrix_code(const TriangularRing& ring, const std::vector<Element>& diag) {
  const std::vector<Element> strict(ring.strict_positions().size(), 0);
  return ring.encode(ring.compose(strict, diag));
}

// The three diagonal matrices diag(a,..,a), diag(a,b,..,b), diag(a,c,..,c) for the first
// three field elements.
std::array<Vertex, 3> witness_triple(const TriangularRing& ring) {
  const std::uint32_t n = ring.dimension();
  std::array<Vertex, 3> out{};
  for (Element tail = 0; tail < 3; ++tail) {
    std::vector<Element> diag(n, tail);
    diag[0] = 0;
    out[tail] = static_cast<Vertex>(diagonal_matrix_code(ring, diag));
  }
  return out;
}

std::uint32_t triple_sum(const Graph& g, const std::array<Vertex, 3>& t) {
  const auto d0 = bfs_distances(g, t[0]);
  const auto d1 = bfs_distances(g, t[1]);
  if (d0[t[1]] == DistanceMatrix::kInfinity || d0[t[2]] == DistanceMatrix::kInfinity ||
      d1[t[2]] == DistanceMatrix::kInfinity) {
    return DistanceMatrix::kInfinity;
  }
  return d0[t[1]] + d0[t[2]] + d1[t[2]];
}

Graph product_model(const RingSpec& spec, const Limits& limits) {
  const auto q = static_cast<std::uint32_t>(spec.field_order());
  const std::uint64_t m = ipow(q, std::uint64_t{spec.n} * (spec.n - 1) / 2);
  return semistrong_product(complete_graph(m, limits), antipodal_hamming_direct(spec.n, q, limits), limits);
}

json error_verdict_fields(const Error& e) { return {{"error", std::string(to_string(e.kind()))}}; }

}  // namespace

std::string_view claim_id(Claim claim) noexcept {
  for (const auto& info : kClaims) {
    if (info.claim == claim) return info.id;
  }
  return "unknown";
}

std::optional<Claim> parse_claim(std::string_view name) noexcept {
  for (const auto& info : kClaims) {
    if (name == info.id || name == info.short_name || name == info.alias) return info.claim;
  }
  return std::nullopt;
}

bool applicable(Claim claim, const RingSpec& spec) noexcept {
  if (claim == Claim::IntegersMod) return !spec.is_triangular();
  if (!spec.is_triangular()) return false;
  const std::uint64_t q = spec.field_order();
  switch (claim) {
    case Claim::BinaryComponents: return q == 2;
    case Claim::Diameter:
    case Claim::Triameter:
    case Claim::Product: return q > 2;
    default: return true;
  }
}

std::vector<Claim> applicable_claims(const RingSpec& spec) {
  std::vector<Claim> out;
  for (const auto& info : kClaims) {
    if (applicable(info.claim, spec)) out.push_back(info.claim);
  }
  return out;
}

json to_json(const Verdict& v) {
  return {
      {"claim_id", v.claim_id},   {"spec", v.spec.to_string()}, {"expected", v.expected},
      {"computed", v.computed},   {"pass", v.pass},             {"certificate", v.certificate},
      {"millis", v.millis},
  };
}

Verdict verdict_from_json(const json& j) {
  try {
    Verdict v;
    v.claim_id = j.at("claim_id").get<std::string>();
    v.spec = RingSpec::parse(j.at("spec").get<std::string>());
    v.expected = j.at("expected");
    v.computed = j.at("computed");
    v.pass = j.at("pass").get<bool>();
    v.certificate = j.at("certificate");
    v.millis = j.value("millis", 0.0);
    return v;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("verdict: ") + e.what());
  }
}

SpecContext::SpecContext(RingSpec spec, Limits limits, std::uint64_t seed)
    : spec_(spec), limits_(limits), seed_(seed) {
  validate(spec_, limits_);
  if (spec_.is_triangular()) ring_ = std::make_unique<TriangularRing>(make_triangular_ring(spec_, limits_));
}

SpecContext::~SpecContext() = default;
SpecContext::SpecContext(SpecContext&&) noexcept = default;

const TriangularRing& SpecContext::ring() {
  if (!ring_) throw Error(ErrorKind::InvalidArgument, spec_.to_string() + " is not a triangular matrix ring");
  return *ring_;
}

const Graph& SpecContext::cayley() {
  if (!cayley_) cayley_ = unitary_cayley(spec_, limits_);
  return *cayley_;
}

std::uint32_t SpecContext::diameter() {
  if (!diameter_) diameter_ = uct::diameter(cayley());
  return *diameter_;
}

const std::vector<Component>& SpecContext::components() {
  if (!components_) components_ = connected_components(cayley());
  return *components_;
}

Verdict check_regularity(SpecContext& ctx) {
  return timed(Claim::Regularity, ctx, [&](Verdict& v) {
    const TriangularRing& ring = ctx.ring();
    const Graph& g = ctx.cayley();
    const std::uint64_t formula = ring.unit_count();

    std::uint64_t units = 0;
    for (std::uint64_t code = 0; code < ring.order(); ++code) units += is_unit(ring.decode(code)) ? 1 : 0;

    const auto degrees = g.degrees();
    const auto [lo, hi] = std::minmax_element(degrees.begin(), degrees.end());
    v.expected = {{"degree", formula}, {"unit_count", formula}};
    v.computed = {{"degree", *lo == *hi ? json(*lo) : json{{"min", *lo}, {"max", *hi}}}, {"unit_count", units}};
    v.certificate = {{"vertex_count", g.vertex_count()}, {"min_degree", *lo}, {"max_degree", *hi}};
    v.pass = true;
  });
}

Verdict check_adjacency_rule(SpecContext& ctx) {
  return timed(Claim::AdjacencyRule, ctx, [&](Verdict& v) {
    const Graph& by_determinant = ctx.cayley();
    const Graph by_diagonal = unitary_cayley_by_diagonal(ctx.spec(), ctx.limits());
    const std::size_t n = by_determinant.vertex_count();

    std::uint64_t agree = 0;
    json first_disagreement = nullptr;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (by_determinant.has_edge(a, b) == by_diagonal.has_edge(a, b)) {
          ++agree;
        } else if (first_disagreement.is_null()) {
          first_disagreement = {a, b};
        }
      }
    }
    const std::uint64_t total = std::uint64_t{n} * (n - 1) / 2;
    v.expected = {{"agreeing_pairs", total}};
    v.computed = {{"agreeing_pairs", agree}};
    v.certificate = {{"pairs_checked", total}, {"first_disagreement", first_disagreement}};
    v.pass = true;
  });
}

Verdict check_binary_components(SpecContext& ctx) {
  return timed(Claim::BinaryComponents, ctx, [&](Verdict& v) {
    const TriangularRing& ring = ctx.ring();
    const Graph& g = ctx.cayley();
    const std::uint32_t n = ring.dimension();
    const std::uint64_t m = ipow(2, std::uint64_t{n} * (n - 1) / 2);

    std::set<std::pair<std::size_t, std::size_t>> sizes;
    bool pairing_ok = true;
    json comps = json::array();
    for (const auto& comp : ctx.components()) {
      const Graph sub = induced_subgraph(g, comp);
      const auto parts = is_complete_bipartite(sub);
      if (!parts) {
        sizes.insert({comp.size(), 0});
        pairing_ok = false;
        comps.push_back({{"complete_bipartite", false}, {"vertices", comp}});
        continue;
      }
      std::vector<Vertex> a, b;
      for (Vertex x : parts->part_a) a.push_back(comp[x]);
      for (Vertex x : parts->part_b) b.push_back(comp[x]);
      sizes.insert(std::minmax(a.size(), b.size()));

      // Each side must be one diagonal class, and the two diagonals complementary mod 2.
      const auto diag_a = diagonal_digits(ring, a.front());
      const auto diag_b = diagonal_digits(ring, b.front());
      for (Vertex x : a) pairing_ok = pairing_ok && diagonal_digits(ring, x) == diag_a;
      for (Vertex x : b) pairing_ok = pairing_ok && diagonal_digits(ring, x) == diag_b;
      for (std::uint32_t i = 0; i < n; ++i) pairing_ok = pairing_ok && diag_a[i] + diag_b[i] == 1;
      pairing_ok = pairing_ok && a.size() == m && b.size() == m;

      comps.push_back({{"part_a", a}, {"part_b", b}, {"diagonal_a", diag_a}, {"diagonal_b", diag_b}});
    }

    json size_list = json::array();
    for (auto [x, y] : sizes) size_list.push_back({x, y});
    v.expected = {{"components", ipow(2, n - 1)}, {"part_sizes", json::array({json{m, m}})}, {"diagonal_pairing", true}};
    v.computed = {{"components", ctx.components().size()}, {"part_sizes", size_list}, {"diagonal_pairing", pairing_ok}};
    v.certificate = {{"components", comps}};
    v.pass = true;
  });
}

Verdict check_connectivity_and_diameter(SpecContext& ctx) {
  return timed(Claim::Diameter, ctx, [&](Verdict& v) {
    const TriangularRing& ring = ctx.ring();
    const Graph& g = ctx.cayley();
    const std::size_t components = ctx.components().size();

    v.expected = {{"components", 1}, {"diameter", 2}, {"midpoint_adjacent_to_both", true}};
    json diam = components == 1 ? json(ctx.diameter()) : json(nullptr);

    // First non-adjacent pair of distinct vertices, and the midpoint whose diagonal avoids
    // both endpoints' diagonals with zeros above it.
    bool midpoint_ok = false;
    json pair_cert = nullptr;
    for (Vertex a = 0; a < g.vertex_count() && pair_cert.is_null(); ++a) {
      for (Vertex b = a + 1; b < g.vertex_count(); ++b) {
        if (g.has_edge(a, b)) continue;
        const auto da = diagonal_digits(ring, a);
        const auto db = diagonal_digits(ring, b);
        std::vector<Element> dc(ring.dimension());
        for (std::size_t i = 0; i < dc.size(); ++i) {
          Element c = 0;
          while (c == da[i] || c == db[i]) ++c;
          dc[i] = c;
        }
        const auto mid = static_cast<Vertex>(diagonal_matrix_code(ring, dc));
        midpoint_ok = g.has_edge(a, mid) && g.has_edge(b, mid);
        pair_cert = {{"pair", {a, b}},
                     {"pair_labels", {matrix_label(ring.decode(a)), matrix_label(ring.decode(b))}},
                     {"midpoint", mid},
                     {"midpoint_label", matrix_label(ring.decode(mid))}};
        break;
      }
    }
    v.computed = {{"components", components}, {"diameter", diam}, {"midpoint_adjacent_to_both", midpoint_ok}};
    v.certificate = pair_cert.is_null() ? json::object() : pair_cert;
    v.pass = true;
  });
}

Verdict check_triameter(SpecContext& ctx) {
  return timed(Claim::Triameter, ctx, [&](Verdict& v) {
    const TriangularRing& ring = ctx.ring();
    const Graph& g = ctx.cayley();
    const TriameterResult tri = triameter(g);
    const std::uint32_t diam = ctx.diameter();

    const auto w = witness_triple(ring);
    const std::uint32_t witness_sum = triple_sum(g, w);
    const auto& t = tri.triple;
    const auto d0 = bfs_distances(g, t[0]);
    const auto d1 = bfs_distances(g, t[1]);

    v.expected = {{"triameter", 6}, {"witness_sum", 6}, {"three_times_diameter", 6}};
    v.computed = {{"triameter", tri.value}, {"witness_sum", witness_sum}, {"three_times_diameter", 3 * diam}};
    v.certificate = {
        {"triple", {t[0], t[1], t[2]}},
        {"triple_distances", {d0[t[1]], d0[t[2]], d1[t[2]]}},
        {"witness", {w[0], w[1], w[2]}},
        {"witness_labels",
         {matrix_label(ring.decode(w[0])), matrix_label(ring.decode(w[1])), matrix_label(ring.decode(w[2]))}},
    };
    v.pass = true;
  });
}

Verdict check_clique(SpecContext& ctx) {
  return timed(Claim::Clique, ctx, [&](Verdict& v) {
    const TriangularRing& ring = ctx.ring();
    const Graph& g = ctx.cayley();
    const std::uint64_t q = ring.field().order();

    const auto scalars = scalar_matrix_codes(ring);
    std::vector<Vertex> scalar_vertices(scalars.begin(), scalars.end());
    const bool scalar_clique = is_clique(g, scalar_vertices);
    const CliqueResult best = maximum_clique(g);

    v.expected = {{"clique_number", q}, {"scalar_clique_size", q}};
    v.computed = {{"clique_number", best.size}, {"scalar_clique_size", scalar_clique ? scalars.size() : 0}};
    v.certificate = {{"scalar_matrices", scalars}, {"maximum_clique", best.vertices}};
    v.pass = true;
  });
}

Verdict check_product_structure(SpecContext& ctx) {
  return timed(Claim::Product, ctx, [&](Verdict& v) {
    const TriangularRing& ring = ctx.ring();
    const Graph& cayley = ctx.cayley();
    const std::uint64_t q = ring.field().order();
    const std::uint32_t n = ring.dimension();
    const std::uint64_t m = ipow(q, std::uint64_t{n} * (n - 1) / 2);
    const Graph product = product_model(ctx.spec(), ctx.limits());
    const std::size_t vertices = cayley.vertex_count();

    const auto phi = product_correspondence(ring);
    std::vector<bool> hit(product.vertex_count(), false);
    bool bijection = phi.size() == product.vertex_count();
    for (Vertex x : phi) {
      bijection = bijection && x < hit.size() && !hit[x];
      if (x < hit.size()) hit[x] = true;
    }

    std::uint64_t agree = 0;
    if (bijection) {
      for (Vertex a = 0; a < vertices; ++a) {
        for (Vertex b = a + 1; b < vertices; ++b) {
          agree += cayley.has_edge(a, b) == product.has_edge(phi[a], phi[b]) ? 1 : 0;
        }
      }
    }

    auto dc = cayley.degrees();
    auto dp = product.degrees();
    std::sort(dc.begin(), dc.end());
    std::sort(dp.begin(), dp.end());
    const bool degrees_equal = dc == dp;
    const bool edges_equal = cayley.edge_count() == product.edge_count();
    const bool components_equal = ctx.components().size() == connected_components(product).size();

    std::string oracle = "skipped: above oracle size";
    if (vertices <= kIsoOracleVertexCap) oracle = iso_check(cayley, product) ? "isomorphic" : "not isomorphic";

    std::mt19937_64 rng(ctx.seed());
    json spot = json::array();
    for (int i = 0; i < 100 && vertices > 1; ++i) {
      const auto a = static_cast<Vertex>(rng() % vertices);
      auto b = static_cast<Vertex>(rng() % (vertices - 1));
      if (b >= a) ++b;
      spot.push_back({a, b, cayley.has_edge(a, b)});
    }

    const std::uint64_t pairs = std::uint64_t{vertices} * (vertices - 1) / 2;
    v.expected = {{"vertex_count", m * ipow(q, n)}, {"m", m}, {"bijection", true}, {"agreeing_pairs", pairs},
                  {"degree_sequences_equal", true}, {"edge_counts_equal", true}, {"component_counts_equal", true},
                  {"iso_oracle", vertices <= kIsoOracleVertexCap ? "isomorphic" : "skipped: above oracle size"}};
    v.computed = {{"vertex_count", product.vertex_count()}, {"m", m}, {"bijection", bijection},
                  {"agreeing_pairs", agree}, {"degree_sequences_equal", degrees_equal},
                  {"edge_counts_equal", edges_equal}, {"component_counts_equal", components_equal},
                  {"iso_oracle", oracle}};
    v.certificate = {{"seed", ctx.seed()}, {"spot_checks", spot}};
    v.pass = vertices == ctx.spec().order();
  });
}

Verdict check_quotient(SpecContext& ctx) {
  return timed(Claim::Quotient, ctx, [&](Verdict& v) {
    const auto q = static_cast<std::uint32_t>(ctx.spec().field_order());
    const std::uint32_t n = ctx.spec().n;
    const DiagonalQuotient quotient = diagonal_quotient(ctx.spec(), ctx.limits());
    const Graph hamming = antipodal_hamming_direct(n, q, ctx.limits());

    v.expected = {{"vertex_count", ipow(q, n)}, {"labeled_equal", true}, {"every_pair_agrees", true}};
    v.computed = {{"vertex_count", quotient.graph.vertex_count()},
                  {"labeled_equal", quotient.graph == hamming},
                  {"every_pair_agrees", quotient.every_pair_agrees}};
    v.certificate = {{"class_size", quotient.class_size}, {"edge_count", quotient.graph.edge_count()}};
    v.pass = true;
  });
}

Verdict check_zn_oracles(SpecContext& ctx) {
  return timed(Claim::IntegersMod, ctx, [&](Verdict& v) {
    const std::uint64_t m = ctx.spec().modulus;
    const IntegersMod ring(m);
    const Graph& g = ctx.cayley();

    const auto degrees = g.degrees();
    const auto [lo, hi] = std::minmax_element(degrees.begin(), degrees.end());
    v.expected = {{"degree", ring.unit_count()}};
    v.computed = {{"degree", *lo == *hi ? json(*lo) : json{{"min", *lo}, {"max", *hi}}}};

    if (is_prime(m)) {
      v.expected["complete"] = true;
      v.computed["complete"] = g == complete_graph(m, ctx.limits());
    }
    if (is_power_of_two(m)) {
      v.expected["complete_bipartite_part_size"] = m / 2;
      const auto parts = is_connected(g) ? is_complete_bipartite(g) : std::nullopt;
      if (parts && parts->part_a.size() == parts->part_b.size()) {
        v.computed["complete_bipartite_part_size"] = parts->part_a.size();
      } else {
        v.computed["complete_bipartite_part_size"] = nullptr;
      }
    }
    if (m % 2 == 0) {
      const auto parts = bipartition(g);
      v.expected["bipartite"] = true;
      v.computed["bipartite"] = parts.has_value();
      if (parts) v.certificate["bipartition"] = {{"part_a", parts->part_a}, {"part_b", parts->part_b}};
    }
    v.pass = true;
  });
}

Verdict run_check(Claim claim, SpecContext& ctx) {
  switch (claim) {
    case Claim::Regularity: return check_regularity(ctx);
    case Claim::AdjacencyRule: return check_adjacency_rule(ctx);
    case Claim::BinaryComponents: return check_binary_components(ctx);
    case Claim::Diameter: return check_connectivity_and_diameter(ctx);
    case Claim::Triameter: return check_triameter(ctx);
    case Claim::Clique: return check_clique(ctx);
    case Claim::Product: return check_product_structure(ctx);
    case Claim::Quotient: return check_quotient(ctx);
    case Claim::IntegersMod: return check_zn_oracles(ctx);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown claim");
}

Verdict run_check(Claim claim, const RingSpec& spec, const Limits& limits, std::uint64_t seed) {
  SpecContext ctx(spec, limits, seed);
  return run_check(claim, ctx);
}

std::vector<RingSpec> default_suite() {
  return {RingSpec::triangular(2, 2, 1), RingSpec::triangular(3, 2, 1), RingSpec::triangular(4, 2, 1),
          RingSpec::triangular(2, 3, 1), RingSpec::triangular(3, 3, 1), RingSpec::triangular(2, 2, 2),
          RingSpec::triangular(2, 5, 1)};
}

std::vector<Verdict> run_suite(const std::vector<RingSpec>& specs, const SuiteOptions& options) {
  std::vector<std::vector<Verdict>> per_spec(specs.size());

  parallel_for(0, specs.size(), [&](std::size_t i) {
    const RingSpec& spec = specs[i];
    auto failed = [&](std::string_view id, const Error& e) {
      Verdict v;
      v.claim_id = std::string(id);
      v.spec = spec;
      v.expected = json::object();
      v.computed = error_verdict_fields(e);
      v.certificate = {{"message", e.what()}};
      v.pass = false;
      per_spec[i].push_back(std::move(v));
    };

    std::optional<SpecContext> ctx;
    try {
      ctx.emplace(spec, options.limits, options.seed);
    } catch (const Error& e) {
      failed(kConstructClaim, e);
      return;
    }
    const std::vector<Claim> claims = options.only.empty() ? applicable_claims(spec) : options.only;
    for (Claim claim : claims) {
      try {
        per_spec[i].push_back(run_check(claim, *ctx));
      } catch (const Error& e) {
        failed(claim_id(claim), e);
      }
    }
  });

  std::vector<Verdict> out;
  for (auto& list : per_spec) {
    for (auto& v : list) out.push_back(std::move(v));
  }
  return out;
}

bool all_pass(const std::vector<Verdict>& verdicts) noexcept {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

json report_json(const std::vector<Verdict>& verdicts) {
  json out = json::array();
  for (const auto& v : verdicts) out.push_back(to_json(v));
  return out;
}

namespace {

bool reverify_claim(Claim claim, const Verdict& v, const Graph& g, const Limits& limits) {
  const RingSpec& spec = v.spec;
  if (g.vertex_count() != spec.order()) return false;
  const json& cert = v.certificate;

  switch (claim) {
    case Claim::Regularity: {
      const auto expected = v.expected.at("degree").get<std::size_t>();
      for (Vertex x = 0; x < g.vertex_count(); ++x) {
        if (g.degree(x) != expected) return false;
      }
      return true;
    }
    case Claim::AdjacencyRule: {
      const TriangularRing ring = make_triangular_ring(spec, limits);
      std::vector<std::vector<std::uint64_t>> diag(g.vertex_count());
      for (Vertex x = 0; x < g.vertex_count(); ++x) diag[x] = diagonal_digits(ring, x);
      for (Vertex a = 0; a < g.vertex_count(); ++a) {
        for (Vertex b = a + 1; b < g.vertex_count(); ++b) {
          bool differ = true;
          for (std::size_t i = 0; i < diag[a].size(); ++i) differ = differ && diag[a][i] != diag[b][i];
          if (differ != g.has_edge(a, b)) return false;
        }
      }
      return true;
    }
    case Claim::BinaryComponents: {
      std::size_t covered = 0;
      for (const auto& comp : cert.at("components")) {
        if (!comp.contains("part_a")) return false;
        Bipartition parts{comp.at("part_a").get<std::vector<Vertex>>(), comp.at("part_b").get<std::vector<Vertex>>()};
        std::vector<Vertex> all = parts.part_a;
        all.insert(all.end(), parts.part_b.begin(), parts.part_b.end());
        std::sort(all.begin(), all.end());
        const Graph sub = induced_subgraph(g, all);
        // Re-index the parts into the induced subgraph.
        Bipartition local;
        for (Vertex x : parts.part_a) local.part_a.push_back(static_cast<Vertex>(std::lower_bound(all.begin(), all.end(), x) - all.begin()));
        for (Vertex x : parts.part_b) local.part_b.push_back(static_cast<Vertex>(std::lower_bound(all.begin(), all.end(), x) - all.begin()));
        if (!verify_complete_bipartite(sub, local)) return false;
        // Closed under adjacency: every edge out of the part set stays inside it.
        for (Vertex x : all) {
          if (g.degree(x) != sub.degree(static_cast<Vertex>(std::lower_bound(all.begin(), all.end(), x) - all.begin()))) {
            return false;
          }
        }
        covered += all.size();
      }
      return covered == g.vertex_count();
    }
    case Claim::Diameter: {
      const auto pair = cert.at("pair").get<std::vector<Vertex>>();
      const auto mid = cert.at("midpoint").get<Vertex>();
      if (pair.size() != 2 || g.has_edge(pair[0], pair[1])) return false;
      if (!g.has_edge(pair[0], mid) || !g.has_edge(pair[1], mid)) return false;
      return bfs_distances(g, pair[0])[pair[1]] == 2 && diameter(g) == v.computed.at("diameter").get<std::uint32_t>();
    }
    case Claim::Triameter: {
      const auto t = cert.at("triple").get<std::array<Vertex, 3>>();
      const auto w = cert.at("witness").get<std::array<Vertex, 3>>();
      const auto value = v.computed.at("triameter").get<std::uint32_t>();
      if (triple_sum(g, t) != value || triple_sum(g, w) != v.computed.at("witness_sum").get<std::uint32_t>()) {
        return false;
      }
      // A triple only gives a lower bound; 3 * diam caps it from above.
      return value == 3 * diameter(g) || triameter(g).value == value;
    }
    case Claim::Clique: {
      const auto scalars = cert.at("scalar_matrices").get<std::vector<Vertex>>();
      const auto best = cert.at("maximum_clique").get<std::vector<Vertex>>();
      if (!is_clique(g, scalars) || !is_clique(g, best) ||
          best.size() != v.computed.at("clique_number").get<std::size_t>()) {
        return false;
      }
      // Upper bound: the first diagonal entry splits the vertices into q independent sets.
      const TriangularRing ring = make_triangular_ring(spec, limits);
      std::vector<std::uint64_t> colour(g.vertex_count());
      for (Vertex x = 0; x < g.vertex_count(); ++x) colour[x] = diagonal_digits(ring, x).front();
      for (Vertex a = 0; a < g.vertex_count(); ++a) {
        for (Vertex b : g.neighbors(a)) {
          if (colour[a] == colour[b]) return false;
        }
      }
      return best.size() == ring.field().order();
    }
    case Claim::Product: {
      const TriangularRing ring = make_triangular_ring(spec, limits);
      const Graph product = product_model(spec, limits);
      const auto phi = product_correspondence(ring);
      for (const auto& check : cert.at("spot_checks")) {
        const auto a = check.at(0).get<Vertex>();
        const auto b = check.at(1).get<Vertex>();
        const bool adjacent = check.at(2).get<bool>();
        if (g.has_edge(a, b) != adjacent || product.has_edge(phi[a], phi[b]) != adjacent) return false;
      }
      // The spot checks only sample; the full comparison is what catches a single bad edge.
      return g.vertex_count() == phi.size() && relabel(g, phi) == product;
    }
    case Claim::Quotient: {
      const TriangularRing ring = make_triangular_ring(spec, limits);
      const auto q = static_cast<std::uint32_t>(ring.field().order());
      const Graph hamming = antipodal_hamming_direct(spec.n, q, limits);
      std::vector<Vertex> cls(g.vertex_count());
      for (Vertex x = 0; x < g.vertex_count(); ++x) cls[x] = static_cast<Vertex>(diagonal_code(ring, x));
      GraphBuilder quotient(hamming.vertex_count());
      for (Vertex a = 0; a < g.vertex_count(); ++a) {
        for (Vertex b : g.neighbors(a)) {
          if (cls[a] == cls[b]) return false;
          quotient.set_arc(cls[a], cls[b]);
        }
      }
      return std::move(quotient).build() == hamming;
    }
    case Claim::IntegersMod: {
      const IntegersMod ring(spec.modulus);
      for (Vertex x = 0; x < g.vertex_count(); ++x) {
        if (g.degree(x) != ring.unit_count()) return false;
      }
      if (is_prime(spec.modulus) && !(g == complete_graph(spec.modulus, limits))) return false;
      if (spec.modulus % 2 == 0) {
        if (!cert.contains("bipartition")) return false;
        Bipartition parts{cert["bipartition"].at("part_a").get<std::vector<Vertex>>(),
                          cert["bipartition"].at("part_b").get<std::vector<Vertex>>()};
        for (const auto* part : {&parts.part_a, &parts.part_b}) {
          for (std::size_t i = 0; i < part->size(); ++i) {
            for (std::size_t j = i + 1; j < part->size(); ++j) {
              if (g.has_edge((*part)[i], (*part)[j])) return false;
            }
          }
        }
        if (is_power_of_two(spec.modulus) && !verify_complete_bipartite(g, parts)) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

bool reverify(const Verdict& verdict, const Graph& cayley, const Limits& limits) {
  const auto claim = parse_claim(verdict.claim_id);
  if (!claim || !verdict.pass) return false;
  try {
    return reverify_claim(*claim, verdict, cayley, limits);
  } catch (const Error&) {
    return false;
  } catch (const json::exception&) {
    return false;
  }
}

}  // namespace uct
