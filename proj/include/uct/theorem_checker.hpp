#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "uct/graph.hpp"
#include "uct/graph_algorithms.hpp"
#include "uct/limits.hpp"
#include "uct/tri_ring.hpp"

namespace uct {

/// The structural claims that can be checked on a ring.
enum class Claim {
  Regularity,        // degree = (q-1)^n q^{n(n-1)/2}
  AdjacencyRule,     // determinant rule == all-diagonals-differ rule
  BinaryComponents,  // q = 2: 2^{n-1} components, each K_{m,m}
  Diameter,          // q > 2: connected with diameter 2
  Triameter,         // q > 2: triameter 6
  Clique,            // clique number q
  Product,           // q > 2: C_{T_n} = K_m • A(H(n,q)) under the explicit map
  Quotient,          // diagonal quotient = A(H(n,q))
  IntegersMod,       // C_{Z_m}: complete for prime m, K_{2^{s-1},2^{s-1}} for m = 2^s, bipartite for even m
};

/// Stable claim identifier used in reports, e.g. "cayley.regularity".
std::string_view claim_id(Claim claim) noexcept;
/// Parses a check name from the command line; accepts claim ids, short names and aliases.
std::optional<Claim> parse_claim(std::string_view name) noexcept;
/// Whether the claim applies to the spec (field-size and ring-kind gates).
bool applicable(Claim claim, const RingSpec& spec) noexcept;
/// Claims applicable to a spec, in report order.
std::vector<Claim> applicable_claims(const RingSpec& spec);

/// Outcome of one check. pass holds iff computed matches expected and every certificate
/// verified. millis is the only field that varies between runs.
struct Verdict {
  std::string claim_id;
  RingSpec spec;
  nlohmann::json expected;
  nlohmann::json computed;
  bool pass = false;
  nlohmann::json certificate;
  double millis = 0.0;
};

nlohmann::json to_json(const Verdict& v);
/// Throws ParseError on missing fields.
Verdict verdict_from_json(const nlohmann::json& j);

/// Lazily built artefacts shared by the checks on one spec. Not thread safe; one per spec.
class SpecContext {
 public:
  /// Validates the spec; throws the construction errors (RingTooLarge, NotPrime, ...).
  SpecContext(RingSpec spec, Limits limits, std::uint64_t seed = 0);
  ~SpecContext();
  SpecContext(SpecContext&&) noexcept;

  const RingSpec& spec() const noexcept { return spec_; }
  const Limits& limits() const noexcept { return limits_; }
  std::uint64_t seed() const noexcept { return seed_; }
  /// Throws InvalidArgument for Z_m specs.
  const TriangularRing& ring();
  const Graph& cayley();
  /// Throws DisconnectedGraph.
  std::uint32_t diameter();
  const std::vector<Component>& components();

 private:
  RingSpec spec_;
  Limits limits_;
  std::uint64_t seed_;
  std::unique_ptr<TriangularRing> ring_;
  std::optional<Graph> cayley_;
  std::optional<std::uint32_t> diameter_;
  std::optional<std::vector<Component>> components_;
};

/// Each check throws WrongField (or InvalidArgument for the wrong ring kind) when the
/// claim does not apply, and propagates construction errors.
Verdict check_regularity(SpecContext& ctx);
Verdict check_adjacency_rule(SpecContext& ctx);
Verdict check_binary_components(SpecContext& ctx);
Verdict check_connectivity_and_diameter(SpecContext& ctx);
Verdict check_triameter(SpecContext& ctx);
Verdict check_clique(SpecContext& ctx);
Verdict check_product_structure(SpecContext& ctx);
Verdict check_quotient(SpecContext& ctx);
Verdict check_zn_oracles(SpecContext& ctx);

/// Runs one claim through a fresh context.
Verdict run_check(Claim claim, const RingSpec& spec, const Limits& limits = {}, std::uint64_t seed = 0);
Verdict run_check(Claim claim, SpecContext& ctx);

struct SuiteOptions {
  Limits limits;
  std::uint64_t seed = 0x5eed;
  /// When non-empty, only these claims run; inapplicable ones become failed verdicts.
  std::vector<Claim> only;
};

/// The seven triangular specs (n, q) in {(2,2),(3,2),(4,2),(2,3),(3,3),(2,4),(2,5)}.
std::vector<RingSpec> default_suite();

/// Runs every applicable claim per spec. Specs run concurrently; output order follows the
/// input order. Errors become failed verdicts instead of aborting the run.
std::vector<Verdict> run_suite(const std::vector<RingSpec>& specs, const SuiteOptions& options = {});

bool all_pass(const std::vector<Verdict>& verdicts) noexcept;
/// JSON array of verdicts.
nlohmann::json report_json(const std::vector<Verdict>& verdicts);

/// Re-verifies a verdict's certificate against a Cayley graph loaded independently (for
/// example from an exported edge list). Only uses the spec, the certificate and the graph.
bool reverify(const Verdict& verdict, const Graph& cayley, const Limits& limits = {});

}  // namespace uct
