// Command-line front end: build unitary Cayley graphs, compute invariants, run the
// structural verification suite and export graphs.
//
// Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage error,
// 3 instance exceeds a size limit.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "uct/constructors.hpp"
#include "uct/error.hpp"
#include "uct/finite_field.hpp"
#include "uct/graph_algorithms.hpp"
#include "uct/graph_io.hpp"
#include "uct/parallel.hpp"
#include "uct/theorem_checker.hpp"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

struct RingFlags {
  std::string ring;
  std::uint32_t n = 2;
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  std::uint64_t modulus = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--ring", ring, "Ring family: tri (upper-triangular matrices) or zn (integers mod M)")
        ->check(CLI::IsMember({"tri", "zn"}));
    cmd->add_option("--n", n, "Matrix dimension (tri)");
    cmd->add_option("--p", p, "Field characteristic (tri)");
    cmd->add_option("--k", k, "Field extension degree (tri)");
    cmd->add_option("--modulus", modulus, "Modulus M (zn)");
  }

  uct::RingSpec spec() const {
    if (ring == "tri") return uct::RingSpec::triangular(n, p, k);
    if (ring == "zn") {
      if (modulus == 0) throw uct::Error(uct::ErrorKind::InvalidArgument, "--ring zn needs --modulus");
      return uct::RingSpec::integers_mod(modulus);
    }
    throw uct::Error(uct::ErrorKind::InvalidArgument, "--ring is required (tri or zn)");
  }
};

struct CliConfig {
  std::uint64_t cap = 0;
  unsigned threads = 0;
  std::uint64_t seed = 0x5eed;

  uct::Limits limits() const {
    uct::Limits l;
    l.vertex_cap = cap != 0 ? cap : uct::vertex_cap_from_env();
    return l;
  }
};

// Writes to the file when a path is given, otherwise to stdout.
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw uct::Error(uct::ErrorKind::InvalidArgument, "cannot open " + path + " for writing");
  fn(out);
}

json degree_summary(const uct::Graph& g) {
  if (g.vertex_count() == 0) return 0;
  const auto d = g.degrees();
  const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
  if (*lo == *hi) return *lo;
  return {{"min", *lo}, {"max", *hi}};
}

json invariants_of(const uct::Graph& g) {
  json out;
  out["vertices"] = g.vertex_count();
  out["edges"] = g.edge_count();
  out["degree"] = degree_summary(g);
  const auto components = uct::connected_components(g);
  out["components"] = components.size();
  if (components.size() == 1) {
    out["diameter"] = uct::diameter(g);
    out["triameter"] = uct::triameter(g).value;
  } else {
    out["diameter"] = "undefined: disconnected";
    out["triameter"] = "undefined: disconnected";
  }
  out["clique"] = uct::clique_number(g);
  return out;
}

uct::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw uct::Error(uct::ErrorKind::InvalidArgument, "cannot read " + path);
  if (std::filesystem::path(path).extension() == ".json") return uct::read_json_graph(in);
  return uct::read_edge_list(in);
}

int run_field_info(std::uint32_t p, std::uint32_t k, bool table) {
  const auto f = uct::make_field(p, k);
  std::cout << "p = " << f.characteristic() << "\n";
  std::cout << "k = " << f.degree() << "\n";
  std::cout << "q = " << f.order() << "\n";
  std::cout << "modulus =";
  for (std::size_t i = 0; i < f.modulus().size(); ++i) std::cout << (i ? "," : " ") << f.modulus()[i];
  std::cout << "\n";
  if (table) {
    for (uct::Element a = 0; a < f.order(); ++a) {
      for (uct::Element b = 0; b < f.order(); ++b) std::cout << (b ? "," : "") << f.mul(a, b);
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int run_build(const CliConfig& cfg, const RingFlags& flags, const std::string& format, const std::string& out_path) {
  const auto fmt = uct::parse_graph_format(format);
  const uct::Graph g = uct::unitary_cayley(flags.spec(), cfg.limits());
  with_output(out_path, [&](std::ostream& os) { uct::write_graph(g, fmt, os); });
  // Counts go to stdout only when the graph itself went to a file.
  std::ostream& summary = out_path.empty() ? std::cerr : std::cout;
  summary << "vertices: " << g.vertex_count() << "\nedges: " << g.edge_count() << "\n";
  return kExitOk;
}

int run_invariants(const CliConfig& cfg, const RingFlags& flags, const std::string& input, const std::string& format) {
  const uct::Graph g = input.empty() ? uct::unitary_cayley(flags.spec(), cfg.limits()) : load_graph(input);
  const json inv = invariants_of(g);
  if (format == "json") {
    std::cout << inv.dump() << "\n";
  } else {
    for (const char* key : {"vertices", "edges", "degree", "components", "diameter", "triameter", "clique"}) {
      const auto& value = inv.at(key);
      std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
  return kExitOk;
}

int run_verify(const CliConfig& cfg, const std::vector<std::string>& spec_texts,
               const std::vector<std::string>& check_names, const std::string& out_path) {
  std::vector<uct::RingSpec> specs;
  for (const auto& text : spec_texts) specs.push_back(uct::RingSpec::parse(text));
  if (spec_texts.empty()) specs = uct::default_suite();

  uct::SuiteOptions options;
  options.limits = cfg.limits();
  options.seed = cfg.seed;
  for (const auto& name : check_names) {
    const auto claim = uct::parse_claim(name);
    if (!claim) throw uct::Error(uct::ErrorKind::InvalidArgument, "unknown check '" + name + "'");
    for (const auto& spec : specs) {
      if (!uct::applicable(*claim, spec)) {
        throw uct::Error(uct::ErrorKind::InvalidArgument,
                         "check '" + name + "' does not apply to " + spec.to_string());
      }
    }
    options.only.push_back(*claim);
  }

  const auto verdicts = uct::run_suite(specs, options);
  with_output(out_path, [&](std::ostream& os) { os << uct::report_json(verdicts).dump(2) << "\n"; });
  for (const auto& v : verdicts) {
    std::cerr << (v.pass ? "PASS " : "FAIL ") << v.spec.to_string() << " " << v.claim_id << "\n";
  }
  return uct::all_pass(verdicts) ? kExitOk : kExitFailed;
}

int run_recheck(const CliConfig& cfg, const std::string& report_path, const std::string& graph_path,
                const std::string& spec_text) {
  std::ifstream in(report_path);
  if (!in) throw uct::Error(uct::ErrorKind::InvalidArgument, "cannot read " + report_path);
  json report;
  try {
    report = json::parse(in);
  } catch (const json::exception& e) {
    throw uct::Error(uct::ErrorKind::ParseError, e.what());
  }
  const uct::Graph g = load_graph(graph_path);
  const auto spec = uct::RingSpec::parse(spec_text);

  std::size_t checked = 0;
  bool ok = true;
  for (const auto& entry : report) {
    const auto v = uct::verdict_from_json(entry);
    if (!(v.spec == spec)) continue;
    const bool good = uct::reverify(v, g, cfg.limits());
    std::cout << (good ? "OK   " : "FAIL ") << v.claim_id << "\n";
    ok = ok && good;
    ++checked;
  }
  if (checked == 0) {
    std::cerr << "no verdicts for " << spec.to_string() << " in " << report_path << "\n";
    return kExitFailed;
  }
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unitary Cayley graphs of triangular matrix rings: construction, invariants and verification"};
  app.require_subcommand(1);
  app.footer(
      "Ring specs for verify/recheck: tri:N,P,K (upper-triangular N x N over GF(P^K)) or zn:M.\n"
      "Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 size limit exceeded.\n"
      "The vertex cap defaults to UCT_VERTEX_CAP or 65536.");

  CliConfig cfg;
  app.add_option("--cap", cfg.cap, "Vertex cap (overrides UCT_VERTEX_CAP, at most 1048576)")
      ->check(CLI::Range(std::uint64_t{1}, uct::kHardVertexCeiling));
  app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  app.add_option("--seed", cfg.seed, "Seed for randomized spot checks");

  auto* field = app.add_subcommand("field", "Finite field utilities");
  field->require_subcommand(1);
  auto* field_info = field->add_subcommand("info", "Print GF(p^k) parameters and optionally its multiplication table");
  std::uint32_t field_p = 2, field_k = 1;
  bool field_table = false;
  field_info->add_option("--p", field_p, "Characteristic")->required();
  field_info->add_option("--k", field_k, "Extension degree")->required();
  field_info->add_flag("--table", field_table, "Print the multiplication table as CSV");

  auto* build = app.add_subcommand("build", "Build a unitary Cayley graph and export it");
  RingFlags build_flags;
  build_flags.attach(build);
  std::string build_format = "edges", build_out;
  build->add_option("--format", build_format, "Output format")->check(CLI::IsMember({"edges", "dot", "json", "text"}));
  build->add_option("--out", build_out, "Output file (default stdout)");

  auto* invariants = app.add_subcommand("invariants", "Degree, components, diameter, triameter and clique number");
  RingFlags inv_flags;
  inv_flags.attach(invariants);
  std::string inv_input, inv_format = "json";
  invariants->add_option("--input", inv_input, "Read the graph from an edge list (.json for the JSON envelope)");
  invariants->add_option("--format", inv_format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "Run the structural checks and write a JSON verdict report");
  std::vector<std::string> verify_specs, verify_checks;
  std::string verify_out;
  verify->add_option("--spec", verify_specs, "Ring spec tri:N,P,K or zn:M (repeatable; default suite if absent)");
  verify->add_option("--check", verify_checks, "Restrict to these checks (repeatable)");
  verify->add_option("--out", verify_out, "Report path (default stdout)");

  auto* recheck = app.add_subcommand("recheck", "Re-verify report certificates against an exported graph");
  std::string recheck_report, recheck_graph, recheck_spec;
  recheck->add_option("--report", recheck_report, "Verdict report from verify")->required();
  recheck->add_option("--graph", recheck_graph, "Cayley graph exported by build")->required();
  recheck->add_option("--spec", recheck_spec, "Spec the graph was built from")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    uct::set_thread_count(cfg.threads);
    if (field_info->parsed()) return run_field_info(field_p, field_k, field_table);
    if (build->parsed()) return run_build(cfg, build_flags, build_format, build_out);
    if (invariants->parsed()) return run_invariants(cfg, inv_flags, inv_input, inv_format);
    if (verify->parsed()) return run_verify(cfg, verify_specs, verify_checks, verify_out);
    if (recheck->parsed()) return run_recheck(cfg, recheck_report, recheck_graph, recheck_spec);
  } catch (const uct::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_resource_limit() ? kExitLimit : kExitUsage;
  }
  return kExitUsage;
}
