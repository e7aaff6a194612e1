#include "srgq/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "srgq/constructors.hpp"
#include "srgq/errors.hpp"
#include "srgq/gewirtz_structure.hpp"
#include "srgq/io.hpp"
#include "srgq/plus_graph.hpp"
#include "srgq/q_analyzer.hpp"
#include "srgq/quadratic.hpp"
#include "srgq/sign_parity.hpp"

namespace srgq::cli {

namespace {

// Input problem reported as a usage error (exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph resolve_target(const std::string& target) {
  if (auto g = graph_by_name(target)) return *g;
  if (std::filesystem::exists(target)) return io::read_graph_file(target);
  throw UsageError("unknown graph '" + target + "' (not a constructor name or readable file)");
}

std::string check(bool ok) { return ok ? "pass" : "FAIL"; }

std::string isomorphism_class(const Graph& c) {
  const int n = c.order();
  if (n == 1) return "K_1";
  if (is_cycle_graph(c)) return "C_" + std::to_string(n);
  if (n > kMaxIsomorphismOrder) return "unclassified(n=" + std::to_string(n) + ")";
  if (are_isomorphic(c, complete_graph(n))) return "K_" + std::to_string(n);
  for (int a = 1; a <= n / 2; ++a)
    if (a * (n - a) == c.size() && are_isomorphic(c, complete_bipartite(a, n - a)))
      return "K_{" + std::to_string(a) + "," + std::to_string(n - a) + "}";
  if (are_isomorphic(c, path_graph(n))) return "P_" + std::to_string(n);
  return "other(n=" + std::to_string(n) + ",m=" + std::to_string(c.size()) + ")";
}

std::uint64_t search_budget(std::uint64_t flag_value) {
  if (const char* env = std::getenv("SRGQ_SEARCH_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw UsageError("SRGQ_SEARCH_BUDGET must be a positive integer");
    return v;
  }
  return flag_value;
}

void emit_json(const io::json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) out << j.dump() << "\n";
  else io::write_json_file(path, j);
}

int cmd_build(const std::string& name, bool dot, const std::string& out_path, std::ostream& out) {
  auto g = graph_by_name(name);
  if (!g) throw UsageError("unknown graph name '" + name + "'");
  if (dot) io::write_dot(out, *g);
  else emit_json(io::graph_to_json(*g), out_path, out);
  return kExitOk;
}

int cmd_verify_srg(const std::string& target, std::ostream& out) {
  const Graph g = resolve_target(target);
  const auto p = srg_parameters(g);
  if (!p) {
    out << "not strongly regular\n";
    return kExitFailure;
  }
  out << "srg: (" << p->n << "," << p->k << "," << p->lambda << "," << p->mu << ")\n";
  const auto& names = named_graphs();
  if (std::find(names.begin(), names.end(), target) != names.end()) {
    const bool match = *p == expected_parameters(target);
    out << "expected parameters: " << check(match) << "\n";
    return match ? kExitOk : kExitFailure;
  }
  return kExitOk;
}

int cmd_plus(const std::string& target, const std::string& emit_path, std::ostream& out) {
  const Graph g = resolve_target(target);
  const PlusGraph p = plus_graph(g);
  const auto comps = plus_components(p);
  bool two_regular = p.graph.order() > 0;
  for (Vertex v = 0; v < p.graph.order(); ++v) two_regular = two_regular && p.graph.degree(v) == 2;
  out << "vertices: " << p.graph.order() << "\n";
  out << "edges: " << p.graph.size() << "\n";
  out << "components: " << comps.size() << "\n";
  out << "connected: " << (comps.size() == 1 ? "yes" : "no") << "\n";
  out << "2-regular: " << (two_regular ? "yes" : "no") << "\n";
  for (std::size_t i = 0; i < comps.size(); ++i)
    out << "component " << i << ": size " << comps[i].vertices.size() << ", " << isomorphism_class(comps[i].graph)
        << "\n";
  if (!emit_path.empty()) io::write_json_file(emit_path, io::graph_to_json(p.graph));
  return kExitOk;
}

int cmd_parity(const std::string& target, bool force, const std::string& expect, const std::string& out_path,
               std::ostream& out) {
  const Graph g = resolve_target(target);
  const Gf2System sys = build_odd4cycle_system(g, force);
  const Gf2Result res = solve_gf2(sys);
  const bool feasible = is_feasible(res);
  out << "rows: " << sys.rows.size() << "\n";
  out << "vars: " << sys.num_vars << "\n";
  io::json j;
  if (feasible) {
    out << "FEASIBLE\n";
    j = io::witness_to_json(std::get<SignAssignment>(res));
  } else {
    const auto& cert = std::get<InfeasibilityCertificate>(res);
    out << "INFEASIBLE\n";
    out << "certificate rows: " << cert.rows.size() << ", verified: " << check(verify_certificate(sys, cert)) << "\n";
    j = io::certificate_to_json(cert);
  }
  emit_json(j, out_path, out);
  if (expect == "feasible" && !feasible) return kExitFailure;
  if (expect == "infeasible" && feasible) return kExitFailure;
  return kExitOk;
}

int cmd_certify_q2(const std::string& target, const std::string& matrix_path, const std::string& matrix_out,
                   std::ostream& out) {
  const Graph g = resolve_target(target);
  QuadMatrix m;
  if (!matrix_path.empty()) {
    std::ifstream in(matrix_path);
    if (!in) throw UsageError("cannot open " + matrix_path);
    io::json j;
    try {
      in >> j;
    } catch (const io::json::parse_error& e) {
      throw FormatError(std::string("malformed matrix JSON: ") + e.what());
    }
    m = io::matrix_from_json(j);
  } else if (target == "clebsch") {
    m = clebsch_witness_matrix();
  } else {
    throw UsageError("no built-in witness for '" + target + "'; pass --matrix");
  }
  const auto cert = two_eigenvalue_certificate(m, g);
  out << "pattern: " << check(cert.pattern_ok) << "\n";
  out << "idempotent: " << check(cert.idempotent_ok) << "\n";
  out << "nontrivial: " << check(cert.nontrivial_ok) << "\n";
  out << "trace: " << trace(m).to_string() << "\n";
  out << "rank: " << cert.rank << "\n";
  out << "multiplicities: 0^" << cert.multiplicity_zero << " 1^" << cert.multiplicity_one << "\n";
  if (cert.pass()) {
    const auto b = psd_rank_bounds(g, m);
    out << "mr+ bounds: [" << b.lower << ", " << b.upper << "]\n";
  }
  out << "certificate: " << check(cert.pass()) << "\n";
  if (!matrix_out.empty()) io::write_json_file(matrix_out, io::matrix_to_json(m));
  return cert.pass() ? kExitOk : kExitFailure;
}

int cmd_decompose(const std::string& target, std::uint64_t budget, const std::string& out_path, std::ostream& out) {
  const Graph g = resolve_target(target);
  bool all = true;
  auto line = [&](const std::string& label, bool ok) {
    all = all && ok;
    out << label << ": " << check(ok) << "\n";
  };
  line("edge-disjoint 4-cycles through each edge", verify_nine_4cycles(g));
  const PltDecomposition dec = find_plt_decomposition(g, search_budget(budget));
  bool traps_ok = true;
  try {
    traps_ok = trapezohedral_subgraphs(g, dec).size() == dec.T.size();
  } catch (const StructuralError& e) {
    out << "  " << e.what() << "\n";
    traps_ok = false;
  }
  line("trapezohedral subgraphs Z_t", traps_ok);
  line("three 4-cycle pairings", dec.pairings.size() == 3);
  std::string why;
  const bool matchings = verify_matchings(g, dec, &why);
  if (!matchings) out << "  " << why << "\n";
  line("perfect matchings and exclusivity", matchings);
  line("rim edge distribution", verify_distribution(g, dec));
  emit_json(io::decomposition_to_json(dec), out_path, out);
  return all ? kExitOk : kExitFailure;
}

int cmd_spectrum(const std::string& target, std::ostream& out) {
  const Graph g = resolve_target(target);
  const auto p = srg_parameters(g);
  if (!p) throw ApplicabilityError("graph is not strongly regular");
  for (const auto& e : srg_adjacency_spectrum(*p))
    out << e.eigenvalue.to_string() << " ^" << e.multiplicity << "\n";
  return kExitOk;
}

std::string evidence(const QReport& r) {
  std::ostringstream os;
  if (r.verdict == Verdict::Q2) {
    os << "idempotent witness, multiplicities (" << r.two_eigenvalue->multiplicity_zero << ","
       << r.two_eigenvalue->multiplicity_one << ")";
  } else if (r.verdict == Verdict::Q3) {
    for (std::size_t i = 0; i < r.obstructions.size(); ++i) os << (i ? ", " : "") << to_string(r.obstructions[i]);
  } else {
    os << "no obstruction applies";
  }
  return os.str();
}

int cmd_report(const std::string& graph_name, bool all, bool as_json, const std::string& out_dir, std::ostream& out) {
  std::vector<std::string> targets;
  if (all) targets = named_graphs();
  else if (!graph_name.empty()) targets.push_back(graph_name);
  else throw UsageError("report needs --graph <name> or --all");

  bool matches = true;
  io::json reports = io::json::array();
  if (!as_json)
    out << std::left << std::setw(20) << "graph" << std::setw(18) << "srg" << std::setw(8) << "verdict"
        << std::setw(10) << "expected" << "evidence\n";
  for (const auto& name : targets) {
    const Graph g = resolve_target(name);
    const QReport r = analyze(g, name);
    std::string expected = "-";
    const auto& names = named_graphs();
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      const Verdict want = expected_verdict(name);
      expected = std::string(to_string(want));
      matches = matches && want == r.verdict && verify_report(r, g);
    }
    std::ostringstream srg;
    srg << "(" << r.params.n << "," << r.params.k << "," << r.params.lambda << "," << r.params.mu << ")";
    if (!as_json)
      out << std::left << std::setw(20) << name << std::setw(18) << srg.str() << std::setw(8) << to_string(r.verdict)
          << std::setw(10) << expected << evidence(r) << "\n";
    const io::json j = io::report_to_json(r);
    reports.push_back(j);
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      io::write_json_file((std::filesystem::path(out_dir) / (name + ".json")).string(), j);
    }
  }
  if (as_json) out << reports.dump(2) << "\n";
  else out << "table matches expected verdicts: " << (matches ? "yes" : "NO") << "\n";
  return matches ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-value certificates for triangle-free strongly regular graphs", "srgq"};
  app.require_subcommand(1);

  std::string target, out_path, emit_path, expect, matrix_path, matrix_out, graph_name, out_dir;
  bool dot = false, force = false, all = false, as_json = false;
  std::uint64_t budget = kDefaultSearchBudget;

  auto* build = app.add_subcommand("build", "Emit a named graph as JSON (or DOT)");
  build->add_option("name", target, "pentagon, petersen, clebsch, hoffman-singleton, gewirtz, mesner, higman-sims, "
                                    "trapezohedral:<n>")
      ->required();
  build->add_flag("--dot", dot, "Emit Graphviz DOT instead of JSON");
  build->add_option("-o,--out", out_path, "Write to file instead of stdout");

  auto* verify = app.add_subcommand("verify-srg", "Print SRG parameters of a graph");
  verify->add_option("target", target, "Graph name or JSON file")->required();

  auto* plus = app.add_subcommand("plus", "Analyze the plus graph");
  plus->add_option("target", target, "Graph name or JSON file")->required();
  plus->add_option("--emit-plus", emit_path, "Write the plus graph as JSON");

  auto* parity = app.add_subcommand("parity", "Solve the odd 4-cycle parity system");
  parity->add_option("target", target, "Graph name or JSON file")->required();
  parity->add_flag("--force", force, "Build the system even outside SRG(n,k,0,2)");
  parity->add_option("--expect", expect, "Exit 1 unless the outcome matches")
      ->check(CLI::IsMember({"feasible", "infeasible"}));
  parity->add_option("-o,--out", out_path, "Write witness/certificate JSON to file");

  auto* certify = app.add_subcommand("certify-q2", "Check a two-eigenvalue witness matrix");
  certify->add_option("target", target, "Graph name or JSON file")->required();
  certify->add_option("--matrix", matrix_path, "Witness matrix JSON (default: built-in Clebsch witness)");
  certify->add_option("--matrix-out", matrix_out, "Write the checked matrix as JSON");

  auto* decompose = app.add_subcommand("decompose", "Recover the P/L/T structure of SRG(56,10,0,2)");
  decompose->add_option("target", target, "Graph name or JSON file")->required();
  decompose->add_option("--budget", budget, "Coclique search node limit");
  decompose->add_option("-o,--out", out_path, "Write decomposition JSON to file");

  auto* spectrum = app.add_subcommand("spectrum", "Exact adjacency spectrum from SRG parameters");
  spectrum->add_option("target", target, "Graph name or JSON file")->required();

  auto* report = app.add_subcommand("report", "Verdict table for the seven graphs");
  auto* graph_opt = report->add_option("--graph", graph_name, "Single graph name");
  report->add_flag("--all", all, "All seven graphs")->excludes(graph_opt);
  report->add_flag("--json", as_json, "Print the reports as JSON instead of a table");
  report->add_option("--out-dir", out_dir, "Write one <name>.json report per graph");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*build) return cmd_build(target, dot, out_path, out);
    if (*verify) return cmd_verify_srg(target, out);
    if (*plus) return cmd_plus(target, emit_path, out);
    if (*parity) return cmd_parity(target, force, expect, out_path, out);
    if (*certify) return cmd_certify_q2(target, matrix_path, matrix_out, out);
    if (*decompose) return cmd_decompose(target, budget, out_path, out);
    if (*spectrum) return cmd_spectrum(target, out);
    if (*report) return cmd_report(graph_name, all, as_json, out_dir, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ApplicabilityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace srgq::cli
