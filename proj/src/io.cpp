#include "srgq/io.hpp"

#include <fstream>
#include <ostream>

#include "srgq/errors.hpp"

namespace srgq::io {

namespace {

json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class parse_integer(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw FormatError("bad integer string");
    return z;
  }
  throw FormatError("expected integer");
}

Rational parse_rational(const json& num, const json& den) {
  const mpz_class d = parse_integer(den);
  if (d == 0) throw FormatError("zero denominator");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

json cycle_vertices(const FourCycle& c) { return json(c.vertices); }

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw FormatError("graph JSON needs \"n\" and \"edges\"");
  if (!j["n"].is_number_integer()) throw FormatError("\"n\" must be an integer");
  if (!j["edges"].is_array()) throw FormatError("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw FormatError("each edge must be a pair of integers");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return build_graph(j["n"].get<int>(), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw FormatError("malformed JSON in " + path + ": " + e.what());
  }
  return graph_from_json(j);
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << j.dump(2) << "\n";
}

void write_dot(std::ostream& os, const Graph& g) {
  os << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << " [label=\"" << v << "\"];\n";
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
}

json matrix_to_json(const QuadMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) {
      const auto& x = m(i, j);
      row.push_back({integer(x.rational_part().get_num()), integer(x.rational_part().get_den()),
                     integer(x.surd_part().get_num()), integer(x.surd_part().get_den())});
    }
    rows.push_back(std::move(row));
  }
  return {{"dim", m.dim()}, {"entries", rows}};
}

QuadMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries") || !j["dim"].is_number_integer())
    throw FormatError("matrix JSON needs \"dim\" and \"entries\"");
  const int n = j["dim"].get<int>();
  const auto& rows = j["entries"];
  if (n < 0 || !rows.is_array() || rows.size() != static_cast<std::size_t>(n))
    throw FormatError("matrix row count does not match dim");
  QuadMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != static_cast<std::size_t>(n))
      throw FormatError("matrix column count does not match dim");
    for (int k = 0; k < n; ++k) {
      const auto& q = rows[i][k];
      if (!q.is_array() || q.size() != 4) throw FormatError("matrix entry must be a quadruple");
      m(i, k) = QuadElem(parse_rational(q[0], q[1]), parse_rational(q[2], q[3]));
    }
  }
  return m;
}

json decomposition_to_json(const PltDecomposition& dec) {
  json tau = json::array();
  for (const auto& c : dec.tau_cycles) tau.push_back(c);
  json pairs = json::array();
  for (const auto& [a, b] : dec.pairings) pairs.push_back({a, b});
  return {{"P", dec.P}, {"L", dec.L}, {"T", dec.T}, {"tau_cycles", tau}, {"pairings", pairs}};
}

json witness_to_json(const SignAssignment& s) {
  json bits = json::array();
  for (std::size_t i = 0; i < s.bits.size(); ++i) bits.push_back(s.bits.test(i) ? 1 : 0);
  return {{"status", "FEASIBLE"}, {"witness", bits}};
}

json certificate_to_json(const InfeasibilityCertificate& c) {
  json cycles = json::array();
  for (const auto& fc : c.cycles) cycles.push_back(cycle_vertices(fc));
  return {{"status", "INFEASIBLE"}, {"certificate_rows", c.rows}, {"cycles", cycles}};
}

json report_to_json(const QReport& r) {
  json j;
  j["name"] = r.name;
  j["srg"] = {r.params.n, r.params.k, r.params.lambda, r.params.mu};
  json obs = json::array();
  for (Obstruction o : r.obstructions) obs.push_back(std::string(to_string(o)));
  j["obstructions"] = obs;
  j["verdict"] = std::string(to_string(r.verdict));
  if (r.common_neighbor_witness)
    j["common_neighbor_witness"] = {r.common_neighbor_witness->first, r.common_neighbor_witness->second};
  j["odd_order"] = r.odd_order;
  j["every_vertex_on_5cycle"] = r.five_cycle_premise;
  j["plus_components"] = r.plus_components;
  if (r.parity) {
    json p = {{"rows", r.parity->rows}, {"vars", r.parity->vars},
              {"status", r.parity->feasible ? "FEASIBLE" : "INFEASIBLE"}};
    if (r.parity->certificate) p["certificate_rows"] = r.parity->certificate->rows;
    j["parity"] = p;
  }
  if (r.two_eigenvalue) {
    const auto& c = *r.two_eigenvalue;
    j["two_eigenvalue_certificate"] = {{"pattern", c.pattern_ok},
                                       {"idempotent", c.idempotent_ok},
                                       {"nontrivial", c.nontrivial_ok},
                                       {"rank", c.rank},
                                       {"multiplicities", {c.multiplicity_zero, c.multiplicity_one}},
                                       {"pass", c.pass()}};
  }
  json spec = json::array();
  for (const auto& e : r.spectrum) spec.push_back({{"eigenvalue", e.eigenvalue.to_string()}, {"multiplicity", e.multiplicity}});
  j["spectrum"] = spec;
  return j;
}

}  // namespace srgq::io
