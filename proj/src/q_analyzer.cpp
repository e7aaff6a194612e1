#include "srgq/q_analyzer.hpp"

#include "srgq/errors.hpp"
#include "srgq/plus_graph.hpp"

namespace srgq {

namespace {

SrgParams triangle_free_params(const Graph& g) {
  const auto p = srg_parameters(g);
  if (!p) throw ApplicabilityError("graph is not strongly regular");
  if (p->lambda != 0) throw ApplicabilityError("lambda = " + std::to_string(p->lambda) + ", expected 0");
  return *p;
}

// value = square^2 * squarefree
std::pair<long, long> split_square(long value) {
  long square = 1, rest = value;
  for (long d = 2; d * d <= rest; ++d)
    while (rest % (d * d) == 0) {
      rest /= d * d;
      square *= d;
    }
  return {square, rest};
}

int to_multiplicity(const Rational& m) {
  if (m.get_den() != 1 || sgn(m) < 0 || !m.get_num().fits_sint_p())
    throw DomainError("SRG eigenvalue multiplicity " + to_string(m) + " is not a nonnegative integer");
  return static_cast<int>(m.get_num().get_si());
}

}  // namespace

std::string QuadraticSurd::to_string() const {
  if (radicand == 1) return srgq::to_string(a + b);
  if (sgn(b) == 0) return srgq::to_string(a);
  const std::string surd = srgq::to_string(b) + "*sqrt" + std::to_string(radicand);
  if (sgn(a) == 0) return surd;
  return srgq::to_string(a) + " + " + surd;
}

std::optional<std::pair<Vertex, Vertex>> unique_common_neighbor_obstruction(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v) && g.common_neighbors(u, v) == 1) return std::pair{u, v};
  return std::nullopt;
}

bool odd_order_obstruction(const Graph& g) { return triangle_free_params(g).n % 2 == 1; }

std::vector<SpectrumEntry> srg_adjacency_spectrum(const SrgParams& p) {
  if (!srg_feasible(p) || p.n < 2) throw DomainError("infeasible SRG parameters");
  const long diff = p.lambda - p.mu;
  const long disc = diff * diff + 4L * (p.k - p.mu);
  if (disc <= 0) throw DomainError("SRG parameters give a degenerate spectrum");
  const auto [root_int, radicand] = split_square(disc);
  const long balance = 2L * p.k + (p.n - 1L) * diff;

  Rational mult_r, mult_s;
  if (radicand == 1) {
    const Rational shift = make_rational(balance, root_int);
    mult_r = (Rational(p.n - 1) - shift) / 2;
    mult_s = (Rational(p.n - 1) + shift) / 2;
  } else {
    if (balance != 0) throw DomainError("irrational SRG eigenvalues need 2k + (n-1)(lambda-mu) = 0");
    mult_r = mult_s = make_rational(p.n - 1, 2);
  }
  QuadraticSurd r, s;
  if (radicand == 1) {
    r = {make_rational(diff + root_int, 2), 0, 1};
    s = {make_rational(diff - root_int, 2), 0, 1};
  } else {
    r = {make_rational(diff, 2), make_rational(root_int, 2), radicand};
    s = {make_rational(diff, 2), make_rational(-root_int, 2), radicand};
  }
  std::vector<SpectrumEntry> out{{{p.k, 0, 1}, 1}, {r, to_multiplicity(mult_r)}, {s, to_multiplicity(mult_s)}};
  if (1 + out[1].multiplicity + out[2].multiplicity != p.n) throw InvariantError("multiplicities do not sum to n");
  return out;
}

std::string_view to_string(Obstruction o) {
  switch (o) {
    case Obstruction::UniqueCommonNeighbor:
      return "unique-common-neighbor";
    case Obstruction::OddOrder:
      return "odd-order";
    case Obstruction::ParityInfeasible:
      return "parity-infeasible";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Q2:
      return "q=2";
    case Verdict::Q3:
      return "q=3";
    case Verdict::Open:
      return "open";
  }
  return "?";
}

QReport analyze(const Graph& g, std::string_view name) {
  QReport r;
  r.name = std::string(name);
  r.params = triangle_free_params(g);
  r.spectrum = srg_adjacency_spectrum(r.params);
  r.five_cycle_premise = every_vertex_on_5cycle(g);

  r.common_neighbor_witness = unique_common_neighbor_obstruction(g);
  if (r.common_neighbor_witness && g.size() > 0) r.obstructions.push_back(Obstruction::UniqueCommonNeighbor);

  r.odd_order = odd_order_obstruction(g);
  if (r.odd_order) r.obstructions.push_back(Obstruction::OddOrder);

  r.plus_components = plus_components(plus_graph(g)).size();

  if (r.params.mu == 2) {
    const Gf2System sys = build_odd4cycle_system(g);
    const Gf2Result res = solve_gf2(sys);
    ParityOutcome out;
    out.rows = sys.rows.size();
    out.vars = static_cast<std::size_t>(sys.num_vars);
    out.feasible = is_feasible(res);
    if (!out.feasible) {
      out.certificate = std::get<InfeasibilityCertificate>(res);
      r.obstructions.push_back(Obstruction::ParityInfeasible);
    }
    r.parity = std::move(out);
  }

  if (name == "clebsch") r.two_eigenvalue = two_eigenvalue_certificate(clebsch_witness_matrix(), g);

  // SRGs that are neither complete nor edgeless have q in {2,3}.
  if (!r.obstructions.empty()) r.verdict = Verdict::Q3;
  else if (r.two_eigenvalue && r.two_eigenvalue->pass()) r.verdict = Verdict::Q2;
  else r.verdict = Verdict::Open;
  return r;
}

bool verify_report(const QReport& r, const Graph& g) {
  switch (r.verdict) {
    case Verdict::Q2:
      return r.name == "clebsch" && two_eigenvalue_certificate(clebsch_witness_matrix(), g).pass();
    case Verdict::Q3: {
      bool evidence = false;
      for (Obstruction o : r.obstructions) {
        switch (o) {
          case Obstruction::UniqueCommonNeighbor: {
            if (!r.common_neighbor_witness) return false;
            const auto [u, v] = *r.common_neighbor_witness;
            if (g.adjacent(u, v) || g.common_neighbors(u, v) != 1) return false;
            break;
          }
          case Obstruction::OddOrder:
            if (g.order() % 2 != 1) return false;
            break;
          case Obstruction::ParityInfeasible:
            if (!r.parity || !r.parity->certificate) return false;
            if (!verify_certificate(build_odd4cycle_system(g), *r.parity->certificate)) return false;
            break;
        }
        evidence = true;
      }
      return evidence;
    }
    case Verdict::Open:
      return r.obstructions.empty();
  }
  return false;
}

Verdict expected_verdict(std::string_view name) {
  if (name == "clebsch") return Verdict::Q2;
  if (name == "higman-sims") return Verdict::Open;
  if (name == "pentagon" || name == "petersen" || name == "hoffman-singleton" || name == "gewirtz" ||
      name == "mesner")
    return Verdict::Q3;
  throw DomainError("no expected verdict for graph '" + std::string(name) + "'");
}

}  // namespace srgq
