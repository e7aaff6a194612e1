#ifndef SRGQ_Q_ANALYZER_HPP
#define SRGQ_Q_ANALYZER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srgq/graph.hpp"
#include "srgq/quadratic.hpp"
#include "srgq/sign_parity.hpp"

namespace srgq {

/// a + b*sqrt(radicand), radicand squarefree (1 for rationals).
struct QuadraticSurd {
  Rational a;
  Rational b;
  long radicand = 1;
  std::string to_string() const;
  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

struct SpectrumEntry {
  QuadraticSurd eigenvalue;
  int multiplicity = 0;
};

/// Some non-adjacent pair with exactly one common neighbour, if any.
std::optional<std::pair<Vertex, Vertex>> unique_common_neighbor_obstruction(const Graph& g);

/// True iff |V| is odd. Requires an SRG with lambda = 0; throws
/// ApplicabilityError otherwise.
bool odd_order_obstruction(const Graph& g);

/// k, r, s with multiplicities 1, f, g, r > s. Throws DomainError when f or
/// g is not a nonnegative integer or the parameters are infeasible.
std::vector<SpectrumEntry> srg_adjacency_spectrum(const SrgParams& p);

enum class Obstruction { UniqueCommonNeighbor, OddOrder, ParityInfeasible };
enum class Verdict { Q2, Q3, Open };

std::string_view to_string(Obstruction o);
std::string_view to_string(Verdict v);

struct ParityOutcome {
  std::size_t rows = 0;
  std::size_t vars = 0;
  bool feasible = false;
  std::optional<InfeasibilityCertificate> certificate;
};

struct QReport {
  std::string name;
  SrgParams params;
  std::vector<Obstruction> obstructions;
  std::optional<std::pair<Vertex, Vertex>> common_neighbor_witness;
  bool odd_order = false;
  std::optional<ParityOutcome> parity;  // only for mu = 2
  std::optional<TwoEigenvalueCertificate> two_eigenvalue;
  std::size_t plus_components = 0;  // informational
  bool five_cycle_premise = false;  // every vertex on a 5-cycle
  std::vector<SpectrumEntry> spectrum;
  Verdict verdict = Verdict::Open;
};

/// Runs the obstructions cheapest first and attaches the explicit witness
/// for the Clebsch graph. Throws ApplicabilityError unless g is an SRG with
/// lambda = 0.
QReport analyze(const Graph& g, std::string_view name);

/// Re-checks the evidence behind the verdict from scratch: the witness
/// pair, the odd order, the XOR certificate or the idempotent matrix.
bool verify_report(const QReport& r, const Graph& g);

/// Verdicts for the seven named graphs.
Verdict expected_verdict(std::string_view name);

}  // namespace srgq

#endif  // SRGQ_Q_ANALYZER_HPP
