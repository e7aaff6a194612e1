#ifndef SRGQ_SIGN_PARITY_HPP
#define SRGQ_SIGN_PARITY_HPP

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "srgq/bitvec.hpp"
#include "srgq/graph.hpp"
#include "srgq/quadratic.hpp"

namespace srgq {

/// One bit per source edge: 1 means the matrix entry on that edge is
/// negative, so a cycle is odd (sign product -1) iff its bit-sum is 1.
struct SignAssignment {
  BitVec bits;
  bool negative(EdgeId e) const { return bits.test(static_cast<std::size_t>(e)); }
};

struct Gf2Row {
  BitVec support;  // over the system's variables
  bool rhs = false;
  std::optional<FourCycle> origin;
};

/// Linear equations sum_{i in support} x_i = rhs over GF(2).
struct Gf2System {
  int num_vars = 0;
  std::vector<Gf2Row> rows;

  void add_row(std::span<const int> vars, bool rhs, std::optional<FourCycle> origin = std::nullopt);
};

/// Rows whose supports XOR to the empty set while their right-hand sides
/// XOR to 1: a proof that 0 = 1 follows from the system.
struct InfeasibilityCertificate {
  std::vector<std::size_t> rows;  // ascending
  std::vector<FourCycle> cycles;  // origins of the cited rows, when recorded
};

using Gf2Result = std::variant<SignAssignment, InfeasibilityCertificate>;

inline bool is_feasible(const Gf2Result& r) { return std::holds_alternative<SignAssignment>(r); }

/// One row per 4-cycle of g asserting the cycle is odd. Requires g to be an
/// SRG with lambda = 0 and mu = 2 unless force is set; otherwise throws
/// ApplicabilityError naming the failed parameter.
Gf2System build_odd4cycle_system(const Graph& g, bool force = false);

/// Gaussian elimination over GF(2), rows processed in order. Feasible:
/// the solution with every free variable 0. Infeasible: the combination of
/// input rows that produced the first 0 = 1 row.
Gf2Result solve_gf2(const Gf2System& sys);

/// Every 4-cycle of g has odd bit-sum. Throws DomainError on size mismatch.
bool verify_assignment(const Graph& g, const SignAssignment& s);

/// Recomputes the XOR of the cited rows directly. Empty certificates are
/// rejected; throws DomainError for an out-of-range row index.
bool verify_certificate(const Gf2System& sys, const InfeasibilityCertificate& cert);

/// Bit per edge set iff the corresponding entry of m is negative. Throws
/// PreconditionError if m does not have g's zero pattern.
SignAssignment extract_signs_from_matrix(const QuadMatrix& m, const Graph& g);

/// An 8-cycle plus an outside vertex adjacent to four alternate cycle
/// vertices.
struct FanEightCycle {
  std::array<Vertex, 8> cycle;  // cycle[0], [2], [4], [6] are hub neighbours
  Vertex hub;
};

/// All (8-cycle, hub) pairs with |N(hub) ∩ V(C8)| = 4, hub off the cycle and
/// its neighbours at alternate positions (always the case when triangle-free).
std::vector<FanEightCycle> enumerate_fan_8cycles(const Graph& g);

struct ConsequenceReport {
  std::size_t crossbar_total = 0;
  std::size_t crossbar_even = 0;
  std::size_t fan8_total = 0;
  std::size_t fan8_even = 0;
  bool all_even() const { return crossbar_even == crossbar_total && fan8_even == fan8_total; }
};

/// Audits the parity consequences of odd 4-cycles: crossbar 6-cycles and
/// fan 8-cycles must be even. Throws PreconditionError unless
/// verify_assignment(g, s) holds.
ConsequenceReport check_consequences(const Graph& g, const SignAssignment& s);

}  // namespace srgq

#endif  // SRGQ_SIGN_PARITY_HPP
