#ifndef SRGQ_QUADRATIC_HPP
#define SRGQ_QUADRATIC_HPP

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "srgq/graph.hpp"

namespace srgq {

using Rational = mpq_class;

/// num/den in lowest terms; den must be nonzero.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);

/// Element a + b*sqrt(5) of Q(sqrt 5).
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(Rational a, Rational b = 0);  // NOLINT(google-explicit-constructor)
  QuadElem(long a);                      // NOLINT(google-explicit-constructor)

  static QuadElem sqrt5() { return {0, 1}; }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  /// -1, 0 or +1, decided by comparing a^2 with 5 b^2 when the parts disagree.
  int sign() const;

  /// Throws DomainError for zero.
  QuadElem inverse() const;

  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o) { return *this *= o.inverse(); }
  QuadElem operator-() const { return {-a_, -b_}; }

  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
  friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }
  friend bool operator==(const QuadElem& x, const QuadElem& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  /// "p/q + r/s*sqrt5" with the zero part dropped; "0" for zero.
  std::string to_string() const;

 private:
  void canonicalize() {
    a_.canonicalize();
    b_.canonicalize();
  }
  Rational a_ = 0;
  Rational b_ = 0;
};

/// Dense square matrix over Q(sqrt 5), row-major.
class QuadMatrix {
 public:
  QuadMatrix() = default;
  explicit QuadMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim) {}

  static QuadMatrix identity(int dim);
  static QuadMatrix adjacency(const Graph& g);

  int dim() const { return dim_; }
  QuadElem& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
  const QuadElem& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }

  bool is_symmetric() const;

  QuadMatrix& operator+=(const QuadMatrix& o);
  QuadMatrix& operator-=(const QuadMatrix& o);
  QuadMatrix& operator*=(const QuadElem& s);
  friend QuadMatrix operator+(QuadMatrix a, const QuadMatrix& b) { return a += b; }
  friend QuadMatrix operator-(QuadMatrix a, const QuadMatrix& b) { return a -= b; }
  friend QuadMatrix operator*(QuadMatrix a, const QuadElem& s) { return a *= s; }
  friend QuadMatrix operator*(const QuadElem& s, QuadMatrix a) { return a *= s; }
  friend QuadMatrix operator*(const QuadMatrix& a, const QuadMatrix& b);
  friend bool operator==(const QuadMatrix&, const QuadMatrix&) = default;

 private:
  int dim_ = 0;
  std::vector<QuadElem> entries_;
};

QuadElem trace(const QuadMatrix& m);

/// Rank by fraction-free (Bareiss-style) elimination, first nonzero pivot.
int rank(const QuadMatrix& m);

bool is_idempotent(const QuadMatrix& m);

/// Off-diagonal entry (i,j) is nonzero iff i ~ j in g. Throws DomainError on
/// dimension mismatch.
bool pattern_matches(const QuadMatrix& m, const Graph& g);

/// Signs of the 16x16 witness for the Clebsch graph, rows and columns in
/// 4-bit label order. Diagonal entries are 0 here; the matrix itself is
/// (1/(2 sqrt 5)) * (sqrt5 * I + S).
const std::array<std::array<int, 16>, 16>& clebsch_witness_signs();

/// Idempotent member of S(Clebsch): diagonal 1/2, off-diagonal
/// ±1/(2 sqrt 5) on edges.
QuadMatrix clebsch_witness_matrix();

/// Outcome of checking that m is an idempotent matrix with g's pattern.
struct TwoEigenvalueCertificate {
  bool pattern_ok = false;
  bool idempotent_ok = false;
  bool nontrivial_ok = false;  // m is neither 0 nor I
  int rank = 0;
  int multiplicity_zero = 0;  // eigenvalue 0
  int multiplicity_one = 0;   // eigenvalue 1
  bool pass() const { return pattern_ok && idempotent_ok && nontrivial_ok; }
};

TwoEigenvalueCertificate two_eigenvalue_certificate(const QuadMatrix& m, const Graph& g);

struct PsdRankBounds {
  int lower = 0;
  int upper = 0;
  friend bool operator==(const PsdRankBounds&, const PsdRankBounds&) = default;
};

/// Bounds on the minimum PSD rank over S(g). The lower bound ceil(n/2)
/// applies to triangle-free graphs without isolated vertices (else 1); the
/// upper bound is rank(m) for a certified witness, else n. Throws
/// PreconditionError when m is given but fails certification.
PsdRankBounds psd_rank_bounds(const Graph& g, const std::optional<QuadMatrix>& m);

}  // namespace srgq

#endif  // SRGQ_QUADRATIC_HPP
