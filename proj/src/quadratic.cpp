#include "srgq/quadratic.hpp"

#include <sstream>

#include "srgq/errors.hpp"

namespace srgq {

std::string to_string(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

QuadElem::QuadElem(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) { canonicalize(); }
QuadElem::QuadElem(long a) : a_(a), b_(0) {}

int QuadElem::sign() const {
  const int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger magnitude wins; a^2 == 5 b^2 is impossible
  // for rational nonzero a, b.
  const Rational a2 = a_ * a_, b2 = 5 * b_ * b_;
  return a2 > b2 ? sa : sb;
}

QuadElem QuadElem::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in Q(sqrt5)");
  const Rational norm = a_ * a_ - 5 * b_ * b_;
  return {a_ / norm, -b_ / norm};
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  Rational a = a_ * o.a_ + 5 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::string QuadElem::to_string() const {
  if (sgn(b_) == 0) return srgq::to_string(a_);
  const std::string surd = srgq::to_string(b_) + "*sqrt5";
  if (sgn(a_) == 0) return surd;
  return srgq::to_string(a_) + " + " + surd;
}

QuadMatrix QuadMatrix::identity(int dim) {
  QuadMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

QuadMatrix QuadMatrix::adjacency(const Graph& g) {
  QuadMatrix m(g.order());
  for (const Edge& e : g.edges()) m(e.u, e.v) = m(e.v, e.u) = 1;
  return m;
}

bool QuadMatrix::is_symmetric() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

QuadMatrix& QuadMatrix::operator+=(const QuadMatrix& o) {
  if (o.dim_ != dim_) throw DomainError("matrix dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

QuadMatrix& QuadMatrix::operator-=(const QuadMatrix& o) {
  if (o.dim_ != dim_) throw DomainError("matrix dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

QuadMatrix& QuadMatrix::operator*=(const QuadElem& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

QuadMatrix operator*(const QuadMatrix& a, const QuadMatrix& b) {
  if (a.dim_ != b.dim_) throw DomainError("matrix dimension mismatch");
  const int n = a.dim_;
  QuadMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const QuadElem& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  return out;
}

QuadElem trace(const QuadMatrix& m) {
  QuadElem t;
  for (int i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

int rank(const QuadMatrix& m) {
  QuadMatrix w = m;
  const int n = w.dim();
  int row = 0;
  QuadElem prev_pivot = 1;
  for (int col = 0; col < n && row < n; ++col) {
    int pivot = -1;
    for (int r = row; r < n; ++r)
      if (!w(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < n; ++j) std::swap(w(pivot, j), w(row, j));
    const QuadElem p = w(row, col);
    for (int r = row + 1; r < n; ++r) {
      const QuadElem f = w(r, col);
      for (int j = col; j < n; ++j) w(r, j) = (p * w(r, j) - f * w(row, j)) / prev_pivot;
    }
    prev_pivot = p;
    ++row;
  }
  return row;
}

bool is_idempotent(const QuadMatrix& m) { return m * m == m; }

bool pattern_matches(const QuadMatrix& m, const Graph& g) {
  if (m.dim() != g.order())
    throw DomainError("matrix dimension " + std::to_string(m.dim()) + " does not match graph order " +
                     std::to_string(g.order()));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (i != j && m(i, j).is_zero() == g.adjacent(i, j)) return false;
  return true;
}

const std::array<std::array<int, 16>, 16>& clebsch_witness_signs() {
  static const std::array<std::array<int, 16>, 16> signs{{
      {{0, -1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
      {{-1, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0}},
      {{1, 0, 0, 1, 0, 0, 1, 0, 0, 0, -1, 0, 0, -1, 0, 0}},
      {{0, 1, 1, 0, 0, 0, 0, -1, 0, 0, 0, 1, 1, 0, 0, 0}},
      {{1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 1, 0, 0, 0}},
      {{0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0}},
      {{0, 0, 1, 0, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0}},
      {{0, 0, 0, -1, 0, 1, 1, 0, -1, 0, 0, 0, 0, 0, 0, 1}},
      {{1, 0, 0, 0, 0, 0, 0, -1, 0, 1, 1, 0, -1, 0, 0, 0}},
      {{0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0, -1, 0, 1, 0, 0}},
      {{0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0}},
      {{0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 1}},
      {{0, 0, 0, 1, 1, 0, 0, 0, -1, 0, 0, 0, 0, 1, 1, 0}},
      {{0, 0, -1, 0, 0, -1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1}},
      {{0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, -1}},
      {{1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, -1, 0}},
  }};
  return signs;
}

QuadMatrix clebsch_witness_matrix() {
  // 1/(2 sqrt5) = sqrt5/10.
  const QuadElem scale(0, make_rational(1, 10));
  QuadMatrix m(16);
  const auto& s = clebsch_witness_signs();
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) m(i, j) = (i == j ? QuadElem::sqrt5() : QuadElem(s[i][j])) * scale;
  return m;
}

TwoEigenvalueCertificate two_eigenvalue_certificate(const QuadMatrix& m, const Graph& g) {
  TwoEigenvalueCertificate c;
  c.pattern_ok = pattern_matches(m, g);
  c.idempotent_ok = is_idempotent(m);
  c.nontrivial_ok = !(m == QuadMatrix(m.dim())) && !(m == QuadMatrix::identity(m.dim()));
  c.rank = rank(m);
  c.multiplicity_one = c.rank;
  c.multiplicity_zero = m.dim() - c.rank;
  return c;
}

PsdRankBounds psd_rank_bounds(const Graph& g, const std::optional<QuadMatrix>& m) {
  const int n = g.order();
  bool isolated = false;
  for (Vertex v = 0; v < n; ++v) isolated = isolated || g.degree(v) == 0;
  PsdRankBounds b;
  b.lower = (is_triangle_free(g) && !isolated) ? (n + 1) / 2 : std::min(1, n);
  b.upper = n;
  if (m) {
    const auto cert = two_eigenvalue_certificate(*m, g);
    if (!cert.pass()) throw PreconditionError("witness matrix does not pass the two-eigenvalue certificate");
    b.upper = cert.rank;
  }
  return b;
}

}  // namespace srgq
