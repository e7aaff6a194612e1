#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "srgq/constructors.hpp"
#include "srgq/errors.hpp"
#include "srgq/quadratic.hpp"

using namespace srgq;

namespace {

QuadElem random_elem(std::mt19937_64& rng) {
  auto r = [&] { return make_rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 9)); };
  return {r(), r()};
}

double approx(const QuadElem& x) { return x.rational_part().get_d() + x.surd_part().get_d() * std::sqrt(5.0); }

QuadMatrix transpose(const QuadMatrix& m, int rows, int cols) {
  QuadMatrix t(std::max(rows, cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t(j, i) = m(i, j);
  return t;
}

// Gauss-Jordan inverse of the leading r x r block; nullopt if singular.
std::optional<QuadMatrix> inverse_block(const QuadMatrix& m, int r) {
  QuadMatrix a(r), inv = QuadMatrix::identity(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) a(i, j) = m(i, j);
  for (int c = 0; c < r; ++c) {
    int p = c;
    while (p < r && a(p, c).is_zero()) ++p;
    if (p == r) return std::nullopt;
    for (int j = 0; j < r; ++j) {
      std::swap(a(p, j), a(c, j));
      std::swap(inv(p, j), inv(c, j));
    }
    const QuadElem s = a(c, c).inverse();
    for (int j = 0; j < r; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (int i = 0; i < r; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const QuadElem f = a(i, c);
      for (int j = 0; j < r; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 300; ++rep) {
    const QuadElem x = random_elem(rng), y = random_elem(rng), z = random_elem(rng);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == QuadElem(0));
    CHECK(x * QuadElem(1) == x);
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == QuadElem(1));
      CHECK((y / x) * x == y);
    }
    const double d = approx(x);
    if (std::abs(d) > 1e-9) CHECK(x.sign() == (d > 0 ? 1 : -1));
    else CHECK(x.sign() == 0);
  }
  CHECK(QuadElem::sqrt5() * QuadElem::sqrt5() == QuadElem(5));
  CHECK_THROWS_AS(QuadElem(0).inverse(), DomainError);
  CHECK(QuadElem(make_rational(-1, 2), make_rational(1, 2)).to_string() == "-1/2 + 1/2*sqrt5");
  CHECK(QuadElem(make_rational(4, 8)).to_string() == "1/2");
  CHECK(QuadElem(0).to_string() == "0");
}

TEST_CASE("clebsch witness entries") {
  const QuadMatrix m = clebsch_witness_matrix();
  CHECK(m(0, 0) == QuadElem(make_rational(1, 2)));
  // -1/(2 sqrt5) = -sqrt5/10
  CHECK(m(0, 1) == QuadElem(0, make_rational(-1, 10)));
  CHECK(m(0, 3).is_zero());
  CHECK(m.is_symmetric());
  CHECK(pattern_matches(m, clebsch()));
  CHECK(is_idempotent(m));
  CHECK(trace(m) == QuadElem(8));
  CHECK(rank(m) == 8);
  const QuadMatrix r = m * QuadElem(2) - QuadMatrix::identity(16);
  CHECK(r * r == QuadMatrix::identity(16));
}

TEST_CASE("pattern matching and idempotence") {
  const Graph c4 = cycle_graph(4);
  CHECK_FALSE(pattern_matches(QuadMatrix::identity(4), c4));
  CHECK(pattern_matches(QuadMatrix::adjacency(c4), c4));
  CHECK_THROWS_AS(pattern_matches(QuadMatrix::identity(3), c4), DomainError);
  CHECK(is_idempotent(QuadMatrix::identity(5)));
  CHECK_FALSE(is_idempotent(QuadMatrix::identity(5) * QuadElem(2)));
  CHECK(rank(QuadMatrix::identity(5)) == 5);
  CHECK(rank(QuadMatrix(4)) == 0);
  CHECK_THROWS_AS(QuadMatrix(3) + QuadMatrix(4), DomainError);
}

TEST_CASE("random projections are idempotent with trace = rank") {
  std::mt19937_64 rng(32);
  for (int rep = 0; rep < 12; ++rep) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const int r = 1 + static_cast<int>(rng() % (n - 1));
    QuadMatrix b(n);  // n x r block in the leading columns
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < r; ++j) b(i, j) = random_elem(rng);
    const QuadMatrix bt = transpose(b, n, r);
    const QuadMatrix gram = bt * b;
    const auto inv = inverse_block(gram, r);
    if (!inv) continue;
    QuadMatrix inv_padded(n);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) inv_padded(i, j) = (*inv)(i, j);
    const QuadMatrix p = b * inv_padded * bt;
    CHECK(p.is_symmetric());
    CHECK(is_idempotent(p));
    CHECK(rank(p) == r);
    CHECK(trace(p) == QuadElem(r));
    CHECK(rank(QuadMatrix::identity(n) - p) == n - r);
  }
}

TEST_CASE("two-eigenvalue certificates") {
  const auto c = two_eigenvalue_certificate(clebsch_witness_matrix(), clebsch());
  CHECK(c.pass());
  CHECK(c.multiplicity_zero == 8);
  CHECK(c.multiplicity_one == 8);
  const auto bad = two_eigenvalue_certificate(QuadMatrix::identity(16), clebsch());
  CHECK_FALSE(bad.pass());
  CHECK_FALSE(bad.pattern_ok);
  QuadMatrix half(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) half(i, j) = QuadElem(make_rational(1, 2));
  const auto k2 = two_eigenvalue_certificate(half, complete_graph(2));
  CHECK(k2.pass());
  CHECK(k2.multiplicity_one == 1);
}

TEST_CASE("psd rank bounds") {
  CHECK(psd_rank_bounds(clebsch(), clebsch_witness_matrix()) == PsdRankBounds{8, 8});
  CHECK(psd_rank_bounds(cycle_graph(4), std::nullopt) == PsdRankBounds{2, 4});
  CHECK(psd_rank_bounds(complete_graph(3), std::nullopt) == PsdRankBounds{1, 3});
  CHECK_THROWS_AS(psd_rank_bounds(clebsch(), QuadMatrix::identity(16)), PreconditionError);
}
