#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "srgq/bitkernels.hpp"
#include "srgq/bitvec.hpp"
#include "srgq/errors.hpp"

using namespace srgq;
using kernels::Word;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n) {
  std::vector<Word> w(n);
  for (auto& x : w) x = rng();
  return w;
}

struct IsaGuard {
  kernels::Isa saved = kernels::active_isa();
  ~IsaGuard() { kernels::set_active_isa(saved); }
};

}  // namespace

TEST_CASE("scalar kernels match a per-bit oracle") {
  std::mt19937_64 rng(1);
  for (std::size_t len = 0; len < 20; ++len) {
    auto a = random_words(rng, len), b = random_words(rng, len);
    std::size_t pc = 0, apc = 0;
    for (std::size_t i = 0; i < len * 64; ++i) {
      const bool x = (a[i / 64] >> (i % 64)) & 1, y = (b[i / 64] >> (i % 64)) & 1;
      pc += x;
      apc += x && y;
    }
    CHECK(kernels::scalar::popcount(a) == pc);
    CHECK(kernels::scalar::and_popcount(a, b) == apc);
    auto c = a;
    kernels::scalar::xor_into(c, b);
    for (std::size_t i = 0; i < len; ++i) CHECK(c[i] == (a[i] ^ b[i]));
    kernels::scalar::xor_into(c, c);
    CHECK(kernels::scalar::is_zero(c));
  }
}

#if defined(SRGQ_HAVE_AVX2)
TEST_CASE("AVX2 kernels agree with scalar kernels") {
  if (!kernels::supported(kernels::Isa::Avx2)) return;
  std::mt19937_64 rng(2);
  for (std::size_t len = 0; len < 70; ++len) {
    for (int rep = 0; rep < 5; ++rep) {
      auto a = random_words(rng, len), b = random_words(rng, len);
      if (rep == 1)
        for (auto& x : a) x &= rng() & rng();  // sparse words
      CHECK(kernels::avx2::popcount(a) == kernels::scalar::popcount(a));
      CHECK(kernels::avx2::and_popcount(a, b) == kernels::scalar::and_popcount(a, b));
      auto s = a, v = a;
      kernels::scalar::xor_into(s, b);
      kernels::avx2::xor_into(v, b);
      CHECK(s == v);
      CHECK(kernels::avx2::is_zero(s) == kernels::scalar::is_zero(s));
      std::vector<Word> zeros(len, 0);
      if (len > 0) zeros[rng() % len] = rep == 0 ? 0 : Word{1} << (rng() % 64);
      CHECK(kernels::avx2::is_zero(zeros) == kernels::scalar::is_zero(zeros));
    }
  }
}
#endif

TEST_CASE("dispatch can be pinned to scalar") {
  IsaGuard guard;
  kernels::set_active_isa(kernels::Isa::Scalar);
  CHECK(kernels::active_isa() == kernels::Isa::Scalar);
  CHECK(kernels::isa_name(kernels::Isa::Scalar) == "scalar");
  std::vector<Word> a{0xffu, 0x1u};
  CHECK(kernels::popcount(a) == 9);
  if (!kernels::supported(kernels::Isa::Avx2))
    CHECK_THROWS_AS(kernels::set_active_isa(kernels::Isa::Avx2), CapabilityError);
}

TEST_CASE("BitVec behaves like vector<bool> under either ISA") {
  IsaGuard guard;
  for (auto isa : {kernels::Isa::Scalar, kernels::Isa::Avx2}) {
    if (!kernels::supported(isa)) continue;
    kernels::set_active_isa(isa);
    std::mt19937_64 rng(3);
    for (std::size_t bits : {0u, 1u, 63u, 64u, 65u, 280u, 631u}) {
      BitVec x(bits), y(bits);
      std::vector<bool> ox(bits), oy(bits);
      for (std::size_t i = 0; i < bits; ++i) {
        if (rng() & 1) x.set(i), ox[i] = true;
        if (rng() % 3 == 0) y.set(i), oy[i] = true;
      }
      std::size_t cx = 0, cand = 0;
      std::vector<int> idx;
      for (std::size_t i = 0; i < bits; ++i) {
        cx += ox[i];
        cand += ox[i] && oy[i];
        if (ox[i]) idx.push_back(static_cast<int>(i));
      }
      CHECK(x.count() == cx);
      CHECK(x.and_count(y) == cand);
      CHECK(x.indices() == idx);
      CHECK(x.none() == (cx == 0));
      BitVec z = x ^ y;
      for (std::size_t i = 0; i < bits; ++i) CHECK(z.test(i) == (ox[i] != oy[i]));
      z ^= z;
      CHECK(z.none());
      BitVec d = x;
      d.subtract(y);
      CHECK((d | (x & y)) == x);
    }
  }
}
