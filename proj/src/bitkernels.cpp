#include "srgq/bitkernels.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>

#include "srgq/errors.hpp"

namespace srgq::kernels {

namespace scalar {

void xor_into(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

std::size_t popcount(std::span<const Word> a) {
  std::size_t total = 0;
  for (Word w : a) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

bool is_zero(std::span<const Word> a) {
  Word acc = 0;
  for (Word w : a) acc |= w;
  return acc == 0;
}

}  // namespace scalar

namespace {

Isa detect() {
#if defined(SRGQ_HAVE_AVX2)
  // SRGQ_FORCE_SCALAR pins the reference kernels for A/B runs.
  if (std::getenv("SRGQ_FORCE_SCALAR") == nullptr && __builtin_cpu_supports("avx2"))
    return Isa::Avx2;
#endif
  return Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

bool supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(SRGQ_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!supported(isa))
    throw CapabilityError("kernel variant not supported on this CPU: " + std::string(isa_name(isa)));
  current().store(isa, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

#if defined(SRGQ_HAVE_AVX2)
#define SRGQ_DISPATCH(fn, ...)                                              \
  return active_isa() == Isa::Avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__)
#else
#define SRGQ_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#endif

void xor_into(std::span<Word> dst, std::span<const Word> src) { SRGQ_DISPATCH(xor_into, dst, src); }
std::size_t popcount(std::span<const Word> a) { SRGQ_DISPATCH(popcount, a); }
std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
  SRGQ_DISPATCH(and_popcount, a, b);
}
bool is_zero(std::span<const Word> a) { SRGQ_DISPATCH(is_zero, a); }

#undef SRGQ_DISPATCH

}  // namespace srgq::kernels
