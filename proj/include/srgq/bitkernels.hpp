#ifndef SRGQ_BITKERNELS_HPP
#define SRGQ_BITKERNELS_HPP

// Word-array kernels behind BitVec and the GF(2) eliminator. Every kernel
// has a portable scalar reference; an AVX2 variant is selected at runtime
// when the CPU supports it. Both must produce identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace srgq::kernels {

using Word = std::uint64_t;

enum class Isa { Scalar, Avx2 };

namespace scalar {
void xor_into(std::span<Word> dst, std::span<const Word> src);
std::size_t popcount(std::span<const Word> a);
std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b);
bool is_zero(std::span<const Word> a);
}  // namespace scalar

#if defined(SRGQ_HAVE_AVX2)
namespace avx2 {
void xor_into(std::span<Word> dst, std::span<const Word> src);
std::size_t popcount(std::span<const Word> a);
std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b);
bool is_zero(std::span<const Word> a);
}  // namespace avx2
#endif

/// True when the running CPU can execute the given variant.
bool supported(Isa isa);

/// Variant used by the dispatching entry points below.
Isa active_isa();

/// Forces a variant (tests); throws CapabilityError if unsupported.
void set_active_isa(Isa isa);

std::string_view isa_name(Isa isa);

// Dispatching entry points. Spans passed together must have equal length.
void xor_into(std::span<Word> dst, std::span<const Word> src);
std::size_t popcount(std::span<const Word> a);
std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b);
bool is_zero(std::span<const Word> a);

}  // namespace srgq::kernels

#endif  // SRGQ_BITKERNELS_HPP
