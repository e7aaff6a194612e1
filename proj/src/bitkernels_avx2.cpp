// Compiled with -mavx2; only reached through runtime dispatch.
#include <immintrin.h>

#include <bit>

#include "srgq/bitkernels.hpp"

namespace srgq::kernels::avx2 {

namespace {

// Nibble-lookup popcount (Mula): per-byte counts, summed with SAD.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::size_t hsum_epi64(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

}  // namespace

void xor_into(std::span<Word> dst, std::span<const Word> src) {
  std::size_t i = 0;
  const std::size_t n = dst.size();
  for (; i + 4 <= n; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
    auto* s = reinterpret_cast<const __m256i*>(src.data() + i);
    _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

std::size_t popcount(std::span<const Word> a) {
  std::size_t i = 0;
  const std::size_t n = a.size();
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) {
    auto v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    acc = _mm256_add_epi64(acc, popcount_bytes(v));
  }
  std::size_t total = hsum_epi64(acc);
  for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
  std::size_t i = 0;
  const std::size_t n = a.size();
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) {
    auto va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    auto vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    acc = _mm256_add_epi64(acc, popcount_bytes(_mm256_and_si256(va, vb)));
  }
  std::size_t total = hsum_epi64(acc);
  for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

bool is_zero(std::span<const Word> a) {
  std::size_t i = 0;
  const std::size_t n = a.size();
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4)
    acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i)));
  Word tail = 0;
  for (; i < n; ++i) tail |= a[i];
  return _mm256_testz_si256(acc, acc) != 0 && tail == 0;
}

}  // namespace srgq::kernels::avx2
