#ifndef SRGQ_BITVEC_HPP
#define SRGQ_BITVEC_HPP

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "srgq/bitkernels.hpp"

namespace srgq {

/// Fixed-length bitset with runtime size. Bits past size() are always zero.
class BitVec {
 public:
  using Word = kernels::Word;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVec() = default;
  explicit BitVec(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }

  bool test(std::size_t i) const {
    assert(i < bits_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) {
    assert(i < bits_);
    words_[i >> 6] |= Word{1} << (i & 63);
  }
  void reset(std::size_t i) {
    assert(i < bits_);
    words_[i >> 6] &= ~(Word{1} << (i & 63));
  }
  void flip(std::size_t i) {
    assert(i < bits_);
    words_[i >> 6] ^= Word{1} << (i & 63);
  }
  void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }

  std::size_t count() const { return kernels::popcount(words_); }
  bool none() const { return kernels::is_zero(words_); }
  bool any() const { return !none(); }

  /// |this ∩ other| without materializing the intersection.
  std::size_t and_count(const BitVec& other) const {
    assert(other.bits_ == bits_);
    return kernels::and_popcount(words_, other.words_);
  }

  BitVec& operator^=(const BitVec& other) {
    assert(other.bits_ == bits_);
    kernels::xor_into(words_, other.words_);
    return *this;
  }
  BitVec& operator&=(const BitVec& other) {
    assert(other.bits_ == bits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  BitVec& operator|=(const BitVec& other) {
    assert(other.bits_ == bits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  /// Clears every bit set in other.
  BitVec& subtract(const BitVec& other) {
    assert(other.bits_ == bits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
  friend bool operator==(const BitVec&, const BitVec&) = default;

  std::size_t find_first() const { return find_from(0); }
  std::size_t find_next(std::size_t i) const { return find_from(i + 1); }

  /// Indices of set bits, ascending.
  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::size_t i = find_first(); i != npos; i = find_next(i)) out.push_back(static_cast<int>(i));
    return out;
  }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

 private:
  std::size_t find_from(std::size_t start) const {
    if (start >= bits_) return npos;
    std::size_t w = start >> 6;
    Word cur = words_[w] & (~Word{0} << (start & 63));
    while (true) {
      if (cur != 0) return (w << 6) + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w >= words_.size()) return npos;
      cur = words_[w];
    }
  }

  std::size_t bits_ = 0;
  std::vector<Word> words_;
};

}  // namespace srgq

#endif  // SRGQ_BITVEC_HPP
