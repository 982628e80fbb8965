#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace patsep {

/// Fixed-width bitset over the indices of a string set.
class StringMask {
 public:
  StringMask() = default;
  explicit StringMask(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  static StringMask full(std::size_t bits) {
    StringMask m(bits);
    for (std::size_t i = 0; i < bits; ++i) m.set(i);
    return m;
  }

  std::size_t bits() const noexcept { return bits_; }

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  bool none() const noexcept {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  bool any() const noexcept { return !none(); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Index of the lowest set bit, or bits() if none.
  std::size_t first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return bits_;
  }

  bool is_subset_of(const StringMask& other) const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
  }

  std::size_t count_and(const StringMask& other) const noexcept {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      c += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
    }
    return c;
  }

  StringMask& operator|=(const StringMask& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }

  /// Clears the bits set in other.
  StringMask& subtract(const StringMask& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
    return *this;
  }

  bool operator==(const StringMask&) const = default;

  std::size_t hash() const noexcept {
    std::size_t h = bits_;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL + std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct StringMaskHash {
  std::size_t operator()(const StringMask& m) const noexcept { return m.hash(); }
};

}  // namespace patsep
