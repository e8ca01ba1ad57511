#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace negrules {

/// Fixed-length bit-vector over transaction positions. Bits beyond size()
/// in the last word are always zero, so popcounts never need masking.
class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size, bool value = false)
      : size_(size), words_((size + word_bits - 1) / word_bits, value ? ~word_type{0} : 0) {
    if (value) clear_tail();
  }

  [[nodiscard]] std::size_t size() const noexcept { return size_; }

  void set(std::size_t pos) noexcept { words_[pos / word_bits] |= word_type{1} << (pos % word_bits); }
  [[nodiscard]] bool test(std::size_t pos) const noexcept {
    return (words_[pos / word_bits] >> (pos % word_bits)) & 1U;
  }

  [[nodiscard]] std::size_t count() const noexcept {
    std::size_t total = 0;
    for (word_type w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  BitVector& operator&=(const BitVector& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  friend BitVector operator&(BitVector a, const BitVector& b) noexcept { return a &= b; }

  /// popcount(a & b) without materializing the intersection.
  [[nodiscard]] static std::size_t and_count(const BitVector& a, const BitVector& b) noexcept {
    std::size_t total = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      total += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
    }
    return total;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  void clear_tail() noexcept {
    if (std::size_t rem = size_ % word_bits; rem != 0 && !words_.empty()) {
      words_.back() &= (word_type{1} << rem) - 1;
    }
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

}  // namespace negrules
