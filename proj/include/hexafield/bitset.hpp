#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hexafield {

/// Fixed-width set of hexagon indices.
///
/// Ordering is lexicographic on the bit sequence b0 b1 b2 ... with 0 < 1, so
/// the least set is the one whose first differing bit is clear. Canonical
/// forms are defined as minima under this order.
class HexSet {
 public:
  HexSet() = default;
  explicit HexSet(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

  static HexSet from_mask(std::size_t width, std::uint64_t mask) {
    HexSet s(width);
    if (!s.words_.empty()) {
      s.words_[0] = width >= 64 ? mask : (mask & ((std::uint64_t{1} << width) - 1));
    }
    return s;
  }

  static HexSet full(std::size_t width) {
    HexSet s(width);
    for (std::size_t i = 0; i < width; ++i) s.set(i);
    return s;
  }

  std::size_t width() const { return width_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  /// Low 64 bits; only meaningful when width() <= 64.
  std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

  std::span<const std::uint64_t> words() const { return words_; }

  bool is_subset_of(const HexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  template <class F>
  void for_each(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        fn(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// Image under an index permutation: bit i moves to perm[i].
  HexSet permuted(std::span<const std::uint32_t> perm) const {
    HexSet out(width_);
    for_each([&](std::size_t i) { out.set(perm[i]); });
    return out;
  }

  friend bool operator==(const HexSet&, const HexSet&) = default;

  friend bool lex_less(const HexSet& a, const HexSet& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      const std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff) {
        const int bit = std::countr_zero(diff);
        return ((a.words_[i] >> bit) & 1u) == 0;
      }
    }
    return false;
  }

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace hexafield
