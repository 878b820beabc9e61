#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace curv {

// Packed bit rows; used for adjacency matrices and vertex-set masks.
// Set intersections (links, common neighbours) run word-parallel on these.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols)
      : rows_(rows),
        cols_(cols),
        words_((cols + 63) / 64),
        bits_(static_cast<std::size_t>(rows) * words_, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words() const { return words_; }

  void set(int r, int c) {
    bits_[static_cast<std::size_t>(r) * words_ + c / 64] |= std::uint64_t(1) << (c % 64);
  }
  void reset(int r, int c) {
    bits_[static_cast<std::size_t>(r) * words_ + c / 64] &= ~(std::uint64_t(1) << (c % 64));
  }
  bool get(int r, int c) const {
    return (bits_[static_cast<std::size_t>(r) * words_ + c / 64] >> (c % 64)) & 1;
  }

  std::span<const std::uint64_t> row(int r) const {
    return {bits_.data() + static_cast<std::size_t>(r) * words_, static_cast<std::size_t>(words_)};
  }
  std::span<std::uint64_t> row(int r) {
    return {bits_.data() + static_cast<std::size_t>(r) * words_, static_cast<std::size_t>(words_)};
  }

  bool operator==(const BitMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

using Mask = std::vector<std::uint64_t>;

inline Mask make_mask(int bits) { return Mask((bits + 63) / 64, 0); }

inline void mask_set(Mask& m, int i) { m[i / 64] |= std::uint64_t(1) << (i % 64); }
inline void mask_reset(Mask& m, int i) { m[i / 64] &= ~(std::uint64_t(1) << (i % 64)); }
inline bool mask_test(const Mask& m, int i) { return (m[i / 64] >> (i % 64)) & 1; }

inline void mask_and(Mask& m, std::span<const std::uint64_t> other) {
  for (std::size_t w = 0; w < m.size(); ++w) m[w] &= other[w];
}
inline void mask_or(Mask& m, std::span<const std::uint64_t> other) {
  for (std::size_t w = 0; w < m.size(); ++w) m[w] |= other[w];
}
inline void mask_fill(Mask& m, int bits) {
  for (std::size_t w = 0; w < m.size(); ++w) m[w] = ~std::uint64_t(0);
  if (bits % 64) m.back() = (std::uint64_t(1) << (bits % 64)) - 1;
}

inline bool mask_any(const Mask& m) {
  for (auto w : m)
    if (w) return true;
  return false;
}

inline int mask_popcount(const Mask& m) {
  int c = 0;
  for (auto w : m) c += std::popcount(w);
  return c;
}

inline int mask_first(const Mask& m) {
  for (std::size_t w = 0; w < m.size(); ++w)
    if (m[w]) return static_cast<int>(w * 64 + std::countr_zero(m[w]));
  return -1;
}

template <typename Fn>
inline void mask_for_each(const Mask& m, Fn fn) {
  for (std::size_t w = 0; w < m.size(); ++w) {
    std::uint64_t bits = m[w];
    while (bits) {
      int b = std::countr_zero(bits);
      fn(static_cast<int>(w * 64 + b));
      bits &= bits - 1;
    }
  }
}

}  // namespace curv
