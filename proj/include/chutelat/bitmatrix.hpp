#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace chutelat {

/// Square 0/1 matrix stored as packed rows; rows double as subsets of 0..size-1.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int size) : size_(size), words_((size + 63) / 64), bits_(static_cast<std::size_t>(size) * words_, 0) {}

  int size() const { return size_; }
  int words() const { return words_; }

  bool test(int r, int c) const { return (row(r)[c >> 6] >> (c & 63)) & 1u; }
  void set(int r, int c) { row(r)[c >> 6] |= std::uint64_t{1} << (c & 63); }

  std::span<std::uint64_t> row(int r) { return {bits_.data() + static_cast<std::size_t>(r) * words_, static_cast<std::size_t>(words_)}; }
  std::span<const std::uint64_t> row(int r) const {
    return {bits_.data() + static_cast<std::size_t>(r) * words_, static_cast<std::size_t>(words_)};
  }

  void or_row(int dst, int src) {
    auto d = row(dst);
    auto s = row(src);
    for (int k = 0; k < words_; ++k) d[k] |= s[k];
  }

  int count(int r) const {
    int c = 0;
    for (auto x : row(r)) c += std::popcount(x);
    return c;
  }

 private:
  int size_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

using BitRow = std::vector<std::uint64_t>;

inline BitRow bit_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  BitRow out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] & b[k];
  return out;
}

/// a ⊆ b
inline bool bit_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] & ~b[k]) return false;
  return true;
}

inline int bit_count(std::span<const std::uint64_t> a) {
  int c = 0;
  for (auto x : a) c += std::popcount(x);
  return c;
}

template <class F>
void for_each_bit(std::span<const std::uint64_t> a, F f) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    auto x = a[k];
    while (x) {
      const int b = std::countr_zero(x);
      f(static_cast<int>(k * 64 + b));
      x &= x - 1;
    }
  }
}

}  // namespace chutelat
