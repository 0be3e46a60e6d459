#pragma once

// Permutations in one-line notation, plus the handful of transforms the
// pipe-dream machinery applies to them (inverse, value deletion, triforce).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chutelat {

/// A box (i, j) of the reflected staircase, 1 <= i < j <= n.
/// Row i counts from the bottom, column j from the left.
struct Box {
  int i = 0;
  int j = 0;

  friend constexpr bool operator==(Box, Box) = default;
  friend constexpr auto operator<=>(Box, Box) = default;
};

class Permutation {
 public:
  Permutation() = default;

  /// Takes the one-line word w(1) ... w(n) with values in 1..n.
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    if (n == 0) throw std::invalid_argument("permutation must have degree >= 1");
    std::vector<bool> seen(n + 1, false);
    for (int v : word_) {
      if (v < 1 || v > n || seen[v])
        throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(n);
    for (int k = 0; k < n; ++k) w[k] = k + 1;
    return Permutation(std::move(w));
  }

  static Permutation longest(int n) {
    std::vector<int> w(n);
    for (int k = 0; k < n; ++k) w[k] = n - k;
    return Permutation(std::move(w));
  }

  int n() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }

  /// w(pos), 1-based.
  int operator()(int pos) const { return word_[pos - 1]; }

  bool is_identity() const {
    for (int k = 0; k < n(); ++k)
      if (word_[k] != k + 1) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> v(word_.size());
    for (int k = 0; k < n(); ++k) v[word_[k] - 1] = k + 1;
    return Permutation(std::move(v));
  }

  /// (this ∘ other)(k) = this(other(k)).
  Permutation compose(const Permutation& other) const {
    if (other.n() != n()) throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> v(word_.size());
    for (int k = 0; k < n(); ++k) v[k] = word_[other.word_[k] - 1];
    return Permutation(std::move(v));
  }

  /// Value pairs (i, j), i < j, with w^{-1}(i) > w^{-1}(j), sorted lexicographically.
  std::vector<Box> inversions() const {
    const auto inv = inverse();
    std::vector<Box> out;
    for (int i = 1; i <= n(); ++i)
      for (int j = i + 1; j <= n(); ++j)
        if (inv(i) > inv(j)) out.push_back({i, j});
    return out;
  }

  bool is_inversion(int i, int j) const {
    // positions of the values; cheap for desk-scale n
    int pi = 0, pj = 0;
    for (int k = 0; k < n(); ++k) {
      if (word_[k] == i) pi = k;
      if (word_[k] == j) pj = k;
    }
    return i < j && pi > pj;
  }

  int length() const {
    int c = 0;
    for (int a = 0; a < n(); ++a)
      for (int b = a + 1; b < n(); ++b)
        if (word_[a] > word_[b]) ++c;
    return c;
  }

  /// c(k) = #{ l > k : w(k) > w(l) }.
  std::vector<int> lehmer_code() const {
    std::vector<int> c(word_.size(), 0);
    for (int a = 0; a < n(); ++a)
      for (int b = a + 1; b < n(); ++b)
        if (word_[a] > word_[b]) ++c[a];
    return c;
  }

  /// Deletes every value greater than `bound`, keeping relative order.
  Permutation restrict_values(int bound) const {
    if (bound < 1 || bound > n()) throw std::invalid_argument("restrict_values: bound out of range");
    std::vector<int> v;
    v.reserve(bound);
    for (int x : word_)
      if (x <= bound) v.push_back(x);
    return Permutation(std::move(v));
  }

  /// Deletes the value n.
  Permutation hat() const {
    if (n() < 2) throw std::invalid_argument("hat: degree must be at least 2");
    return restrict_values(n() - 1);
  }

  /// The permutation of degree 2n fixing 1..n and sending i > n to 2n+1-w(2n+1-i).
  Permutation triforce() const {
    const int m = 2 * n();
    std::vector<int> v(m);
    for (int i = 1; i <= m; ++i)
      v[i - 1] = i <= n() ? i : m + 1 - (*this)(m + 1 - i);
    return Permutation(std::move(v));
  }

  /// Swaps positions r and r+1 (right multiplication by s_r).
  Permutation swap_positions(int r) const {
    auto v = word_;
    std::swap(v[r - 1], v[r]);
    return Permutation(std::move(v));
  }

  /// Concatenated digits for n <= 9, comma separated otherwise.
  std::string to_string() const {
    std::ostringstream os;
    const bool commas = n() > 9;
    for (int k = 0; k < n(); ++k) {
      if (commas && k) os << ',';
      os << word_[k];
    }
    return os.str();
  }

  /// Inverse of to_string(). A comma anywhere selects the delimited form.
  static Permutation parse(std::string_view text) {
    std::vector<int> w;
    if (text.find(',') != std::string_view::npos) {
      std::size_t start = 0;
      while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        auto tok = text.substr(start, end - start);
        if (tok.empty()) throw std::invalid_argument("empty entry in permutation text");
        int v = 0;
        for (char ch : tok) {
          if (ch < '0' || ch > '9') throw std::invalid_argument("bad character in permutation text");
          v = v * 10 + (ch - '0');
        }
        w.push_back(v);
        start = end + 1;
      }
    } else {
      for (char ch : text) {
        if (ch < '1' || ch > '9') throw std::invalid_argument("bad character in permutation text");
        w.push_back(ch - '0');
      }
    }
    return Permutation(std::move(w));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.word_ <=> b.word_; }

 private:
  std::vector<int> word_;
};

/// All permutations of degree n in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  for (int k = 0; k < n; ++k) w[k] = k + 1;
  std::vector<Permutation> out;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace chutelat
