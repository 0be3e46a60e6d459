#pragma once

// Fillings of the reflected staircase {(i, j) : 1 <= i < j <= n}: inversions
// tableaux, their Lehmer forms, and the increment operation relating them.
//
// Rows of a tableau are numbered from the bottom, so "below (i, j)" always
// means rows i' < i of column j. Pipe-dream grids count rows from the top;
// the two conventions never share a type.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chutelat/perm.hpp"

namespace chutelat {

using BoxMultiset = std::map<Box, int>;

class StairTableau {
 public:
  StairTableau() = default;
  explicit StairTableau(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 1) throw std::invalid_argument("tableau size must be >= 1");
  }

  int n() const { return n_; }

  int operator()(int i, int j) const {
    check(i, j);
    return data_[idx(i, j)];
  }
  int operator()(Box b) const { return (*this)(b.i, b.j); }

  void set(int i, int j, int v) {
    check(i, j);
    if (v < 0) throw std::invalid_argument("tableau entries are nonnegative");
    data_[idx(i, j)] = v;
  }
  void set(Box b, int v) { set(b.i, b.j, v); }

  bool contains(int i, int j) const { return 1 <= i && i < j && j <= n_; }

  /// Does k occupy some box (i', j) with i' < i?
  bool appears_below(int k, int i, int j) const {
    for (int r = 1; r < i; ++r)
      if (data_[idx(r, j)] == k) return true;
    return false;
  }

  bool appears_in_column(int k, int j) const {
    for (int r = 1; r < j; ++r)
      if (data_[idx(r, j)] == k) return true;
    return false;
  }

  /// Restriction to columns 2..j.
  StairTableau restrict(int j) const {
    if (j < 1 || j > n_) throw std::invalid_argument("restrict: column bound out of range");
    StairTableau out(j);
    for (int c = 2; c <= j; ++c)
      for (int r = 1; r < c; ++r) out.data_[out.idx(r, c)] = data_[idx(r, c)];
    return out;
  }

  friend bool operator==(const StairTableau&, const StairTableau&) = default;
  friend auto operator<=>(const StairTableau& a, const StairTableau& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i - 1) * n_ + (j - 1); }
  void check(int i, int j) const {
    if (!contains(i, j))
      throw std::out_of_range("box (" + std::to_string(i) + "," + std::to_string(j) + ") outside staircase");
  }

  int n_ = 0;
  std::vector<int> data_;
};

/// Λ(T): a filling of ID(w). Boxes outside ID(w) hold 0 and are ignored by comparisons.
struct LehmerTableau {
  Permutation w;
  StairTableau values;

  int operator()(Box b) const { return values(b); }

  friend bool operator==(const LehmerTableau&, const LehmerTableau&) = default;
};

/// Componentwise comparison on ID(w).
inline bool componentwise_leq(const LehmerTableau& a, const LehmerTableau& b) {
  if (a.w != b.w) throw std::invalid_argument("componentwise_leq: different permutations");
  for (Box box : a.w.inversions())
    if (a(box) > b(box)) return false;
  return true;
}

inline LehmerTableau componentwise_max(const LehmerTableau& a, const LehmerTableau& b) {
  if (a.w != b.w) throw std::invalid_argument("componentwise_max: different permutations");
  LehmerTableau out = a;
  for (Box box : a.w.inversions()) out.values.set(box, std::max(a(box), b(box)));
  return out;
}

// ---------------------------------------------------------------------------
// Balance

inline bool is_balanced_L(const StairTableau& t, int i, int j, int k) {
  if (!(1 <= i && i < j && j < k && k <= t.n()))
    throw std::out_of_range("Λ-shape indices must satisfy 1 <= i < j < k <= n");
  const int lo = std::min(t(i, j), t(j, k));
  const int hi = std::max(t(i, j), t(j, k));
  return lo <= t(i, k) && t(i, k) <= hi;
}

/// Entries of hook(i, j): the corner, boxes above it in column j, boxes left of it in row i.
inline std::vector<int> hook_entries(const StairTableau& t, int i, int j) {
  if (!t.contains(i, j)) throw std::out_of_range("hook: box outside staircase");
  std::vector<int> out{t(i, j)};
  for (int r = i + 1; r < j; ++r) out.push_back(t(r, j));
  for (int c = i + 1; c < j; ++c) out.push_back(t(i, c));
  return out;
}

inline bool is_balanced_hook(const StairTableau& t, int i, int j) {
  auto vals = hook_entries(t, i, j);
  // |hook(i,j)| = 2(j-i)-1 is odd, so the median is a single entry
  if (vals.size() % 2 != 1) throw std::logic_error("hook of even size");
  auto mid = vals.begin() + static_cast<std::ptrdiff_t>(vals.size() / 2);
  std::nth_element(vals.begin(), mid, vals.end());
  return *mid == t(i, j);
}

inline bool all_shapes_balanced(const StairTableau& t) {
  for (int i = 1; i <= t.n(); ++i)
    for (int j = i + 1; j <= t.n(); ++j)
      for (int k = j + 1; k <= t.n(); ++k)
        if (!is_balanced_L(t, i, j, k)) return false;
  return true;
}

inline bool all_hooks_balanced(const StairTableau& t) {
  for (int j = 2; j <= t.n(); ++j)
    for (int i = 1; i < j; ++i)
      if (!is_balanced_hook(t, i, j)) return false;
  return true;
}

struct BalanceRoutes {
  bool by_shapes = false;
  bool by_hooks = false;
  bool agree() const { return by_shapes == by_hooks; }
};

/// Evaluates balance both through Λ-shapes and through hooks.
inline BalanceRoutes balance_equivalence_check(const StairTableau& t) {
  return {all_shapes_balanced(t), all_hooks_balanced(t)};
}

// ---------------------------------------------------------------------------
// Validation

struct Validation {
  enum class Condition { None, ZeroPattern, RowBound, ColumnInjective, Balance, SizeMismatch };

  Condition failed = Condition::None;
  std::vector<Box> witness;  // offending box(es) or the three boxes of a Λ-shape
  std::string message;

  bool ok() const { return failed == Condition::None; }
  explicit operator bool() const { return ok(); }
};

inline const char* to_string(Validation::Condition c) {
  switch (c) {
    case Validation::Condition::None: return "none";
    case Validation::Condition::ZeroPattern: return "zero-pattern";
    case Validation::Condition::RowBound: return "row-bound";
    case Validation::Condition::ColumnInjective: return "column-injective";
    case Validation::Condition::Balance: return "balance";
    case Validation::Condition::SizeMismatch: return "size-mismatch";
  }
  return "?";
}

namespace detail {

inline std::string box_str(Box b) { return "(" + std::to_string(b.i) + "," + std::to_string(b.j) + ")"; }

// Zero pattern and column injectivity, columns left to right, rows bottom to top.
inline Validation scan_column_conditions(const StairTableau& t, const Permutation& w, bool row_bound) {
  using C = Validation::Condition;
  if (t.n() != w.n())
    return {C::SizeMismatch, {}, "tableau size " + std::to_string(t.n()) + " vs degree " + std::to_string(w.n())};
  for (int j = 2; j <= t.n(); ++j) {
    for (int i = 1; i < j; ++i) {
      const int v = t(i, j);
      const bool inv = w.is_inversion(i, j);
      if ((v == 0) == inv)
        return {C::ZeroPattern, {{i, j}},
                "box " + box_str({i, j}) + (inv ? " is an inversion but holds 0" : " is not an inversion but holds " + std::to_string(v))};
      if (row_bound && v > i)
        return {C::RowBound, {{i, j}}, "entry " + std::to_string(v) + " in row " + std::to_string(i) + " exceeds " + std::to_string(i)};
      if (v != 0)
        for (int r = 1; r < i; ++r)
          if (t(r, j) == v)
            return {C::ColumnInjective, {{r, j}, {i, j}}, "entry " + std::to_string(v) + " repeated in column " + std::to_string(j)};
    }
  }
  return {};
}

}  // namespace detail

/// Membership in CIT(w).
inline Validation validate_column_injective(const StairTableau& t, const Permutation& w) {
  return detail::scan_column_conditions(t, w, false);
}

/// Membership in IT(w); reports the first violation in a fixed scan order.
inline Validation validate_inversions_tableau(const StairTableau& t, const Permutation& w) {
  auto v = detail::scan_column_conditions(t, w, true);
  if (!v) return v;
  for (int i = 1; i <= t.n(); ++i)
    for (int j = i + 1; j <= t.n(); ++j)
      for (int k = j + 1; k <= t.n(); ++k)
        if (!is_balanced_L(t, i, j, k))
          return {Validation::Condition::Balance, {{i, j}, {i, k}, {j, k}},
                  "Λ(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ") unbalanced"};
  return {};
}

inline bool is_inversions_tableau(const StairTableau& t, const Permutation& w) {
  return validate_inversions_tableau(t, w).ok();
}

// ---------------------------------------------------------------------------
// Lehmer form

inline LehmerTableau lehmer_form(const StairTableau& t, const Permutation& w) {
  if (auto v = validate_column_injective(t, w); !v)
    throw std::invalid_argument("lehmer_form: not column-injective: " + v.message);
  LehmerTableau out{w, StairTableau(w.n())};
  for (Box b : w.inversions()) {
    int count = 0;
    for (int k = 1; k < t(b); ++k)
      if (!t.appears_below(k, b.i, b.j)) ++count;
    out.values.set(b, count);
  }
  return out;
}

/// Rebuilds each column bottom to top: the entry at an inversion box is the
/// (L+1)-th positive integer not used lower in its column.
inline StairTableau lehmer_form_inverse(const LehmerTableau& l) {
  const Permutation& w = l.w;
  StairTableau t(w.n());
  for (int j = 2; j <= w.n(); ++j) {
    std::vector<bool> used(static_cast<std::size_t>(j) + 1 + 64, false);
    for (int i = 1; i < j; ++i) {
      if (!w.is_inversion(i, j)) continue;
      int skip = l.values(i, j);
      int v = 0;
      for (int k = 1;; ++k) {
        if (k >= static_cast<int>(used.size())) used.resize(used.size() * 2, false);
        if (used[k]) continue;
        if (skip-- == 0) {
          v = k;
          break;
        }
      }
      used[v] = true;
      t.set(i, j, v);
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Increments

enum class IncrementKind { Pure, Trade };

struct IncrementResult {
  StairTableau tableau;
  IncrementKind kind = IncrementKind::Pure;
};

/// ↑_{(i,j)} T. Pure when the new value is absent from column j, Trade otherwise.
inline IncrementResult increment(const StairTableau& t, const Permutation& w, Box b) {
  if (!t.contains(b.i, b.j) || !w.is_inversion(b.i, b.j))
    throw std::invalid_argument("increment: box " + detail::box_str(b) + " not in ID(w)");
  const int a = t(b);
  int next = a + 1;
  while (t.appears_below(next, b.i, b.j)) ++next;
  IncrementResult res{t, IncrementKind::Pure};
  for (int r = b.i + 1; r < b.j; ++r) {
    if (t(r, b.j) == next) {
      res.kind = IncrementKind::Trade;
      res.tableau.set(r, b.j, a);
      break;
    }
  }
  res.tableau.set(b, next);
  return res;
}

/// ↑_M T, applying the boxes of M in increasing box order.
inline StairTableau increment_multiset(const StairTableau& t, const Permutation& w, const BoxMultiset& m) {
  StairTableau out = t;
  for (const auto& [b, mult] : m) {
    if (mult < 0) throw std::invalid_argument("increment_multiset: negative multiplicity");
    for (int k = 0; k < mult; ++k) out = increment(out, w, b).tableau;
  }
  return out;
}

/// The multiset M with ↑_M T = T', or nullopt when Λ(T') - Λ(T) has a negative entry.
inline std::optional<BoxMultiset> delta_multiset(const StairTableau& t, const StairTableau& t2, const Permutation& w) {
  const auto l1 = lehmer_form(t, w);
  const auto l2 = lehmer_form(t2, w);
  BoxMultiset m;
  for (Box b : w.inversions()) {
    const int d = l2(b) - l1(b);
    if (d < 0) return std::nullopt;
    if (d > 0) m[b] = d;
  }
  return m;
}

inline int multiset_size(const BoxMultiset& m) {
  int s = 0;
  for (const auto& [b, k] : m) s += k;
  return s;
}

}  // namespace chutelat
