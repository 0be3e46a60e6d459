#pragma once

// Schubert polynomials two ways: as the cross-count generating function of
// PD(w), and by divided differences from the staircase monomial.
//
// Pipe dreams here are read along the north edge, so PD(w) corresponds to the
// usual (west-to-north) pipe dreams of w^{-1}. The oracle therefore runs the
// standard recursion on w^{-1}.

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chutelat/perm.hpp"
#include "chutelat/pipedream.hpp"
#include "chutelat/poset.hpp"

namespace chutelat {

class IntPolynomial {
 public:
  using Exponents = std::vector<int>;
  using Coeff = std::int64_t;

  IntPolynomial() = default;
  explicit IntPolynomial(int vars) : vars_(vars) {}

  static IntPolynomial monomial(Exponents e, Coeff c = 1) {
    IntPolynomial p(static_cast<int>(e.size()));
    p.add(e, c);
    return p;
  }

  int vars() const { return vars_; }
  const std::map<Exponents, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const Exponents& e, Coeff c) {
    if (static_cast<int>(e.size()) != vars_) throw std::invalid_argument("exponent vector has wrong length");
    if (c == 0) return;
    Coeff& slot = terms_[e];
    if (__builtin_add_overflow(slot, c, &slot)) throw std::overflow_error("polynomial coefficient overflow");
    if (slot == 0) terms_.erase(e);
  }

  IntPolynomial operator-(const IntPolynomial& o) const {
    IntPolynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add(e, -c);
    return out;
  }

  /// Exchanges x_r and x_{r+1} (1-based).
  IntPolynomial swapped(int r) const {
    IntPolynomial out(vars_);
    for (const auto& [key, c] : terms_) {
      Exponents e = key;
      std::swap(e[r - 1], e[r]);
      out.add(e, c);
    }
    return out;
  }

  /// Exact quotient by (x_r - x_{r+1}); throws if the division leaves a remainder.
  IntPolynomial divide_by_difference(int r) const {
    IntPolynomial rest = *this;
    IntPolynomial quotient(vars_);
    const int a = r - 1, b = r;
    while (true) {
      // leading term in x_r: the largest x_r exponent among terms that still have one
      const Exponents* lead = nullptr;
      for (const auto& [e, c] : rest.terms_)
        if (e[a] > 0 && (!lead || e[a] > (*lead)[a])) lead = &e;
      if (!lead) break;
      Exponents e = *lead;
      const Coeff c = rest.terms_.at(e);
      Exponents q = e;
      --q[a];
      quotient.add(q, c);
      // rest -= c * x^q * (x_a - x_b)
      rest.add(e, -c);
      Exponents shifted = q;
      ++shifted[b];
      rest.add(shifted, c);
    }
    if (!rest.is_zero()) throw std::logic_error("divided difference left a nonzero remainder");
    return quotient;
  }

  /// ∂_r f = (f - s_r f) / (x_r - x_{r+1}).
  IntPolynomial divided_difference(int r) const { return (*this - swapped(r)).divide_by_difference(r); }

  Coeff evaluate_at_ones() const {
    Coeff s = 0;
    for (const auto& [e, c] : terms_)
      if (__builtin_add_overflow(s, c, &s)) throw std::overflow_error("evaluation overflow");
    return s;
  }

  /// Terms in graded-lex order, highest first: "c * x1^a1 x2^a2 ...", coefficient 1 and exponent 1 omitted.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, Coeff>> ts(terms_.begin(), terms_.end());
    auto degree = [](const Exponents& e) {
      int d = 0;
      for (int x : e) d += x;
      return d;
    };
    std::sort(ts.begin(), ts.end(), [&](const auto& l, const auto& r) {
      const int dl = degree(l.first), dr = degree(r.first);
      if (dl != dr) return dl > dr;
      return l.first > r.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ts) {
      Coeff mag = c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (c < 0) mag = -c;
      first = false;
      std::ostringstream mono;
      bool any = false;
      for (int k = 0; k < static_cast<int>(e.size()); ++k) {
        if (e[k] == 0) continue;
        if (any) mono << ' ';
        mono << 'x' << (k + 1);
        if (e[k] > 1) mono << '^' << e[k];
        any = true;
      }
      if (!any) os << mag;
      else if (mag == 1) os << mono.str();
      else os << mag << " * " << mono.str();
    }
    return os.str();
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  int vars_ = 0;
  std::map<Exponents, Coeff> terms_;
};

/// Sum over the given dreams of prod_r x_r^{#crosses in row r}.
inline IntPolynomial generating_function(const std::vector<PipeDream>& dreams, int n) {
  IntPolynomial out(n);
  for (const auto& p : dreams) {
    IntPolynomial::Exponents e(n);
    for (int r = 1; r <= n; ++r) e[r - 1] = p.cross_count(r);
    out.add(e, 1);
  }
  return out;
}

inline IntPolynomial schubert_from_pipedreams(const Permutation& w) {
  return generating_function(ChutePoset::enumerate(w).elements(), w.n());
}

enum class DescentPath { LowestFirst, HighestFirst };

/// Divided-difference recursion from x1^{n-1} x2^{n-2} ... x_{n-1}, climbing from
/// w^{-1} to the longest element through ascents chosen per `path`.
inline IntPolynomial schubert_oracle(const Permutation& w, DescentPath path = DescentPath::LowestFirst) {
  const int n = w.n();
  std::vector<int> steps;
  Permutation v = w.inverse();
  while (v.length() != n * (n - 1) / 2) {
    int pick = 0;
    for (int r = 1; r < n; ++r)
      if (v(r) < v(r + 1)) {
        pick = r;
        if (path == DescentPath::LowestFirst) break;
      }
    steps.push_back(pick);
    v = v.swap_positions(pick);
  }
  IntPolynomial::Exponents top(n);
  for (int k = 0; k < n; ++k) top[k] = n - 1 - k;
  IntPolynomial f = IntPolynomial::monomial(top);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) f = f.divided_difference(*it);
  return f;
}

}  // namespace chutelat
