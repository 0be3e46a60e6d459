#pragma once

// Falsifiable scans over an enumerated chute poset. Each check returns pass,
// fail (with a witness that can be replayed from the canonical element indices
// and the dreams themselves) or skipped when the time budget runs out.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chutelat/error.hpp"
#include "chutelat/io.hpp"
#include "chutelat/poset.hpp"

namespace chutelat {

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  json witness;  // null unless failed or skipped
  std::int64_t ms = 0;
  std::map<std::string, std::int64_t> stats;  // counters for callers; not serialized

  bool passed() const { return status == CheckStatus::Pass; }
};

struct VerificationReport {
  Permutation w;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (c.status != CheckStatus::Pass) return false;
    return true;
  }
  bool any_failed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return true;
    return false;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

inline json to_json(const CheckResult& c, bool with_timing = true) {
  return json{{"name", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}, {"ms", with_timing ? c.ms : 0}};
}

inline json to_json(const VerificationReport& r, bool with_timing = true) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c, with_timing));
  return json{{"w", r.w.to_string()}, {"checks", std::move(checks)}};
}

struct BudgetExceeded {};

/// Wall-clock deadline polled from inside scans. A budget of 0 or less never expires.
class Budget {
 public:
  using Clock = std::chrono::steady_clock;

  Budget() = default;
  explicit Budget(std::int64_t ms) : limited_(ms > 0), deadline_(Clock::now() + std::chrono::milliseconds(ms)) {}

  static Budget unlimited() { return Budget(); }

  bool expired() const { return limited_ && Clock::now() >= deadline_; }
  void tick() const {
    if (expired()) throw BudgetExceeded{};
  }

 private:
  bool limited_ = false;
  Clock::time_point deadline_{};
};

/// Ten minutes unless CHUTELAT_BUDGET_MS says otherwise.
inline std::int64_t default_budget_ms() {
  if (const char* env = std::getenv("CHUTELAT_BUDGET_MS")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 600000;
}

namespace detail {

inline json element_json(const ChutePoset& ps, int k) { return json{{"index", k}, {"dream", to_json(ps.element(k))}}; }

inline json pair_witness(const ChutePoset& ps, int a, int b, const std::string& reason) {
  return json{{"reason", reason}, {"a", element_json(ps, a)}, {"b", element_json(ps, b)}};
}

inline json interval_witness(const ChutePoset& ps, int lo, int hi, const std::string& reason) {
  return json{{"reason", reason}, {"bottom", element_json(ps, lo)}, {"top", element_json(ps, hi)}, {"size", ps.interval(lo, hi).size()}};
}

inline json index_list(std::span<const std::uint64_t> set) {
  json out = json::array();
  for_each_bit(set, [&](int k) { out.push_back(k); });
  return out;
}

template <class F>
CheckResult timed(const std::string& name, F body) {
  CheckResult r;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const BudgetExceeded&) {
    r.status = CheckStatus::Skipped;
    r.witness = json{{"reason", "time budget exhausted"}};
  } catch (const TheoremViolation& e) {
    r.status = CheckStatus::Fail;
    if (r.witness.is_null()) r.witness = json{{"reason", e.what()}};
  }
  r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline void fail(CheckResult& r, json witness) {
  r.status = CheckStatus::Fail;
  r.witness = std::move(witness);
}

/// meet and join for every pair, -1 where none exists.
struct LatticeTables {
  int n = 0;
  std::vector<int> meet, join;
  int m(int a, int b) const { return meet[static_cast<std::size_t>(a) * n + b]; }
  int j(int a, int b) const { return join[static_cast<std::size_t>(a) * n + b]; }
};

inline LatticeTables lattice_tables(const ChutePoset& ps, const Budget& budget) {
  LatticeTables t;
  t.n = ps.size();
  t.meet.assign(static_cast<std::size_t>(t.n) * t.n, -1);
  t.join.assign(static_cast<std::size_t>(t.n) * t.n, -1);
  for (int a = 0; a < t.n; ++a) {
    budget.tick();
    for (int b = a; b < t.n; ++b) {
      const int m = ps.try_meet(a, b).value_or(-1);
      const int j = ps.try_join(a, b).value_or(-1);
      t.meet[static_cast<std::size_t>(a) * t.n + b] = t.meet[static_cast<std::size_t>(b) * t.n + a] = m;
      t.join[static_cast<std::size_t>(a) * t.n + b] = t.join[static_cast<std::size_t>(b) * t.n + a] = j;
    }
  }
  return t;
}

}  // namespace detail

/// Chute order equals the componentwise order on Lehmer tableaux, and Φ is injective.
inline CheckResult check_isomorphism(const ChutePoset& ps, const Budget& budget = {}) {
  return detail::timed("isomorphism", [&](CheckResult& r) {
    std::map<StairTableau, int> seen;
    for (int k = 0; k < ps.size(); ++k) {
      auto [it, fresh] = seen.emplace(ps.phi_of(k).values, k);
      if (!fresh) return detail::fail(r, detail::pair_witness(ps, it->second, k, "equal Lehmer tableaux"));
    }
    std::int64_t pairs = 0;
    for (int a = 0; a < ps.size(); ++a) {
      budget.tick();
      for (int b = 0; b < ps.size(); ++b, ++pairs) {
        const bool chute = ps.leq(a, b), lehmer = ps.leq_via_lehmer(a, b);
        if (chute != lehmer) {
          auto wit = detail::pair_witness(ps, a, b, "chute order and Lehmer order disagree");
          wit["chute_leq"] = chute;
          wit["lehmer_leq"] = lehmer;
          return detail::fail(r, std::move(wit));
        }
      }
    }
    r.stats["pairs"] = pairs;
  });
}

/// Every pair has a meet and a join; separately, unique extrema plus joins of all up-forks.
inline CheckResult check_lattice(const ChutePoset& ps, const Budget& budget = {}) {
  return detail::timed("lattice", [&](CheckResult& r) {
    for (int a = 0; a < ps.size(); ++a) {
      budget.tick();
      for (int b = a + 1; b < ps.size(); ++b) {
        if (!ps.try_meet(a, b)) return detail::fail(r, detail::pair_witness(ps, a, b, "no meet"));
        if (!ps.try_join(a, b)) return detail::fail(r, detail::pair_witness(ps, a, b, "no join"));
      }
    }
    ps.min_element();
    ps.max_element();
    std::int64_t forks = 0;
    for (int p = 0; p < ps.size(); ++p) {
      budget.tick();
      const auto& up = ps.hasse_up(p);
      for (std::size_t x = 0; x < up.size(); ++x)
        for (std::size_t y = x + 1; y < up.size(); ++y, ++forks)
          if (!ps.try_join(up[x].to, up[y].to))
            return detail::fail(r, detail::pair_witness(ps, up[x].to, up[y].to, "up-fork without a join"));
    }
    r.stats["up_forks"] = forks;
  });
}

/// Meet- and join-semidistributivity, once from the definition and once through
/// cover relations only; the two routes must reach the same verdict.
inline CheckResult check_semidistributive(const ChutePoset& ps, const Budget& budget = {}) {
  return detail::timed("sd", [&](CheckResult& r) {
    const int n = ps.size();
    const auto t = detail::lattice_tables(ps, budget);
    for (std::size_t k = 0; k < t.meet.size(); ++k)
      if (t.meet[k] < 0 || t.join[k] < 0)
        return detail::fail(r, detail::pair_witness(ps, static_cast<int>(k / n), static_cast<int>(k % n), "not a lattice"));

    const int words = (n + 63) / 64;
    auto add = [&](std::map<int, BitRow>& groups, int key, int g) {
      auto& row = groups.try_emplace(key, BitRow(words, 0)).first->second;
      row[g >> 6] |= std::uint64_t{1} << (g & 63);
    };

    // definitional: fix beta, group gamma by gamma ^ beta; every group needs a maximum
    std::optional<json> def_meet_wit, def_join_wit;
    for (int beta = 0; beta < n && !def_meet_wit; ++beta) {
      budget.tick();
      std::map<int, BitRow> groups;
      for (int g = 0; g < n; ++g) add(groups, t.m(g, beta), g);
      for (const auto& [alpha, set] : groups)
        if (!ps.max_of(set)) {
          def_meet_wit = json{{"reason", "meet-semidistributivity fails"}, {"alpha", detail::element_json(ps, alpha)},
                              {"beta", detail::element_json(ps, beta)}, {"gammas", detail::index_list(set)}};
          break;
        }
    }
    for (int alpha = 0; alpha < n && !def_join_wit; ++alpha) {
      budget.tick();
      std::map<int, BitRow> groups;
      for (int g = 0; g < n; ++g) add(groups, t.j(g, alpha), g);
      for (const auto& [beta, set] : groups)
        if (!ps.min_of(set)) {
          def_join_wit = json{{"reason", "join-semidistributivity fails"}, {"alpha", detail::element_json(ps, alpha)},
                              {"beta", detail::element_json(ps, beta)}, {"gammas", detail::index_list(set)}};
          break;
        }
    }

    // cover route
    bool cover_meet_ok = true, cover_join_ok = true;
    std::int64_t covers = 0;
    for (int alpha = 0; alpha < n; ++alpha) {
      budget.tick();
      for (const auto& e : ps.hasse_up(alpha)) {
        ++covers;
        const int beta = e.to;
        BitRow below(words, 0), above(words, 0);
        for (int g = 0; g < n; ++g) {
          if (t.m(g, beta) == alpha) below[g >> 6] |= std::uint64_t{1} << (g & 63);
          if (t.j(g, alpha) == beta) above[g >> 6] |= std::uint64_t{1} << (g & 63);
        }
        if (!ps.max_of(below)) cover_meet_ok = false;
        if (!ps.min_of(above)) cover_join_ok = false;
      }
    }
    r.stats["covers"] = covers;

    const bool def_meet_ok = !def_meet_wit, def_join_ok = !def_join_wit;
    if (def_meet_ok != cover_meet_ok || def_join_ok != cover_join_ok)
      return detail::fail(r, json{{"reason", "definition and cover route disagree"},
                                  {"definition", {{"meet", def_meet_ok}, {"join", def_join_ok}}},
                                  {"covers", {{"meet", cover_meet_ok}, {"join", cover_join_ok}}}});
    if (def_meet_wit) return detail::fail(r, *def_meet_wit);
    if (def_join_wit) return detail::fail(r, *def_join_wit);
  });
}

/// Cover forks close into polygons, and every polygon interval is a diamond or a pentagon.
inline CheckResult check_polygonal(const ChutePoset& ps, const Budget& budget = {}) {
  return detail::timed("polygonal", [&](CheckResult& r) {
    const int n = ps.size();
    auto fork_ok = [&](int lo, int hi) {
      const auto k = ps.classify_polygon(lo, hi);
      return k == PolygonKind::Diamond || k == PolygonKind::Pentagon;
    };
    for (int p = 0; p < n; ++p) {
      budget.tick();
      const auto& up = ps.hasse_up(p);
      for (std::size_t x = 0; x < up.size(); ++x)
        for (std::size_t y = x + 1; y < up.size(); ++y) {
          const int top = ps.join(up[x].to, up[y].to);
          if (ps.meet(up[x].to, up[y].to) != p || !fork_ok(p, top))
            return detail::fail(r, detail::interval_witness(ps, p, top, "up-fork interval is not a diamond or pentagon"));
        }
      const auto& down = ps.hasse_down(p);
      for (std::size_t x = 0; x < down.size(); ++x)
        for (std::size_t y = x + 1; y < down.size(); ++y) {
          const int bottom = ps.meet(down[x], down[y]);
          if (ps.join(down[x], down[y]) != p || !fork_ok(bottom, p))
            return detail::fail(r, detail::interval_witness(ps, bottom, p, "down-fork interval is not a diamond or pentagon"));
        }
    }
    std::int64_t diamonds = 0, pentagons = 0, intervals = 0;
    for (int a = 0; a < n; ++a) {
      budget.tick();
      for_each_bit(ps.up_set(a), [&](int b) {
        if (r.status == CheckStatus::Fail || a == b) return;
        ++intervals;
        switch (ps.classify_polygon(a, b)) {
          case PolygonKind::Diamond: ++diamonds; break;
          case PolygonKind::Pentagon: ++pentagons; break;
          case PolygonKind::LargerPolygon: detail::fail(r, detail::interval_witness(ps, a, b, "polygon with more than five elements")); break;
          case PolygonKind::NotAPolygon: break;
        }
      });
      if (r.status == CheckStatus::Fail) return;
    }
    r.stats["intervals"] = intervals;
    r.stats["diamonds"] = diamonds;
    r.stats["pentagons"] = pentagons;
  });
}

/// Boxes (i,j) where two tableaux differ.
inline std::vector<Box> differing_boxes(const StairTableau& a, const StairTableau& b) {
  std::vector<Box> out;
  for (int i = 1; i < a.n(); ++i)
    for (int j = i + 1; j <= a.n(); ++j)
      if (a(i, j) != b(i, j)) out.push_back({i, j});
  return out;
}

/// Transpose reverses the order into PD(w^{-1}), swaps meets and joins, and moves
/// column-n Lehmer differences to row w^{-1}(n).
inline CheckResult check_transpose_antiisomorphism(const ChutePoset& ps, const ChutePoset& inv, const Budget& budget = {}) {
  return detail::timed("transpose", [&](CheckResult& r) {
    const int n = ps.size();
    const int deg = ps.w().n();
    if (inv.w() != ps.w().inverse()) throw std::invalid_argument("second poset must be PD(w^{-1})");
    if (inv.size() != n)
      return detail::fail(r, json{{"reason", "sizes differ"}, {"size", n}, {"inverse_size", inv.size()}});
    std::vector<int> img(n);
    std::vector<bool> hit(n, false);
    for (int k = 0; k < n; ++k) {
      auto t = inv.index_of(transpose(ps.element(k)));
      if (!t || hit[*t]) return detail::fail(r, json{{"reason", "transpose is not a bijection"}, {"a", detail::element_json(ps, k)}});
      img[k] = *t;
      hit[*t] = true;
    }
    const int row = deg > 0 ? ps.w().inverse()(deg) : 0;
    std::int64_t column_pairs = 0;
    for (int a = 0; a < n; ++a) {
      budget.tick();
      for (int b = 0; b < n; ++b) {
        if (ps.leq(a, b) != inv.leq(img[b], img[a]))
          return detail::fail(r, detail::pair_witness(ps, a, b, "transpose does not reverse the order"));
        if (inv.element(img[ps.meet(a, b)]) != inv.element(inv.join(img[a], img[b])) ||
            inv.element(img[ps.join(a, b)]) != inv.element(inv.meet(img[a], img[b])))
          return detail::fail(r, detail::pair_witness(ps, a, b, "transpose does not exchange meet and join"));
        if (a == b || !ps.leq_via_lehmer(a, b)) continue;
        const auto diff = differing_boxes(ps.phi_of(a).values, ps.phi_of(b).values);
        bool only_last_column = true;
        for (auto box : diff) only_last_column = only_last_column && box.j == deg;
        if (!only_last_column) continue;
        ++column_pairs;
        const auto tdiff = differing_boxes(inv.phi_of(img[a]).values, inv.phi_of(img[b]).values);
        bool only_row = true;
        for (auto box : tdiff) only_row = only_row && box.i == row;
        if (!only_row || !inv.leq_via_lehmer(img[b], img[a])) {
          auto wit = detail::pair_witness(ps, a, b, "column-n difference does not transpose to a row difference");
          wit["row"] = row;
          return detail::fail(r, std::move(wit));
        }
      }
    }
    r.stats["column_pairs"] = column_pairs;
  });
}

inline CheckResult check_transpose_antiisomorphism(const ChutePoset& ps, const Budget& budget = {}) {
  const auto inv = ChutePoset::enumerate(ps.w().inverse());
  return check_transpose_antiisomorphism(ps, inv, budget);
}

constexpr int kTriforceMaxDegree = 4;

/// P -> P^▲ is an order isomorphism onto the interval [min^▲, max^▲] of PD(w^▲).
inline CheckResult check_triforce_interval(const ChutePoset& ps, const Budget& budget = {}) {
  if (ps.w().n() > kTriforceMaxDegree) {
    CheckResult r;
    r.name = "triforce";
    r.status = CheckStatus::Skipped;
    r.witness = json{{"reason", "degree above " + std::to_string(kTriforceMaxDegree)}};
    return r;
  }
  return detail::timed("triforce", [&](CheckResult& r) {
    const auto big = ChutePoset::enumerate(ps.w().triforce());
    const int n = ps.size();
    std::vector<int> img(n);
    std::set<int> image;
    for (int k = 0; k < n; ++k) {
      auto t = big.index_of(triforce_embed(ps.element(k)));
      if (!t) return detail::fail(r, json{{"reason", "image is not in PD(w^triforce)"}, {"a", detail::element_json(ps, k)}});
      if (!image.insert(*t).second) return detail::fail(r, json{{"reason", "embedding is not injective"}, {"a", detail::element_json(ps, k)}});
      img[k] = *t;
    }
    for (int a = 0; a < n; ++a) {
      budget.tick();
      for (int b = 0; b < n; ++b)
        if (ps.leq(a, b) != big.leq(img[a], img[b]))
          return detail::fail(r, detail::pair_witness(ps, a, b, "embedding does not preserve the order"));
    }
    const int lo = img[ps.min_element()], hi = img[ps.max_element()];
    if (!big.leq(lo, hi)) return detail::fail(r, json{{"reason", "image extremes are incomparable"}});
    const auto iv = big.interval(lo, hi);
    if (std::set<int>(iv.begin(), iv.end()) != image)
      return detail::fail(r, json{{"reason", "image differs from the interval"}, {"image_size", image.size()}, {"interval_size", iv.size()}});
    r.stats["target_size"] = big.size();
  });
}

inline const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names{"isomorphism", "lattice", "sd", "polygonal", "transpose", "triforce"};
  return names;
}

/// Runs the named checks in the given order under one per-permutation budget.
inline VerificationReport verify(const Permutation& w, const std::vector<std::string>& names = all_check_names(),
                                 std::int64_t budget_ms = default_budget_ms()) {
  for (const auto& name : names) {
    bool known = false;
    for (const auto& k : all_check_names()) known = known || k == name;
    if (!known) throw std::invalid_argument("unknown check: " + name);
  }
  const Budget budget(budget_ms);
  const auto ps = ChutePoset::enumerate(w);
  VerificationReport report{w, {}};
  for (const auto& name : names) {
    if (budget.expired()) {
      CheckResult skipped;
      skipped.name = name;
      skipped.status = CheckStatus::Skipped;
      skipped.witness = json{{"reason", "time budget exhausted"}};
      report.checks.push_back(std::move(skipped));
      continue;
    }
    if (name == "isomorphism") report.checks.push_back(check_isomorphism(ps, budget));
    else if (name == "lattice") report.checks.push_back(check_lattice(ps, budget));
    else if (name == "sd") report.checks.push_back(check_semidistributive(ps, budget));
    else if (name == "polygonal") report.checks.push_back(check_polygonal(ps, budget));
    else if (name == "transpose") report.checks.push_back(check_transpose_antiisomorphism(ps, budget));
    else report.checks.push_back(check_triforce_interval(ps, budget));
  }
  return report;
}

}  // namespace chutelat
