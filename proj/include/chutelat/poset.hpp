#pragma once

// The chute move poset PD(w): enumeration, Hasse diagram, closure-based order
// queries, intervals and polygon classification, and the explicit chute-path
// construction between comparable inversions tableaux.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "chutelat/bitmatrix.hpp"
#include "chutelat/chute.hpp"
#include "chutelat/error.hpp"
#include "chutelat/pipedream.hpp"
#include "chutelat/tableaux.hpp"

namespace chutelat {

struct PosetEdge {
  int to = 0;
  ChuteMove move;
};

enum class PolygonKind { NotAPolygon, Diamond, Pentagon, LargerPolygon };

inline const char* to_string(PolygonKind k) {
  switch (k) {
    case PolygonKind::NotAPolygon: return "not-a-polygon";
    case PolygonKind::Diamond: return "diamond";
    case PolygonKind::Pentagon: return "pentagon";
    case PolygonKind::LargerPolygon: return "larger-polygon";
  }
  return "?";
}

class ChutePoset {
 public:
  /// Enumerates PD(w) by undirected search (moves and inverse moves) from the
  /// left-justified seed dream, then derives the order from the move graph.
  static ChutePoset enumerate(const Permutation& w) {
    ChutePoset ps;
    ps.w_ = w;
    const PipeDream seed = seed_dream(w);
    if (auto got = wiring(seed); got != w)
      throw std::logic_error("seed dream has wiring " + got.to_string() + ", expected " + w.to_string());

    std::unordered_map<std::string, int> layer_of;
    std::vector<PipeDream> found;
    std::deque<int> queue;
    layer_of.emplace(seed.key(), 0);
    found.push_back(seed);
    queue.push_back(0);
    while (!queue.empty()) {
      const int cur = queue.front();
      queue.pop_front();
      const PipeDream p = found[cur];
      const int layer = layer_of.at(p.key());
      auto visit = [&](PipeDream q) {
        auto [it, inserted] = layer_of.emplace(q.key(), layer + 1);
        if (inserted) {
          found.push_back(std::move(q));
          queue.push_back(static_cast<int>(found.size()) - 1);
        }
      };
      for (const auto& m : find_moves(p)) visit(apply(p, m.rect));
      for (const auto& r : find_inverse_moves(p)) visit(inverse_apply(p, r));
    }

    std::vector<std::pair<int, std::string>> order;
    for (const auto& p : found) order.emplace_back(layer_of.at(p.key()), p.key());
    std::sort(order.begin(), order.end());
    for (const auto& [layer, key] : order) {
      ps.index_.emplace(key, static_cast<int>(ps.layer_.size()));
      ps.layer_.push_back(layer);
    }
    ps.elements_.resize(found.size());
    for (auto& p : found) {
      const int k = ps.index_.at(p.key());
      ps.elements_[k] = std::move(p);
    }
    ps.build_order();
    return ps;
  }

  const Permutation& w() const { return w_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<PipeDream>& elements() const { return elements_; }
  const PipeDream& element(int k) const { return elements_[k]; }
  int bfs_layer(int k) const { return layer_[k]; }

  std::optional<int> index_of(const PipeDream& p) const {
    auto it = index_.find(p.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const StairTableau& theta_of(int k) const { return thetas_[k]; }
  const LehmerTableau& phi_of(int k) const { return phis_[k]; }

  /// Θ^{-1} by lookup in the enumeration.
  std::optional<int> theta_inverse(const StairTableau& t) const {
    auto it = by_theta_.find(t);
    if (it == by_theta_.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<PosetEdge>& moves_up(int k) const { return moves_up_[k]; }
  const std::vector<PosetEdge>& hasse_up(int k) const { return hasse_up_[k]; }
  const std::vector<int>& hasse_down(int k) const { return hasse_down_[k]; }

  /// Moves P -> C(P) that are not cover relations.
  int non_cover_moves() const { return non_cover_moves_; }
  int move_count() const { return move_count_; }

  bool leq(int a, int b) const { return up_.test(a, b); }
  bool covers(int a, int b) const {
    for (const auto& e : hasse_up_[a])
      if (e.to == b) return true;
    return false;
  }

  std::span<const std::uint64_t> up_set(int a) const { return up_.row(a); }
  std::span<const std::uint64_t> down_set(int a) const { return down_.row(a); }

  /// Lehmer-side comparison Φ(a) <= Φ(b).
  bool leq_via_lehmer(int a, int b) const { return componentwise_leq(phis_[a], phis_[b]); }

  std::optional<int> try_meet(int a, int b) const { return extreme_of(bit_and(down_.row(a), down_.row(b)), down_, true); }
  std::optional<int> try_join(int a, int b) const { return extreme_of(bit_and(up_.row(a), up_.row(b)), up_, false); }

  int meet(int a, int b) const {
    if (auto m = try_meet(a, b)) return *m;
    throw TheoremViolation("no meet for elements " + std::to_string(a) + " and " + std::to_string(b) + " in PD(" +
                           w_.to_string() + ")");
  }
  int join(int a, int b) const {
    if (auto m = try_join(a, b)) return *m;
    throw TheoremViolation("no join for elements " + std::to_string(a) + " and " + std::to_string(b) + " in PD(" +
                           w_.to_string() + ")");
  }

  /// Maximum (for_max) or minimum of an arbitrary subset, if it has one.
  std::optional<int> max_of(std::span<const std::uint64_t> set) const { return extreme_of(BitRow(set.begin(), set.end()), down_, true); }
  std::optional<int> min_of(std::span<const std::uint64_t> set) const { return extreme_of(BitRow(set.begin(), set.end()), up_, false); }

  int min_element() const { return unique_extreme(true); }
  int max_element() const { return unique_extreme(false); }

  /// Elements of [a, b] in canonical order.
  std::vector<int> interval(int a, int b) const {
    if (!leq(a, b)) throw std::invalid_argument("interval: endpoints are not comparable");
    std::vector<int> out;
    for_each_bit(bit_and(up_.row(a), down_.row(b)), [&](int k) { out.push_back(k); });
    return out;
  }

  /// [a, b] is a polygon when its Hasse diagram is exactly two maximal chains
  /// meeting only at a and b (and so elements of different chains are incomparable).
  PolygonKind classify_polygon(int a, int b) const {
    if (!leq(a, b)) throw std::invalid_argument("classify_polygon: endpoints are not comparable");
    const BitRow in = bit_and(up_.row(a), down_.row(b));
    const int card = bit_count(in);
    if (card < 4) return PolygonKind::NotAPolygon;
    auto inside = [&](int k) { return (in[k >> 6] >> (k & 63)) & 1u; };
    std::vector<int> starts;
    for (const auto& e : hasse_up_[a])
      if (inside(e.to)) starts.push_back(e.to);
    if (starts.size() != 2) return PolygonKind::NotAPolygon;
    std::vector<std::vector<int>> chains;
    for (int s : starts) {
      std::vector<int> chain;
      int cur = s;
      while (cur != b) {
        chain.push_back(cur);
        int next = -1, ups = 0;
        for (const auto& e : hasse_up_[cur])
          if (inside(e.to)) {
            next = e.to;
            ++ups;
          }
        if (ups != 1) return PolygonKind::NotAPolygon;
        cur = next;
      }
      if (chain.empty()) return PolygonKind::NotAPolygon;
      chains.push_back(std::move(chain));
    }
    if (static_cast<int>(chains[0].size() + chains[1].size()) + 2 != card) return PolygonKind::NotAPolygon;
    for (int x : chains[0])
      for (int y : chains[1])
        if (x == y || leq(x, y) || leq(y, x)) return PolygonKind::NotAPolygon;
    if (card == 4) return PolygonKind::Diamond;
    if (card == 5) return PolygonKind::Pentagon;
    return PolygonKind::LargerPolygon;
  }

 private:
  void build_order() {
    const int n = size();
    moves_up_.assign(n, {});
    hasse_up_.assign(n, {});
    hasse_down_.assign(n, {});
    std::vector<int> indeg(n, 0);
    for (int k = 0; k < n; ++k) {
      const auto& p = elements_[k];
      const auto t = trace(p);
      if (t.wiring != w_ || !is_reduced(t)) throw std::logic_error("enumeration produced a dream outside PD(w)");
      thetas_.push_back(theta(t));
      phis_.push_back(lehmer_form(thetas_.back(), w_));
      by_theta_.emplace(thetas_.back(), k);
      for (const auto& m : find_moves(p, t)) {
        const auto to = index_.find(apply(p, m.rect).key());
        if (to == index_.end()) throw std::logic_error("move leaves the enumerated set");
        moves_up_[k].push_back({to->second, m});
        ++indeg[to->second];
      }
    }
    move_count_ = 0;
    for (const auto& v : moves_up_) move_count_ += static_cast<int>(v.size());

    // Kahn order; a leftover vertex means the move relation has a cycle.
    std::vector<int> topo;
    std::deque<int> ready;
    for (int k = 0; k < n; ++k)
      if (indeg[k] == 0) ready.push_back(k);
    while (!ready.empty()) {
      const int k = ready.front();
      ready.pop_front();
      topo.push_back(k);
      for (const auto& e : moves_up_[k])
        if (--indeg[e.to] == 0) ready.push_back(e.to);
    }
    if (static_cast<int>(topo.size()) != n) throw TheoremViolation("chute moves form a cycle in PD(" + w_.to_string() + ")");
    topo_pos_.assign(n, 0);
    for (int k = 0; k < n; ++k) topo_pos_[topo[k]] = k;

    up_ = BitMatrix(n);
    down_ = BitMatrix(n);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      const int k = *it;
      up_.set(k, k);
      for (const auto& e : moves_up_[k]) up_.or_row(k, e.to);
    }
    for (int a = 0; a < n; ++a)
      for_each_bit(up_.row(a), [&](int b) { down_.set(b, a); });

    non_cover_moves_ = 0;
    for (int k = 0; k < n; ++k) {
      for (const auto& e : moves_up_[k]) {
        bool cover = true;
        for (const auto& f : moves_up_[k])
          if (f.to != e.to && up_.test(f.to, e.to)) cover = false;
        if (cover) {
          hasse_up_[k].push_back(e);
          hasse_down_[e.to].push_back(k);
        } else {
          ++non_cover_moves_;
        }
      }
    }
  }

  // Greatest (use_down) or least element of `set`, if the set has one.
  std::optional<int> extreme_of(const BitRow& set, const BitMatrix& rel, bool greatest) const {
    int best = -1;
    for_each_bit(set, [&](int k) {
      if (best < 0 || (greatest ? topo_pos_[k] > topo_pos_[best] : topo_pos_[k] < topo_pos_[best])) best = k;
    });
    if (best < 0 || !bit_subset(set, rel.row(best))) return std::nullopt;
    return best;
  }

  int unique_extreme(bool minimum) const {
    std::vector<int> found;
    for (int k = 0; k < size(); ++k)
      if ((minimum ? hasse_down_[k].empty() : hasse_up_[k].empty())) found.push_back(k);
    if (found.size() != 1)
      throw TheoremViolation(std::string("PD(") + w_.to_string() + ") has " + std::to_string(found.size()) +
                             (minimum ? " minimal" : " maximal") + " elements");
    return found.front();
  }

  Permutation w_;
  std::vector<PipeDream> elements_;
  std::vector<int> layer_;
  std::unordered_map<std::string, int> index_;
  std::vector<StairTableau> thetas_;
  std::vector<LehmerTableau> phis_;
  std::map<StairTableau, int> by_theta_;
  std::vector<std::vector<PosetEdge>> moves_up_;
  std::vector<std::vector<PosetEdge>> hasse_up_;
  std::vector<std::vector<int>> hasse_down_;
  std::vector<int> topo_pos_;
  BitMatrix up_;    // up_(a, b) iff a <= b
  BitMatrix down_;  // down_(b, a) iff a <= b
  int non_cover_moves_ = 0;
  int move_count_ = 0;
};

/// Every cross/bump filling of the interior cells with wiring w and no double crossings.
inline std::vector<PipeDream> brute_force_enumerate(const Permutation& w) {
  const int n = w.n();
  if (n > 6) throw std::invalid_argument("brute_force_enumerate: degree above 6 is refused");
  std::vector<Cell> interior;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; r + c <= n; ++c) interior.push_back({r, c});
  std::vector<PipeDream> out;
  const unsigned long total = 1ul << interior.size();
  for (unsigned long mask = 0; mask < total; ++mask) {
    PipeDream p(n);
    for (std::size_t k = 0; k < interior.size(); ++k)
      if ((mask >> k) & 1u) p.set(interior[k], Tile::Cross);
    const auto t = trace(p);
    if (t.wiring == w && is_reduced(t)) out.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chute paths between comparable inversions tableaux

struct ChutePathStep {
  Box start;             // (x0, y0)
  std::vector<int> Y;
  BoxMultiset boxes;     // B
  int p0 = 0;
  int q0 = 0;
  StairTableau before;
  StairTableau after;    // ↑_B before
  // the four conditions established for every step
  bool entries_ok = false;      // T(x0,y) = p0 and T(y0,y) = (↑_{(x0,y)} T)(x0,y) = q0 for y in Y
  bool inside_remaining = false;  // B ⊆ M
  bool stays_inversions = false;  // ↑_B T ∈ IT(w)
  bool q0_absent = false;         // q0 not in column y0 of T

  bool conditions_hold() const { return entries_ok && inside_remaining && stays_inversions && q0_absent; }
};

/// Walks from T to T' one chute move at a time. Each step picks, among boxes
/// (i,j) of the remaining multiset whose increment keeps T_{<=j} an inversions
/// tableau, one with no such box further right in its row; ties go to the
/// smallest (column, row).
inline std::vector<ChutePathStep> chute_path(const StairTableau& from, const StairTableau& to, const Permutation& w) {
  if (!is_inversions_tableau(from, w) || !is_inversions_tableau(to, w))
    throw std::invalid_argument("chute_path: endpoints must be inversions tableaux");
  if (!delta_multiset(from, to, w)) throw std::invalid_argument("chute_path: tableaux are incomparable");
  std::vector<ChutePathStep> steps;
  StairTableau cur = from;
  while (true) {
    const auto remaining = *delta_multiset(cur, to, w);
    if (remaining.empty()) break;
    std::vector<Box> candidates;
    for (const auto& [b, mult] : remaining) {
      const auto wj = w.restrict_values(b.j);
      if (is_inversions_tableau(increment(cur.restrict(b.j), wj, b).tableau, wj)) candidates.push_back(b);
    }
    if (candidates.empty())
      throw TheoremViolation("chute_path: no admissible box while " + std::to_string(multiset_size(remaining)) +
                             " increments remain");
    std::optional<Box> pick;
    for (Box b : candidates) {
      bool rightmost = true;
      for (Box o : candidates)
        if (o.i == b.i && o.j > b.j) rightmost = false;
      if (!rightmost) continue;
      if (!pick || std::pair(b.j, b.i) < std::pair(pick->j, pick->i)) pick = b;
    }
    ChutePathStep s;
    s.start = *pick;
    s.before = cur;
    const int x0 = pick->i, y0 = pick->j;
    s.p0 = cur(x0, y0);
    s.q0 = s.p0 + 1;
    while (cur.appears_below(s.q0, x0, y0)) ++s.q0;
    for (int y = y0 + 1; y <= w.n(); ++y)
      if (cur(x0, y) == cur(x0, y0) && cur(x0, y0) < cur(y0, y)) s.Y.push_back(y);
    s.boxes[{x0, y0}] = 1;
    for (int y : s.Y) s.boxes[{x0, y}] = 1;

    s.entries_ok = true;
    for (int y : s.Y)
      if (cur(x0, y) != s.p0 || cur(y0, y) != s.q0 || increment(cur, w, {x0, y}).tableau(x0, y) != s.q0) s.entries_ok = false;
    s.inside_remaining = true;
    for (const auto& [b, k] : s.boxes) {
      auto it = remaining.find(b);
      if (it == remaining.end() || it->second < k) s.inside_remaining = false;
    }
    s.after = increment_multiset(cur, w, s.boxes);
    s.stays_inversions = is_inversions_tableau(s.after, w);
    s.q0_absent = !cur.appears_in_column(s.q0, y0);
    if (!s.inside_remaining || !s.stays_inversions) {
      steps.push_back(std::move(s));
      break;  // the walk cannot continue meaningfully
    }
    cur = s.after;
    steps.push_back(std::move(s));
  }
  return steps;
}

/// The chute move realizing a path step on the pipe-dream side, if one exists:
/// a move C_{x0,y0} from Θ^{-1}(before) landing on Θ^{-1}(after).
inline std::optional<ChuteMove> realize_step(const ChutePoset& ps, const ChutePathStep& s) {
  const auto from = ps.theta_inverse(s.before);
  const auto to = ps.theta_inverse(s.after);
  if (!from || !to) return std::nullopt;
  for (const auto& e : ps.moves_up(*from))
    if (e.to == *to && e.move.pipe_lo == s.start.i && e.move.pipe_hi == s.start.j) return e.move;
  return std::nullopt;
}

}  // namespace chutelat
