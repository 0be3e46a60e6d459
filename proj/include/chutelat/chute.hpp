#pragma once

// Chute moves. A rectangle R qualifies in P when NW(R) and SW(R) are bumps,
// SE(R) is a bump or elbow, and every other cell of R is a cross. The move
// turns SW(R) into a cross and NE(R) into a bump.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chutelat/pipedream.hpp"
#include "chutelat/tableaux.hpp"

namespace chutelat {

struct Rect {
  int top = 0;
  int bottom = 0;
  int left = 0;
  int right = 0;

  Cell nw() const { return {top, left}; }
  Cell ne() const { return {top, right}; }
  Cell sw() const { return {bottom, left}; }
  Cell se() const { return {bottom, right}; }

  bool has_corner(Cell x) const { return x == nw() || x == ne() || x == sw() || x == se(); }

  friend constexpr bool operator==(const Rect&, const Rect&) = default;
  friend constexpr auto operator<=>(const Rect& a, const Rect& b) {
    if (auto c = a.top <=> b.top; c != 0) return c;
    if (auto c = a.left <=> b.left; c != 0) return c;
    if (auto c = a.bottom <=> b.bottom; c != 0) return c;
    return a.right <=> b.right;
  }
};

/// A chute move is named by its rectangle; the pipes are those crossing at NE(R) before the move.
struct ChuteMove {
  Rect rect;
  int pipe_lo = 0;
  int pipe_hi = 0;

  friend constexpr bool operator==(const ChuteMove&, const ChuteMove&) = default;
};

namespace detail {

enum class RectState { Before, After };

inline bool rect_matches(const PipeDream& p, const Rect& r, RectState state) {
  if (r.bottom <= r.top || r.right <= r.left || r.top < 1 || r.left < 1) return false;
  if (!p.contains(r.se())) return false;
  const Tile sw_tile = state == RectState::Before ? Tile::Bump : Tile::Cross;
  const Tile ne_tile = state == RectState::Before ? Tile::Cross : Tile::Bump;
  if (p.at(r.nw()) != Tile::Bump || p.at(r.sw()) != sw_tile || p.at(r.ne()) != ne_tile) return false;
  if (p.at(r.se()) == Tile::Cross) return false;
  for (int row = r.top; row <= r.bottom; ++row)
    for (int col = r.left; col <= r.right; ++col) {
      const Cell x{row, col};
      if (r.has_corner(x)) continue;
      if (p.at(x) != Tile::Cross) return false;
    }
  return true;
}

template <class Visit>
void for_each_rect(int n, Visit visit) {
  for (int top = 1; top <= n; ++top)
    for (int left = 1; top + left <= n + 1; ++left)
      for (int bottom = top + 1; bottom + left <= n + 1; ++bottom)
        for (int right = left + 1; bottom + right <= n + 1; ++right) visit(Rect{top, bottom, left, right});
}

inline std::string rect_str(const Rect& r) {
  std::ostringstream os;
  os << "[" << r.top << "," << r.bottom << "," << r.left << "," << r.right << "]";
  return os.str();
}

}  // namespace detail

inline bool is_chute_rect(const PipeDream& p, const Rect& r) { return detail::rect_matches(p, r, detail::RectState::Before); }

/// Every applicable chute move, sorted by (top, left, bottom, right).
inline std::vector<ChuteMove> find_moves(const PipeDream& p, const Trace& t) {
  if (!is_reduced(t)) throw std::invalid_argument("find_moves: pipe dream is not reduced");
  std::vector<ChuteMove> out;
  detail::for_each_rect(p.n(), [&](const Rect& r) {
    if (!detail::rect_matches(p, r, detail::RectState::Before)) return;
    const int a = t.west_pipe(r.top, r.right), b = t.south_pipe(r.top, r.right);
    out.push_back({r, std::min(a, b), std::max(a, b)});
  });
  return out;
}

inline std::vector<ChuteMove> find_moves(const PipeDream& p) { return find_moves(p, trace(p)); }

/// Rectangles in the post-move pattern: each names a chute predecessor of p.
inline std::vector<Rect> find_inverse_moves(const PipeDream& p) {
  std::vector<Rect> out;
  detail::for_each_rect(p.n(), [&](const Rect& r) {
    if (detail::rect_matches(p, r, detail::RectState::After)) out.push_back(r);
  });
  return out;
}

inline PipeDream apply(const PipeDream& p, const Rect& r) {
  if (!detail::rect_matches(p, r, detail::RectState::Before))
    throw std::invalid_argument("apply: no chute move in rectangle " + detail::rect_str(r));
  PipeDream out = p;
  out.set(r.sw(), Tile::Cross);
  out.set(r.ne(), Tile::Bump);
  return out;
}

inline PipeDream apply(const PipeDream& p, const ChuteMove& m) { return apply(p, m.rect); }

inline PipeDream inverse_apply(const PipeDream& p, const Rect& r) {
  if (!detail::rect_matches(p, r, detail::RectState::After))
    throw std::invalid_argument("inverse_apply: rectangle " + detail::rect_str(r) + " is not in post-move form");
  PipeDream out = p;
  out.set(r.sw(), Tile::Bump);
  out.set(r.ne(), Tile::Cross);
  return out;
}

inline PipeDream inverse_apply(const PipeDream& p, const ChuteMove& m) { return inverse_apply(p, m.rect); }

/// Pipes running straight up through R: they enter the bottom row of R from the
/// south and leave its top row to the north in one column.
inline std::vector<int> vertical_pipes(const PipeDream& p, const Trace& t, const Rect& r) {
  std::vector<int> out;
  for (int c = r.left; c <= r.right; ++c) {
    const int pipe = t.south_pipe(r.bottom, c);
    if (pipe == 0) continue;
    bool straight = true;
    for (int row = r.top; row <= r.bottom && straight; ++row)
      straight = p.at(row, c) == Tile::Cross && t.south_pipe(row, c) == pipe;
    if (straight) out.push_back(pipe);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Witnesses for the chute/increment correspondence of one move.
struct IncrementCorrespondence {
  int x0 = 0;
  int y0 = 0;
  std::vector<int> vertical;  // Y
  BoxMultiset boxes;           // B = {(x0,y0)} ∪ {(x0,y) : y ∈ Y}
  int p0 = 0;
  int q0 = 0;
  StairTableau before;  // Θ(P)
  StairTableau after;   // Θ(C(P))
  std::vector<IncrementKind> kinds;  // increment kind for (x0,y0), then each (x0,y), y ∈ Y ascending
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Checks that the move acts on Θ as ↑_B with the entry-swap pattern between rows x0 and y0.
inline IncrementCorrespondence check_increment_correspondence(const PipeDream& p, const ChuteMove& m) {
  const auto t = trace(p);
  const Permutation& w = t.wiring;
  IncrementCorrespondence rep;
  rep.x0 = m.pipe_lo;
  rep.y0 = m.pipe_hi;
  rep.before = theta(t);
  const PipeDream q = apply(p, m.rect);
  const auto tq = trace(q);
  auto fail = [&](std::string s) { rep.failures.push_back(std::move(s)); };
  if (tq.wiring != w) fail("wiring changed");
  if (!is_reduced(tq)) {
    fail("result not reduced");
    return rep;
  }
  rep.after = theta(tq);
  rep.vertical = vertical_pipes(p, t, m.rect);
  if (vertical_pipes(q, tq, m.rect) != rep.vertical) fail("vertical pipes differ before/after the move");

  const int x0 = rep.x0, y0 = rep.y0;
  rep.p0 = rep.before(x0, y0);
  rep.q0 = rep.p0 + 1;
  while (rep.before.appears_below(rep.q0, x0, y0)) ++rep.q0;

  rep.boxes[{x0, y0}] = 1;
  for (int y : rep.vertical) {
    if (y <= y0 || y > w.n()) {
      fail("vertical pipe " + std::to_string(y) + " outside (y0, n]");
      return rep;
    }
    rep.boxes[{x0, y}] = 1;
  }
  StairTableau stepped = rep.before;
  for (const auto& [b, mult] : rep.boxes) {
    auto inc = increment(stepped, w, b);
    rep.kinds.push_back(inc.kind);
    stepped = inc.tableau;
  }
  if (stepped != rep.after) fail("Θ(C(P)) differs from ↑_B Θ(P)");
  for (int y : rep.vertical) {
    if (rep.before(x0, y) != rep.p0 || rep.after(y0, y) != rep.p0)
      fail("entry p0 pattern fails in column " + std::to_string(y));
    if (rep.after(x0, y) != rep.q0 || rep.before(y0, y) != rep.q0)
      fail("entry q0 pattern fails in column " + std::to_string(y));
  }
  if (rep.before.appears_in_column(rep.q0, y0)) fail("q0 already present in column y0");
  return rep;
}

}  // namespace chutelat
