#pragma once

// Pipe dreams on the staircase {(r, c) : r + c <= n + 1}, rows numbered top to
// bottom. Pipe i enters from the west in row i; reading the labels along the
// north edge left to right gives the wiring permutation.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chutelat/perm.hpp"
#include "chutelat/tableaux.hpp"

namespace chutelat {

enum class Tile : unsigned char { Cross, Bump, Elbow };

inline char tile_char(Tile t) {
  switch (t) {
    case Tile::Cross: return 'C';
    case Tile::Bump: return 'B';
    case Tile::Elbow: return 'E';
  }
  return '?';
}

/// Grid position in a pipe dream (row from the top, column from the left).
struct Cell {
  int row = 0;
  int col = 0;

  friend constexpr bool operator==(Cell, Cell) = default;
  friend constexpr auto operator<=>(Cell, Cell) = default;
};

struct CrossingRecord {
  int pipe_lo = 0;
  int pipe_hi = 0;
  int row = 0;
  int col = 0;

  friend constexpr bool operator==(const CrossingRecord&, const CrossingRecord&) = default;
  friend constexpr auto operator<=>(const CrossingRecord&, const CrossingRecord&) = default;
};

class PipeDream {
 public:
  PipeDream() = default;

  /// All interior boxes bump, boundary elbows: the unique dream for the identity.
  explicit PipeDream(int n) : n_(n), tiles_(static_cast<std::size_t>(n) * (n + 1) / 2, Tile::Bump) {
    if (n < 1) throw std::invalid_argument("pipe dream size must be >= 1");
    for (int r = 1; r <= n; ++r) tiles_[index(r, n + 1 - r)] = Tile::Elbow;
  }

  /// From row strings over {C, B, E}; row r must have n + 1 - r characters.
  static PipeDream from_rows(const std::vector<std::string>& rows) {
    const int n = static_cast<int>(rows.size());
    PipeDream p(n);
    for (int r = 1; r <= n; ++r) {
      const auto& s = rows[r - 1];
      if (static_cast<int>(s.size()) != n + 1 - r)
        throw std::invalid_argument("row " + std::to_string(r) + " must have " + std::to_string(n + 1 - r) + " tiles");
      for (int c = 1; c <= n + 1 - r; ++c) {
        Tile t;
        switch (s[c - 1]) {
          case 'C': t = Tile::Cross; break;
          case 'B': t = Tile::Bump; break;
          case 'E': t = Tile::Elbow; break;
          default: throw std::invalid_argument(std::string("unknown tile '") + s[c - 1] + "'");
        }
        const bool boundary = r + c == n + 1;
        if (boundary != (t == Tile::Elbow))
          throw std::invalid_argument("elbow tiles belong exactly on the boundary (row " + std::to_string(r) + ", col " +
                                      std::to_string(c) + ")");
        p.tiles_[p.index(r, c)] = t;
      }
    }
    return p;
  }

  int n() const { return n_; }

  bool contains(int r, int c) const { return r >= 1 && c >= 1 && r + c <= n_ + 1; }
  bool contains(Cell x) const { return contains(x.row, x.col); }
  bool is_boundary(int r, int c) const { return r + c == n_ + 1; }

  Tile at(int r, int c) const {
    if (!contains(r, c)) throw std::out_of_range("cell outside staircase");
    return tiles_[index(r, c)];
  }
  Tile at(Cell x) const { return at(x.row, x.col); }

  /// Sets an interior tile; boundary cells are fixed elbows.
  void set(int r, int c, Tile t) {
    if (!contains(r, c)) throw std::out_of_range("cell outside staircase");
    if (is_boundary(r, c) != (t == Tile::Elbow)) throw std::invalid_argument("elbow tiles belong exactly on the boundary");
    tiles_[index(r, c)] = t;
  }
  void set(Cell x, Tile t) { set(x.row, x.col, t); }

  std::vector<std::string> rows() const {
    std::vector<std::string> out;
    for (int r = 1; r <= n_; ++r) {
      std::string s;
      for (int c = 1; c <= n_ + 1 - r; ++c) s.push_back(tile_char(at(r, c)));
      out.push_back(std::move(s));
    }
    return out;
  }

  /// Row strings joined by '/'; doubles as a canonical sort key.
  std::string key() const {
    std::string s;
    for (int r = 1; r <= n_; ++r) {
      if (r > 1) s.push_back('/');
      for (int c = 1; c <= n_ + 1 - r; ++c) s.push_back(tile_char(tiles_[index(r, c)]));
    }
    return s;
  }

  int cross_count(int r) const {
    int k = 0;
    for (int c = 1; c <= n_ + 1 - r; ++c) k += at(r, c) == Tile::Cross;
    return k;
  }

  friend bool operator==(const PipeDream&, const PipeDream&) = default;
  friend bool operator<(const PipeDream& a, const PipeDream& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.tiles_ < b.tiles_;
  }

 private:
  std::size_t index(int r, int c) const {
    // rows 1..r-1 hold n, n-1, ..., n+2-r cells
    const int before = (r - 1) * n_ - (r - 1) * (r - 2) / 2;
    return static_cast<std::size_t>(before + c - 1);
  }

  int n_ = 0;
  std::vector<Tile> tiles_;
};

/// Pipe routing of a dream, computed in one pass.
struct Trace {
  int n = 0;
  Permutation wiring;
  std::vector<CrossingRecord> crossings;  // sorted by (pipe_lo, pipe_hi, row, col)
  // label of the pipe entering each cell from the west / from the south, 0 if none
  std::vector<int> from_west;
  std::vector<int> from_south;
  // cells visited by each pipe, in travel order
  std::vector<std::vector<Cell>> paths;

  int west_pipe(int r, int c) const { return from_west[static_cast<std::size_t>(r) * (n + 2) + c]; }
  int south_pipe(int r, int c) const { return from_south[static_cast<std::size_t>(r) * (n + 2) + c]; }

  std::optional<CrossingRecord> crossing(int i, int j) const {
    if (i > j) std::swap(i, j);
    for (const auto& x : crossings)
      if (x.pipe_lo == i && x.pipe_hi == j) return x;
    return std::nullopt;
  }
};

inline Trace trace(const PipeDream& p) {
  const int n = p.n();
  Trace t;
  t.n = n;
  const std::size_t stride = static_cast<std::size_t>(n) + 2;
  t.from_west.assign(stride * stride, 0);
  t.from_south.assign(stride * stride, 0);
  t.paths.assign(static_cast<std::size_t>(n) + 1, {});
  std::vector<int> north(n, 0);
  for (int pipe = 1; pipe <= n; ++pipe) {
    int r = pipe, c = 1;
    bool moving_east = true;
    auto& path = t.paths[pipe];
    while (true) {
      path.push_back({r, c});
      const Tile tile = p.at(r, c);
      if (moving_east) {
        t.from_west[r * stride + c] = pipe;
        if (tile == Tile::Cross) {
          ++c;
        } else {
          moving_east = false;
          --r;
        }
      } else {
        t.from_south[r * stride + c] = pipe;
        if (tile == Tile::Cross) {
          --r;
        } else {
          moving_east = true;
          ++c;
        }
      }
      if (r == 0) {
        north[c - 1] = pipe;
        break;
      }
    }
  }
  t.wiring = Permutation(north);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; r + c <= n + 1; ++c)
      if (p.at(r, c) == Tile::Cross) {
        const int a = t.from_west[r * stride + c], b = t.from_south[r * stride + c];
        t.crossings.push_back({std::min(a, b), std::max(a, b), r, c});
      }
  std::sort(t.crossings.begin(), t.crossings.end());
  return t;
}

inline Permutation wiring(const PipeDream& p) { return trace(p).wiring; }

inline bool is_reduced(const Trace& t) {
  for (std::size_t k = 1; k < t.crossings.size(); ++k)
    if (t.crossings[k].pipe_lo == t.crossings[k - 1].pipe_lo && t.crossings[k].pipe_hi == t.crossings[k - 1].pipe_hi)
      return false;
  return true;
}

inline bool is_reduced(const PipeDream& p) { return is_reduced(trace(p)); }

namespace detail {
inline Trace reduced_trace(const PipeDream& p, const char* who) {
  auto t = trace(p);
  if (!is_reduced(t)) throw std::invalid_argument(std::string(who) + ": pipe dream is not reduced");
  return t;
}
}  // namespace detail

/// Θ(P): row of the crossing of pipes i < j at each inversion box, 0 elsewhere.
inline StairTableau theta(const Trace& t) {
  if (!is_reduced(t)) throw std::invalid_argument("theta: pipe dream is not reduced");
  StairTableau out(t.n);
  for (const auto& x : t.crossings) out.set(x.pipe_lo, x.pipe_hi, x.row);
  return out;
}

inline StairTableau theta(const PipeDream& p) { return theta(trace(p)); }

/// Φ = Λ ∘ Θ.
inline LehmerTableau phi(const PipeDream& p) {
  const auto t = detail::reduced_trace(p, "phi");
  return lehmer_form(theta(t), t.wiring);
}

inline PipeDream transpose(const PipeDream& p) {
  PipeDream out(p.n());
  for (int r = 1; r <= p.n(); ++r)
    for (int c = 1; r + c <= p.n(); ++c) out.set(r, c, p.at(c, r));
  return out;
}

/// P̂: drop the rightmost cell of pipe n in every row and close the gaps.
inline PipeDream hat_delete(const PipeDream& p) {
  const int n = p.n();
  if (n < 2) throw std::invalid_argument("hat_delete: size must be at least 2");
  const auto t = detail::reduced_trace(p, "hat_delete");
  std::vector<int> drop(n + 1, 0);
  for (Cell x : t.paths[n]) drop[x.row] = std::max(drop[x.row], x.col);
  PipeDream out(n - 1);
  for (int r = 1; r <= n - 1; ++r) {
    int c2 = 1;
    for (int c = 1; r + c <= n + 1; ++c) {
      if (c == drop[r]) continue;
      Tile tile = p.at(r, c);
      if (out.is_boundary(r, c2)) {
        if (tile == Tile::Cross) throw std::logic_error("hat_delete: cross landed on the boundary");
        tile = Tile::Elbow;
      } else if (tile == Tile::Elbow) {
        throw std::logic_error("hat_delete: elbow landed off the boundary");
      }
      out.set(r, c2++, tile);
    }
  }
  return out;
}

/// P^▲ of size 2n: tile (i, j) with i + j <= n moves to (n+1-j, n+1-i); all else bump.
inline PipeDream triforce_embed(const PipeDream& p) {
  const int n = p.n();
  (void)detail::reduced_trace(p, "triforce_embed");
  PipeDream out(2 * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) out.set(n + 1 - j, n + 1 - i, p.at(i, j));
  return out;
}

/// Pipes crossing pipe `with` at a cell satisfying `where`, drawn from `labels`.
namespace detail {
template <class Pred, class LabelPred>
int count_crossings_with(const Trace& t, int with, LabelPred labels, Pred where) {
  int k = 0;
  for (const auto& x : t.crossings) {
    int other = 0;
    if (x.pipe_lo == with) other = x.pipe_hi;
    else if (x.pipe_hi == with) other = x.pipe_lo;
    else continue;
    if (labels(other) && where(x)) ++k;
  }
  return k;
}
}  // namespace detail

/// row_P(i,j) - |A_{i,j}(P)| - 1, where A_{i,j}(P) are the pipes k < i crossing
/// pipe j strictly above row_P(i,j). Equals Φ(P)(i,j).
inline int phi_entry_by_rows(const PipeDream& p, int i, int j) {
  const auto t = detail::reduced_trace(p, "phi_entry_by_rows");
  const auto x = t.crossing(i, j);
  if (i >= j || !x) throw std::invalid_argument("phi_entry_by_rows: (i,j) is not an inversion");
  const int above = detail::count_crossings_with(
      t, j, [&](int k) { return k < i; }, [&](const CrossingRecord& y) { return y.row < x->row; });
  return x->row - above - 1;
}

/// col_P(i,j) - |D_{i,j}(P)| - 1, where D_{i,j}(P) are the pipes labelled
/// w(k), k < w^{-1}(j), crossing pipe i strictly left of col_P(i,j).
/// Equals Φ(P^T)(w^{-1}(j), w^{-1}(i)).
inline int phi_transpose_entry(const PipeDream& p, int i, int j) {
  const auto t = detail::reduced_trace(p, "phi_transpose_entry");
  const auto x = t.crossing(i, j);
  if (i >= j || !x) throw std::invalid_argument("phi_transpose_entry: (i,j) is not an inversion");
  const auto& w = t.wiring;
  const auto winv = w.inverse();
  const int limit = winv(j);
  const int left = detail::count_crossings_with(
      t, i, [&](int k) { return winv(k) < limit; }, [&](const CrossingRecord& y) { return y.col < x->col; });
  return x->col - left - 1;
}

/// Left-justified filling with c(k) crosses in row k, c the Lehmer code of w^{-1}.
/// Its wiring is w under the north-edge reading used here.
inline PipeDream seed_dream(const Permutation& w) {
  PipeDream p(w.n());
  const auto code = w.inverse().lehmer_code();
  for (int r = 1; r <= w.n(); ++r)
    for (int c = 1; c <= code[r - 1]; ++c) p.set(r, c, Tile::Cross);
  return p;
}

}  // namespace chutelat
