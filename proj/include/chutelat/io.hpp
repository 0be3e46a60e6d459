#pragma once

// Text and JSON forms: pipe dreams, tableaux, chute moves, DOT and ASCII output.
//
// ASCII rendering uses one glyph per cell: '+' cross, ')' bump, 'J' elbow.
// The header line lists the wiring above the columns; rows are prefixed by the
// label of the pipe entering from the west.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "chutelat/chute.hpp"
#include "chutelat/pipedream.hpp"
#include "chutelat/poset.hpp"
#include "chutelat/tableaux.hpp"

namespace chutelat {

using json = nlohmann::ordered_json;

inline json to_json(const PipeDream& p) { return json{{"n", p.n()}, {"rows", p.rows()}}; }

inline PipeDream dream_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("rows")) throw std::invalid_argument("pipe dream JSON needs \"n\" and \"rows\"");
  const int n = j.at("n").get<int>();
  auto rows = j.at("rows").get<std::vector<std::string>>();
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("pipe dream JSON: rows must have n entries");
  return PipeDream::from_rows(rows);
}

/// rows[i-1] lists entries (i, i+1) .. (i, n); row 1 (the bottom row) first.
inline json to_json(const StairTableau& t, const Permutation& w) {
  json rows = json::array();
  for (int i = 1; i < t.n(); ++i) {
    json row = json::array();
    for (int j = i + 1; j <= t.n(); ++j) row.push_back(t(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"n", t.n()}, {"w", w.to_string()}, {"rows", std::move(rows)}};
}

/// Same layout as an inversions tableau, with null at boxes outside ID(w).
inline json to_json(const LehmerTableau& l) {
  json rows = json::array();
  const int n = l.w.n();
  for (int i = 1; i < n; ++i) {
    json row = json::array();
    for (int j = i + 1; j <= n; ++j) {
      if (l.w.is_inversion(i, j)) row.push_back(l.values(i, j));
      else row.push_back(nullptr);
    }
    rows.push_back(std::move(row));
  }
  return json{{"n", n}, {"w", l.w.to_string()}, {"rows", std::move(rows)}};
}

struct TableauDocument {
  Permutation w;
  StairTableau tableau;  // nulls read as 0
};

inline TableauDocument tableau_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  auto w = Permutation::parse(j.at("w").get<std::string>());
  if (w.n() != n) throw std::invalid_argument("tableau JSON: w has the wrong degree");
  StairTableau t(n);
  const auto& rows = j.at("rows");
  if (static_cast<int>(rows.size()) != n - 1) throw std::invalid_argument("tableau JSON: expected n-1 rows");
  for (int i = 1; i < n; ++i) {
    const auto& row = rows.at(i - 1);
    if (static_cast<int>(row.size()) != n - i) throw std::invalid_argument("tableau JSON: row " + std::to_string(i) + " has wrong length");
    for (int j2 = i + 1; j2 <= n; ++j2) {
      const auto& v = row.at(j2 - i - 1);
      t.set(i, j2, v.is_null() ? 0 : v.get<int>());
    }
  }
  return {w, t};
}

inline json to_json(const ChuteMove& m) {
  return json{{"rect", {m.rect.top, m.rect.bottom, m.rect.left, m.rect.right}}, {"pipes", {m.pipe_lo, m.pipe_hi}}};
}

inline ChuteMove move_from_json(const json& j) {
  const auto r = j.at("rect").get<std::vector<int>>();
  const auto p = j.at("pipes").get<std::vector<int>>();
  if (r.size() != 4 || p.size() != 2) throw std::invalid_argument("chute move JSON: rect needs 4 ints, pipes 2");
  return {{r[0], r[1], r[2], r[3]}, p[0], p[1]};
}

inline json to_json(const BoxMultiset& m) {
  json out = json::array();
  for (const auto& [b, k] : m) out.push_back(json{{"box", {b.i, b.j}}, {"mult", k}});
  return out;
}

inline std::string render_ascii(const PipeDream& p) {
  const auto w = wiring(p);
  const int width = p.n() > 9 ? 3 : 2;
  auto pad = [&](const std::string& s) { return std::string(width - std::min<int>(width, static_cast<int>(s.size())), ' ') + s; };
  std::ostringstream os;
  os << pad("");
  for (int c = 1; c <= p.n(); ++c) os << pad(std::to_string(w(c)));
  os << '\n';
  for (int r = 1; r <= p.n(); ++r) {
    os << pad(std::to_string(r));
    for (int c = 1; r + c <= p.n() + 1; ++c) {
      const char g = p.at(r, c) == Tile::Cross ? '+' : p.at(r, c) == Tile::Bump ? ')' : 'J';
      os << pad(std::string(1, g));
    }
    os << '\n';
  }
  return os.str();
}

/// Hasse diagram in DOT. Nodes are canonical indices; edges carry the pipe pair.
inline std::string to_dot(const ChutePoset& ps, bool tooltips = true) {
  std::ostringstream os;
  os << "digraph \"PD(" << ps.w().to_string() << ")\" {\n";
  os << "  rankdir=BT;\n";
  for (int k = 0; k < ps.size(); ++k) {
    os << "  n" << k << " [label=\"" << k << "\"";
    if (tooltips) {
      std::string tip = to_json(ps.element(k)).dump();
      std::string esc;
      for (char ch : tip) {
        if (ch == '"' || ch == '\\') esc.push_back('\\');
        esc.push_back(ch);
      }
      os << ", tooltip=\"" << esc << "\"";
    }
    os << "];\n";
  }
  for (int k = 0; k < ps.size(); ++k)
    for (const auto& e : ps.hasse_up(k))
      os << "  n" << k << " -> n" << e.to << " [label=\"(" << e.move.pipe_lo << "," << e.move.pipe_hi << ")\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace chutelat
