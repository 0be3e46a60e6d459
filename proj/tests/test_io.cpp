#include <gtest/gtest.h>

#include "chutelat/io.hpp"
#include "support.hpp"

using namespace chutelat;
using namespace testing_support;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}  // namespace

TEST(Json, DreamRoundTrip) {
  const auto ps = ChutePoset::enumerate(P("361542"));
  for (const auto& p : ps.elements()) {
    const auto j = to_json(p);
    EXPECT_EQ(j["n"], 6);
    EXPECT_EQ(dream_from_json(json::parse(j.dump())), p);
  }
  EXPECT_THROW(dream_from_json(json{{"n", 2}}), std::invalid_argument);
  EXPECT_THROW(dream_from_json(json{{"n", 3}, {"rows", {"BE", "E"}}}), std::invalid_argument);
  EXPECT_THROW(dream_from_json(json{{"n", 2}, {"rows", {"CC", "E"}}}), std::invalid_argument);
}

TEST(Json, TableauLayout) {
  const auto fx = load_fixture("tableau_361542.json");
  const auto doc = tableau_from_json(fx);
  EXPECT_EQ(doc.w, P("361542"));
  EXPECT_EQ(to_json(doc.tableau, doc.w), fx);
  EXPECT_EQ(doc.tableau(2, 6), 2);
  EXPECT_EQ(fx["rows"][0].size(), 5u);
  EXPECT_EQ(fx["rows"][4].size(), 1u);
  EXPECT_THROW(tableau_from_json(json{{"n", 3}, {"w", "12"}, {"rows", json::array()}}), std::invalid_argument);
}

TEST(Json, LehmerUsesNullOffDiagram) {
  const auto w = P("361542");
  const auto l = lehmer_form(tableau_from_json(load_fixture("tableau_361542.json")).tableau, w);
  const auto j = to_json(l);
  EXPECT_TRUE(j["rows"][0][2].is_null());   // (1,4) is not an inversion
  EXPECT_FALSE(j["rows"][0][4].is_null());  // (1,6) is
  const auto back = tableau_from_json(j);
  EXPECT_EQ(back.tableau, l.values);
}

TEST(Json, MoveRoundTrip) {
  const ChuteMove m{{1, 3, 2, 5}, 3, 5};
  const auto j = to_json(m);
  EXPECT_EQ(j.dump(), R"({"rect":[1,3,2,5],"pipes":[3,5]})");
  EXPECT_EQ(move_from_json(j), m);
  EXPECT_THROW(move_from_json(json{{"rect", {1, 2}}, {"pipes", {1, 2}}}), std::invalid_argument);
}

TEST(Render, Ascii) {
  const auto p = PipeDream::from_rows({"CBE", "BE", "E"});
  EXPECT_EQ(render_ascii(p), "   2 1 3\n 1 + ) J\n 2 ) J\n 3 J\n");
  // wide labels get wider cells
  const auto art = render_ascii(seed_dream(P("361542").triforce()));
  EXPECT_NE(art.find(" 11"), std::string::npos);
}

TEST(Dot, Stable) {
  const auto ps = ChutePoset::enumerate(P("2143"));
  const auto dot = to_dot(ps, false);
  EXPECT_EQ(dot, to_dot(ChutePoset::enumerate(P("2143")), false));
  EXPECT_NE(dot.find("digraph \"PD(2143)\""), std::string::npos);
  int edges = 0;
  for (int k = 0; k < ps.size(); ++k) edges += static_cast<int>(ps.hasse_up(k).size());
  int arrows = 0;
  for (std::size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; ++pos) ++arrows;
  EXPECT_EQ(arrows, edges);
  const auto tips = to_dot(ps, true);
  EXPECT_NE(tips.find("tooltip=\"{\\\"n\\\":4"), std::string::npos);
}
