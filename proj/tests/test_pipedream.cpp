#include <gtest/gtest.h>

#include <set>

#include "chutelat/poset.hpp"

using namespace chutelat;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }

PipeDream cross_at(int n, std::vector<Cell> cells) {
  PipeDream p(n);
  for (auto c : cells) p.set(c, Tile::Cross);
  return p;
}
}  // namespace

TEST(PipeDream, BoundaryHoldsElbows) {
  PipeDream p(4);
  for (int r = 1; r <= 4; ++r)
    for (int c = 1; r + c <= 5; ++c) EXPECT_EQ(p.at(r, c) == Tile::Elbow, r + c == 5);
  EXPECT_THROW(p.set(1, 4, Tile::Cross), std::invalid_argument);
  EXPECT_THROW(p.set(1, 1, Tile::Elbow), std::invalid_argument);
  EXPECT_THROW(PipeDream::from_rows({"BBE", "BE"}), std::invalid_argument);
  EXPECT_THROW(PipeDream::from_rows({"EB", "E"}), std::invalid_argument);
  EXPECT_THROW(PipeDream::from_rows({"BX", "E"}), std::invalid_argument);
}

TEST(PipeDream, RowsRoundTrip) {
  const auto p = PipeDream::from_rows({"CBE", "CE", "E"});
  EXPECT_EQ(p.rows(), (std::vector<std::string>{"CBE", "CE", "E"}));
  EXPECT_EQ(PipeDream::from_rows(p.rows()), p);
  EXPECT_EQ(p.cross_count(1), 1);
  EXPECT_EQ(p.cross_count(2), 1);
  EXPECT_EQ(p.cross_count(3), 0);
}

TEST(Trace, EmptyDreamIsIdentity) {
  for (int n = 1; n <= 6; ++n) {
    const auto t = trace(PipeDream(n));
    EXPECT_TRUE(t.wiring.is_identity());
    EXPECT_TRUE(t.crossings.empty());
  }
}

TEST(Trace, SingleCross) {
  const auto t = trace(cross_at(2, {{1, 1}}));
  EXPECT_EQ(t.wiring, P("21"));
  ASSERT_EQ(t.crossings.size(), 1u);
  EXPECT_EQ(t.crossings[0].pipe_lo, 1);
  EXPECT_EQ(t.crossings[0].pipe_hi, 2);
  EXPECT_EQ(t.crossings[0].row, 1);
  EXPECT_EQ(t.crossings[0].col, 1);
}

TEST(Trace, TotalOnArbitraryFillings) {
  // every cross/bump filling of the 3-staircase interior traces to some permutation
  const std::vector<Cell> interior{{1, 1}, {1, 2}, {2, 1}};
  for (int mask = 0; mask < 8; ++mask) {
    PipeDream p(3);
    for (int b = 0; b < 3; ++b)
      if (mask >> b & 1) p.set(interior[b], Tile::Cross);
    const auto t = trace(p);
    EXPECT_EQ(t.wiring.n(), 3);
  }
}

TEST(Reduced, Examples) {
  EXPECT_TRUE(is_reduced(PipeDream(5)));
  const auto twice = cross_at(3, {{1, 2}, {2, 1}});
  EXPECT_FALSE(is_reduced(twice));
  EXPECT_THROW(theta(twice), std::invalid_argument);
}

TEST(Reduced, CrossingIffInversion) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto ps = ChutePoset::enumerate(w);
      for (const auto& p : ps.elements()) {
        const auto t = trace(p);
        ASSERT_TRUE(is_reduced(t));
        ASSERT_EQ(t.wiring, w);
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j) EXPECT_EQ(t.crossing(i, j).has_value(), w.is_inversion(i, j));
      }
    }
}

TEST(Reduced, TwoPipeDreamsOfSevenPipes) {
  const auto ps = ChutePoset::enumerate(P("2761543"));
  EXPECT_EQ(ps.size(), 139);
  for (const auto& p : ps.elements()) EXPECT_EQ(wiring(p), P("2761543"));
}

TEST(Theta, Examples) {
  const auto t = theta(cross_at(2, {{1, 1}}));
  EXPECT_EQ(t(1, 2), 1);
  // some dream of 361542 has pipes 5 and 6 crossing in row 3
  const auto ps = ChutePoset::enumerate(P("361542"));
  bool found = false;
  for (int k = 0; k < ps.size(); ++k) found = found || ps.theta_of(k)(5, 6) == 3;
  EXPECT_TRUE(found);
}

TEST(Theta, InverseRoundTrip) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto ps = ChutePoset::enumerate(w);
      for (int k = 0; k < ps.size(); ++k) EXPECT_EQ(ps.theta_inverse(theta(ps.element(k))), k);
    }
}

TEST(Transpose, Examples) {
  EXPECT_EQ(transpose(PipeDream(4)), PipeDream(4));
  const auto p = cross_at(2, {{1, 1}});
  EXPECT_EQ(transpose(p), p);
  const auto q = cross_at(4, {{1, 2}, {2, 1}, {1, 1}});
  for (int r = 1; r <= 4; ++r)
    for (int c = 1; r + c <= 5; ++c) EXPECT_EQ(transpose(q).at(r, c), q.at(c, r));
}

TEST(Transpose, BijectionOntoInverse) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto ps = ChutePoset::enumerate(w);
      const auto inv = ChutePoset::enumerate(w.inverse());
      ASSERT_EQ(ps.size(), inv.size());
      std::set<int> image;
      for (const auto& p : ps.elements()) {
        EXPECT_EQ(transpose(transpose(p)), p);
        EXPECT_EQ(wiring(transpose(p)), w.inverse());
        auto k = inv.index_of(transpose(p));
        ASSERT_TRUE(k.has_value());
        image.insert(*k);
      }
      EXPECT_EQ(static_cast<int>(image.size()), ps.size());
    }
}

TEST(HatDelete, EmptyDream) {
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(hat_delete(PipeDream(n)), PipeDream(n - 1));
}

TEST(HatDelete, DeletesLastColumnOfTheta) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto ps = ChutePoset::enumerate(w);
      for (int k = 0; k < ps.size(); ++k) {
        const auto h = hat_delete(ps.element(k));
        EXPECT_EQ(wiring(h), w.hat());
        EXPECT_TRUE(is_reduced(h));
        EXPECT_EQ(theta(h), ps.theta_of(k).restrict(n - 1)) << w.to_string();
      }
    }
}

TEST(HatDelete, EightPipes) {
  const auto big = ChutePoset::enumerate(P("41386752"));
  const auto small = ChutePoset::enumerate(P("4136752"));
  for (const auto& p : big.elements()) EXPECT_TRUE(small.index_of(hat_delete(p)).has_value());
}

TEST(HatDelete, RejectsNonReduced) {
  EXPECT_THROW(hat_delete(cross_at(3, {{1, 2}, {2, 1}})), std::invalid_argument);
}

TEST(Triforce, Examples) {
  EXPECT_EQ(triforce_embed(PipeDream(1)), PipeDream(2));
  const auto ps = ChutePoset::enumerate(P("361542"));
  for (const auto& p : ps.elements()) EXPECT_EQ(wiring(triforce_embed(p)).to_string(), "1,2,3,4,5,6,11,9,8,12,7,10");
}

TEST(Triforce, WiringAndInjectivity) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto ps = ChutePoset::enumerate(w);
      std::set<std::string> keys;
      for (const auto& p : ps.elements()) {
        const auto t = triforce_embed(p);
        EXPECT_EQ(wiring(t), w.triforce());
        EXPECT_TRUE(is_reduced(t));
        keys.insert(t.key());
      }
      EXPECT_EQ(static_cast<int>(keys.size()), ps.size());
    }
}

TEST(PhiFormulas, SmallCases) {
  const auto p = cross_at(2, {{1, 1}});
  EXPECT_EQ(phi_transpose_entry(p, 1, 2), 0);
  EXPECT_EQ(phi_entry_by_rows(p, 1, 2), 0);
  EXPECT_THROW(phi_transpose_entry(PipeDream(2), 1, 2), std::invalid_argument);
}

TEST(PhiFormulas, AgreeWithLehmerForm) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto ps = ChutePoset::enumerate(w);
      const auto winv = w.inverse();
      for (const auto& p : ps.elements()) {
        const auto l = phi(p);
        const auto lt = phi(transpose(p));
        for (auto [i, j] : w.inversions()) {
          EXPECT_EQ(phi_entry_by_rows(p, i, j), l.values(i, j));
          EXPECT_EQ(phi_transpose_entry(p, i, j), lt.values(winv(j), winv(i))) << w.to_string();
        }
      }
    }
}

TEST(Seed, WiringMatchesForAllOfS6) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto s = seed_dream(w);
      EXPECT_EQ(wiring(s), w);
      EXPECT_TRUE(is_reduced(s));
    }
}
