#include <gtest/gtest.h>

#include "chutelat/perm.hpp"

using namespace chutelat;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}  // namespace

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({1, 1, 3}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({1, 4, 2}), std::invalid_argument);
  EXPECT_THROW(P("12a"), std::invalid_argument);
}

TEST(Permutation, InverseExamples) {
  EXPECT_EQ(Permutation::identity(6).inverse(), Permutation::identity(6));
  EXPECT_EQ(P("4321").inverse(), P("4321"));
  const auto w = P("361542");
  EXPECT_TRUE(w.compose(w.inverse()).is_identity());
  EXPECT_TRUE(w.inverse().compose(w).is_identity());
  for (int pos = 1; pos <= 6; ++pos) EXPECT_EQ(w.inverse()(w(pos)), pos);
}

TEST(Permutation, InversionsExamples) {
  EXPECT_TRUE(Permutation::identity(5).inversions().empty());
  EXPECT_EQ(P("21").inversions(), (std::vector<Box>{{1, 2}}));
  const auto w = P("361542");
  EXPECT_TRUE(w.is_inversion(1, 6));
  EXPECT_TRUE(w.is_inversion(4, 6));
  EXPECT_FALSE(w.is_inversion(1, 4));
}

TEST(Permutation, InversionsMatchDefinition) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto winv = w.inverse();
      std::vector<Box> expect;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          if (winv(i) > winv(j)) expect.push_back({i, j});
      EXPECT_EQ(w.inversions(), expect) << w.to_string();
      EXPECT_EQ(w.length(), static_cast<int>(expect.size()));
    }
}

TEST(Permutation, InversionsTransferToInverse) {
  for (const auto& w : all_permutations(5)) {
    const auto v = w.inverse();
    EXPECT_EQ(w.inversions().size(), v.inversions().size());
    for (auto [i, j] : w.inversions()) {
      const int a = v(j), b = v(i);
      EXPECT_LT(a, b);
      EXPECT_TRUE(v.is_inversion(a, b)) << w.to_string();
    }
  }
}

TEST(Permutation, LehmerCode) {
  EXPECT_EQ(Permutation::identity(4).lehmer_code(), (std::vector<int>{0, 0, 0, 0}));
  EXPECT_EQ(P("4321").lehmer_code(), (std::vector<int>{3, 2, 1, 0}));
  EXPECT_EQ(P("2143").lehmer_code(), (std::vector<int>{1, 0, 1, 0}));
  for (const auto& w : all_permutations(5)) {
    int total = 0;
    for (int c : w.lehmer_code()) total += c;
    EXPECT_EQ(total, w.length());
  }
}

TEST(Permutation, Hat) {
  EXPECT_EQ(P("41386752").hat(), P("4136752"));
  EXPECT_EQ(Permutation::identity(5).hat(), Permutation::identity(4));
  EXPECT_EQ(P("4321").hat(), P("321"));
  EXPECT_THROW(Permutation::identity(1).hat(), std::invalid_argument);
}

TEST(Permutation, Triforce) {
  EXPECT_EQ(P("361542").triforce().word(), (std::vector<int>{1, 2, 3, 4, 5, 6, 11, 9, 8, 12, 7, 10}));
  EXPECT_EQ(P("1").triforce(), P("12"));
  EXPECT_EQ(P("21").triforce(), P("1243"));
}

TEST(Permutation, TriforceRecoversW) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto t = w.triforce();
      ASSERT_EQ(t.n(), 2 * n);
      for (int i = 1; i <= n; ++i) EXPECT_EQ(t(i), i);
      std::vector<int> back(n);
      for (int i = 1; i <= n; ++i) back[i - 1] = 2 * n + 1 - t(2 * n + 1 - i);
      EXPECT_EQ(Permutation(back), w);
    }
}

TEST(Permutation, TextForms) {
  EXPECT_EQ(P("361542").to_string(), "361542");
  const auto big = P("361542").triforce();
  EXPECT_EQ(big.to_string(), "1,2,3,4,5,6,11,9,8,12,7,10");
  EXPECT_EQ(Permutation::parse(big.to_string()), big);
  EXPECT_EQ(P("1,2"), P("12"));
  EXPECT_THROW(P(""), std::invalid_argument);
  EXPECT_THROW(P("1,,2"), std::invalid_argument);
  // degree is explicit
  EXPECT_NE(P("213"), P("2134"));
}

TEST(Permutation, InverseIsInvolution) {
  for (const auto& w : all_permutations(5)) EXPECT_EQ(w.inverse().inverse(), w);
}

TEST(Permutation, RestrictValues) {
  EXPECT_EQ(P("41386752").restrict_values(5), P("41352"));
  EXPECT_EQ(P("361542").restrict_values(6), P("361542"));
}
