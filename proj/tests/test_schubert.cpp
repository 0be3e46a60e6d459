#include <gtest/gtest.h>

#include "chutelat/schubert.hpp"
#include "support.hpp"

using namespace chutelat;
using namespace testing_support;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}  // namespace

TEST(IntPolynomial, Basics) {
  IntPolynomial z(3);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.to_string(), "0");
  auto p = IntPolynomial::monomial({2, 1, 0}, 3);
  p.add({0, 0, 0}, -1);
  p.add({1, 0, 1}, 1);
  EXPECT_EQ(p.to_string(), "3 * x1^2 x2 + x1 x3 - 1");
  EXPECT_EQ(p.coefficient({2, 1, 0}), 3);
  p.add({2, 1, 0}, -3);
  EXPECT_EQ(p.coefficient({2, 1, 0}), 0);
  EXPECT_EQ(p.terms().count({2, 1, 0}), 0u);  // no stored zeros
  EXPECT_THROW(p.add({1, 1}, 1), std::invalid_argument);
  EXPECT_EQ(IntPolynomial::monomial({0, 0}, -2).to_string(), "-2");
}

TEST(IntPolynomial, Overflow) {
  auto p = IntPolynomial::monomial({1}, INT64_MAX);
  EXPECT_THROW(p.add({1}, 1), std::overflow_error);
}

TEST(IntPolynomial, DividedDifference) {
  // ∂1(x1^2) = x1 + x2
  const auto d = IntPolynomial::monomial({2, 0}).divided_difference(1);
  EXPECT_EQ(d.to_string(), "x1 + x2");
  // symmetric polynomials vanish
  auto sym = IntPolynomial::monomial({1, 0});
  sym.add({0, 1}, 1);
  EXPECT_TRUE(sym.divided_difference(1).is_zero());
  // x1 is not divisible by x1 - x2
  EXPECT_THROW(IntPolynomial::monomial({1, 0}).divide_by_difference(1), std::logic_error);
}

TEST(Schubert, Examples) {
  EXPECT_EQ(schubert_from_pipedreams(Permutation::identity(4)).to_string(), "1");
  EXPECT_EQ(schubert_oracle(Permutation::identity(4)).to_string(), "1");
  EXPECT_EQ(schubert_from_pipedreams(P("21")).to_string(), "x1");
  EXPECT_EQ(schubert_from_pipedreams(P("4321")).to_string(), "x1^3 x2^2 x3");
  EXPECT_EQ(schubert_oracle(P("4321")).to_string(), "x1^3 x2^2 x3");
  EXPECT_EQ(schubert_from_pipedreams(P("132")).to_string(), "x1 + x2");
  EXPECT_EQ(schubert_from_pipedreams(P("1432")).to_string(), "x1^2 x2 + x1^2 x3 + x1 x2^2 + x1 x2 x3 + x2^2 x3");
}

TEST(Schubert, AgreesWithOracleOnS5) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto ps = ChutePoset::enumerate(w);
      const auto from_dreams = generating_function(ps.elements(), n);
      EXPECT_EQ(from_dreams, schubert_oracle(w)) << w.to_string();
      EXPECT_EQ(from_dreams.evaluate_at_ones(), ps.size());
      for (const auto& [e, c] : from_dreams.terms()) EXPECT_GT(c, 0);
    }
}

TEST(Schubert, OraclePathIndependence) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto w = random_permutation(rng, 5);
    const auto a = schubert_oracle(w, DescentPath::LowestFirst);
    const auto b = schubert_oracle(w, DescentPath::HighestFirst);
    EXPECT_EQ(a, b) << w.to_string();
    for (const auto& [e, c] : a.terms()) EXPECT_GT(c, 0);
  }
}
