#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <string>

#include "chutelat/io.hpp"

namespace testing_support {

using namespace chutelat;

inline Permutation random_permutation(std::mt19937& rng, int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

/// Zero off ID(w), distinct positive entries per column drawn from 1..max_entry.
inline StairTableau random_column_injective(std::mt19937& rng, const Permutation& w, int max_entry) {
  StairTableau t(w.n());
  for (int j = 2; j <= w.n(); ++j) {
    std::vector<int> rows;
    for (int i = 1; i < j; ++i)
      if (w.is_inversion(i, j)) rows.push_back(i);
    std::vector<int> pool(std::max<int>(max_entry, static_cast<int>(rows.size())));
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    for (std::size_t k = 0; k < rows.size(); ++k) t.set(rows[k], j, pool[k]);
  }
  return t;
}

inline StairTableau random_tableau(std::mt19937& rng, int n, int max_entry) {
  std::uniform_int_distribution<int> d(0, max_entry);
  StairTableau t(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) t.set(i, j, d(rng));
  return t;
}

inline json load_fixture(const std::string& name) {
  std::ifstream in(std::string(CHUTELAT_FIXTURES) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return json::parse(in);
}

}  // namespace testing_support
