// Sanity checks for the brute-force helpers themselves, against counts
// published in the literature (OEIS A007323 by genus, A124506 by Frobenius number).

#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "oracle.hpp"

using oracle::Value;

TEST(Oracle, CountsByGenus) {
  std::map<Value, int> by_genus;
  for (const auto& gaps : oracle::all_semigroups_up_to_genus(10)) ++by_genus[gaps.size()];
  const std::vector<int> expected{1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204};
  for (Value g = 0; g < expected.size(); ++g) EXPECT_EQ(by_genus[g], expected[g]) << "genus " << g;
}

TEST(Oracle, CountsByFrobenius) {
  std::map<std::int64_t, int> by_frobenius;
  for (const auto& gaps : oracle::all_semigroups_with_gaps_below(12)) {
    ++by_frobenius[oracle::from_gap_list(gaps).frobenius()];
  }
  const std::vector<int> expected{1, 1, 2, 2, 5, 4, 11, 10, 21, 22, 51, 40};
  EXPECT_EQ(by_frobenius[-1], 1);
  for (std::size_t f = 1; f <= expected.size(); ++f) {
    EXPECT_EQ(by_frobenius[static_cast<std::int64_t>(f)], expected[f - 1]) << "F = " << f;
  }
}

TEST(Oracle, SieveAndQuotient) {
  const auto s = oracle::sieve({4, 5, 7}, 20);
  EXPECT_EQ(s.gaps(), (std::vector<Value>{1, 2, 3, 6}));
  EXPECT_EQ(oracle::quotient(s, 2).gaps(), (std::vector<Value>{1, 3}));
  EXPECT_TRUE(oracle::is_closed(s));
  EXPECT_FALSE(oracle::is_closed(oracle::from_gap_list({2})));
}
