#include <gtest/gtest.h>

#include "puiseux/numerical_monoid.hpp"
#include "puiseux/rational.hpp"
#include "support/gen.hpp"

namespace puiseux {
namespace {

NumericalMonoid nm(std::vector<std::int64_t> g) { return NumericalMonoid::from_generators(g); }

TEST(NumericalMonoid, MinimalGenerators) {
  EXPECT_EQ(nm({2, 3, 4}).minimal_generators(), (std::vector<std::int64_t>{2, 3}));
  EXPECT_EQ(nm({1}).minimal_generators(), (std::vector<std::int64_t>{1}));
  EXPECT_EQ(nm({6, 9, 20}).minimal_generators(), (std::vector<std::int64_t>{6, 9, 20}));
  EXPECT_EQ(nm({20, 9, 6, 9, 12}).minimal_generators(), (std::vector<std::int64_t>{6, 9, 20}));
}

TEST(NumericalMonoid, Errors) {
  EXPECT_THROW(nm({}), InputError);
  EXPECT_THROW(nm({4, 6}), InputError);
  EXPECT_THROW(nm({0, 1}), InputError);
}

TEST(NumericalMonoid, AperySets) {
  EXPECT_EQ(nm({2, 3}).apery(), (std::vector<std::int64_t>{0, 3}));
  EXPECT_EQ(nm({1}).apery(), (std::vector<std::int64_t>{0}));
  EXPECT_EQ(nm({6, 9, 20}).apery(), (std::vector<std::int64_t>{0, 49, 20, 9, 40, 29}));
  EXPECT_EQ(nm({2, 3}).apery_set(3), (std::vector<std::int64_t>{0, 4, 2}));
  EXPECT_THROW(nm({6, 9, 20}).apery_set(7), InputError);
}

TEST(NumericalMonoid, FrobeniusAndConductor) {
  EXPECT_EQ(nm({2, 3}).frobenius(), 1);
  EXPECT_EQ(nm({1}).frobenius(), -1);
  EXPECT_EQ(nm({6, 9, 20}).frobenius(), 43);
  EXPECT_EQ(nm({2, 3}).conductor(), 2);
  EXPECT_EQ(nm({1}).conductor(), 0);
  EXPECT_EQ(nm({6, 9, 20}).conductor(), 44);
}

TEST(NumericalMonoid, Membership) {
  const auto n = nm({6, 9, 20});
  EXPECT_FALSE(n.contains(43));
  EXPECT_TRUE(n.contains(44));
  EXPECT_TRUE(n.contains(0));
  EXPECT_THROW(n.contains(-1), InputError);
  EXPECT_EQ(nm({3, 5}).gaps(), (std::vector<std::int64_t>{1, 2, 4, 7}));
}

// Apery membership against a DP table on [0, 4 max^2].
TEST(NumericalMonoidProperty, MatchesDynamicProgramming) {
  testing::Gen gen(1);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = gen.numerical_generators(60);
    const auto n = nm(g);
    const std::int64_t mx = *std::max_element(g.begin(), g.end());
    const auto table = testing::dp_members(g, 4 * mx * mx);
    std::int64_t last_gap = -1;
    for (std::int64_t x = 0; x < static_cast<std::int64_t>(table.size()); ++x) {
      ASSERT_EQ(n.contains(x), table[x] != 0) << "x=" << x;
      if (!table[x]) last_gap = x;
    }
    EXPECT_EQ(n.frobenius(), last_gap);
  }
}

TEST(NumericalMonoidProperty, AperyEntriesAreAtomPlusElement) {
  testing::Gen gen(2);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = nm(gen.numerical_generators(40));
    const auto& a = n.apery();
    const std::int64_t m = n.multiplicity();
    EXPECT_EQ(a[0], 0);
    for (std::size_t i = 1; i < a.size(); ++i) {
      EXPECT_EQ(a[i] % m, static_cast<std::int64_t>(i));
      bool split = false;
      for (auto g : n.minimal_generators()) {
        if (g <= a[i] && n.contains(a[i] - g)) split = true;
      }
      EXPECT_TRUE(split);
      EXPECT_FALSE(n.contains(a[i] - m));
    }
  }
}

TEST(NumericalMonoidProperty, GeneratorsAreMinimal) {
  testing::Gen gen(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = gen.numerical_generators(80);
    const auto n = nm(g);
    const auto& mins = n.minimal_generators();
    for (std::size_t i = 0; i < mins.size(); ++i) {
      std::vector<std::int64_t> rest;
      for (std::size_t j = 0; j < mins.size(); ++j) {
        if (j != i) rest.push_back(mins[j]);
      }
      if (rest.empty()) continue;
      const auto table = testing::dp_members(rest, mins[i]);
      EXPECT_FALSE(table[mins[i]]) << mins[i];
    }
    // Every input generator is reachable from the minimal ones.
    for (auto v : g) EXPECT_TRUE(n.contains(v));
  }
}

TEST(NumericalMonoidProperty, InputOrderIrrelevant) {
  testing::Gen gen(4);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = gen.numerical_generators(100);
    const auto a = nm(g);
    std::shuffle(g.begin(), g.end(), gen.engine());
    const auto b = nm(g);
    EXPECT_EQ(a.minimal_generators(), b.minimal_generators());
    EXPECT_EQ(a.apery(), b.apery());
  }
}

}  // namespace
}  // namespace puiseux
