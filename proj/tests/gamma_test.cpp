#include "lyubgraph/gamma.hpp"

#include <random>

#include <gtest/gtest.h>

#include "lyubgraph/error.hpp"
#include "lyubgraph/sweep.hpp"
#include "oracles.hpp"

namespace lyubgraph {
namespace {

using namespace lyubgraph::testing;

TEST(GammaTest, RunningExample) {
  const auto a = to_abstract(a6());
  const auto g1 = gamma(a, 1);
  EXPECT_EQ(g1.edge_count(), 0u);
  EXPECT_EQ(component_count(g1), 3u);
  const auto g2 = gamma(a, 2);
  EXPECT_EQ(g2.edge_count(), 3u);
  EXPECT_EQ(component_count(g2), 1u);
  EXPECT_EQ(component_count(gamma(a, 3)), 1u);
}

TEST(GammaTest, SinglePrime) {
  for (int t = 1; t <= 4; ++t) EXPECT_EQ(gamma(single_prime(5), t).component_count(), 1u);
}

TEST(GammaTest, TwoPlanesDisconnected) {
  EXPECT_EQ(gamma(to_abstract(two_planes()), 1).component_count(), 2u);
}

TEST(GammaTest, RangeErrors) {
  const auto a = to_abstract(a6());
  EXPECT_THROW(gamma(a, 0), DomainError);
  EXPECT_THROW(gamma(a, 4), DomainError);
  EXPECT_THROW(gamma(AbstractArrangement(1, {{1}}), 1), DomainError);
  EXPECT_THROW(gamma_profile(AbstractArrangement(1, {{1, 0}, {0, 1}})), DomainError);
}

TEST(GammaProfileTest, Examples) {
  EXPECT_EQ(gamma_profile(to_abstract(a6())), (std::vector<std::size_t>{3, 1, 1}));
  EXPECT_EQ(gamma_profile(to_abstract(three_hyperplanes())), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(gamma_profile(to_abstract(a9q())), (std::vector<std::size_t>{3, 2}));
}

TEST(GammaTest, CanonicalComponentLabels) {
  // Components {0,2} and {1,3}: labels are the smallest members.
  const AbstractArrangement a(3, {{3, 0, 2, 0}, {0, 3, 0, 2}, {2, 0, 3, 0}, {0, 2, 0, 3}});
  const auto g = gamma(a, 1);
  EXPECT_EQ(g.component_label(2), 0u);
  EXPECT_EQ(g.component_label(3), 1u);
  EXPECT_EQ(g.components(),
            (std::vector<std::vector<std::size_t>>{{0, 2}, {1, 3}}));
}

TEST(GammaPropertyTest, UnionFindMatchesDfs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = random_abstract(rng, 9, 9);
    EXPECT_EQ(gamma_profile(a), dfs_profile(a));
  }
}

TEST(GammaPropertyTest, MonotoneInThreshold) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_abstract(rng, 8, 7);
    for (int t = 1; t < a.dim() - 1; ++t) {
      const auto lo = gamma(a, t);
      const auto hi = gamma(a, t + 1);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
          if (lo.adjacent(i, j)) EXPECT_TRUE(hi.adjacent(i, j));
      EXPECT_GE(lo.component_count(), hi.component_count());
      if (lo.connected()) EXPECT_TRUE(hi.connected());
    }
  }
}

TEST(GammaPropertyTest, CoordinateEdgeRuleIsUnionSize) {
  RandomArrangementGenerator gen(5, 10, 6);
  for (int trial = 0; trial < 500; ++trial) {
    const auto c = gen.next();
    const auto a = to_abstract(c);
    if (a.dim() < 2) continue;
    const auto h = c.height();
    for (int t = 1; t <= a.dim() - 1; ++t) {
      const auto g = gamma(a, t);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
          EXPECT_EQ(g.adjacent(i, j),
                    c.prime(i).union_cardinality(c.prime(j)) <= h + static_cast<std::size_t>(t));
    }
  }
}

}  // namespace
}  // namespace lyubgraph
