#include "lyubgraph/connectedness.hpp"

#include <random>

#include <gtest/gtest.h>

#include "lyubgraph/error.hpp"
#include "lyubgraph/gamma.hpp"
#include "lyubgraph/sweep.hpp"
#include "oracles.hpp"

namespace lyubgraph {
namespace {

using namespace lyubgraph::testing;

TEST(ConnDimTest, Examples) {
  const auto a = conn_dim(to_abstract(a6()));
  EXPECT_EQ(a.c, 2);
  EXPECT_EQ(a.method, ConnResult::Method::graph);
  EXPECT_EQ(a.separating_threshold, 1);
  EXPECT_EQ(conn_dim(single_prime(5)).c, 5);
  EXPECT_EQ(conn_dim(to_abstract(two_planes())).c, 0);
  EXPECT_EQ(conn_dim(to_abstract(a9q())).c, 0);
}

TEST(ConnDimTest, LowDimensionIsAnError) {
  EXPECT_THROW(conn_dim(AbstractArrangement(1, {{1, 0}, {0, 1}})), DomainError);
  EXPECT_THROW(conn_dim(AbstractArrangement(0, {{0}})), DomainError);
}

TEST(ConnDimBruteforceTest, ExamplesWithWitness) {
  const auto a = conn_dim_bruteforce(to_abstract(a6()));
  EXPECT_EQ(a.c, 2);
  ASSERT_TRUE(a.cover);
  EXPECT_EQ(*a.cover, (Cover{{0}, {1, 2}}));

  const auto q = conn_dim_bruteforce(to_abstract(a9q()));
  EXPECT_EQ(q.c, 0);
  EXPECT_EQ(*q.cover, (Cover{{0}, {1, 2}}));

  EXPECT_EQ(conn_dim_bruteforce(single_prime(4)).c, 4);
}

TEST(ConnDimBruteforceTest, WorksBelowGraphRange) {
  // d = 1, two lines meeting at the origin.
  EXPECT_EQ(conn_dim_bruteforce(AbstractArrangement(1, {{1, 0}, {0, 1}})).c, 0);
  EXPECT_EQ(conn_dim_bruteforce(AbstractArrangement(1, {{1}})).c, 1);
}

TEST(ConnDimBruteforceTest, CapExceeded) {
  std::vector<std::vector<int>> m(5, std::vector<int>(5, 0));
  for (std::size_t i = 0; i < 5; ++i) m[i][i] = 3;
  const AbstractArrangement a(3, m);
  EXPECT_THROW(conn_dim_bruteforce(a, 4), CapExceeded);
  EXPECT_THROW(max_components_bruteforce(a, 0, 4), CapExceeded);
  EXPECT_NO_THROW(conn_dim_bruteforce(a, 5));
}

TEST(MaxComponentsTest, Examples) {
  const auto a = to_abstract(a6());
  EXPECT_EQ(max_components(a, 2), 3u);
  EXPECT_EQ(max_components(a, 0), 1u);
  const auto q = to_abstract(a9q());
  EXPECT_EQ(max_components(q, 0), 2u);
  EXPECT_EQ(max_components(q, 1), 3u);
  EXPECT_THROW(max_components(a, 3), DomainError);
  EXPECT_THROW(max_components(a, -1), DomainError);
}

TEST(MaxComponentsBruteforceTest, Examples) {
  const auto a = to_abstract(a6());
  EXPECT_EQ(max_components_bruteforce(a, 1), 1u);
  EXPECT_EQ(max_components_bruteforce(a, 2), 3u);
  EXPECT_EQ(max_components_bruteforce(single_prime(4), 2), 1u);
  EXPECT_THROW(max_components_bruteforce(a, 3), DomainError);
}

void expect_oracles_agree(const AbstractArrangement& a) {
  const int d = a.dim();
  const auto graph = conn_dim(a);
  const auto brute = conn_dim_bruteforce(a);
  ASSERT_EQ(graph.c, brute.c);
  EXPECT_GE(graph.c, 0);
  EXPECT_LE(graph.c, d);
  EXPECT_EQ(graph.c == d, a.size() == 1);
  if (a.size() > 1) EXPECT_LE(graph.c, d - 1);
  for (int e = 0; e <= d - 2; ++e) {
    EXPECT_EQ(max_components(a, e), max_components_bruteforce(a, e));
  }
  // c >= d - t iff Gamma_t is connected.
  for (int t = 1; t <= d - 1; ++t) {
    EXPECT_EQ(graph.c >= d - t, gamma(a, t).connected()) << "t = " << t;
  }
}

TEST(ConnOraclePropertyTest, ExhaustiveSmallCoordinate) {
  std::size_t seen = 0;
  for_each_equidimensional(6, 4, [&](const CoordinateArrangement& c) {
    const auto a = to_abstract(c);
    if (a.dim() < 2) return;
    ++seen;
    expect_oracles_agree(a);
  });
  EXPECT_GT(seen, 1000u);
}

TEST(ConnOraclePropertyTest, RandomAbstract) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 1500; ++trial) expect_oracles_agree(random_abstract(rng, 10, 8));
}

TEST(ConnOraclePropertyTest, WitnessAchievesValue) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_abstract(rng, 7, 6);
    const auto r = conn_dim_bruteforce(a);
    ASSERT_TRUE(r.cover);
    int worst = -1;
    for (auto i : r.cover->s_side)
      for (auto j : r.cover->t_side) worst = std::max(worst, a.pairdim(i, j));
    EXPECT_EQ(worst, r.c);
  }
}

}  // namespace
}  // namespace lyubgraph
