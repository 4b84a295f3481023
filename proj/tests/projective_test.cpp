#include "lyubgraph/projective.hpp"

#include <random>

#include <gtest/gtest.h>

#include "lyubgraph/error.hpp"
#include "lyubgraph/lyubeznik.hpp"

namespace lyubgraph {
namespace {

ProjectiveVariety surfaces_at_point() { return ProjectiveVariety(2, {{2, 0}, {0, 2}}); }

ProjectiveVariety random_variety(std::mt19937_64& rng, int max_d, int max_s) {
  const int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_d));
  const auto s = 1 + static_cast<std::size_t>(rng() % static_cast<unsigned>(max_s));
  std::vector<std::vector<int>> m(s, std::vector<int>(s, d));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      m[i][j] = m[j][i] = static_cast<int>(rng() % static_cast<unsigned>(d + 1)) - 1;
  return ProjectiveVariety(d, m);
}

TEST(ProjectiveVarietyTest, Validation) {
  EXPECT_THROW(ProjectiveVariety(2, {{2, -2}, {-2, 2}}), InputError);
  EXPECT_THROW(ProjectiveVariety(2, {{2, 2}, {2, 2}}), InputError);
  EXPECT_THROW(ProjectiveVariety(2, {{2, 0}, {1, 2}}), InputError);
  EXPECT_THROW(ProjectiveVariety(2, {{1, 0}, {0, 2}}), InputError);
  EXPECT_EQ(surfaces_at_point().labels(), (std::vector<std::string>{"Z1", "Z2"}));
}

TEST(GammaProjTest, Examples) {
  const auto x = surfaces_at_point();
  EXPECT_EQ(gamma_proj(x, 1).component_count(), 2u);
  EXPECT_EQ(gamma_proj(x, 2).component_count(), 1u);
  const ProjectiveVariety single(3, {{3}});
  for (int t = 1; t <= 3; ++t) EXPECT_EQ(gamma_proj(single, t).component_count(), 1u);
  EXPECT_THROW(gamma_proj(x, 3), DomainError);
  EXPECT_THROW(gamma_proj(x, 0), DomainError);
}

TEST(ConeTest, Examples) {
  const auto a = cone(surfaces_at_point());
  EXPECT_EQ(a.dim(), 3);
  EXPECT_EQ(a.matrix(), (std::vector<std::vector<int>>{{3, 1}, {1, 3}}));
  const auto curves = cone(ProjectiveVariety(1, {{1, -1}, {-1, 1}}));
  EXPECT_EQ(curves.dim(), 2);
  EXPECT_EQ(curves.pairdim(0, 1), 0);
  EXPECT_EQ(cone(ProjectiveVariety(4, {{4}})).matrix(), (std::vector<std::vector<int>>{{5}}));
}

TEST(Lambda12ProjTest, Examples) {
  EXPECT_EQ(lambda12_proj(surfaces_at_point()), 1);
  EXPECT_EQ(lambda12(cone(surfaces_at_point())), 1);
  EXPECT_EQ(lambda12_proj(ProjectiveVariety(2, {{2}})), 0);
  EXPECT_EQ(lambda12_proj(ProjectiveVariety(2, {{2, 1}, {1, 2}})), 0);
  EXPECT_THROW(lambda12_proj(ProjectiveVariety(1, {{1}})), DomainError);
}

TEST(SuperdiagProjTest, Examples) {
  // Three planes in P^5 meeting pairwise in points: d < 3.
  EXPECT_THROW(superdiag_lower_bounds_proj(
                   ProjectiveVariety(2, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})),
               DomainError);
  // Profile #Gamma_1 = 3, #Gamma_2 = #Gamma_3 = 1.
  const ProjectiveVariety x(3, {{3, 1, 1}, {1, 3, 1}, {1, 1, 3}});
  ASSERT_EQ(gamma_profile_proj(x), (std::vector<std::size_t>{3, 1, 1}));
  EXPECT_EQ(superdiag_lower_bounds_proj(x), (std::vector<int>{2}));
  EXPECT_EQ(superdiag_lower_bounds_proj(ProjectiveVariety(3, {{3}})), (std::vector<int>{0}));
}

TEST(ProjectivePropertyTest, ConeCorrespondence) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto x = random_variety(rng, 7, 6);
    const auto a = cone(x);
    for (int t = 1; t <= x.dim(); ++t) {
      EXPECT_EQ(gamma_proj(x, t).component_count(), gamma(a, t).component_count());
    }
    if (x.dim() >= 2) EXPECT_EQ(lambda12_proj(x), lambda12(a));
    if (x.dim() >= 3) {
      const auto proj = superdiag_lower_bounds_proj(x);
      const auto on_cone = superdiag_lower_bounds(a);
      ASSERT_EQ(proj.size() + 1, on_cone.size());
      for (std::size_t k = 0; k < proj.size(); ++k) EXPECT_EQ(proj[k], on_cone[k + 1]);
    }
    EXPECT_TRUE(analyze_projective(x).all_checks_passed());
  }
}

}  // namespace
}  // namespace lyubgraph
