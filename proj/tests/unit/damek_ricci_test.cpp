#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hhm/damek_ricci.hpp"
#include "hhm/errors.hpp"

namespace {

using hhm::LowerBoundCase;

TEST(IrreducibleModuleDim, TableAndPeriodicity) {
  const std::uint64_t base[] = {2, 4, 4, 8, 8, 8, 8, 16};
  for (int m = 1; m <= 8; ++m) EXPECT_EQ(hhm::irreducible_module_dim(m), base[m - 1]);
  EXPECT_EQ(hhm::irreducible_module_dim(9), 32u);
  for (int m = 1; m <= 40; ++m) {
    EXPECT_EQ(hhm::irreducible_module_dim(m + 8), 16 * hhm::irreducible_module_dim(m));
  }
  for (int m = 9; m <= 200; ++m) EXPECT_GT(hhm::irreducible_module_dim(m), 2u * m);
}

TEST(IsAdmissible, Examples) {
  EXPECT_TRUE(hhm::is_admissible(2, 1));
  EXPECT_FALSE(hhm::is_admissible(6, 3));
  EXPECT_TRUE(hhm::is_admissible(16, 8));
  EXPECT_FALSE(hhm::is_admissible(18, 9));
  EXPECT_TRUE(hhm::is_admissible(32, 9));
}

TEST(DrSpace, Construction) {
  const auto ch2 = hhm::dr_space(2, 1);
  EXPECT_EQ(ch2.n, 4);
  EXPECT_EQ(ch2.model.q(), 2.0);
  EXPECT_EQ(hhm::einstein_constant(ch2.model).kappa, -1.5);
  const auto seven = hhm::dr_space(4, 2);
  EXPECT_EQ(seven.n, 7);
  EXPECT_EQ(seven.model.q(), 4.0);
  const auto thirteen = hhm::dr_space(8, 4);
  EXPECT_EQ(thirteen.n, 13);
  EXPECT_EQ(thirteen.model.q(), 8.0);
  EXPECT_THROW(hhm::dr_space(6, 3), hhm::NotAdmissible);
}

TEST(DrSpace, DensityMatchesHeisenbergForm) {
  for (auto [k, m] : {std::pair{2, 1}, {4, 2}, {8, 3}, {16, 8}}) {
    const auto s = hhm::dr_space(k, m);
    for (double r : {0.5, 2.0, 7.0}) {
      const double expected = std::pow(2.0, k + m) * std::pow(std::sinh(r / 2), k + m) * std::pow(std::cosh(r / 2), m);
      EXPECT_NEAR(hhm::theta(s.model, r) / expected, 1.0, 1e-12);
    }
  }
}

TEST(DrNormalizedEntropy, Values) {
  const double s2 = std::numbers::sqrt2;
  EXPECT_NEAR(hhm::dr_normalized_entropy(2, 1), 2 * s2, 1e-14);
  EXPECT_NEAR(hhm::dr_normalized_entropy(4, 2), 4 * s2, 1e-14);
  EXPECT_NEAR(hhm::dr_normalized_entropy(8, 3), 7 * std::sqrt(11.0 / 5.0), 1e-13);
  const auto mid = hhm::describe_space(hhm::dr_space(8, 3));
  EXPECT_EQ(mid.bounds.tag, hhm::BoundTag::Interior);
  EXPECT_THROW(hhm::dr_normalized_entropy(6, 3), hhm::NotAdmissible);
}

TEST(DrNormalizedEntropy, AgreesWithNormalizationPipeline) {
  for (const auto& e : hhm::enumerate_spaces(16, 3)) {
    const auto& s = e.space;
    const auto norm = hhm::normalize_ricci(s.model);
    EXPECT_NEAR(norm.model.q() / e.normalized_entropy, 1.0, 1e-12);
    EXPECT_NEAR(hhm::entropy_of_normalized(norm.model.ell(), s.n) / e.normalized_entropy, 1.0, 1e-12);
    EXPECT_EQ(hhm::einstein_constant(s.model).kappa, -(s.m + s.k / 4.0));
    const double c2 = norm.scale.value() * norm.scale.value();
    EXPECT_NEAR(c2, (s.m + s.k / 4.0) / (s.k + s.m), 1e-14);
  }
}

TEST(EnumerateLowerBound, FourCases) {
  const std::vector<LowerBoundCase> expected = {{1, 2}, {2, 4}, {4, 8}, {8, 16}};
  EXPECT_EQ(hhm::enumerate_lower_bound(8), expected);
  EXPECT_EQ(hhm::enumerate_lower_bound(64), expected);
  EXPECT_EQ(hhm::enumerate_lower_bound(1000), expected);
  EXPECT_THROW(hhm::enumerate_lower_bound(3), hhm::DomainError);
}

TEST(EnumerateSpaces, SmallTables) {
  const auto two = hhm::enumerate_spaces(2, 1);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].space.k, 2);
  EXPECT_EQ(two[0].space.m, 1);
  EXPECT_EQ(two[1].space.k, 4);
  EXPECT_EQ(two[1].space.m, 2);
  const auto m1 = hhm::enumerate_spaces(1, 3);
  ASSERT_EQ(m1.size(), 3u);
  for (int j = 0; j < 3; ++j) EXPECT_EQ(m1[j].space.k, 2 * (j + 1));
  EXPECT_THROW(hhm::enumerate_spaces(0, 1), hhm::DomainError);
}

TEST(EnumerateSpaces, BoundsHoldAndEqualityIffKEqualsTwoM) {
  for (const auto& e : hhm::enumerate_spaces(24, 4)) {
    const int n = e.space.n;
    EXPECT_GE(e.normalized_entropy, hhm::lower_entropy_bound(n) - 1e-12);
    EXPECT_LE(e.normalized_entropy, hhm::upper_entropy_bound(n) + 1e-12);
    EXPECT_FALSE(e.bounds.real_hyperbolic());
    const bool at_lower = e.bounds.tag == hhm::BoundTag::AtLower;
    EXPECT_EQ(at_lower, e.space.k == 2 * e.space.m) << e.space.k << "," << e.space.m;
  }
}

}  // namespace
