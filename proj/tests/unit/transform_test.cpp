#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hhm/errors.hpp"
#include "hhm/special.hpp"
#include "hhm/transform.hpp"

namespace {

using hhm::ModelParams;
constexpr double kPi = std::numbers::pi;

// Composite Simpson on [a, b] with an even number of panels.
template <class F>
double simpson(F f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3;
}

TEST(Quadrature, ClosedForms) {
  const auto sq = hhm::quadrature([](double x) { return x * x; }, 0.0, 1.0, 1e-12);
  EXPECT_NEAR(sq.value, 1.0 / 3.0, 1e-15);
  EXPECT_GE(sq.error, 0.0);
  const double r = 2.0;
  const auto sh = hhm::quadrature([](double t) { return std::pow(std::sinh(t), 2); }, 0.0, r, 1e-13);
  EXPECT_NEAR(sh.value, std::sinh(2 * r) / 4 - r / 2, 1e-12);
  const auto zero = hhm::quadrature([](double) { return 0.0; }, 0.0, 1.0, 1e-12);
  EXPECT_EQ(zero.value, 0.0);
}

TEST(Quadrature, MaxSubdivisionsAndDomain) {
  auto rough = [](double x) { return 1.0 / std::sqrt(std::abs(x - 0.3)); };
  EXPECT_THROW(hhm::quadrature(rough, 0.0, 1.0, 1e-15, 10), hhm::MaxSubdivisions);
  EXPECT_THROW(hhm::quadrature([](double) { return 1.0; }, 1.0, 0.0, 1e-12), hhm::DomainError);
}

TEST(Quadrature, Deterministic) {
  auto f = [](double x) { return std::exp(-x) * std::cos(7 * x); };
  const auto a = hhm::quadrature(f, 0.0, 10.0, 1e-13);
  const auto b = hhm::quadrature(f, 0.0, 10.0, 1e-13);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.panels, b.panels);
}

TEST(Profiles, SupportAndInterpolation) {
  const auto bump = hhm::bump_profile(2.0);
  EXPECT_EQ(bump.eval(0.0), 1.0);
  EXPECT_EQ(bump.eval(2.0), 0.0);
  EXPECT_EQ(bump.eval(3.0), 0.0);
  EXPECT_GT(bump.eval(1.9), 0.0);
  const auto s = hhm::sampled_profile({0.0, 1.0, 2.0}, {1.0, 3.0, 0.0});
  EXPECT_EQ(s.eval(0.5), 2.0);
  EXPECT_EQ(s.eval(1.5), 1.5);
  EXPECT_EQ(s.eval(2.5), 0.0);
  EXPECT_EQ(s.support_radius, 2.0);
  EXPECT_THROW(hhm::sampled_profile({0.0, 0.0}, {1.0, 1.0}), hhm::DomainError);
}

TEST(SphericalFourier, ZeroProfileGivesZero) {
  const auto res = hhm::spherical_fourier(ModelParams(4, 1, 2), hhm::zero_profile(2.0), 1.0, 1e-10);
  EXPECT_EQ(res.value, 0.0);
}

TEST(SphericalFourier, EvenInLambda) {
  const ModelParams p(4, 1, 2);
  const auto bump = hhm::bump_profile(2.0);
  for (double lambda : {0.5, 1.0, 3.0}) {
    const double tol = 1e-10;
    const double a = hhm::spherical_fourier(p, bump, lambda, tol).value;
    const double b = hhm::spherical_fourier(p, bump, -lambda, tol).value;
    EXPECT_LE(std::abs(a - b), 2 * tol);
  }
}

TEST(SphericalFourier, MatchesRefinedSimpsonOracle) {
  const ModelParams p(3, 2, 2);
  const auto bump = hhm::bump_profile(2.0);
  auto integrand = [&](double r) {
    if (r == 0.0) return 0.0;
    return bump.eval(r) * std::sin(r) / std::sinh(r) * std::pow(std::sinh(r), 2);
  };
  const double oracle = 4 * kPi * simpson(integrand, 0.0, 2.0, 20000);
  const auto res = hhm::spherical_fourier(p, bump, 1.0, 1e-10);
  EXPECT_NEAR(res.value, oracle, 1e-7);
  EXPECT_GT(res.evals_2f1, 0);
  EXPECT_EQ(res.evals_ode, 0);
}

TEST(SphericalFourier, Linearity) {
  const ModelParams p(7, 1, 4);
  const double tol = 1e-10;
  const auto f1 = hhm::bump_profile(1.5);
  const auto f2 = hhm::sampled_profile({0.0, 0.5, 1.0, 2.5}, {2.0, 1.0, 0.5, 0.0});
  for (double alpha : {-0.5, 2.0}) {
    const auto combo = hhm::combine_profiles(alpha, f1, f2);
    for (double lambda : {0.0, 1.2}) {
      const double lhs = hhm::spherical_fourier(p, combo, lambda, tol).value;
      const double rhs = alpha * hhm::spherical_fourier(p, f1, lambda, tol).value +
                         hhm::spherical_fourier(p, f2, lambda, tol).value;
      EXPECT_LE(std::abs(lhs - rhs), 3 * tol * std::max(1.0, std::abs(lhs)));
    }
  }
}

TEST(BallVolume, RealHyperbolicClosedForm) {
  const ModelParams p(3, 2, 2);
  for (double r : {1.0, 2.0, 5.0}) {
    const double exact = kPi * (std::sinh(2 * r) - 2 * r);
    EXPECT_NEAR(hhm::ball_volume(p, r, 1e-12), exact, 1e-8 * std::max(1.0, exact));
  }
}

TEST(BallVolume, EuclideanLimitAndMonotone) {
  const ModelParams p(7, 1, 4);
  const double r = 1e-3;
  const double euclid = hhm::sphere_surface_constant(7) * std::pow(r, 7) / 7;
  EXPECT_NEAR(hhm::ball_volume(p, r, 1e-12) / euclid, 1.0, 1e-5);
  double prev = 0.0;
  for (double x = 0.25; x <= 10.0; x += 0.25) {
    const double v = hhm::ball_volume(p, x, 1e-12);
    EXPECT_GT(v, prev);
    prev = v;
  }
}

TEST(BallVolume, BishopComparisonForNormalizedFamily) {
  for (int n : {3, 4, 7}) {
    const ModelParams hyperbolic(n, 2.0, n - 1.0);
    for (double ell : {1.0, 1.2, std::numbers::sqrt2, 1.8, 2.0}) {
      const ModelParams p(n, ell, hhm::entropy_of_normalized(ell, n));
      for (double r : {0.5, 2.0, 6.0}) {
        const double v = hhm::ball_volume(p, r, 1e-12);
        EXPECT_LE(v, hhm::ball_volume(hyperbolic, r, 1e-12) * (1 + 1e-11)) << n << " " << ell << " " << r;
      }
    }
  }
}

TEST(LogBallVolume, AgreesWithDirectVolume) {
  const ModelParams p(4, 1, 2);
  for (double r : {1.0, 5.0, 20.0}) {
    EXPECT_NEAR(hhm::log_ball_volume(p, r, 1e-12), std::log(hhm::ball_volume(p, r, 1e-12)), 1e-10);
  }
}

TEST(EntropyEstimators, ReferenceValues) {
  EXPECT_NEAR(hhm::entropy_from_sigma(ModelParams(4, 1, 2), 40), 2.0, 1e-10);
  EXPECT_NEAR(hhm::entropy_from_sigma(ModelParams(3, 2, 2), 40), 2.0, 1e-12);
  EXPECT_NEAR(hhm::entropy_from_volume(ModelParams(3, 2, 2), 40), 2.0, 1e-1);
  EXPECT_NEAR(hhm::entropy_from_volume(ModelParams(4, 1, 2), 80), 2.0, 5e-2);
  EXPECT_THROW(hhm::entropy_from_sigma(ModelParams(4, 1, 2), 5), hhm::DomainError);
  EXPECT_THROW(hhm::entropy_from_volume(ModelParams(4, 1, 2), 10), hhm::DomainError);
}

TEST(EntropyEstimators, ConvergeTogether) {
  const ModelParams p(7, 1, 4);
  double prev_gap = INFINITY;
  for (double r : {20.0, 40.0, 80.0}) {
    const double gap = std::abs(hhm::entropy_from_volume(p, r) - hhm::entropy_from_sigma(p, r));
    EXPECT_LT(gap, prev_gap);
    prev_gap = gap;
  }
}

TEST(EntropyEstimators, SigmaErrorDecaysExponentially) {
  const ModelParams p(4, 1, 2);
  const double e10 = std::abs(hhm::entropy_from_sigma(p, 10) - p.q());
  const double e20 = std::abs(hhm::entropy_from_sigma(p, 20) - p.q());
  EXPECT_NEAR(std::log(e20) / std::log(e10), 2.0, 0.1);
}

}  // namespace
