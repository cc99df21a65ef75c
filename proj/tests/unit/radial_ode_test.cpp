#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "hhm/errors.hpp"
#include "hhm/radial_ode.hpp"
#include "hhm/special.hpp"

namespace {

using hhm::ModelParams;

double h3_phi(double lambda, double r) { return std::sin(lambda * r) / (lambda * std::sinh(r)); }

double max_error_vs_h3(const hhm::RadialSolution& sol, double from) {
  double worst = 0.0;
  for (std::size_t i = 0; i < sol.r_grid.size(); ++i) {
    if (sol.r_grid[i] < from) continue;
    worst = std::max(worst, std::abs(sol.phi[i] - h3_phi(sol.lambda, sol.r_grid[i])));
  }
  return worst;
}

TEST(FrobeniusStart, LeadingCoefficient) {
  // At lambda = 0, a2 = -Q^2/(8n): Phi(r) ~ 1 - Q^2 r^2 / (8n).
  const ModelParams p(4, 1, 2);
  const double r = 1e-3;
  const auto s = hhm::frobenius_start(p, 0.0, r);
  EXPECT_NEAR((s.phi - 1.0) / (r * r), -4.0 / 32.0, 1e-6);
  EXPECT_LT(s.phi, 1.0);
  EXPECT_THROW(hhm::frobenius_start(p, 0.0, 0.0), hhm::DomainError);
  EXPECT_THROW(hhm::frobenius_start(p, 0.0, 0.1), hhm::DomainError);
}

TEST(FrobeniusStart, MatchesRealHyperbolicClosedForm) {
  const ModelParams p(3, 2, 2);
  for (double r : {1e-4, 1e-3, 1e-2}) {
    const auto s = hhm::frobenius_start(p, 1.0, r);
    EXPECT_NEAR(s.phi, h3_phi(1.0, r), std::max(1e-14, std::pow(r, 6)));
    const double exact_d = (std::cos(r) * std::sinh(r) - std::sin(r) * std::cosh(r)) / std::pow(std::sinh(r), 2);
    EXPECT_NEAR(s.dphi, exact_d, 1e-10);
  }
}

TEST(SolveEigenOde, RealHyperbolicClosedForm) {
  const auto sol = hhm::solve_eigen_ode(ModelParams(3, 2, 2), 1.0, 5.0, 1e-3);
  EXPECT_LE(max_error_vs_h3(sol, 0.01), 1e-8);
  EXPECT_EQ(sol.r_grid.back(), 5.0);
  EXPECT_EQ(sol.phi.size(), sol.r_grid.size());
  EXPECT_EQ(sol.dphi.size(), sol.r_grid.size());
}

TEST(SolveEigenOde, FourthOrderConvergence) {
  const ModelParams p(3, 2, 2);
  const std::vector<double> grid = {1.0, 2.0, 3.0, 4.0, 5.0};
  auto error = [&](double h) {
    hhm::OdeOptions opts;
    opts.h = h;
    opts.grading = 0.5;
    return max_error_vs_h3(hhm::solve_eigen_ode(p, 2.0, grid, opts), 0.5);
  };
  const double coarse = error(8e-3);
  const double fine = error(4e-3);
  EXPECT_GE(coarse / fine, 8.0) << coarse << " " << fine;
}

TEST(SolveEigenOde, MatchesSphericalFunction) {
  const ModelParams p(4, 1, 2);
  const auto sol = hhm::solve_eigen_ode(p, 0.5, 5.0, 1e-3);
  for (std::size_t i = 0; i < sol.r_grid.size(); i += 7) {
    if (sol.r_grid[i] < 0.01) continue;
    EXPECT_NEAR(sol.phi[i], hhm::spherical_function(p, 0.5, sol.r_grid[i]), 1e-6);
  }
}

TEST(SolveEigenOde, EvenInLambdaBitwise) {
  const ModelParams p(7, 1, 4);
  const auto a = hhm::solve_eigen_ode(p, 1.7, 4.0, 1e-3);
  const auto b = hhm::solve_eigen_ode(p, -1.7, 4.0, 1e-3);
  EXPECT_EQ(a.phi, b.phi);
  EXPECT_EQ(a.dphi, b.dphi);
}

TEST(SolveEigenOde, LandsOnRequestedGrid) {
  const std::vector<double> grid = {0.01, 0.0137, 0.5, 2.0, 2.0005, 3.3};
  const auto sol = hhm::solve_eigen_ode(ModelParams(3, 2, 2), 1.0, grid);
  EXPECT_EQ(sol.r_grid, grid);
  EXPECT_LE(max_error_vs_h3(sol, 0.0), 1e-8);
}

TEST(SolveEigenOde, RejectsBadInput) {
  const ModelParams p(3, 2, 2);
  EXPECT_THROW(hhm::solve_eigen_ode(p, 1.0, 5.0, 2e-2), hhm::StepTooLarge);
  EXPECT_THROW(hhm::solve_eigen_ode(p, 1.0, -1.0, 1e-3), hhm::DomainError);
  const std::vector<double> unsorted = {0.5, 0.4};
  EXPECT_THROW(hhm::solve_eigen_ode(p, 1.0, unsorted), hhm::DomainError);
  const std::vector<double> before_start = {1e-6, 1.0};
  EXPECT_THROW(hhm::solve_eigen_ode(p, 1.0, before_start), hhm::DomainError);
}

TEST(OdeResidual, SolutionPerturbationAndZero) {
  const ModelParams p(4, 1, 2);
  const double lambda = 1.0;
  const double mu = hhm::radial_eigenvalue(p, lambda);
  auto sol = hhm::solve_eigen_ode(p, lambda, 5.0, 1e-3);
  EXPECT_LE(hhm::ode_residual(sol), 1e-6);

  auto shifted = sol;
  for (double& v : shifted.phi) v += 0.01;
  EXPECT_GE(hhm::ode_residual(shifted), 0.009 * mu);

  auto zero = sol;
  std::fill(zero.phi.begin(), zero.phi.end(), 0.0);
  std::fill(zero.dphi.begin(), zero.dphi.end(), 0.0);
  EXPECT_EQ(hhm::ode_residual(zero), 0.0);

  auto tiny = sol;
  tiny.r_grid.resize(4);
  tiny.phi.resize(4);
  tiny.dphi.resize(4);
  EXPECT_THROW(hhm::ode_residual(tiny), hhm::GridTooShort);
}

TEST(HypergeometricResidual, KernelSamplesAndConstant) {
  const auto hp = hhm::hypergeometric_parameters(ModelParams(4, 1, 2), 0.5);
  // Series truncation noise is amplified by 1/dz^2 in the stencil.
  const hhm::SeriesOptions tight{1e-16, 200000};
  std::vector<double> z, f, constant;
  for (int i = 0; i <= 6000; ++i) {
    z.push_back(-3.0 + 5e-4 * i);
    f.push_back(hhm::gauss_2f1(hp, z.back(), tight).value.real());
    constant.push_back(2.5);
  }
  EXPECT_LE(hhm::hypergeometric_residual(hp, z, f), 1e-6);
  EXPECT_NEAR(hhm::hypergeometric_residual(hp, z, constant), std::abs(hp.a * hp.b) * 2.5, 1e-9);
  const std::vector<double> short_z = {-1, -0.5, 0}, short_f = {1, 1, 1};
  EXPECT_THROW(hhm::hypergeometric_residual(hp, short_z, short_f), hhm::GridTooShort);
}

TEST(HypergeometricResidual, TransformedOdeSolution) {
  const ModelParams p(3, 2, 2);
  const double lambda = 1.0;
  const auto hp = hhm::hypergeometric_parameters(p, lambda);
  // Uniform z-grid on [-4, -0.1] mapped back to radii.
  std::vector<double> z, r;
  for (int i = 0; i <= 7800; ++i) {
    z.push_back(-4.0 + 3.9 * i / 7800.0);
    r.push_back(2.0 / p.ell() * std::asinh(std::sqrt(-z.back())));
  }
  std::vector<double> radii(r.rbegin(), r.rend());
  const auto sol = hhm::solve_eigen_ode(p, lambda, radii);
  std::vector<double> f(sol.phi.rbegin(), sol.phi.rend());
  EXPECT_LE(hhm::hypergeometric_residual(hp, z, f), 1e-5);
}

}  // namespace
