#include "hhm/radial_ode.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "hhm/errors.hpp"
#include "text.hpp"

namespace hhm {

namespace {

constexpr double kMaxStep = 1e-2;

struct State {
  double phi;
  double dphi;
};

struct RadialSystem {
  const ModelParams& model;
  double mu;

  State rhs(double r, const State& y) const { return {y.dphi, -sigma(model, r) * y.dphi - mu * y.phi}; }

  State rk4(double r, const State& y, double h) const {
    const State k1 = rhs(r, y);
    const State k2 = rhs(r + 0.5 * h, {y.phi + 0.5 * h * k1.phi, y.dphi + 0.5 * h * k1.dphi});
    const State k3 = rhs(r + 0.5 * h, {y.phi + 0.5 * h * k2.phi, y.dphi + 0.5 * h * k2.dphi});
    const State k4 = rhs(r + h, {y.phi + h * k3.phi, y.dphi + h * k3.dphi});
    return {y.phi + h / 6.0 * (k1.phi + 2.0 * k2.phi + 2.0 * k3.phi + k4.phi),
            y.dphi + h / 6.0 * (k1.dphi + 2.0 * k2.dphi + 2.0 * k3.dphi + k4.dphi)};
  }
};

void validate_options(const OdeOptions& opts) {
  if (!(opts.h > 0.0)) throw DomainError("ODE step must be positive");
  if (opts.h > kMaxStep) throw StepTooLarge("ODE step " + detail::num(opts.h) + " exceeds 1e-2");
  if (!(opts.r_start > 0.0) || opts.r_start > 1e-2) throw DomainError("r_start must lie in (0, 1e-2]");
  if (!(opts.grading > 0.0) || opts.grading > 0.5) throw DomainError("grading must lie in (0, 0.5]");
}

}  // namespace

double radial_eigenvalue(const ModelParams& p, double lambda) {
  return 0.25 * p.q() * p.q() + lambda * lambda;
}

FrobeniusStart frobenius_start(const ModelParams& p, double lambda, double r_start) {
  if (!(r_start > 0.0) || r_start > 1e-2) throw DomainError("frobenius_start: r_start must lie in (0, 1e-2]");
  const double mu = radial_eigenvalue(p, lambda);
  const double n = p.n();
  // sigma(r) = (n-1)/r + s1 r + O(r^3), read off the coth/tanh Laurent series.
  const double s1 = 0.5 * p.q() * p.ell() - p.ell() * p.ell() * (n - 1) / 6.0;
  const double a2 = -mu / (2.0 * n);
  const double a4 = -a2 * (2.0 * s1 + mu) / (4.0 * (n + 2.0));
  const double r2 = r_start * r_start;
  return {1.0 + a2 * r2 + a4 * r2 * r2, 2.0 * a2 * r_start + 4.0 * a4 * r2 * r_start};
}

RadialSolution solve_eigen_ode(const ModelParams& p, double lambda, std::span<const double> grid,
                               const OdeOptions& opts) {
  validate_options(opts);
  if (grid.size() < 2) throw DomainError("solve_eigen_ode: output grid needs at least 2 points");
  if (!(grid.front() >= opts.r_start)) throw DomainError("solve_eigen_ode: grid starts before r_start");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw DomainError("solve_eigen_ode: grid must be strictly increasing");
  }

  const RadialSystem system{p, radial_eigenvalue(p, lambda)};
  const FrobeniusStart start = frobenius_start(p, lambda, opts.r_start);

  RadialSolution sol{{}, {}, {}, lambda, p};
  sol.r_grid.assign(grid.begin(), grid.end());
  sol.phi.reserve(grid.size());
  sol.dphi.reserve(grid.size());

  double r = opts.r_start;
  State y{start.phi, start.dphi};
  for (const double target : grid) {
    while (r < target) {
      double step = std::min(opts.h, opts.grading * r);
      // Land exactly on the target; absorb slivers into the last step.
      if (r + step * 1.001 >= target) step = target - r;
      y = system.rk4(r, y, step);
      r = (step == target - r) ? target : r + step;
    }
    sol.phi.push_back(y.phi);
    sol.dphi.push_back(y.dphi);
  }
  return sol;
}

RadialSolution solve_eigen_ode(const ModelParams& p, double lambda, double r_max, double h) {
  OdeOptions opts;
  opts.h = h;
  validate_options(opts);
  if (!(r_max > opts.r_start)) throw DomainError("solve_eigen_ode: r_max must exceed r_start");

  std::vector<double> grid{opts.r_start};
  for (long k = 1;; ++k) {
    const double r = static_cast<double>(k) * h;
    if (r <= opts.r_start) continue;
    if (r >= r_max * (1.0 - 1e-12)) break;
    grid.push_back(r);
  }
  grid.push_back(r_max);
  return solve_eigen_ode(p, lambda, grid, opts);
}

double ode_residual(const RadialSolution& sol) {
  const auto& r = sol.r_grid;
  if (r.size() < 5) throw GridTooShort("ode_residual needs at least 5 grid points");
  if (sol.phi.size() != r.size() || sol.dphi.size() != r.size()) {
    throw DomainError("ode_residual: solution arrays differ in length");
  }
  const double mu = radial_eigenvalue(sol.model, sol.lambda);
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < r.size(); ++i) {
    const double h1 = r[i] - r[i - 1];
    const double h2 = r[i + 1] - r[i];
    const double d2 =
        2.0 * (h1 * sol.phi[i + 1] - (h1 + h2) * sol.phi[i] + h2 * sol.phi[i - 1]) / (h1 * h2 * (h1 + h2));
    const double res = d2 + sigma(sol.model, r[i]) * sol.dphi[i] + mu * sol.phi[i];
    worst = std::max(worst, std::abs(res));
  }
  return worst;
}

double hypergeometric_operator_residual(const HypergeometricParams& hp, std::span<const double> z,
                                        std::span<const double> f, Stencil stencil) {
  if (z.size() != f.size()) throw DomainError("hypergeometric residual: z and f differ in length");
  if (z.size() < 5) throw GridTooShort("hypergeometric residual needs at least 5 grid points");
  const bool increasing = z[1] > z[0];
  for (std::size_t i = 1; i < z.size(); ++i) {
    if (increasing ? !(z[i] > z[i - 1]) : !(z[i] < z[i - 1])) {
      throw DomainError("hypergeometric residual: z-grid must be strictly monotone");
    }
  }

  const std::complex<double> ab = hp.a * hp.b;
  const std::complex<double> slope = hp.a + hp.b + 1.0;
  auto residual_at = [&](double zi, double fi, double d1, double d2) {
    return std::abs(zi * (1.0 - zi) * d2 + (hp.c - slope * zi) * d1 - ab * fi);
  };

  double worst = 0.0;
  if (stencil == Stencil::SecondOrder) {
    for (std::size_t i = 1; i + 1 < z.size(); ++i) {
      const double h1 = z[i] - z[i - 1];
      const double h2 = z[i + 1] - z[i];
      const double d1 = -h2 / (h1 * (h1 + h2)) * f[i - 1] + (h2 - h1) / (h1 * h2) * f[i] +
                        h1 / (h2 * (h1 + h2)) * f[i + 1];
      const double d2 = 2.0 * (h1 * f[i + 1] - (h1 + h2) * f[i] + h2 * f[i - 1]) / (h1 * h2 * (h1 + h2));
      worst = std::max(worst, residual_at(z[i], f[i], d1, d2));
    }
    return worst;
  }

  const std::size_t last = z.size() - 1;
  const double dz = (z[last] - z[0]) / static_cast<double>(last);
  for (std::size_t i = 0; i <= last; ++i) {
    if (std::abs(z[i] - (z[0] + static_cast<double>(i) * dz)) > 1e-9 * std::abs(dz)) {
      throw DomainError("fourth-order stencil requires a uniform z-grid");
    }
  }
  for (std::size_t i = 2; i + 2 <= last; ++i) {
    const double d1 = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * dz);
    const double d2 = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) / (12.0 * dz * dz);
    worst = std::max(worst, residual_at(z[i], f[i], d1, d2));
  }
  return worst;
}

double hypergeometric_residual(const HypergeometricParams& hp, std::span<const double> z,
                               std::span<const double> f) {
  for (const double zi : z) {
    if (zi > 0.0) throw DomainError("hypergeometric_residual: z-grid must lie in (-inf, 0]");
  }
  return hypergeometric_operator_residual(hp, z, f, Stencil::SecondOrder);
}

}  // namespace hhm
