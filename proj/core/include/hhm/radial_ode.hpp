#pragma once

#include <span>
#include <vector>

#include "hhm/hypergeometric_params.hpp"
#include "hhm/model.hpp"

namespace hhm {

/// Phi and Phi' sampled on an increasing radial grid, solving
///   Phi'' + sigma(r) Phi' + (Q^2/4 + lambda^2) Phi = 0,  Phi(0) = 1.
struct RadialSolution {
  std::vector<double> r_grid;
  std::vector<double> phi;
  std::vector<double> dphi;
  double lambda = 0.0;
  ModelParams model;
};

struct FrobeniusStart {
  double phi;
  double dphi;
};

struct OdeOptions {
  double r_start = 1e-4;  // series offset away from the singular origin
  double h = 1e-3;        // maximum RK4 step
  // Near the origin the step is also capped at grading * r, keeping
  // h * sigma(r) inside the RK4 stability region.
  double grading = 0.02;
};

/// Eigenvalue Q^2/4 + lambda^2 of the radial Laplacian.
double radial_eigenvalue(const ModelParams& p, double lambda);

/// Phi = 1 + a2 r^2 + a4 r^4 with a2 = -mu/(2n) and
/// a4 = -a2 (2 s1 + mu) / (4(n+2)), where sigma = (n-1)/r + s1 r + O(r^3).
/// Requires 0 < r_start <= 1e-2.
FrobeniusStart frobenius_start(const ModelParams& p, double lambda, double r_start);

/// Integrate from the Frobenius start to every point of `grid` (strictly
/// increasing, grid[0] >= opts.r_start). Throws StepTooLarge if h > 1e-2.
RadialSolution solve_eigen_ode(const ModelParams& p, double lambda, std::span<const double> grid,
                               const OdeOptions& opts = {});

/// Output grid {r_start, h, 2h, ..., r_max}.
RadialSolution solve_eigen_ode(const ModelParams& p, double lambda, double r_max, double h);

/// max over interior points of |Phi'' + sigma Phi' + mu Phi|, Phi'' from the
/// three-point (nonuniform) central difference of phi, Phi' taken from dphi.
double ode_residual(const RadialSolution& sol);

enum class Stencil {
  SecondOrder,  // three-point, any strictly monotone grid
  FourthOrder,  // five-point, uniform grid only
};

/// max |z(1-z) f'' + (c - (a+b+1) z) f' - ab f| over the grid interior with
/// finite-difference derivatives. No restriction on the sign of z.
double hypergeometric_operator_residual(const HypergeometricParams& hp, std::span<const double> z,
                                        std::span<const double> f, Stencil stencil);

/// Residual of the hypergeometric equation for samples on a z-grid in
/// (-inf, 0] using second-order stencils.
double hypergeometric_residual(const HypergeometricParams& hp, std::span<const double> z,
                               std::span<const double> f);

}  // namespace hhm
