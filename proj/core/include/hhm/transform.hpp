#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hhm/model.hpp"

namespace hhm {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int panels = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature. Panels are bisected
/// largest-error first until the summed |K15 - G7| estimate is at most
/// tol * max(1, |value|). Panel contributions are combined by compensated
/// summation in left-to-right order, so results are deterministic.
QuadratureResult quadrature(const std::function<double(double)>& f, double a, double b, double tol,
                            int max_panels = 4000);

/// Radial test profile F with F(r) = 0 for r >= support_radius. Only r >= 0
/// is queried; F is understood as an even function on the real line.
struct RadialProfile {
  double support_radius;
  std::function<double(double)> eval;
  std::string description;
};

/// exp(1 - 1/(1 - (r/R)^2)) on [0, R), zero beyond.
RadialProfile bump_profile(double radius);

/// Identically zero with the given support radius.
RadialProfile zero_profile(double radius);

/// Piecewise-linear interpolation of (r, F(r)) pairs, zero beyond the last
/// radius. Radii must be strictly increasing and nonnegative.
RadialProfile sampled_profile(std::vector<double> radii, std::vector<double> values);

/// alpha * F1 + F2.
RadialProfile combine_profiles(double alpha, const RadialProfile& f1, const RadialProfile& f2);

struct TransformResult {
  double lambda = 0.0;
  double value = 0.0;
  double quad_error = 0.0;
  // Which kernel served the integrand evaluations.
  long evals_2f1 = 0;
  long evals_ode = 0;
};

/// omega_{n-1} * int_0^R F(r) Phi_lambda(r) Theta(r) dr.
/// Phi comes from the 2F1 kernel; evaluations where that series fails to
/// converge fall back to the radial ODE.
TransformResult spherical_fourier(const ModelParams& p, const RadialProfile& f, double lambda, double tol);

/// omega_{n-1} * int_0^r Theta(t) dt.
double ball_volume(const ModelParams& p, double r, double tol);

/// log(ball_volume) computed with the e^{Q r} growth factored out, so large
/// radii do not overflow.
double log_ball_volume(const ModelParams& p, double r, double tol);

/// sigma(r_max). Error is O(exp(-ell r_max)). Requires r_max >= 10/ell.
double entropy_from_sigma(const ModelParams& p, double r_max);

/// log(Vol B(r_max)) / r_max. Converges like O(1/r_max). Requires
/// r_max >= 20/ell.
double entropy_from_volume(const ModelParams& p, double r_max, double tol = 1e-12);

}  // namespace hhm
