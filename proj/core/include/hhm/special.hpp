#pragma once

#include <complex>
#include <cstdint>

#include "hhm/hypergeometric_params.hpp"
#include "hhm/model.hpp"

namespace hhm {

struct EvalReport {
  std::complex<double> value;
  std::int64_t terms_used = 0;
  double est_error = 0.0;  // bound on the truncated tail, >= 0
};

struct SeriesOptions {
  double tol = 1e-12;
  std::int64_t max_terms = 200000;
};

/// Lanczos approximation of Gamma(x), x > 0.
double gamma_fn(double x);

/// vol(S^{n-1}(1)) = 2 pi^{n/2} / Gamma(n/2), n >= 2.
double sphere_surface_constant(int n);

/// Direct power series of 2F1(a, b; c; z) for |z| < 1. The series is
/// truncated once the geometric tail bound drops below
/// tol * max(1, |partial sum|).
EvalReport gauss_2f1_series(const HypergeometricParams& hp, double z, const SeriesOptions& opts = {});

/// 2F1(a, b; c; z) for z <= 0 via the Pfaff transformation
///   2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)),
/// so the series argument w = z/(z-1) lies in [0, 1). Throws NoConvergence
/// when the term ceiling is hit and DomainError for z > 0.
EvalReport gauss_2f1(const HypergeometricParams& hp, double z, const SeriesOptions& opts = {});

/// Spherical function Phi_lambda(r) = 2F1(a, b; n/2; -sinh^2(ell r/2)).
/// Phi_lambda(0) == 1 exactly.
double spherical_function(const ModelParams& p, double lambda, double r, const SeriesOptions& opts = {});

/// As spherical_function, but returns the full report (value has the
/// round-off imaginary part left in place).
EvalReport spherical_function_report(const ModelParams& p, double lambda, double r,
                                     const SeriesOptions& opts = {});

}  // namespace hhm
