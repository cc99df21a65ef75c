#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hhm/hypergeometric_params.hpp"
#include "hhm/model.hpp"

namespace hhm {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// passed = measured <= tolerance (NaN fails).
CheckResult make_check(std::string name, double measured, double tolerance, std::string detail = {});

// Per-check tolerances.
inline constexpr double kLedgerTolerance = 1e-5;
inline constexpr double kLedgerLimitTolerance = 1e-3;
inline constexpr double kBishopTolerance = 1e-12;
inline constexpr double kOdeVs2F1Tolerance = 1e-6;
inline constexpr double kTransformationTolerance = 1e-5;
inline constexpr double kReflectionTolerance = 1e-8;

/// |FD2(Theta/r^{n-1})(0) + kappa/3|, Richardson over h = 1e-3, 5e-4.
CheckResult ledger_check(const ModelParams& p);

/// Small-r limits: Theta/r^{n-1} -> 1, its derivative -> 0,
/// sigma - (n-1)/r -> 0, each extrapolated from r = 1e-3, 1e-4.
CheckResult ledger_limits_check(const ModelParams& p);

/// max over 2000 points of (0, 20] of (Theta - sinh^{n-1}) / max(1, sinh^{n-1}).
/// Throws NotNormalized.
CheckResult bishop_check(const ModelParams& p);

/// max |Phi_ode - Phi_2F1| on [0.01, 5]. `perturbation` is added to the ODE
/// side; nonzero values exist only to exercise the failing path.
CheckResult ode_vs_2f1_check(const ModelParams& p, double lambda, double perturbation = 0.0);

/// Hypergeometric residual of f(z) = Phi_ode(r(z)) on a uniform z-grid.
CheckResult transformation_check(const ModelParams& p, double lambda);

/// Residual of v(z) = u(1 - z), z in [1, 2], against the hypergeometric
/// operator with parameters `target`. u defaults to 2F1(hp; .) from the
/// series kernel.
double reflected_residual(const HypergeometricParams& hp, const HypergeometricParams& target,
                          const std::function<double(double)>& u = {});

/// reflected_residual with target (a, b, a + b + 1 - c).
CheckResult z_reflection_check(const HypergeometricParams& hp, const std::function<double(double)>& u = {});

struct Minimum {
  double location;
  double value;
};

/// Golden-section search for the minimum of entropy_of_normalized(., n) on
/// (lo, hi].
Minimum golden_section_entropy_minimum(int n, double lo = 1e-3, double hi = 4.0, double xtol = 1e-10);

/// Lower bound on the grid, minimizer at sqrt(2), Q <= n-1 on [1, 2] and
/// Q > n-1 outside.
std::vector<CheckResult> entropy_bound_scan(int n, std::span<const double> ell_grid);

/// |entropy_from_sigma(40/ell) - Q| and |entropy_from_volume(80/ell) - Q|.
std::vector<CheckResult> entropy_estimator_checks(const ModelParams& p);

/// The five reference models: (3,2,2), (4,1,2), (7,1,4), (13,1,8),
/// (4, sqrt 2, 2 sqrt 2).
std::vector<ModelParams> standard_models();

struct VerifyConfig {
  std::optional<std::string> filter;  // family name, e.g. "ledger"
  std::vector<ModelParams> models;    // empty -> standard_models()
  double perturbation = 0.0;          // injected into ode_vs_2f1
};

struct VerifyReport {
  std::vector<CheckResult> results;  // sorted by name
  bool all_passed() const;
};

std::vector<std::string> check_families();

VerifyReport run_all(const VerifyConfig& config = {});

}  // namespace hhm
