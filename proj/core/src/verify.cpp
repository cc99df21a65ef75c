#include "hhm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "hhm/damek_ricci.hpp"
#include "hhm/errors.hpp"
#include "hhm/radial_ode.hpp"
#include "hhm/special.hpp"
#include "hhm/transform.hpp"
#include "text.hpp"

namespace hhm {

namespace {

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

std::string label(const ModelParams& p) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%d,%.6g,%.6g)", p.n(), p.ell(), p.q());
  return buf;
}

std::string lambda_label(double lambda) { return fmt("lambda=%.6g", lambda); }

// Theta(r) / r^{n-1}.
double density_ratio(const ModelParams& p, double r) { return theta(p, r) / std::pow(r, p.n() - 1); }

// Extrapolate L(r) ~ alpha r^order from two radii to r = 0.
double extrapolate_to_zero(double r1, double l1, double r2, double l2, int order) {
  const double w1 = std::pow(r1, order);
  const double w2 = std::pow(r2, order);
  return (w1 * l2 - w2 * l1) / (w1 - w2);
}

std::vector<double> ode_check_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 500; ++i) grid.push_back(0.01 * i);
  return grid;
}

// Truncation jitter between neighbouring samples is amplified by 1/dz^2 in
// the stencil, so reflection samples are summed to round-off.
constexpr SeriesOptions kTightSeries{1e-16, 200000};

const std::vector<double> kSpectralLambdas = {0.0, 0.5, 1.0, 2.0};

std::vector<ModelParams> spectral_models() {
  return {ModelParams(3, 2.0, 2.0), ModelParams(4, 1.0, 2.0), ModelParams(7, 1.0, 4.0)};
}

std::vector<ModelParams> bishop_models() {
  std::vector<ModelParams> out;
  for (const int n : {3, 4, 7}) {
    for (const double ell : {1.0, 1.2, std::numbers::sqrt2, 1.8, 2.0}) {
      out.emplace_back(n, ell, entropy_of_normalized(ell, n));
    }
  }
  return out;
}

std::vector<double> standard_ell_grid() {
  std::vector<double> grid;
  for (int k = 10; k <= 400; ++k) grid.push_back(k / 100.0);
  return grid;
}

}  // namespace

CheckResult make_check(std::string name, double measured, double tolerance, std::string detail) {
  return {std::move(name), measured <= tolerance, measured, tolerance, std::move(detail)};
}

CheckResult ledger_check(const ModelParams& p) {
  constexpr double h = 1e-3;
  // Theta/r^{n-1} is even with value 1 at the origin.
  auto second_difference = [&](double step) { return 2.0 * (density_ratio(p, step) - 1.0) / (step * step); };
  const double d2 = (4.0 * second_difference(0.5 * h) - second_difference(h)) / 3.0;
  const double kappa = einstein_constant(p).kappa;
  return make_check("ledger/" + label(p), std::abs(d2 + kappa / 3.0), kLedgerTolerance,
                    fmt("FD2=%.12g", d2) + fmt(" kappa=%.12g", kappa));
}

CheckResult ledger_limits_check(const ModelParams& p) {
  constexpr double r1 = 1e-3;
  constexpr double r2 = 1e-4;
  const int d = p.n() - 1;
  auto ratio_minus_one = [&](double r) { return density_ratio(p, r) - 1.0; };
  auto ratio_slope = [&](double r) {
    const double delta = 0.1 * r;
    return (density_ratio(p, r + delta) - density_ratio(p, r - delta)) / (2.0 * delta);
  };
  auto sigma_excess = [&](double r) { return sigma(p, r) - d / r; };

  const double ratio0 = extrapolate_to_zero(r1, ratio_minus_one(r1), r2, ratio_minus_one(r2), 2);
  const double slope0 = extrapolate_to_zero(r1, ratio_slope(r1), r2, ratio_slope(r2), 1);
  const double sigma0 = extrapolate_to_zero(r1, sigma_excess(r1), r2, sigma_excess(r2), 1);
  const double measured = std::max({std::abs(ratio0), std::abs(slope0), std::abs(sigma0)});
  return make_check("ledger_limits/" + label(p), measured, kLedgerLimitTolerance,
                    fmt("ratio-1=%.3e", ratio0) + fmt(" slope=%.3e", slope0) + fmt(" sigma-(n-1)/r=%.3e", sigma0) +
                        fmt(" raw sigma excess at 1e-4=%.3e", sigma_excess(r2)));
}

CheckResult bishop_check(const ModelParams& p) {
  const double kappa = einstein_constant(p).kappa;
  const int d = p.n() - 1;
  if (std::abs(kappa + d) > 1e-9 * d) {
    throw NotNormalized("bishop_check requires Ric = -(n-1); kappa = " + detail::num(kappa));
  }
  double worst = -std::numeric_limits<double>::infinity();
  double worst_abs = 0.0;
  for (int i = 1; i <= 2000; ++i) {
    const double r = 20.0 * i / 2000.0;
    const double hyperbolic = std::pow(std::sinh(r), d);
    const double diff = theta(p, r) - hyperbolic;
    worst = std::max(worst, diff / std::max(1.0, hyperbolic));
    worst_abs = std::max(worst_abs, diff);
  }
  const double margin_at_one = theta(p, 1.0) - std::pow(std::sinh(1.0), d);
  return make_check("bishop/" + label(p), worst, kBishopTolerance,
                    fmt("max abs excess=%.3e", worst_abs) + fmt(" margin(r=1)=%.6e", margin_at_one));
}

CheckResult ode_vs_2f1_check(const ModelParams& p, double lambda, double perturbation) {
  const std::vector<double> grid = ode_check_grid();
  const RadialSolution sol = solve_eigen_ode(p, lambda, grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double series = spherical_function(p, lambda, grid[i]);
    worst = std::max(worst, std::abs(sol.phi[i] + perturbation - series));
  }
  return make_check("ode_vs_2f1/" + label(p) + "/" + lambda_label(lambda), worst, kOdeVs2F1Tolerance,
                    "r in [0.01, 5], 500 points");
}

CheckResult transformation_check(const ModelParams& p, double lambda) {
  constexpr int kPoints = 7801;  // dz = 5e-4
  constexpr double z_near = -0.1;
  constexpr double z_far = -4.0;
  std::vector<double> z(kPoints);
  std::vector<double> r(kPoints);
  for (int i = 0; i < kPoints; ++i) {
    z[i] = z_near + (z_far - z_near) * i / (kPoints - 1);
    r[i] = 2.0 / p.ell() * std::asinh(std::sqrt(-z[i]));
  }
  const RadialSolution sol = solve_eigen_ode(p, lambda, r);
  const double res = hypergeometric_residual(hypergeometric_parameters(p, lambda), z, sol.phi);
  return make_check("transformation/" + label(p) + "/" + lambda_label(lambda), res, kTransformationTolerance,
                    "z in [-4, -0.1], 7801 points");
}

double reflected_residual(const HypergeometricParams& hp, const HypergeometricParams& target,
                          const std::function<double(double)>& u) {
  constexpr int kPoints = 401;  // dz = 2.5e-3
  std::vector<double> z(kPoints);
  std::vector<double> v(kPoints);
  for (int i = 0; i < kPoints; ++i) {
    z[i] = 1.0 + static_cast<double>(i) / (kPoints - 1);
    const double x = 1.0 - z[i];
    v[i] = u ? u(x) : gauss_2f1(hp, x, kTightSeries).value.real();
  }
  return hypergeometric_operator_residual(target, z, v, Stencil::FourthOrder);
}

CheckResult z_reflection_check(const HypergeometricParams& hp, const std::function<double(double)>& u) {
  const std::complex<double> sum = hp.a + hp.b;
  if (std::abs(sum.imag()) > 1e-14 * std::max(1.0, std::abs(sum))) {
    throw DomainError("z_reflection_check: a + b must be real");
  }
  const HypergeometricParams target{hp.a, hp.b, sum.real() + 1.0 - hp.c};
  char buf[128];
  std::snprintf(buf, sizeof buf, "z_reflection/a=%.6g%+.6gi,b=%.6g%+.6gi,c=%.6g", hp.a.real(), hp.a.imag(),
                hp.b.real(), hp.b.imag(), hp.c);
  return make_check(buf, reflected_residual(hp, target, u), kReflectionTolerance,
                    u ? "closed-form u" : "series u");
}

Minimum golden_section_entropy_minimum(int n, double lo, double hi, double xtol) {
  if (!(lo > 0.0) || !(hi > lo)) throw DomainError("golden section: requires 0 < lo < hi");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = entropy_of_normalized(c, n);
  double fd = entropy_of_normalized(d, n);
  while (b - a > xtol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = entropy_of_normalized(c, n);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = entropy_of_normalized(d, n);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, entropy_of_normalized(x, n)};
}

std::vector<CheckResult> entropy_bound_scan(int n, std::span<const double> ell_grid) {
  if (ell_grid.empty()) throw DomainError("entropy_bound_scan: empty ell grid");
  const double lower = lower_entropy_bound(n);
  const double upper = upper_entropy_bound(n);
  double below_lower = 0.0;
  double above_upper_inside = 0.0;
  int not_above_outside = 0;
  for (const double ell : ell_grid) {
    const double q = entropy_of_normalized(ell, n);
    below_lower = std::max(below_lower, lower - q);
    if (ell >= 1.0 && ell <= 2.0) {
      above_upper_inside = std::max(above_upper_inside, q - upper);
    } else if (!(q > upper)) {
      ++not_above_outside;
    }
  }
  const Minimum min = golden_section_entropy_minimum(n);
  const std::string prefix = "entropy_bounds/n=" + std::to_string(n) + "/";
  return {
      make_check(prefix + "lower_bound_on_grid", below_lower, 1e-12, "max(lower - Q) over grid"),
      make_check(prefix + "minimizer_location", std::abs(min.location - std::numbers::sqrt2), 1e-6,
                 fmt("ell*=%.12g", min.location)),
      make_check(prefix + "minimum_value", std::abs(min.value - lower), 1e-10, fmt("Q*=%.15g", min.value)),
      make_check(prefix + "upper_inside_1_2", above_upper_inside, 0.0, "max(Q - (n-1)) for ell in [1, 2]"),
      make_check(prefix + "above_upper_outside_1_2", not_above_outside, 0.0,
                 "count of ell outside [1, 2] with Q <= n-1"),
  };
}

std::vector<CheckResult> entropy_estimator_checks(const ModelParams& p) {
  const double from_sigma = entropy_from_sigma(p, 40.0 / p.ell());
  const double from_volume = entropy_from_volume(p, 80.0 / p.ell());
  return {
      make_check("entropy_estimators/" + label(p) + "/sigma", std::abs(from_sigma - p.q()), 1e-8,
                 fmt("estimate=%.15g", from_sigma)),
      make_check("entropy_estimators/" + label(p) + "/volume", std::abs(from_volume - p.q()), 5e-2,
                 fmt("estimate=%.15g", from_volume)),
  };
}

std::vector<ModelParams> standard_models() {
  return {ModelParams(3, 2.0, 2.0), ModelParams(4, 1.0, 2.0), ModelParams(7, 1.0, 4.0), ModelParams(13, 1.0, 8.0),
          ModelParams(4, std::numbers::sqrt2, 2.0 * std::numbers::sqrt2)};
}

bool VerifyReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> check_families() {
  return {"bishop",        "damek_ricci",        "entropy_bounds",    "entropy_estimators", "ledger",
          "ledger_limits", "negative_controls",  "ode_vs_2f1",        "transformation",     "z_reflection"};
}

namespace {

void run_family(const std::string& family, const VerifyConfig& config, std::vector<CheckResult>& out) {
  const std::vector<ModelParams> models = config.models.empty() ? standard_models() : config.models;
  const std::vector<ModelParams> spectral = config.models.empty() ? spectral_models() : config.models;

  if (family == "ledger") {
    for (const auto& p : models) out.push_back(ledger_check(p));
  } else if (family == "ledger_limits") {
    for (const auto& p : models) out.push_back(ledger_limits_check(p));
  } else if (family == "bishop") {
    std::vector<ModelParams> targets = bishop_models();
    for (const auto& p : models) {
      if (!(einstein_constant(p).kappa < 0.0)) continue;
      const ModelParams normalized = normalize_ricci(p).model;
      const bool seen = std::any_of(targets.begin(), targets.end(), [&](const ModelParams& t) {
        return t.n() == normalized.n() && std::abs(t.ell() - normalized.ell()) <= 1e-12 * t.ell();
      });
      if (!seen) targets.push_back(normalized);
    }
    for (const auto& p : targets) out.push_back(bishop_check(p));
  } else if (family == "ode_vs_2f1") {
    for (const auto& p : spectral) {
      for (const double lambda : kSpectralLambdas) out.push_back(ode_vs_2f1_check(p, lambda, config.perturbation));
    }
  } else if (family == "transformation") {
    for (const auto& p : spectral) {
      for (const double lambda : kSpectralLambdas) out.push_back(transformation_check(p, lambda));
    }
  } else if (family == "z_reflection") {
    out.push_back(z_reflection_check({{1.0, 0.0}, {1.0, 0.0}, 2.0}, [](double x) {
      return x == 0.0 ? 1.0 : -std::log1p(-x) / x;
    }));
    for (const auto& p : spectral) {
      for (const double lambda : {0.0, 1.0}) out.push_back(z_reflection_check(hypergeometric_parameters(p, lambda)));
    }
  } else if (family == "entropy_bounds") {
    const std::vector<double> grid = standard_ell_grid();
    for (const int n : {3, 4, 7, 13}) {
      for (auto& c : entropy_bound_scan(n, grid)) out.push_back(std::move(c));
    }
  } else if (family == "entropy_estimators") {
    for (const auto& p : models) {
      for (auto& c : entropy_estimator_checks(p)) out.push_back(std::move(c));
    }
    const ModelParams h3(3, 2.0, 2.0);
    for (const double r : {1.0, 2.0, 5.0}) {
      const double exact = std::numbers::pi * (std::sinh(2.0 * r) - 2.0 * r);
      out.push_back(make_check("entropy_estimators/ball_volume_h3/" + fmt("r=%g", r),
                               std::abs(ball_volume(h3, r, 1e-13) - exact), 1e-8, fmt("exact=%.15g", exact)));
    }
  } else if (family == "damek_ricci") {
    const std::vector<LowerBoundCase> expected = {{1, 2}, {2, 4}, {4, 8}, {8, 16}};
    out.push_back(make_check("damek_ricci/lower_bound_cases_max_m=64", enumerate_lower_bound(64) == expected ? 0 : 1,
                             0.0, "expected (1,2),(2,4),(4,8),(8,16)"));
    for (const auto& e : enumerate_spaces(8, 2)) {
      const auto& s = e.space;
      const double kappa = einstein_constant(s.model).kappa;
      const double c = normalize_ricci(s.model).scale.value();
      const double c2_expected = (0.25 * s.k + s.m) / (s.k + s.m);
      const double lower = lower_entropy_bound(s.n);
      const double upper = upper_entropy_bound(s.n);
      const double outside = std::max({0.0, lower - e.normalized_entropy, e.normalized_entropy - upper});
      const bool at_lower = e.bounds.tag == BoundTag::AtLower;
      const std::string prefix = "damek_ricci/k=" + std::to_string(s.k) + ",m=" + std::to_string(s.m) + "/";
      out.push_back(make_check(prefix + "einstein_constant", std::abs(kappa + (s.m + 0.25 * s.k)), 0.0));
      out.push_back(make_check(prefix + "scale_squared", std::abs(c * c - c2_expected), 1e-14));
      out.push_back(make_check(prefix + "entropy_within_bounds", outside, 1e-12,
                               fmt("Q_norm=%.15g", e.normalized_entropy)));
      out.push_back(make_check(prefix + "lower_equality_iff_k_eq_2m", at_lower == (s.k == 2 * s.m) ? 0 : 1, 0.0,
                               std::string(e.bounds.label())));
    }
  } else if (family == "negative_controls") {
    // These pass only when the corrupted input is rejected by a clear margin.
    const ModelParams p(4, 1.0, 2.0);
    RadialSolution sol = solve_eigen_ode(p, 0.5, 5.0, 1e-3);
    for (double& v : sol.phi) v += 0.01;
    const double required = 0.009 * radial_eigenvalue(p, 0.5);
    out.push_back(make_check("negative_controls/shifted_ode_solution", std::max(0.0, required - ode_residual(sol)),
                             0.0, "residual must be >= 0.009 mu"));
    const HypergeometricParams hp{{1.0, 0.0}, {1.0, 0.0}, 2.0};
    const double wrong = reflected_residual(hp, hp);
    out.push_back(make_check("negative_controls/reflection_with_unreflected_c", std::max(0.0, 1e-3 - wrong), 0.0,
                             fmt("wrong-parameter residual=%.3e", wrong)));
  } else {
    throw DomainError("unknown check family: " + family);
  }
}

}  // namespace

VerifyReport run_all(const VerifyConfig& config) {
  std::vector<std::string> families = check_families();
  if (config.filter) {
    if (std::find(families.begin(), families.end(), *config.filter) == families.end()) {
      throw DomainError("unknown check family: " + *config.filter);
    }
    families = {*config.filter};
  }
  VerifyReport report;
  for (const auto& family : families) run_family(family, config, report.results);
  std::stable_sort(report.results.begin(), report.results.end(),
                   [](const CheckResult& x, const CheckResult& y) { return x.name < y.name; });
  return report;
}

}  // namespace hhm
