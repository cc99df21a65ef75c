#include "hhm/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hhm/errors.hpp"
#include "hhm/summation.hpp"
#include "text.hpp"

namespace hhm {

namespace {

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

using cplx = std::complex<double>;

// Sum of 2F1(a, b; c; w) for real |w| < 1. The tail after the last added
// term t_K is bounded by |t_{K+1}| / (1 - rho) with rho = max(ratio_K, |w|);
// the ratio of consecutive terms tends to |w|, so rho bounds all later
// ratios once k exceeds the parameter magnitudes.
EvalReport power_series(cplx a, cplx b, double c, double w, const SeriesOptions& opts) {
  EvalReport out{cplx(1.0, 0.0), 1, 0.0};
  if (w == 0.0) return out;

  const double abs_w = std::abs(w);
  const double regime = std::abs(a) + std::abs(b) + std::abs(c) + 2.0;
  CompensatedSum<double> re;
  CompensatedSum<double> im;
  re.add(1.0);
  cplx term(1.0, 0.0);

  for (std::int64_t k = 0; k < opts.max_terms; ++k) {
    const double kd = static_cast<double>(k);
    const cplx num = (a + kd) * (b + kd);
    term *= num / ((c + kd) * (kd + 1.0)) * w;
    if (term == cplx(0.0, 0.0)) {
      // Terminating series (a or b a nonpositive integer) or underflow.
      out.terms_used = k + 1;
      out.value = cplx(re.value(), im.value());
      out.est_error = 0.0;
      return out;
    }
    re.add(term.real());
    im.add(term.imag());

    const double next = kd + 1.0;
    const double ratio = std::abs((a + next) * (b + next)) / ((c + next) * (next + 1.0)) * abs_w;
    const double rho = std::max(ratio, abs_w);
    if (next >= regime && rho < 1.0) {
      const double tail = std::abs(term) * ratio / (1.0 - rho);
      const cplx sum(re.value(), im.value());
      if (tail <= opts.tol * std::max(1.0, std::abs(sum))) {
        out.value = sum;
        out.terms_used = k + 2;
        out.est_error = tail;
        return out;
      }
    }
  }
  throw NoConvergence("2F1 series did not converge within " + std::to_string(opts.max_terms) +
                      " terms (w = " + detail::num(w) + ")");
}

void check_options(const SeriesOptions& opts) {
  if (!(opts.tol > 0.0)) throw DomainError("series tolerance must be positive");
  if (opts.max_terms <= 0) throw DomainError("series term ceiling must be positive");
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("gamma_fn: x must be positive");
  if (x < 0.5) return gamma_fn(x + 1.0) / x;
  const double xm = x - 1.0;
  double acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) acc += kLanczos[i] / (xm + static_cast<double>(i));
  const double t = xm + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, xm + 0.5) * std::exp(-t) * acc;
}

double sphere_surface_constant(int n) {
  if (n < 2) throw DomainError("sphere_surface_constant: n must be >= 2");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / gamma_fn(0.5 * n);
}

EvalReport gauss_2f1_series(const HypergeometricParams& hp, double z, const SeriesOptions& opts) {
  hp.validate();
  check_options(opts);
  if (!(std::abs(z) < 1.0)) throw DomainError("gauss_2f1_series: requires |z| < 1");
  return power_series(hp.a, hp.b, hp.c, z, opts);
}

EvalReport gauss_2f1(const HypergeometricParams& hp, double z, const SeriesOptions& opts) {
  hp.validate();
  check_options(opts);
  if (z > 0.0 || std::isnan(z)) throw DomainError("gauss_2f1: requires z <= 0");
  if (z == 0.0) return {cplx(1.0, 0.0), 0, 0.0};

  const double one_minus_z = 1.0 - z;
  const double w = -z / one_minus_z;
  EvalReport inner = power_series(hp.a, cplx(hp.c, 0.0) - hp.b, hp.c, w, opts);
  const cplx prefactor = std::exp(-hp.a * std::log(one_minus_z));
  inner.value *= prefactor;
  inner.est_error *= std::abs(prefactor);
  return inner;
}

EvalReport spherical_function_report(const ModelParams& p, double lambda, double r, const SeriesOptions& opts) {
  if (r < 0.0 || std::isnan(r)) throw DomainError("spherical_function: r must be nonnegative");
  if (r == 0.0) return {cplx(1.0, 0.0), 0, 0.0};
  return gauss_2f1(hypergeometric_parameters(p, lambda), variable_map(p, r), opts);
}

double spherical_function(const ModelParams& p, double lambda, double r, const SeriesOptions& opts) {
  return spherical_function_report(p, lambda, r, opts).value.real();
}

}  // namespace hhm
