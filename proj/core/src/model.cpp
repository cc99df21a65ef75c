#include "hhm/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hhm/errors.hpp"
#include "text.hpp"

namespace hhm {

void HypergeometricParams::validate() const {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("hypergeometric parameter c must be positive, got " + detail::num(c));
  }
}

ModelParams::ModelParams(int n, double ell, double q) : n_(n), ell_(ell), q_(q) {
  if (n < 3) throw DomainError("model dimension must be >= 3, got " + std::to_string(n));
  if (!(ell > 0.0) || !std::isfinite(ell)) throw DomainError("ell must be positive and finite");
  if (!(q > 0.0) || !std::isfinite(q)) throw DomainError("q must be positive and finite");
}

double ModelParams::cosh_exponent() const noexcept { return 2.0 * q_ / ell_ - (n_ - 1); }

ScaleFactor::ScaleFactor(double c) : c_(c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("scale factor must be positive and finite");
}

GeneralizedDensity::GeneralizedDensity(double coeff, double c1, double c2, double ell)
    : coeff_(coeff), c1_(c1), c2_(c2), ell_(ell) {
  if (!(coeff > 0.0)) throw DomainError("density coefficient must be positive");
  if (!(c1 > 0.0)) throw DomainError("density exponent c1 must be positive");
  if (!(c1 + c2 > 0.0)) throw DomainError("density exponents must satisfy c1 + c2 > 0");
  if (!(ell > 0.0)) throw DomainError("density scale ell must be positive");
}

double GeneralizedDensity::theta(double r) const {
  if (r < 0.0) throw DomainError("theta: r must be nonnegative");
  if (r == 0.0) return 0.0;
  const double x = 0.5 * ell_ * r;
  return coeff_ * std::pow(std::sinh(x), c1_) * std::pow(std::cosh(x), c2_);
}

double GeneralizedDensity::sigma(double r) const {
  if (!(r > 0.0)) throw DomainError("sigma: r must be positive");
  const double x = 0.5 * ell_ * r;
  return 0.5 * ell_ * (c1_ / std::tanh(x) + c2_ * std::tanh(x));
}

std::string_view to_string(BoundTag tag) {
  switch (tag) {
    case BoundTag::BelowLower: return "BelowLower";
    case BoundTag::AtLower: return "AtLower";
    case BoundTag::Interior: return "Interior";
    case BoundTag::AtUpper: return "AtUpper";
    case BoundTag::AboveUpper: return "AboveUpper";
  }
  return "Unknown";
}

std::string_view BoundClassification::label() const noexcept {
  if (tag == BoundTag::AtUpper) return "AtUpper(RealHyperbolic)";
  return to_string(tag);
}

double theta(const ModelParams& p, double r) {
  if (r < 0.0 || std::isnan(r)) throw DomainError("theta: r must be nonnegative");
  if (r == 0.0) return 0.0;
  const double x = 0.5 * p.ell() * r;
  const int d = p.n() - 1;
  return std::pow(2.0 / p.ell(), d) * std::pow(std::sinh(x), d) * std::pow(std::cosh(x), p.cosh_exponent());
}

double sigma(const ModelParams& p, double r) {
  if (!(r > 0.0)) throw DomainError("sigma: r must be positive (sigma diverges at 0)");
  const double x = 0.5 * p.ell() * r;
  const double half = 0.5 * p.ell() * (p.n() - 1);
  const double t = std::tanh(x);
  return half / t + (p.q() - half) * t;
}

EinsteinConstant einstein_constant(const ModelParams& p) {
  return {-0.5 * p.ell() * (3.0 * p.q() - (p.n() - 1) * p.ell())};
}

ModelParams rescale(const ModelParams& p, ScaleFactor c) {
  return ModelParams(p.n(), p.ell() / c.value(), p.q() / c.value());
}

Normalization normalize_ricci(const ModelParams& p) {
  const double kappa = einstein_constant(p).kappa;
  if (!(kappa < 0.0)) {
    throw NonNegativeRicci("Einstein constant " + detail::num(kappa) +
                           " is not negative; no Ric = -(n-1) normalization exists");
  }
  ScaleFactor c(std::sqrt(-kappa / (p.n() - 1)));
  return {rescale(p, c), c};
}

double entropy_of_normalized(double ell, int n) {
  if (!(ell > 0.0) || !std::isfinite(ell)) throw DomainError("entropy_of_normalized: ell must be positive");
  if (n < 3) throw DomainError("entropy_of_normalized: n must be >= 3");
  return (ell + 2.0 / ell) * (n - 1) / 3.0;
}

double lower_entropy_bound(int n) { return 2.0 * std::numbers::sqrt2 * (n - 1) / 3.0; }

double upper_entropy_bound(int n) { return static_cast<double>(n - 1); }

namespace {

BoundClassification classify_against(double q, double lower, double upper, double tol) {
  BoundClassification out{BoundTag::Interior, q - lower, upper - q};
  if (std::abs(out.margin_high) <= tol) {
    out.tag = BoundTag::AtUpper;
  } else if (std::abs(out.margin_low) <= tol) {
    out.tag = BoundTag::AtLower;
  } else if (out.margin_low < 0.0) {
    out.tag = BoundTag::BelowLower;
  } else if (out.margin_high < 0.0) {
    out.tag = BoundTag::AboveUpper;
  }
  return out;
}

}  // namespace

BoundClassification classify_bounds(const ModelParams& p, double tol) {
  if (!(tol > 0.0)) throw DomainError("classify_bounds: tolerance must be positive");
  const double kappa = einstein_constant(p).kappa;
  const double target = -static_cast<double>(p.n() - 1);
  if (std::abs(kappa - target) > tol) {
    throw NotNormalized("model has kappa = " + detail::num(kappa) + ", expected " + detail::num(target));
  }
  return classify_against(p.q(), lower_entropy_bound(p.n()), upper_entropy_bound(p.n()), tol);
}

BoundClassification classify_scaled_bounds(const ModelParams& p, double tol) {
  if (!(tol > 0.0)) throw DomainError("classify_scaled_bounds: tolerance must be positive");
  const double kappa = einstein_constant(p).kappa;
  if (kappa < 0.0) return classify_bounds(normalize_ricci(p).model, tol);
  // Ric >= 0 admits no exponential volume growth, so any Q > 0 exceeds the
  // (collapsed) upper bound.
  return classify_against(p.q(), 0.0, 0.0, tol);
}

HypergeometricParams hypergeometric_parameters(const ModelParams& p, double lambda) {
  const double re = 0.5 * p.q() / p.ell();
  const double im = lambda / p.ell();
  return {{re, im}, {re, -im}, 0.5 * p.n()};
}

double variable_map(const ModelParams& p, double r) {
  if (r < 0.0 || std::isnan(r)) throw DomainError("variable_map: r must be nonnegative");
  const double s = std::sinh(0.5 * p.ell() * r);
  return -s * s;
}

GeneralizedDensity generalized_density(const ModelParams& p) {
  return GeneralizedDensity(std::pow(2.0 / p.ell(), p.n() - 1), p.n() - 1, p.cosh_exponent(), p.ell());
}

std::function<double(double)> density_from_mean_curvature(const GeneralizedDensity& g) {
  return [g](double r) { return g.theta(r); };
}

std::function<double(double)> mean_curvature_from_density(const GeneralizedDensity& g) {
  return [g](double r) { return g.sigma(r); };
}

}  // namespace hhm
