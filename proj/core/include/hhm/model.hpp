#pragma once

#include <functional>
#include <string_view>

#include "hhm/hypergeometric_params.hpp"

namespace hhm {

/// Parameters (n, ell, Q) of a harmonic manifold of hypergeometric type.
///
/// ell and Q carry inverse-length dimension: rescaling the metric by c^2
/// divides both by c. Parameter sets that violate the entropy bounds after
/// normalization are representable on purpose; classify_bounds reports them.
class ModelParams {
 public:
  /// Throws DomainError unless n >= 3, ell > 0 and q > 0 (all finite).
  ModelParams(int n, double ell, double q);

  int n() const noexcept { return n_; }
  double ell() const noexcept { return ell_; }
  double q() const noexcept { return q_; }

  /// Exponent 2Q/ell - (n-1) of the cosh factor in the density.
  double cosh_exponent() const noexcept;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  int n_;
  double ell_;
  double q_;
};

/// Ric = kappa * g.
struct EinsteinConstant {
  double kappa;
};

/// Metric rescaling g -> c^2 g, c > 0.
class ScaleFactor {
 public:
  explicit ScaleFactor(double c);
  double value() const noexcept { return c_; }

 private:
  double c_;
};

/// Theta(r) = coeff * sinh^{c1}(ell r/2) * cosh^{c2}(ell r/2) and the
/// matching mean curvature (ell/2)(c1 coth + c2 tanh).
class GeneralizedDensity {
 public:
  /// Throws DomainError unless coeff > 0, c1 > 0, c1 + c2 > 0, ell > 0.
  GeneralizedDensity(double coeff, double c1, double c2, double ell);

  double coeff() const noexcept { return coeff_; }
  double c1() const noexcept { return c1_; }
  double c2() const noexcept { return c2_; }
  double ell() const noexcept { return ell_; }

  double theta(double r) const;
  double sigma(double r) const;

 private:
  double coeff_;
  double c1_;
  double c2_;
  double ell_;
};

enum class BoundTag { BelowLower, AtLower, Interior, AtUpper, AboveUpper };

std::string_view to_string(BoundTag tag);

struct BoundClassification {
  BoundTag tag;
  double margin_low;   // Q - 2*sqrt(2)*(n-1)/3
  double margin_high;  // (n-1) - Q

  /// AtUpper is the real hyperbolic case.
  bool real_hyperbolic() const noexcept { return tag == BoundTag::AtUpper; }
  /// "AtUpper(RealHyperbolic)" style label.
  std::string_view label() const noexcept;
};

struct Normalization {
  ModelParams model;
  ScaleFactor scale;
};

inline constexpr double kDefaultBoundTolerance = 1e-9;

/// Volume density of the geodesic sphere. theta(p, 0) == 0.
double theta(const ModelParams& p, double r);

/// Mean curvature of the geodesic sphere of radius r > 0.
double sigma(const ModelParams& p, double r);

/// kappa = -(ell/2) (3Q - (n-1) ell), obtained from the r^2 coefficient of
/// Theta(r)/r^{n-1} via Ledger's formula.
EinsteinConstant einstein_constant(const ModelParams& p);

/// (n, ell/c, Q/c).
ModelParams rescale(const ModelParams& p, ScaleFactor c);

/// Rescale so that Ric = -(n-1). Throws NonNegativeRicci if kappa >= 0.
Normalization normalize_ricci(const ModelParams& p);

/// Entropy (ell + 2/ell)(n-1)/3 of the normalized model with scale ell.
double entropy_of_normalized(double ell, int n);

double lower_entropy_bound(int n);
double upper_entropy_bound(int n);

/// Compare Q of an already normalized model against
/// [2 sqrt(2)(n-1)/3, n-1]. Throws NotNormalized if |kappa + (n-1)| > tol.
BoundClassification classify_bounds(const ModelParams& p, double tol = kDefaultBoundTolerance);

/// Classification using scale-invariant bounds: Q is compared with
/// c * [2 sqrt(2)(n-1)/3, n-1] where c = sqrt(max(-kappa, 0)/(n-1)). For a
/// normalized model this agrees with classify_bounds; for kappa >= 0 the
/// upper bound collapses to zero and the model is AboveUpper.
BoundClassification classify_scaled_bounds(const ModelParams& p, double tol = kDefaultBoundTolerance);

/// a = (Q/2 + i lambda)/ell, b = conj(a), c = n/2.
HypergeometricParams hypergeometric_parameters(const ModelParams& p, double lambda);

/// z(r) = -sinh^2(ell r / 2).
double variable_map(const ModelParams& p, double r);

/// Generalized density form reproducing theta/sigma of the model.
GeneralizedDensity generalized_density(const ModelParams& p);

std::function<double(double)> density_from_mean_curvature(const GeneralizedDensity& g);
std::function<double(double)> mean_curvature_from_density(const GeneralizedDensity& g);

}  // namespace hhm
