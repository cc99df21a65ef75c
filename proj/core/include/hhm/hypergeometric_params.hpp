#pragma once

#include <complex>

namespace hhm {

// Parameters of 2F1(a, b; c; z). When produced from a model with real
// spectral parameter lambda, b == conj(a).
struct HypergeometricParams {
  std::complex<double> a;
  std::complex<double> b;
  double c = 1.0;

  // Throws DomainError unless c > 0 (which also excludes nonpositive integers).
  void validate() const;
};

}  // namespace hhm
