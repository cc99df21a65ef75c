#pragma once

#include <stdexcept>
#include <string>

namespace hhm {

// Base of every error raised by the library. Callers that only care about
// success/failure catch this; the CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A series or iteration exhausted its term/iteration ceiling.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature could not reach the tolerance within the panel budget.
class MaxSubdivisions : public Error {
 public:
  using Error::Error;
};

// The model is not normalized to Ric = -(n-1) within tolerance.
class NotNormalized : public Error {
 public:
  using Error::Error;
};

// Einstein constant is >= 0, so no hyperbolic-type normalization exists.
class NonNegativeRicci : public Error {
 public:
  using Error::Error;
};

// (k, m) is not generalized Heisenberg data: d_m does not divide k.
class NotAdmissible : public Error {
 public:
  using Error::Error;
};

class StepTooLarge : public Error {
 public:
  using Error::Error;
};

class GridTooShort : public Error {
 public:
  using Error::Error;
};

}  // namespace hhm
