#pragma once

#include <stdexcept>
#include <string>

namespace sjlab {

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cholesky pivot fell below tolerance: the matrix is outside the PD cone.
struct NotPositiveDefinite : NumericError {
  using NumericError::NumericError;
};

struct Singular : NumericError {
  using NumericError::NumericError;
};

struct NoConvergence : NumericError {
  using NumericError::NumericError;
};

// Series spectral-radius proxy reached 1: inputs coincident or too far apart.
struct Diverges : NumericError {
  using NumericError::NumericError;
};

struct DistanceOutOfRange : NumericError {
  using NumericError::NumericError;
};

struct NormalizationViolated : NumericError {
  using NumericError::NumericError;
};

struct StepOverflow : NumericError {
  using NumericError::NumericError;
};

// A domain-type invariant failed at construction.
struct InvariantViolation : NumericError {
  using NumericError::NumericError;
};

}  // namespace sjlab
