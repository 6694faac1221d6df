#pragma once

#include <stdexcept>
#include <string>

namespace lcst {

// Input/contract violations. CLI maps these to exit code 1.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical guard trips (aliasing, divergence, truncation). CLI exit code 2.
struct NumericalGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DeterminantError : ValidationError {
  using ValidationError::ValidationError;
};
struct DegenerateAngle : ValidationError {
  using ValidationError::ValidationError;
};
struct ZeroB : ValidationError {
  using ValidationError::ValidationError;
};
struct NonPowerOfTwo : ValidationError {
  using ValidationError::ValidationError;
};
struct NonPositiveScale : ValidationError {
  using ValidationError::ValidationError;
};
struct IncommensurateGrids : ValidationError {
  using ValidationError::ValidationError;
};
struct NonPositiveC : ValidationError {
  using ValidationError::ValidationError;
};
struct ZeroWindow : ValidationError {
  using ValidationError::ValidationError;
};
struct SignMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct ZeroCenter : ValidationError {
  using ValidationError::ValidationError;
};
struct BadParams : ValidationError {
  using ValidationError::ValidationError;
};
struct ParseError : ValidationError {
  using ValidationError::ValidationError;
};
struct NonUniformGrid : ValidationError {
  using ValidationError::ValidationError;
};
struct MetaMismatch : ValidationError {
  using ValidationError::ValidationError;
};

struct GridTooCoarse : NumericalGuardError {
  using NumericalGuardError::NumericalGuardError;
};
struct NotAdmissible : NumericalGuardError {
  using NumericalGuardError::NumericalGuardError;
};
struct NotRiesz : NumericalGuardError {
  using NumericalGuardError::NumericalGuardError;
};
struct DivergentMoment : NumericalGuardError {
  using NumericalGuardError::NumericalGuardError;
};
struct DecayViolation : NumericalGuardError {
  using NumericalGuardError::NumericalGuardError;
};
struct TruncationError : NumericalGuardError {
  using NumericalGuardError::NumericalGuardError;
};
struct IllConditioned : NumericalGuardError {
  using NumericalGuardError::NumericalGuardError;
};

}  // namespace lcst
