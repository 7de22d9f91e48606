#pragma once

#include <stdexcept>
#include <string>

namespace xyent {

// Base class for every failure this library reports.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An argument is outside the domain an operation is defined on.
struct DomainError : Error {
  using Error::Error;
};

// Adaptive integration hit the subdivision cap before reaching tolerance.
struct SubdivisionLimitError : Error {
  using Error::Error;
};

// The integrand returned NaN or infinity.
struct NonFiniteIntegrandError : Error {
  using Error::Error;
};

// A correlator needs G_k values beyond the cached range.
struct InsufficientGError : Error {
  using Error::Error;
};

// A density matrix has an eigenvalue below the allowed floor.
struct PositivityError : Error {
  using Error::Error;
};

// The spectrum of rho * rho~ is not real nonnegative within tolerance.
struct SpectrumError : Error {
  using Error::Error;
};

// A matrix does not have the required X-shaped sparsity.
struct ShapeError : Error {
  using Error::Error;
};

// A chain size outside the dense-storage range was requested.
struct SizeError : Error {
  using Error::Error;
};

// A site index is out of range or repeated.
struct IndexError : Error {
  using Error::Error;
};

// A CSV or JSON input does not match the declared schema.
struct SchemaError : Error {
  using Error::Error;
};

}  // namespace xyent
