#pragma once

#include <functional>

#include "xyent/errors.hpp"

namespace xyent {

// Tolerances and subdivision cap for adaptive integration. At least one of
// the two tolerances must be strictly positive; the cap is a hard error,
// never a silent truncation.
struct IntegrationSpec {
  double abs_tol = 1e-11;
  double rel_tol = 1e-11;
  int max_subdivisions = 2000;

  void validate() const;
};

// Integrate f over [a, b] with an adaptive Gauss-Kronrod (G7, K15) pair,
// bisecting the panel with the largest error estimate until the summed
// estimate drops below max(abs_tol, rel_tol * |I|).
//
// Throws NonFiniteIntegrandError if f returns NaN/inf anywhere, and
// SubdivisionLimitError if the tolerance is unreachable within
// max_subdivisions bisections.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const IntegrationSpec& spec = {});

}  // namespace xyent
