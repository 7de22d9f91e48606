#pragma once

#include <Eigen/Dense>

#include "xyent/states.hpp"

namespace xyent {

// Entropy, concurrence and entanglement of formation for one two-site state.
struct EntanglementResult {
  double entropy = 0.0;      // bits
  double concurrence = 0.0;  // in [0, 1]
  double eof = 0.0;          // bits
};

// von Neumann entropy -sum_i p_i log2 p_i of a trace-1 Hermitian matrix.
// Eigenvalues in [-1e-9, 0) are clamped to zero; anything lower raises
// PositivityError.
double von_neumann_entropy(const Eigen::MatrixXcd& rho);
double von_neumann_entropy(const OneSiteState& state);
double von_neumann_entropy(const TwoSiteState& state);

// Double spin flip rho~ = (Y (x) Y) rho* (Y (x) Y).
Eigen::Matrix4cd spin_flip(const Eigen::Matrix4cd& rho);

// Wootters concurrence max(0, l1 - l2 - l3 - l4) where l_i are the
// descending square roots of the eigenvalues of rho rho~. The spectrum of
// the product is real nonnegative in theory; violations beyond 1e-10 raise
// SpectrumError.
double concurrence_general(const Eigen::Matrix4cd& rho);

// Closed form for X-shaped states:
//   C = 2 max(0, |rho_14| - sqrt(rho_22 rho_33), |rho_23| - sqrt(rho_11 rho_44)).
// The matrix overload rejects off-X entries above 1e-12 with ShapeError.
double concurrence_x_state(const Eigen::Matrix4cd& rho);
double concurrence_x_state(const TwoSiteState& state);

// Entanglement of formation h((1 + sqrt(1 - c^2)) / 2) with h the binary
// entropy in bits; DomainError outside [0, 1].
double eof_from_concurrence(double c);

// Bundle of all two-site measures for a state.
EntanglementResult two_site_measures(const TwoSiteState& state);

}  // namespace xyent
