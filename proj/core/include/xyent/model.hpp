#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "xyent/errors.hpp"
#include "xyent/quadrature.hpp"

namespace xyent {

// Distinguished inverse temperature selecting the zero-temperature state.
inline constexpr double beta_infinity = std::numeric_limits<double>::infinity();

// Chain parameters: gamma interpolates between the isotropic (0) and Ising (1)
// couplings, lambda is the inverse strength of the transverse field, beta the
// inverse temperature.
struct ModelParams {
  double gamma = 1.0;
  double lambda = 1.0;
  double beta = beta_infinity;

  bool zero_temperature() const { return std::isinf(beta); }
  void validate() const;

  static ModelParams ising(double lambda, double beta = beta_infinity) {
    return ModelParams{1.0, lambda, beta};
  }
};

// Quasiparticle dispersion
//   omega_phi = sqrt((gamma lambda sin phi)^2 + (1 + lambda cos phi)^2).
double dispersion(double phi, const ModelParams& params);

// The fermionic correlation kernel
//   G_k = (1/pi) int_0^pi [cos(k phi) (1 + lambda cos phi)
//                          - gamma lambda sin(k phi) sin phi]
//                         tanh(beta omega_phi / 2) / omega_phi  dphi,
// with tanh(beta omega/2) == 1 at beta = inf. The integrand is extended by
// its bounded limit where omega vanishes.
double g_coefficient(int k, const ModelParams& params,
                     const IntegrationSpec& spec = {});

// Cache of G_k for k = -r_max .. r_max at fixed parameters; the raw material
// for the Toeplitz determinants below. Immutable after construction.
class GVector {
 public:
  GVector(const ModelParams& params, int r_max,
          const IntegrationSpec& spec = {});

  double at(int k) const;
  int r_max() const { return r_max_; }
  const ModelParams& params() const { return params_; }

 private:
  ModelParams params_;
  int r_max_;
  std::vector<double> values_;
};

GVector build_gvector(int r_max, const ModelParams& params,
                      const IntegrationSpec& spec = {});

// <sigma^z> = G_0, with the sign fixed so the lambda = 0, T = 0 state of
// aligned spins gives +1.
double transverse_magnetisation(const ModelParams& params,
                                const IntegrationSpec& spec = {});

// Order parameter <sigma^x> of the symmetry-broken ground state of the Ising
// chain: 0 for lambda <= 1 and (1 - lambda^-2)^(1/8) above. Defined for
// gamma = 1 only.
double x_magnetisation_ground(const ModelParams& params);

// <sigma^x_0 sigma^x_r>: r x r Toeplitz determinant with entries G_{i-j-1}.
double xx_correlator(int r, const GVector& g);

// <sigma^y_0 sigma^y_r>: r x r Toeplitz determinant with entries G_{i-j+1}.
double yy_correlator(int r, const GVector& g);

// <sigma^z_0 sigma^z_r> = <sigma^z>^2 - G_r G_{-r}.
double zz_correlator(int r, const GVector& g, double sz);

// One- and two-point correlators at a fixed separation.
struct CorrelatorSet {
  int r = 1;
  double sz = 0.0;
  double sx = 0.0;
  double xx = 0.0;
  double yy = 0.0;
  double zz = 0.0;
};

// Correlators at separation r from cached G values (thermal state, sx = 0).
// Entries further than 1e-8 outside [-1, 1] signal a quadrature failure and
// raise DomainError.
CorrelatorSet correlators(int r, const GVector& g);

// Closed forms at the Ising critical point (gamma = 1, lambda = 1, T = 0):
//   xx = (2/pi)^r 2^(2r(r-1)) H(r)^4 / H(2r),  H(n) = prod_{k<n} k^(n-k),
//   yy = -xx / (4r^2 - 1),  sz = 2/pi,
//   zz = sz^2 - G_r G_{-r} with G_k = (-1)^k / (pi (k + 1/2)).
// xx is evaluated in log space, so there is no overflow for large r.
CorrelatorSet critical_correlators(int r);

}  // namespace xyent
