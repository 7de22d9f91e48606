#pragma once

#include <Eigen/Dense>
#include <array>

#include "xyent/model.hpp"

namespace xyent {

// Single-site reduced density matrix (I + bx sigma^x + bz sigma^z) / 2.
// The sigma^y component vanishes because the Hamiltonian is real.
class OneSiteState {
 public:
  OneSiteState(double bx, double bz);

  double bx() const { return bx_; }
  double bz() const { return bz_; }
  Eigen::Matrix2d matrix() const;
  std::array<double, 2> eigenvalues() const;  // (1 +- |b|) / 2

 private:
  double bx_;
  double bz_;
};

// Two-site reduced density matrix
//   (I + z (sigma^z_0 + sigma^z_r) + xx XX + yy YY + zz ZZ) / 4
// in the basis |00>, |01>, |10>, |11> with |0> the sigma^z = +1 eigenstate.
// The matrix is real, X-shaped (nonzeros on the diagonal and anti-diagonal
// only) and invariant under swapping the two sites. Construction fails with
// PositivityError if an eigenvalue drops below -1e-9.
class TwoSiteState {
 public:
  TwoSiteState(double z, double xx, double yy, double zz);

  double z() const { return z_; }
  double xx() const { return xx_; }
  double yy() const { return yy_; }
  double zz() const { return zz_; }

  Eigen::Matrix4d matrix() const;
  std::array<double, 4> eigenvalues() const;

 private:
  double z_;
  double xx_;
  double yy_;
  double zz_;
};

// Thermal single-site state: bx = 0 by the phase-flip symmetry,
// bz = <sigma^z>.
OneSiteState one_site_thermal(const ModelParams& params,
                              const IntegrationSpec& spec = {});

// Single-site state of the symmetry-broken ground state of the Ising chain
// (gamma = 1, T = 0 only): bx = <sigma^x>, bz = <sigma^z>.
OneSiteState one_site_ground(const ModelParams& params,
                             const IntegrationSpec& spec = {});

// Thermal two-site state at separation r. At beta = inf this is the two-site
// state of the zero-temperature ensemble (the equal mixture over the ground
// space), not of a single symmetry-broken ground state; the broken-symmetry
// two-site state needs the <sigma^x sigma^z> cross correlator and is not
// provided.
TwoSiteState two_site_thermal(int r, const ModelParams& params,
                              const IntegrationSpec& spec = {});

// Same, reusing cached G values (g must cover separation r).
TwoSiteState two_site_thermal(int r, const GVector& g);

}  // namespace xyent
