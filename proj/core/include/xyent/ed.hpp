#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "xyent/model.hpp"

namespace xyent {

// Finite periodic chain small enough for dense 2^N storage.
struct ChainSpec {
  int n_sites = 8;
  ModelParams params;

  void validate() const;  // SizeError outside 2 <= N <= 14
};

// Dense 2^N x 2^N state of the full chain: a canonical-ensemble matrix or
// the projector mixture over a (possibly degenerate) ground space.
class LatticeState {
 public:
  explicit LatticeState(Eigen::MatrixXd rho);

  const Eigen::MatrixXd& matrix() const { return rho_; }
  int n_sites() const { return n_sites_; }

 private:
  Eigen::MatrixXd rho_;
  int n_sites_;
};

// Full eigendecomposition of a real symmetric matrix (LAPACK dsyevd),
// eigenvalues ascending.
struct Eigensystem {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // columns
};
Eigensystem symmetric_eigensystem(const Eigen::MatrixXd& matrix);

// H = -sum_j [ (lambda/2)((1+gamma) X_j X_{j+1} + (1-gamma) Y_j Y_{j+1})
//              + Z_j ]  with cyclic boundary, real in the computational
// basis. Site j occupies bit N-1-j, so site 0 is the most significant bit.
Eigen::MatrixXd build_hamiltonian(const ChainSpec& spec);

// exp(-beta H) / Z via full eigendecomposition. At beta = inf, the
// equal-weight mixture over all eigenstates within 1e-8 of the minimum
// energy.
LatticeState thermal_state(const Eigen::MatrixXd& hamiltonian, double beta);
LatticeState thermal_state(const Eigensystem& es, double beta);

// Partial trace onto the listed sites (distinct, in chain range); the first
// listed site becomes the most significant qubit of the result.
Eigen::MatrixXd reduce(const LatticeState& state, std::span<const int> sites);

// Translation-averaged one- and two-site quantities for comparison against
// the thermodynamic-limit formulas.
struct OracleRow {
  int r = 0;
  double sz = 0.0;
  double xx = 0.0;
  double yy = 0.0;
  double zz = 0.0;
  double entropy1 = 0.0;
  double concurrence = 0.0;
};

std::vector<OracleRow> oracle_report(const ChainSpec& spec, int r_max);
std::vector<OracleRow> oracle_report(const ChainSpec& spec, int r_max,
                                     const Eigensystem& es);

}  // namespace xyent
