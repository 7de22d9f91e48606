#include "xyent/ed.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "xyent/entanglement.hpp"

namespace xyent {
namespace {

constexpr double kGroundDegeneracyTol = 1e-8;
constexpr double kStateTol = 1e-12;

int sites_from_dim(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim) {
    throw SizeError("state dimension is not a power of two");
  }
  return n;
}

}  // namespace

void ChainSpec::validate() const {
  if (n_sites < 2 || n_sites > 14) {
    std::ostringstream msg;
    msg << "chain of " << n_sites
        << " sites outside the dense range 2 <= N <= 14";
    throw SizeError(msg.str());
  }
  params.validate();
}

LatticeState::LatticeState(Eigen::MatrixXd rho) : rho_(std::move(rho)) {
  n_sites_ = sites_from_dim(rho_.rows());
  if (rho_.rows() != rho_.cols()) {
    throw SizeError("lattice state must be square");
  }
  if (std::abs(rho_.trace() - 1.0) > kStateTol) {
    throw DomainError("lattice state must have unit trace");
  }
  if ((rho_ - rho_.transpose()).cwiseAbs().maxCoeff() > kStateTol) {
    throw DomainError("lattice state must be symmetric");
  }
}

Eigensystem symmetric_eigensystem(const Eigen::MatrixXd& matrix) {
  const lapack_int n = static_cast<lapack_int>(matrix.rows());
  Eigensystem es;
  es.vectors = matrix;
  es.values.resize(n);
  const lapack_int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, es.vectors.data(), n,
                     es.values.data());
  if (info != 0) {
    std::ostringstream msg;
    msg << "dsyevd failed with info = " << info;
    throw SpectrumError(msg.str());
  }
  return es;
}

Eigen::MatrixXd build_hamiltonian(const ChainSpec& spec) {
  spec.validate();
  const int n = spec.n_sites;
  const long long dim = 1LL << n;
  const double gamma = spec.params.gamma;
  const double lambda = spec.params.lambda;

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  const double cxx = -0.5 * lambda * (1.0 + gamma);
  const double cyy = 0.5 * lambda * (1.0 - gamma);  // times (-1)^(s_j == s_j')
  for (int j = 0; j < n; ++j) {
    const int bit_j = n - 1 - j;
    const int bit_jp = n - 1 - ((j + 1) % n);
    const long long mask = (1LL << bit_j) | (1LL << bit_jp);
    for (long long s = 0; s < dim; ++s) {
      const int sj = static_cast<int>((s >> bit_j) & 1);
      const int sp = static_cast<int>((s >> bit_jp) & 1);
      const long long t = s ^ mask;
      h(t, s) += cxx + (sj == sp ? cyy : -cyy);
      h(s, s) += sj ? 1.0 : -1.0;  // -Z_j
    }
  }
  return h;
}

LatticeState thermal_state(const Eigen::MatrixXd& hamiltonian, double beta) {
  return thermal_state(symmetric_eigensystem(hamiltonian), beta);
}

LatticeState thermal_state(const Eigensystem& es, double beta) {
  if (!(beta > 0.0)) throw DomainError("beta must be positive or infinite");
  const Eigen::Index dim = es.values.size();
  const double e0 = es.values.minCoeff();

  Eigen::VectorXd weights(dim);
  if (std::isinf(beta)) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      weights(i) = (es.values(i) - e0 < kGroundDegeneracyTol) ? 1.0 : 0.0;
    }
  } else {
    weights = (-beta * (es.values.array() - e0)).exp();
  }
  weights /= weights.sum();

  Eigen::MatrixXd scaled = es.vectors * weights.cwiseSqrt().asDiagonal();
  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(dim, dim);
  rho.selfadjointView<Eigen::Lower>().rankUpdate(scaled);
  rho.triangularView<Eigen::StrictlyUpper>() = rho.transpose();
  // Remove the rounding drift so the trace is exactly one.
  rho /= rho.trace();
  return LatticeState(std::move(rho));
}

Eigen::MatrixXd reduce(const LatticeState& state, std::span<const int> sites) {
  const int n = state.n_sites();
  const int k = static_cast<int>(sites.size());
  if (k < 1 || k > n) throw IndexError("reduce needs between 1 and N sites");

  std::vector<int> site_bits;
  site_bits.reserve(sites.size());
  for (int site : sites) {
    if (site < 0 || site >= n) {
      std::ostringstream msg;
      msg << "site " << site << " outside chain of " << n << " sites";
      throw IndexError(msg.str());
    }
    const int bit = n - 1 - site;
    if (std::find(site_bits.begin(), site_bits.end(), bit) != site_bits.end()) {
      throw IndexError("sites passed to reduce must be distinct");
    }
    site_bits.push_back(bit);
  }

  std::vector<int> env_bits;
  for (int bit = n - 1; bit >= 0; --bit) {
    if (std::find(site_bits.begin(), site_bits.end(), bit) == site_bits.end()) {
      env_bits.push_back(bit);
    }
  }

  const long long sub_dim = 1LL << k;
  const long long env_dim = 1LL << (n - k);

  // Scatter tables: subsystem index / environment index -> full basis index.
  std::vector<long long> sub_scatter(sub_dim, 0);
  for (long long a = 0; a < sub_dim; ++a) {
    long long idx = 0;
    for (int q = 0; q < k; ++q) {
      if ((a >> (k - 1 - q)) & 1) idx |= 1LL << site_bits[q];
    }
    sub_scatter[a] = idx;
  }
  std::vector<long long> env_scatter(env_dim, 0);
  for (long long e = 0; e < env_dim; ++e) {
    long long idx = 0;
    for (int q = 0; q < n - k; ++q) {
      if ((e >> (n - k - 1 - q)) & 1) idx |= 1LL << env_bits[q];
    }
    env_scatter[e] = idx;
  }

  const Eigen::MatrixXd& rho = state.matrix();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(sub_dim, sub_dim);
  for (long long e = 0; e < env_dim; ++e) {
    const long long base = env_scatter[e];
    for (long long a = 0; a < sub_dim; ++a) {
      const long long ia = base | sub_scatter[a];
      for (long long b = 0; b < sub_dim; ++b) {
        out(a, b) += rho(ia, base | sub_scatter[b]);
      }
    }
  }
  return out;
}

std::vector<OracleRow> oracle_report(const ChainSpec& spec, int r_max) {
  return oracle_report(spec, r_max, symmetric_eigensystem(build_hamiltonian(spec)));
}

std::vector<OracleRow> oracle_report(const ChainSpec& spec, int r_max,
                                     const Eigensystem& es) {
  spec.validate();
  const int n = spec.n_sites;
  if (r_max < 1 || 2 * r_max >= n) {
    std::ostringstream msg;
    msg << "oracle separations must satisfy 1 <= r < N/2 (got r_max = "
        << r_max << ", N = " << n << ")";
    throw DomainError(msg.str());
  }

  const LatticeState state = thermal_state(es, spec.params.beta);

  Eigen::Matrix2d one = Eigen::Matrix2d::Zero();
  for (int j = 0; j < n; ++j) {
    const int sites[1] = {j};
    one += reduce(state, sites);
  }
  one /= n;
  const double sz = one(0, 0) - one(1, 1);
  const double entropy1 = von_neumann_entropy(Eigen::MatrixXcd(one));

  std::vector<OracleRow> rows;
  rows.reserve(static_cast<std::size_t>(r_max));
  for (int r = 1; r <= r_max; ++r) {
    Eigen::Matrix4d two = Eigen::Matrix4d::Zero();
    for (int j = 0; j < n; ++j) {
      const int sites[2] = {j, (j + r) % n};
      two += reduce(state, sites);
    }
    two /= n;
    OracleRow row;
    row.r = r;
    row.sz = sz;
    row.entropy1 = entropy1;
    row.xx = 2.0 * (two(0, 3) + two(1, 2));
    row.yy = 2.0 * (two(1, 2) - two(0, 3));
    row.zz = two(0, 0) - two(1, 1) - two(2, 2) + two(3, 3);
    row.concurrence = concurrence_general(Eigen::Matrix4cd(two));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace xyent
