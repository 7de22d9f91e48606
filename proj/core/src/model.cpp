#include "xyent/model.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <sstream>

namespace xyent {
namespace {

constexpr double kPi = std::numbers::pi;

// Correlator entries may poke out of [-1, 1] by quadrature error only.
constexpr double kCorrelatorSlack = 1e-8;

double checked_entry(double v, const char* name) {
  if (std::abs(v) > 1.0 + kCorrelatorSlack) {
    std::ostringstream msg;
    msg << "correlator " << name << " = " << v
        << " is out of range; quadrature failure upstream";
    throw DomainError(msg.str());
  }
  return v;
}

// log H(n) with H(n) = 1^(n-1) 2^(n-2) ... (n-1)^1.
double log_h(int n) {
  double s = 0.0;
  for (int k = 1; k < n; ++k) s += (n - k) * std::log(static_cast<double>(k));
  return s;
}

}  // namespace

void ModelParams::validate() const {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw DomainError("gamma must lie in [0, 1]");
  }
  if (!(lambda >= 0.0)) throw DomainError("lambda must be nonnegative");
  if (!(beta > 0.0)) {
    throw DomainError("beta must be positive or infinite");
  }
}

double dispersion(double phi, const ModelParams& params) {
  return std::hypot(params.gamma * params.lambda * std::sin(phi),
                    1.0 + params.lambda * std::cos(phi));
}

double g_coefficient(int k, const ModelParams& params,
                     const IntegrationSpec& spec) {
  params.validate();
  const double gamma = params.gamma;
  const double lambda = params.lambda;
  const double beta = params.beta;
  const bool zero_t = params.zero_temperature();

  auto integrand = [=](double phi) {
    const double omega = std::hypot(gamma * lambda * std::sin(phi),
                                    1.0 + lambda * std::cos(phi));
    const double prefactor =
        std::cos(k * phi) * (1.0 + lambda * std::cos(phi)) -
        gamma * lambda * std::sin(k * phi) * std::sin(phi);
    if (omega < std::numeric_limits<double>::min()) {
      // Gap closes here; the full integrand stays bounded. At T = 0 the
      // only reachable zero is phi = pi where the prefactor vanishes too.
      return zero_t ? 0.0 : prefactor * 0.5 * beta;
    }
    const double thermal = zero_t ? 1.0 : std::tanh(0.5 * beta * omega);
    return prefactor * thermal / omega;
  };

  return integrate(integrand, 0.0, kPi, spec) / kPi;
}

GVector::GVector(const ModelParams& params, int r_max,
                 const IntegrationSpec& spec)
    : params_(params), r_max_(r_max) {
  if (r_max < 1) throw DomainError("GVector requires r_max >= 1");
  params.validate();
  values_.reserve(2 * r_max + 1);
  for (int k = -r_max; k <= r_max; ++k) {
    values_.push_back(g_coefficient(k, params, spec));
  }
}

double GVector::at(int k) const {
  if (k < -r_max_ || k > r_max_) {
    std::ostringstream msg;
    msg << "G_" << k << " requested but only |k| <= " << r_max_ << " cached";
    throw InsufficientGError(msg.str());
  }
  return values_[static_cast<std::size_t>(k + r_max_)];
}

GVector build_gvector(int r_max, const ModelParams& params,
                      const IntegrationSpec& spec) {
  return GVector(params, r_max, spec);
}

double transverse_magnetisation(const ModelParams& params,
                                const IntegrationSpec& spec) {
  return g_coefficient(0, params, spec);
}

double x_magnetisation_ground(const ModelParams& params) {
  if (params.gamma != 1.0) {
    throw DomainError(
        "<sigma^x> of the broken-symmetry ground state is only available for "
        "the Ising chain (gamma = 1)");
  }
  if (!(params.lambda >= 0.0)) throw DomainError("lambda must be nonnegative");
  if (params.lambda <= 1.0) return 0.0;
  const double inv = 1.0 / (params.lambda * params.lambda);
  return std::pow(1.0 - inv, 0.125);
}

namespace {

double toeplitz_determinant(int r, const GVector& g, int offset) {
  if (r < 1) throw DomainError("correlators require separation r >= 1");
  const int needed = std::max(std::abs(offset - (r - 1)), std::abs(offset + (r - 1)));
  if (needed > g.r_max()) {
    std::ostringstream msg;
    msg << "separation r = " << r << " needs G_k up to |k| = " << needed
        << " but the GVector caches only |k| <= " << g.r_max();
    throw InsufficientGError(msg.str());
  }
  Eigen::MatrixXd m(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      m(i, j) = g.at(i - j + offset);
    }
  }
  if (r == 1) return m(0, 0);
  return m.partialPivLu().determinant();
}

}  // namespace

double xx_correlator(int r, const GVector& g) {
  return toeplitz_determinant(r, g, -1);
}

double yy_correlator(int r, const GVector& g) {
  return toeplitz_determinant(r, g, +1);
}

double zz_correlator(int r, const GVector& g, double sz) {
  if (r < 1) throw DomainError("correlators require separation r >= 1");
  if (r > g.r_max()) {
    std::ostringstream msg;
    msg << "zz correlator at r = " << r << " exceeds cached range "
        << g.r_max();
    throw InsufficientGError(msg.str());
  }
  return sz * sz - g.at(r) * g.at(-r);
}

CorrelatorSet correlators(int r, const GVector& g) {
  CorrelatorSet set;
  set.r = r;
  set.sz = checked_entry(g.at(0), "<sigma^z>");
  set.sx = 0.0;
  set.xx = checked_entry(xx_correlator(r, g), "<sigma^x sigma^x>");
  set.yy = checked_entry(yy_correlator(r, g), "<sigma^y sigma^y>");
  set.zz = checked_entry(zz_correlator(r, g, set.sz), "<sigma^z sigma^z>");
  return set;
}

CorrelatorSet critical_correlators(int r) {
  if (r < 1) throw DomainError("correlators require separation r >= 1");
  const double rr = static_cast<double>(r);
  const double log_xx = rr * std::log(2.0 / kPi) +
                        2.0 * rr * (rr - 1.0) * std::log(2.0) +
                        4.0 * log_h(r) - log_h(2 * r);
  CorrelatorSet set;
  set.r = r;
  set.sz = 2.0 / kPi;
  set.sx = 0.0;
  set.xx = std::exp(log_xx);
  set.yy = -set.xx / (4.0 * rr * rr - 1.0);
  // G_r G_{-r} for the closed-form critical kernel G_k = (-1)^k/(pi(k+1/2)).
  const double gr_gmr = -4.0 / (kPi * kPi * (4.0 * rr * rr - 1.0));
  set.zz = set.sz * set.sz - gr_gmr;
  return set;
}

}  // namespace xyent
