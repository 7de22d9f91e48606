#include "xyent/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace xyent {
namespace {

constexpr double kEigenvalueFloor = -1e-9;

}  // namespace

OneSiteState::OneSiteState(double bx, double bz) : bx_(bx), bz_(bz) {
  const double norm2 = bx * bx + bz * bz;
  if (norm2 > 1.0 + 1e-9) {
    std::ostringstream msg;
    msg << "Bloch vector length " << std::sqrt(norm2)
        << " exceeds 1; state not positive";
    throw PositivityError(msg.str());
  }
}

Eigen::Matrix2d OneSiteState::matrix() const {
  Eigen::Matrix2d m;
  m << 1.0 + bz_, bx_, bx_, 1.0 - bz_;
  return 0.5 * m;
}

std::array<double, 2> OneSiteState::eigenvalues() const {
  const double b = std::hypot(bx_, bz_);
  return {0.5 * (1.0 + b), 0.5 * (1.0 - b)};
}

TwoSiteState::TwoSiteState(double z, double xx, double yy, double zz)
    : z_(z), xx_(xx), yy_(yy), zz_(zz) {
  const auto evs = eigenvalues();
  const double lo = *std::min_element(evs.begin(), evs.end());
  if (lo < kEigenvalueFloor) {
    std::ostringstream msg;
    msg << "two-site state has eigenvalue " << lo
        << " below the positivity floor (z = " << z << ", xx = " << xx
        << ", yy = " << yy << ", zz = " << zz << ")";
    throw PositivityError(msg.str());
  }
}

Eigen::Matrix4d TwoSiteState::matrix() const {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = 1.0 + 2.0 * z_ + zz_;
  m(1, 1) = 1.0 - zz_;
  m(2, 2) = 1.0 - zz_;
  m(3, 3) = 1.0 - 2.0 * z_ + zz_;
  m(0, 3) = m(3, 0) = xx_ - yy_;
  m(1, 2) = m(2, 1) = xx_ + yy_;
  return 0.25 * m;
}

std::array<double, 4> TwoSiteState::eigenvalues() const {
  // The X shape splits into two 2x2 blocks spanned by {|00>, |11>} and
  // {|01>, |10>}.
  const double outer = std::hypot(2.0 * z_, xx_ - yy_);
  const double inner = std::abs(xx_ + yy_);
  return {0.25 * (1.0 + zz_ + outer), 0.25 * (1.0 + zz_ - outer),
          0.25 * (1.0 - zz_ + inner), 0.25 * (1.0 - zz_ - inner)};
}

OneSiteState one_site_thermal(const ModelParams& params,
                              const IntegrationSpec& spec) {
  return OneSiteState(0.0, transverse_magnetisation(params, spec));
}

OneSiteState one_site_ground(const ModelParams& params,
                             const IntegrationSpec& spec) {
  if (params.gamma != 1.0) {
    throw DomainError(
        "the broken-symmetry ground state is only available for the Ising "
        "chain (gamma = 1)");
  }
  if (!params.zero_temperature()) {
    throw DomainError("the ground state requires beta = inf");
  }
  return OneSiteState(x_magnetisation_ground(params),
                      transverse_magnetisation(params, spec));
}

TwoSiteState two_site_thermal(int r, const ModelParams& params,
                              const IntegrationSpec& spec) {
  return two_site_thermal(r, GVector(params, r, spec));
}

TwoSiteState two_site_thermal(int r, const GVector& g) {
  const CorrelatorSet c = correlators(r, g);
  return TwoSiteState(c.sz, c.xx, c.yy, c.zz);
}

}  // namespace xyent
