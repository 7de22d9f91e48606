#include "xyent/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace xyent {
namespace {

constexpr double kEigenvalueFloor = -1e-9;
constexpr double kSpectrumTol = 1e-10;
constexpr double kXShapeTol = 1e-12;

double binary_entropy(double x) {
  double s = 0.0;
  for (double p : {x, 1.0 - x}) {
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

void check_density_matrix(const Eigen::MatrixXcd& rho) {
  if (rho.rows() != rho.cols()) {
    throw DomainError("density matrix must be square");
  }
  if (std::abs(rho.trace().real() - 1.0) > 1e-8 ||
      std::abs(rho.trace().imag()) > 1e-8) {
    throw DomainError("density matrix must have unit trace");
  }
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-8) {
    throw DomainError("density matrix must be Hermitian");
  }
}

const Eigen::Matrix4d& sigma_yy() {
  // sigma^y (x) sigma^y is real: anti-diagonal (-1, 1, 1, -1).
  static const Eigen::Matrix4d m = [] {
    Eigen::Matrix4d yy = Eigen::Matrix4d::Zero();
    yy(0, 3) = yy(3, 0) = -1.0;
    yy(1, 2) = yy(2, 1) = 1.0;
    return yy;
  }();
  return m;
}

}  // namespace

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
  check_density_matrix(rho);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      rho, Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (double p : solver.eigenvalues()) {
    if (p < kEigenvalueFloor) {
      std::ostringstream msg;
      msg << "density matrix eigenvalue " << p << " below positivity floor";
      throw PositivityError(msg.str());
    }
    if (p > 0.0) entropy -= p * std::log2(p);
  }
  return entropy;
}

double von_neumann_entropy(const OneSiteState& state) {
  double entropy = 0.0;
  for (double p : state.eigenvalues()) {
    if (p < kEigenvalueFloor) throw PositivityError("one-site eigenvalue < 0");
    if (p > 0.0) entropy -= p * std::log2(p);
  }
  return entropy;
}

double von_neumann_entropy(const TwoSiteState& state) {
  double entropy = 0.0;
  for (double p : state.eigenvalues()) {
    if (p < kEigenvalueFloor) throw PositivityError("two-site eigenvalue < 0");
    if (p > 0.0) entropy -= p * std::log2(p);
  }
  return entropy;
}

Eigen::Matrix4cd spin_flip(const Eigen::Matrix4cd& rho) {
  return sigma_yy() * rho.conjugate() * sigma_yy();
}

double concurrence_general(const Eigen::Matrix4cd& rho) {
  check_density_matrix(rho);
  const Eigen::Matrix4cd product = rho * spin_flip(rho);
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(product, false);
  if (solver.info() != Eigen::Success) {
    throw SpectrumError("eigenvalue iteration for rho rho~ did not converge");
  }
  std::array<double, 4> roots{};
  for (int i = 0; i < 4; ++i) {
    const std::complex<double> ev = solver.eigenvalues()(i);
    if (std::abs(ev.imag()) > kSpectrumTol || ev.real() < -kSpectrumTol) {
      std::ostringstream msg;
      msg << "rho rho~ eigenvalue " << ev.real() << " + " << ev.imag()
          << "i is not real nonnegative";
      throw SpectrumError(msg.str());
    }
    roots[static_cast<std::size_t>(i)] = std::sqrt(std::max(ev.real(), 0.0));
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  const double c = roots[0] - roots[1] - roots[2] - roots[3];
  return std::clamp(c, 0.0, 1.0);
}

double concurrence_x_state(const Eigen::Matrix4cd& rho) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) continue;
      if (std::abs(rho(i, j)) > kXShapeTol) {
        std::ostringstream msg;
        msg << "entry (" << i << ", " << j << ") = " << std::abs(rho(i, j))
            << " breaks the X-state sparsity";
        throw ShapeError(msg.str());
      }
    }
  }
  const double d0 = std::max(rho(0, 0).real(), 0.0);
  const double d1 = std::max(rho(1, 1).real(), 0.0);
  const double d2 = std::max(rho(2, 2).real(), 0.0);
  const double d3 = std::max(rho(3, 3).real(), 0.0);
  const double c = 2.0 * std::max(std::abs(rho(0, 3)) - std::sqrt(d1 * d2),
                                  std::abs(rho(1, 2)) - std::sqrt(d0 * d3));
  return std::clamp(c, 0.0, 1.0);
}

double concurrence_x_state(const TwoSiteState& state) {
  const double outer = std::abs(state.xx() - state.yy()) / 4.0;
  const double inner = std::abs(state.xx() + state.yy()) / 4.0;
  const double d0 = std::max(0.25 * (1.0 + 2.0 * state.z() + state.zz()), 0.0);
  const double d3 = std::max(0.25 * (1.0 - 2.0 * state.z() + state.zz()), 0.0);
  const double d12 = std::max(0.25 * (1.0 - state.zz()), 0.0);
  const double c = 2.0 * std::max(outer - d12, inner - std::sqrt(d0 * d3));
  return std::clamp(c, 0.0, 1.0);
}

double eof_from_concurrence(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    std::ostringstream msg;
    msg << "concurrence " << c << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

EntanglementResult two_site_measures(const TwoSiteState& state) {
  EntanglementResult result;
  result.entropy = von_neumann_entropy(state);
  result.concurrence = concurrence_x_state(state);
  result.eof = eof_from_concurrence(result.concurrence);
  return result;
}

}  // namespace xyent
