// Shared test helpers: an independent composite-Simpson reference
// integrator, a test-side rewrite of the correlation-kernel integrand, and
// random state generators. These deliberately avoid the library's own
// quadrature and assembly paths so they can serve as oracles for them.
#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>

#include "xyent/model.hpp"

namespace testsupport {

inline constexpr double kPi = std::numbers::pi;

// Fixed-grid composite Simpson rule with n panels (n even).
template <typename F>
double simpson(F&& f, double a, double b, long long n = 1'000'000) {
  if (n % 2 == 1) ++n;
  const double h = (b - a) / static_cast<double>(n);
  double odd = 0.0, even = 0.0;
  for (long long i = 1; i < n; i += 2) odd += f(a + i * h);
  for (long long i = 2; i < n; i += 2) even += f(a + i * h);
  return h / 3.0 * (f(a) + 4.0 * odd + 2.0 * even + f(b));
}

// The correlation-kernel integrand written directly from the formula,
// independent of the library's implementation. The omega -> 0 point is
// extended by its bounded limit.
inline double g_integrand_reference(double phi, int k,
                                    const xyent::ModelParams& p) {
  const double omega = std::sqrt(std::pow(p.gamma * p.lambda * std::sin(phi), 2) +
                                 std::pow(1.0 + p.lambda * std::cos(phi), 2));
  const double prefactor =
      std::cos(k * phi) * (1.0 + p.lambda * std::cos(phi)) -
      p.gamma * p.lambda * std::sin(k * phi) * std::sin(phi);
  if (std::isinf(p.beta)) {
    if (omega == 0.0) return 0.0;
    return prefactor / omega;
  }
  if (omega < 1e-300) return prefactor * 0.5 * p.beta;
  return prefactor * std::tanh(0.5 * p.beta * omega) / omega;
}

// Simpson-based G_k, the stated oracle for the quadrature-backed kernel.
inline double g_reference(int k, const xyent::ModelParams& p,
                          long long panels = 1'000'000) {
  return simpson([&](double phi) { return g_integrand_reference(phi, k, p); },
                 0.0, kPi, panels) /
         kPi;
}

// 27-point parameter grid shared by the structural and oracle tests.
inline std::vector<xyent::ModelParams> standard_grid() {
  std::vector<xyent::ModelParams> grid;
  for (double gamma : {0.0, 0.5, 1.0}) {
    for (double lambda : {0.5, 1.0, 1.5}) {
      for (double beta : {1.0, 2.0, xyent::beta_infinity}) {
        grid.push_back(xyent::ModelParams{gamma, lambda, beta});
      }
    }
  }
  return grid;
}

// Random two-qubit pure state, Haar-ish via normalized Gaussian amplitudes.
inline Eigen::Vector4cd random_pure_state(std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  Eigen::Vector4cd psi;
  for (int i = 0; i < 4; ++i) psi(i) = {gauss(rng), gauss(rng)};
  psi.normalize();
  return psi;
}

// Random single-qubit unitary from a QR-like construction.
inline Eigen::Matrix2cd random_unitary(std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  Eigen::Matrix2cd m;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) m(i, j) = {gauss(rng), gauss(rng)};
  }
  const Eigen::HouseholderQR<Eigen::Matrix2cd> qr(m);
  Eigen::Matrix2cd q = qr.householderQ();
  Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 2; ++i) {
    const std::complex<double> d = r(i, i);
    q.col(i) *= d / std::abs(d);
  }
  return q;
}

// Random full-rank two-qubit density matrix.
inline Eigen::Matrix4cd random_density_matrix(std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  Eigen::Matrix4cd a;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) a(i, j) = {gauss(rng), gauss(rng)};
  }
  Eigen::Matrix4cd rho = a * a.adjoint();
  rho /= rho.trace();
  return rho;
}

// Random valid X-shaped density matrix with complex anti-diagonal phases.
inline Eigen::Matrix4cd random_x_state(std::mt19937& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::array<double, 4> diag;
  double sum = 0.0;
  for (auto& d : diag) {
    d = uni(rng) + 1e-6;
    sum += d;
  }
  for (auto& d : diag) d /= sum;
  const double m14 = uni(rng) * std::sqrt(diag[0] * diag[3]);
  const double m23 = uni(rng) * std::sqrt(diag[1] * diag[2]);
  const double ph14 = 2.0 * kPi * uni(rng);
  const double ph23 = 2.0 * kPi * uni(rng);
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (int i = 0; i < 4; ++i) rho(i, i) = diag[static_cast<std::size_t>(i)];
  rho(0, 3) = std::polar(m14, ph14);
  rho(3, 0) = std::conj(rho(0, 3));
  rho(1, 2) = std::polar(m23, ph23);
  rho(2, 1) = std::conj(rho(1, 2));
  return rho;
}

// Partial trace over the second qubit of a two-qubit matrix.
inline Eigen::Matrix2cd trace_out_second(const Eigen::Matrix4cd& rho) {
  Eigen::Matrix2cd out;
  out(0, 0) = rho(0, 0) + rho(1, 1);
  out(0, 1) = rho(0, 2) + rho(1, 3);
  out(1, 0) = rho(2, 0) + rho(3, 1);
  out(1, 1) = rho(2, 2) + rho(3, 3);
  return out;
}

inline Eigen::Matrix2cd trace_out_first(const Eigen::Matrix4cd& rho) {
  Eigen::Matrix2cd out;
  out(0, 0) = rho(0, 0) + rho(2, 2);
  out(0, 1) = rho(0, 1) + rho(2, 3);
  out(1, 0) = rho(1, 0) + rho(3, 2);
  out(1, 1) = rho(1, 1) + rho(3, 3);
  return out;
}

}  // namespace testsupport
