#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "support.hpp"
#include "xyent/entanglement.hpp"

using namespace xyent;
using testsupport::kPi;

namespace {

Eigen::Matrix4cd bell_psi_minus() {
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  psi(1) = 1.0 / std::sqrt(2.0);
  psi(2) = -1.0 / std::sqrt(2.0);
  return psi * psi.adjoint();
}

}  // namespace

TEST_SUITE_BEGIN("entanglement");

TEST_CASE("entropy of pure and mixed qubits") {
  CHECK(von_neumann_entropy(OneSiteState(0.0, 1.0)) == doctest::Approx(0.0));
  CHECK(von_neumann_entropy(OneSiteState(0.0, 0.0)) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(von_neumann_entropy(Eigen::MatrixXcd(
            0.5 * Eigen::Matrix2cd::Identity())) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // Ground state at the critical field: eigenvalues (1 +- 2/pi)/2.
  const double peak =
      von_neumann_entropy(one_site_ground(ModelParams::ising(1.0)));
  CHECK(peak == doctest::Approx(0.6837604581337387).epsilon(1e-10));
}

TEST_CASE("entropy rejects bad matrices") {
  Eigen::Matrix2cd bad;
  bad << 1.1, 0.0, 0.0, -0.1;
  CHECK_THROWS_AS(von_neumann_entropy(Eigen::MatrixXcd(bad)), PositivityError);
  Eigen::Matrix2cd off_trace = 0.7 * Eigen::Matrix2cd::Identity();
  CHECK_THROWS_AS(von_neumann_entropy(Eigen::MatrixXcd(off_trace)),
                  DomainError);
  Eigen::Matrix2cd non_hermitian;
  non_hermitian << 0.5, 0.3, 0.0, 0.5;
  CHECK_THROWS_AS(von_neumann_entropy(Eigen::MatrixXcd(non_hermitian)),
                  DomainError);
}

TEST_CASE("matrix and coefficient entropy paths agree") {
  const TwoSiteState state = two_site_thermal(1, ModelParams::ising(1.2));
  const double via_matrix =
      von_neumann_entropy(Eigen::MatrixXcd(state.matrix()));
  CHECK(von_neumann_entropy(state) ==
        doctest::Approx(via_matrix).epsilon(1e-12));
}

TEST_CASE("spin flip") {
  const Eigen::Matrix4cd mixed = 0.25 * Eigen::Matrix4cd::Identity();
  CHECK((spin_flip(mixed) - mixed).cwiseAbs().maxCoeff() < 1e-15);

  Eigen::Matrix4cd up = Eigen::Matrix4cd::Zero();
  up(0, 0) = 1.0;
  Eigen::Matrix4cd down = Eigen::Matrix4cd::Zero();
  down(3, 3) = 1.0;
  CHECK((spin_flip(up) - down).cwiseAbs().maxCoeff() < 1e-15);

  const Eigen::Matrix4cd bell = bell_psi_minus();
  CHECK((spin_flip(bell) - bell).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("concurrence of reference states") {
  CHECK(concurrence_general(bell_psi_minus()) ==
        doctest::Approx(1.0).epsilon(1e-12));

  Eigen::Matrix4cd product = Eigen::Matrix4cd::Zero();
  product(0, 0) = 1.0;
  CHECK(concurrence_general(product) == 0.0);
  CHECK(concurrence_general(0.25 * Eigen::Matrix4cd::Identity()) == 0.0);
}

TEST_CASE("critical concurrences") {
  const TwoSiteState r1 = two_site_thermal(1, ModelParams::ising(1.0));
  const double c1 = concurrence_general(Eigen::Matrix4cd(r1.matrix()));
  CHECK(c1 == doctest::Approx(0.1946).epsilon(5e-4));
  CHECK(c1 == doctest::Approx(0.19460300462462).epsilon(1e-9));
  CHECK(concurrence_x_state(r1) == doctest::Approx(c1).epsilon(1e-12));

  const TwoSiteState r2 = two_site_thermal(2, ModelParams::ising(1.0));
  CHECK(concurrence_x_state(r2) ==
        doctest::Approx(0.00435433635297).epsilon(1e-8));

  const TwoSiteState product = two_site_thermal(1, ModelParams::ising(0.0));
  CHECK(concurrence_x_state(product) == 0.0);
}

TEST_CASE("x-state closed form matches the general route") {
  std::mt19937 rng(123456);
  for (int trial = 0; trial < 10'000; ++trial) {
    const Eigen::Matrix4cd rho = testsupport::random_x_state(rng);
    CHECK(std::abs(concurrence_x_state(rho) - concurrence_general(rho)) <
          1e-10);
  }
  // And on the states the model produces.
  for (const auto& params : testsupport::standard_grid()) {
    const GVector g(params, 2);
    for (int r : {1, 2}) {
      const TwoSiteState state = two_site_thermal(r, g);
      CHECK(std::abs(concurrence_x_state(state) -
                     concurrence_general(Eigen::Matrix4cd(state.matrix()))) <
            1e-10);
    }
  }
}

TEST_CASE("x-state shape guard") {
  Eigen::Matrix4cd rho = 0.25 * Eigen::Matrix4cd::Identity();
  rho(0, 1) = rho(1, 0) = 1e-9;
  CHECK_THROWS_AS(concurrence_x_state(rho), ShapeError);
}

TEST_CASE("local unitary invariance") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Matrix4cd rho = testsupport::random_density_matrix(rng);
    const Eigen::Matrix2cd u1 = testsupport::random_unitary(rng);
    const Eigen::Matrix2cd u2 = testsupport::random_unitary(rng);
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        u.block<2, 2>(2 * i, 2 * j) = u1(i, j) * u2;
      }
    }
    const Eigen::Matrix4cd rotated = u * rho * u.adjoint();
    CHECK(std::abs(concurrence_general(rotated) - concurrence_general(rho)) <
          1e-9);
  }
}

TEST_CASE("concurrence is convex") {
  std::mt19937 rng(2025);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Matrix4cd a = testsupport::random_density_matrix(rng);
    const Eigen::Matrix4cd b = testsupport::random_density_matrix(rng);
    const double mixed = concurrence_general(0.5 * (a + b));
    const double split =
        0.5 * concurrence_general(a) + 0.5 * concurrence_general(b);
    CHECK(mixed <= split + 1e-9);
  }
}

TEST_CASE("entanglement of formation") {
  CHECK(eof_from_concurrence(0.0) == 0.0);
  CHECK(eof_from_concurrence(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  // Frozen from an arbitrary-precision evaluation of h((1+sqrt(1-c^2))/2).
  CHECK(eof_from_concurrence(0.1946) ==
        doctest::Approx(0.0778529180955).epsilon(1e-9));
  CHECK_THROWS_AS(eof_from_concurrence(-0.01), DomainError);
  CHECK_THROWS_AS(eof_from_concurrence(1.01), DomainError);

  // Monotone nondecreasing in the concurrence.
  double prev = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double value = eof_from_concurrence(i / 1000.0);
    CHECK(value >= prev);
    prev = value;
  }
}

TEST_CASE("pure-state consistency of the measure stack") {
  // For pure two-qubit states the entanglement of formation through the
  // concurrence must equal the entropy of either reduced qubit.
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Vector4cd psi = testsupport::random_pure_state(rng);
    const Eigen::Matrix4cd rho = psi * psi.adjoint();
    const double eof = eof_from_concurrence(concurrence_general(rho));
    const Eigen::Matrix2cd reduced = testsupport::trace_out_second(rho);
    const double entropy = von_neumann_entropy(Eigen::MatrixXcd(reduced));
    CHECK(std::abs(eof - entropy) < 1e-9);
    const Eigen::Matrix2cd other = testsupport::trace_out_first(rho);
    CHECK(std::abs(von_neumann_entropy(Eigen::MatrixXcd(other)) - entropy) <
          1e-12);
  }
}

TEST_CASE("bundled measures") {
  const EntanglementResult result =
      two_site_measures(two_site_thermal(1, ModelParams::ising(1.0)));
  CHECK(result.concurrence == doctest::Approx(0.19460300462462).epsilon(1e-9));
  CHECK(result.eof ==
        doctest::Approx(eof_from_concurrence(result.concurrence)));
  CHECK(result.entropy > 0.0);
  CHECK(result.entropy <= 2.0);

  const EntanglementResult separable =
      two_site_measures(two_site_thermal(1, ModelParams::ising(0.0)));
  CHECK(separable.concurrence == 0.0);
  CHECK(separable.eof == 0.0);
}

TEST_SUITE_END();
