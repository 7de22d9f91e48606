#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "xyent/quadrature.hpp"

using namespace xyent;
using testsupport::kPi;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("analytically known integrals") {
  IntegrationSpec tight;
  tight.abs_tol = 1e-12;
  tight.rel_tol = 1e-12;

  CHECK(integrate([](double x) { return std::cos(0.5 * x); }, 0.0, kPi, tight) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(integrate([](double) { return 1.0; }, 0.0, kPi) ==
        doctest::Approx(kPi).epsilon(1e-13));
}

TEST_CASE("integrand with a removable endpoint singularity") {
  // (1 + cos phi)/sqrt(2 + 2 cos phi) equals cos(phi/2) away from phi = pi.
  auto f = [](double phi) {
    return (1.0 + std::cos(phi)) / std::sqrt(2.0 + 2.0 * std::cos(phi));
  };
  IntegrationSpec tight;
  tight.abs_tol = 1e-12;
  tight.rel_tol = 1e-12;
  const double value = integrate(f, 0.0, kPi, tight);
  CHECK(value == doctest::Approx(2.0).epsilon(1e-12));
  // Cross-check with the composite Simpson reference on a domain stopping
  // just short of the 0/0 endpoint; the excluded sliver is O(1e-19).
  const double reference = testsupport::simpson(f, 0.0, kPi - 1e-9);
  CHECK(std::abs(value - reference) < 1e-9);
}

TEST_CASE("linearity on random polynomials") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  const IntegrationSpec spec;
  for (int trial = 0; trial < 10; ++trial) {
    std::array<double, 7> ca{}, cb{};
    for (auto& c : ca) c = coeff(rng);
    for (auto& c : cb) c = coeff(rng);
    auto poly = [](const std::array<double, 7>& c, double x) {
      double v = 0.0;
      for (int p = 6; p >= 0; --p) v = v * x + c[static_cast<std::size_t>(p)];
      return v;
    };
    const double alpha = coeff(rng), beta = coeff(rng);
    const double combined = integrate(
        [&](double x) { return alpha * poly(ca, x) + beta * poly(cb, x); },
        0.0, kPi, spec);
    const double separate =
        alpha * integrate([&](double x) { return poly(ca, x); }, 0.0, kPi,
                          spec) +
        beta * integrate([&](double x) { return poly(cb, x); }, 0.0, kPi,
                         spec);
    CHECK(std::abs(combined - separate) <
          10.0 * std::max(spec.abs_tol, spec.rel_tol * std::abs(combined)));
  }
}

TEST_CASE("interval additivity") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> cut(0.3, 2.8);
  const IntegrationSpec spec;
  auto f = [](double x) { return std::exp(-x) * std::sin(3.0 * x) + x * x; };
  const double whole = integrate(f, 0.0, kPi, spec);
  for (int trial = 0; trial < 10; ++trial) {
    const double c = cut(rng);
    const double split =
        integrate(f, 0.0, c, spec) + integrate(f, c, kPi, spec);
    CHECK(std::abs(whole - split) < 10.0 * spec.abs_tol);
  }
}

TEST_CASE("empty interval and invalid bounds") {
  CHECK(integrate([](double) { return 1.0; }, 1.0, 1.0) == 0.0);
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 2.0, 1.0),
                  DomainError);
}

TEST_CASE("spec validation") {
  IntegrationSpec spec;
  spec.abs_tol = 0.0;
  spec.rel_tol = 0.0;
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, spec),
                  DomainError);
  spec = IntegrationSpec{};
  spec.max_subdivisions = 0;
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, spec),
                  DomainError);
  spec = IntegrationSpec{};
  spec.abs_tol = -1.0;
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, spec),
                  DomainError);
}

TEST_CASE("subdivision limit is an error, not a truncation") {
  IntegrationSpec spec;
  spec.abs_tol = 1e-14;
  spec.rel_tol = 0.0;
  spec.max_subdivisions = 3;
  CHECK_THROWS_AS(
      integrate([](double x) { return std::sin(500.0 * x * x); }, 0.0, kPi,
                spec),
      SubdivisionLimitError);
}

TEST_CASE("non-finite integrand values are rejected") {
  CHECK_THROWS_AS(
      integrate([](double x) { return x < 1.0 ? 1.0 : std::nan(""); }, 0.0,
                kPi),
      NonFiniteIntegrandError);
  CHECK_THROWS_AS(integrate([](double x) { return 1.0 / (x - x); }, 0.0, 1.0),
                  NonFiniteIntegrandError);
}

TEST_CASE("gapless corner of the kernel integrand converges") {
  // gamma = 1, lambda = 1, T = 0: omega -> 0 at phi = pi but the integrand
  // stays bounded; no internal domain split is needed.
  const ModelParams critical = ModelParams::ising(1.0);
  auto f = [&](double phi) {
    return testsupport::g_integrand_reference(phi, 0, critical);
  };
  const double value = integrate(f, 0.0, kPi) / kPi;
  CHECK(value == doctest::Approx(2.0 / kPi).epsilon(1e-11));
}

TEST_CASE("agreement with the Simpson reference on kernel integrands") {
  // 20-point (gamma, lambda, beta) grid, k in {0, 1, -1, 2}: the adaptive
  // result must match a 10^6-panel composite Simpson rule to 1e-9.
  std::vector<ModelParams> grid;
  for (double gamma : {0.25, 1.0}) {
    for (double lambda : {0.3, 0.9, 1.0, 1.2, 3.0}) {
      for (double beta : {1.5, beta_infinity}) {
        grid.push_back(ModelParams{gamma, lambda, beta});
      }
    }
  }
  REQUIRE(grid.size() == 20);
  for (const auto& params : grid) {
    for (int k : {0, 1, -1, 2}) {
      const double adaptive =
          integrate(
              [&](double phi) {
                return testsupport::g_integrand_reference(phi, k, params);
              },
              0.0, kPi) /
          kPi;
      const double reference = testsupport::g_reference(k, params, 200'000);
      CHECK(std::abs(adaptive - reference) < 1e-9);
    }
  }
}

TEST_SUITE_END();
