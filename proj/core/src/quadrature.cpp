#include "xyent/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

namespace xyent {
namespace {

// 15-point Kronrod abscissae on [-1, 1]; the even entries form the
// embedded 7-point Gauss rule.
constexpr double kNodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};

constexpr double kKronrodW[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};

constexpr double kGaussW[4] = {0.1294849661688697, 0.2797053914892767,
                               0.3818300505051189, 0.4179591836734694};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

// One G7/K15 evaluation over [a, b] with the QUADPACK-style error estimate.
Panel evaluate_panel(const std::function<double(double)>& f, double a,
                     double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  auto eval = [&](double x) {
    const double y = f(x);
    if (!std::isfinite(y)) {
      std::ostringstream msg;
      msg << "integrand returned a non-finite value at x = " << x;
      throw NonFiniteIntegrandError(msg.str());
    }
    return y;
  };

  double fv[15];
  fv[14] = eval(center);
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    fv[2 * i] = eval(center - dx);
    fv[2 * i + 1] = eval(center + dx);
  }

  double resk = kKronrodW[7] * fv[14];
  double resabs = std::abs(resk);
  double resg = kGaussW[3] * fv[14];
  for (int i = 0; i < 7; ++i) {
    const double sum = fv[2 * i] + fv[2 * i + 1];
    resk += kKronrodW[i] * sum;
    resabs += kKronrodW[i] * (std::abs(fv[2 * i]) + std::abs(fv[2 * i + 1]));
    if (i % 2 == 1) resg += kGaussW[i / 2] * sum;
  }

  const double mean = 0.5 * resk;
  double resasc = kKronrodW[7] * std::abs(fv[14] - mean);
  for (int i = 0; i < 7; ++i) {
    resasc += kKronrodW[i] *
              (std::abs(fv[2 * i] - mean) + std::abs(fv[2 * i + 1] - mean));
  }

  double err = std::abs(resk - resg) * half;
  resasc *= half;
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  return Panel{a, b, resk * half, err};
}

}  // namespace

void IntegrationSpec::validate() const {
  if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0)) {
    throw DomainError("integration tolerances must be nonnegative");
  }
  if (abs_tol <= 0.0 && rel_tol <= 0.0) {
    throw DomainError(
        "at least one of abs_tol and rel_tol must be strictly positive");
  }
  if (max_subdivisions < 1) {
    throw DomainError("max_subdivisions must be at least 1");
  }
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const IntegrationSpec& spec) {
  spec.validate();
  if (!(a <= b)) throw DomainError("integration bounds require a <= b");
  if (a == b) return 0.0;

  std::priority_queue<Panel> panels;
  panels.push(evaluate_panel(f, a, b));
  double total_value = panels.top().value;
  double total_error = panels.top().error;

  auto tolerance = [&] {
    return std::max(spec.abs_tol, spec.rel_tol * std::abs(total_value));
  };

  int subdivisions = 0;
  while (total_error > tolerance()) {
    if (subdivisions >= spec.max_subdivisions) {
      std::ostringstream msg;
      msg << "tolerance not reached after " << subdivisions
          << " subdivisions (error estimate " << total_error << ")";
      throw SubdivisionLimitError(msg.str());
    }
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = evaluate_panel(f, worst.a, mid);
    const Panel right = evaluate_panel(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++subdivisions;
  }

  // Re-sum the panel values to shed the drift of incremental updates.
  double result = 0.0;
  while (!panels.empty()) {
    result += panels.top().value;
    panels.pop();
  }
  return result;
}

}  // namespace xyent
