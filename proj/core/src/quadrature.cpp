#include "tauclock/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "tauclock/errors.hpp"

namespace tauclock {

namespace {

// 15-point Kronrod extension of 7-point Gauss on [-1, 1].  Abscissae are
// the positive half; even indices are Kronrod-only points, odd indices are
// the embedded Gauss points, index 7 is the midpoint.
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0000000000000000,
};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278,
};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767,
    0.3818300505051189, 0.4179591836734694,
};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
};

struct SmallerError {
  bool operator()(const Panel& lhs, const Panel& rhs) const {
    return lhs.error < rhs.error;
  }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double fv1[7];
  double fv2[7];
  const double fc = f(center);

  double resg = kWg[3] * fc;
  double resk = kWgk[7] * fc;
  double resabs = std::abs(resk);
  for (int j = 0; j < 3; ++j) {
    const int jk = 2 * j + 1;  // embedded Gauss points
    const double dx = half * kXgk[jk];
    fv1[jk] = f(center - dx);
    fv2[jk] = f(center + dx);
    const double fsum = fv1[jk] + fv2[jk];
    resg += kWg[j] * fsum;
    resk += kWgk[jk] * fsum;
    resabs += kWgk[jk] * (std::abs(fv1[jk]) + std::abs(fv2[jk]));
  }
  for (int j = 0; j < 4; ++j) {
    const int jk = 2 * j;  // Kronrod-only points
    const double dx = half * kXgk[jk];
    fv1[jk] = f(center - dx);
    fv2[jk] = f(center + dx);
    resk += kWgk[jk] * (fv1[jk] + fv2[jk]);
    resabs += kWgk[jk] * (std::abs(fv1[jk]) + std::abs(fv2[jk]));
  }

  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }

  Panel panel;
  panel.a = a;
  panel.b = b;
  panel.value = resk * half;
  resabs *= half;
  resasc *= half;

  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double uflow = std::numeric_limits<double>::min();
  if (resabs > uflow / (50.0 * eps)) {
    err = std::max(err, 50.0 * eps * resabs);
  }
  panel.error = err;
  return panel;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& options) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("integration bounds must be finite");
  }
  if (a > b) {
    throw std::invalid_argument("integration requires a <= b");
  }
  if (!(options.rel_tol > 0.0) && !(options.abs_tol > 0.0)) {
    throw std::invalid_argument("at least one of rel_tol, abs_tol must be > 0");
  }
  if (options.max_intervals < 1) {
    throw std::invalid_argument("max_intervals must be >= 1");
  }

  QuadratureResult result;
  if (a == b) {
    result.converged = true;
    return result;
  }

  std::priority_queue<Panel, std::vector<Panel>, SmallerError> heap;
  heap.push(evaluate_panel(f, a, b));
  int n_panels = 1;

  double total_value = heap.top().value;
  double total_error = heap.top().error;
  auto tolerance = [&](double value) {
    return std::max(options.abs_tol, options.rel_tol * std::abs(value));
  };

  while (total_error > tolerance(total_value) && n_panels < options.max_intervals) {
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval no longer splittable in double precision
      heap.push(worst);
      break;
    }
    const Panel left = evaluate_panel(f, worst.a, mid);
    const Panel right = evaluate_panel(f, mid, worst.b);
    heap.push(left);
    heap.push(right);
    ++n_panels;

    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
  }

  // Re-sum from the surviving panels; the incremental totals accumulate
  // cancellation error over many refinements.
  total_value = 0.0;
  total_error = 0.0;
  while (!heap.empty()) {
    total_value += heap.top().value;
    total_error += heap.top().error;
    heap.pop();
  }

  result.value = total_value;
  result.error_estimate = total_error;
  result.n_evaluations = 15 * (2 * n_panels - 1);
  result.converged = total_error <= tolerance(total_value);
  return result;
}

double integrate_checked(const std::function<double(double)>& f, double a,
                         double b, const QuadratureOptions& options) {
  const QuadratureResult result = integrate(f, a, b, options);
  if (!result.converged) {
    throw convergence_error(
        "quadrature did not reach the requested tolerance",
        result.error_estimate,
        std::max(options.abs_tol, options.rel_tol * std::abs(result.value)));
  }
  return result.value;
}

}  // namespace tauclock
