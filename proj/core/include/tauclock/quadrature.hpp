// quadrature.hpp: adaptive Gauss-Kronrod integration on finite intervals
//
// 15-point Kronrod extension of 7-point Gauss, refined by bisecting the
// interval with the largest error estimate.  The per-interval estimate is
// the QUADPACK-style rescaling of |K15 - G7| against the mean-removed
// integral, which is sharp for smooth integrands and conservative near
// integrable kinks.  Deterministic: identical inputs produce identical
// results bit for bit.

#pragma once

#include <functional>

namespace tauclock {

struct QuadratureOptions {
  double rel_tol = 1e-8;
  double abs_tol = 0.0;      // absolute floor; convergence needs either tol met
  int max_intervals = 4000;  // refinement budget (15 evaluations each)
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute
  int n_evaluations = 0;
  bool converged = false;
};

// Integrates f over [a, b] (a < b required, both finite).
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& options = {});

// As above but throws convergence_error instead of returning converged=false.
double integrate_checked(const std::function<double(double)>& f, double a,
                         double b, const QuadratureOptions& options = {});

}  // namespace tauclock
