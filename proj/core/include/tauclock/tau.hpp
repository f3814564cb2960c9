// tau.hpp: volume-averaged fluctuation strength of a spherical clock
//
// tau is the growth rate of the clock-time variance, <delta_t^2> = tau * t.
// For a uniform sphere of radius R the double volume average of the kernel
// reduces exactly to one dimension through the pair-distance density of two
// independent uniform points in a ball, so
//
//   tau = tau_max * F(rho),   F(rho) = integral of p(u; rho) f(u) du,
//
// with rho = R/sigma, u = r/sigma, and f the dimensionless kernel shape.
// Everything is computed in these dimensionless variables; the SI value of
// tau_max (1e-65 s and below) multiplies in only at the end.

#pragma once

#include <cstdint>

#include "tauclock/constants.hpp"
#include "tauclock/params.hpp"

namespace tauclock {

enum class ClockShape { Sphere };

struct ClockGeometry {
  double radius_m = 0.0;
  ClockShape shape = ClockShape::Sphere;

  static ClockGeometry sphere(double radius_m);
};

enum class TauMethod { Quadrature, MonteCarlo, AsymptoticSmall, AsymptoticLarge };

const char* to_string(TauMethod method);

struct TauResult {
  double tau_s = 0.0;
  TauMethod method = TauMethod::Quadrature;
  double stderr_s = 0.0;          // 0 for deterministic methods
  std::uint64_t n_samples = 0;    // Monte Carlo only
};

// Distance density of two independent uniform points in a ball of radius R:
// p(r) = (3 r^2 / R^3) (1 - 3r/(4R) + r^3/(16 R^3)) on [0, 2R], 0 beyond.
double pair_distance_density(double r_m, double radius_m);

// Plateau value tau_max = D(0)/c^4, reached for R << sigma.
double tau_max(const ModelParams& params, const PhysicalConstants& constants = {});

// Dimensionless profile F(rho) = tau/tau_max, by adaptive quadrature with
// relative tolerance 1e-8.  The CSL domain is truncated at u = min(2 rho, 60):
// the shape is below 1e-390 past u = 60, so the discarded mass is far under
// the tolerance.  Throws convergence_error if the tolerance is not reached.
double tau_shape_integral(ModelKind kind, double rho);

TauResult tau_quadrature(const ModelParams& params, const ClockGeometry& geom,
                         const PhysicalConstants& constants = {});

// Independent oracle: averages f over n uniformly sampled point pairs in the
// sphere.  Deterministic for a fixed seed regardless of how the work is
// scheduled; requires n >= 1000.
TauResult tau_monte_carlo(const ModelParams& params, const ClockGeometry& geom,
                          std::uint64_t n, std::uint64_t seed,
                          const PhysicalConstants& constants = {});

// Closed-form plateau tau_max, valid for R <= sigma; rejects R/sigma > 1.
TauResult tau_asymptotic_small(const ModelParams& params, const ClockGeometry& geom,
                               const PhysicalConstants& constants = {});

// Large-radius closed forms, valid for R >= 10 sigma (rejected below):
//   CSL: tau_max * 6 sqrt(pi) / rho^3
//   DP:  tau_max * 6 sqrt(pi) / (5 rho)
TauResult tau_asymptotic_large(const ModelParams& params, const ClockGeometry& geom,
                               const PhysicalConstants& constants = {});

// delta_t = sqrt(tau * t), the RMS clock-time fluctuation after time t.
double delta_t(double tau_s, double t_s);

}  // namespace tauclock
