#include "tauclock/tau.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tauclock/errors.hpp"
#include "tauclock/kernels.hpp"
#include "tauclock/quadrature.hpp"
#include "tauclock/rng.hpp"

namespace tauclock {

namespace {

constexpr double kCslDomainCut = 60.0;  // f_CSL(60) < 1e-390
constexpr double kAsymptoticLargeGuard = 10.0;

// Dimensionless pair-distance density for a unit-radius ball, stretched to
// radius rho: q(u; rho) = (3u^2/rho^3)(1 - 3u/(4 rho) + u^3/(16 rho^3)).
double pair_density_dimensionless(double u, double rho) {
  if (u <= 0.0 || u >= 2.0 * rho) return 0.0;
  const double w = u / rho;
  return (3.0 * u * u) / (rho * rho * rho) *
         (1.0 - 0.75 * w + 0.0625 * w * w * w);
}

double require_rho(const ModelParams& params, const ClockGeometry& geom) {
  if (!(std::isfinite(geom.radius_m) && geom.radius_m > 0.0)) {
    throw std::invalid_argument("clock radius must be finite and > 0");
  }
  if (!(std::isfinite(params.sigma_m) && params.sigma_m > 0.0)) {
    throw std::invalid_argument("sigma_m must be finite and > 0");
  }
  return geom.radius_m / params.sigma_m;
}

}  // namespace

ClockGeometry ClockGeometry::sphere(double radius_m) {
  if (!(std::isfinite(radius_m) && radius_m > 0.0)) {
    throw std::invalid_argument("clock radius must be finite and > 0");
  }
  return ClockGeometry{radius_m, ClockShape::Sphere};
}

const char* to_string(TauMethod method) {
  switch (method) {
    case TauMethod::Quadrature:
      return "quadrature";
    case TauMethod::MonteCarlo:
      return "monte-carlo";
    case TauMethod::AsymptoticSmall:
      return "asymptotic-small";
    case TauMethod::AsymptoticLarge:
      return "asymptotic-large";
  }
  throw std::invalid_argument("unknown TauMethod");
}

double pair_distance_density(double r_m, double radius_m) {
  if (!(std::isfinite(radius_m) && radius_m > 0.0)) {
    throw std::invalid_argument("radius must be finite and > 0");
  }
  if (!(r_m >= 0.0) || !std::isfinite(r_m)) {
    throw std::invalid_argument("r must be finite and >= 0");
  }
  return pair_density_dimensionless(r_m, radius_m);
}

double tau_max(const ModelParams& params, const PhysicalConstants& constants) {
  const double c2 = constants.c * constants.c;
  return kernel_zero(params, constants) / (c2 * c2);
}

double tau_shape_integral(ModelKind kind, double rho) {
  if (!(std::isfinite(rho) && rho > 0.0)) {
    throw std::invalid_argument("rho must be finite and > 0");
  }
  double upper = 2.0 * rho;
  if (kind == ModelKind::Csl) upper = std::min(upper, kCslDomainCut);

  QuadratureOptions options;
  options.rel_tol = 1e-8;
  const auto integrand = [kind, rho](double u) {
    return pair_density_dimensionless(u, rho) * kernel_shape(kind, u);
  };

  // The kernel shape turns over at u of order one.  On a very wide domain a
  // single adaptive pass can place all its nodes beyond that region and
  // declare convergence without ever seeing it, so the head of the domain
  // is integrated separately.
  constexpr double kHeadCut = 30.0;
  if (upper <= kHeadCut) {
    return integrate_checked(integrand, 0.0, upper, options);
  }
  return integrate_checked(integrand, 0.0, kHeadCut, options) +
         integrate_checked(integrand, kHeadCut, upper, options);
}

TauResult tau_quadrature(const ModelParams& params, const ClockGeometry& geom,
                         const PhysicalConstants& constants) {
  const double rho = require_rho(params, geom);
  TauResult result;
  result.tau_s = tau_max(params, constants) * tau_shape_integral(params.kind, rho);
  result.method = TauMethod::Quadrature;
  return result;
}

TauResult tau_monte_carlo(const ModelParams& params, const ClockGeometry& geom,
                          std::uint64_t n, std::uint64_t seed,
                          const PhysicalConstants& constants) {
  const double rho = require_rho(params, geom);
  if (n < 1000) {
    throw std::invalid_argument("tau_monte_carlo requires n >= 1000");
  }

  const PhiloxStream stream(seed, 0);
  const double two_pi = 2.0 * std::numbers::pi;

  // One point costs three uniforms (radius, polar cosine, azimuth); one
  // pair consumes three consecutive blocks of two uniforms each.  Partial
  // sums are folded in fixed-size chunks so the result depends only on
  // (seed, n), not on any sharding of the loop.
  constexpr std::uint64_t kChunk = 4096;
  double total = 0.0;
  double total_sq = 0.0;
  double chunk_sum = 0.0;
  double chunk_sum_sq = 0.0;

  for (std::uint64_t i = 0; i < n; ++i) {
    const auto [u1, u2] = stream.uniform_pair(3 * i);
    const auto [u3, u4] = stream.uniform_pair(3 * i + 1);
    const auto [u5, u6] = stream.uniform_pair(3 * i + 2);

    const double r1 = rho * std::cbrt(u1);
    const double cos1 = 2.0 * u2 - 1.0;
    const double sin1 = std::sqrt(std::max(0.0, 1.0 - cos1 * cos1));
    const double phi1 = two_pi * u3;

    const double r2 = rho * std::cbrt(u4);
    const double cos2 = 2.0 * u5 - 1.0;
    const double sin2 = std::sqrt(std::max(0.0, 1.0 - cos2 * cos2));
    const double phi2 = two_pi * u6;

    const double dx = r1 * sin1 * std::cos(phi1) - r2 * sin2 * std::cos(phi2);
    const double dy = r1 * sin1 * std::sin(phi1) - r2 * sin2 * std::sin(phi2);
    const double dz = r1 * cos1 - r2 * cos2;
    const double u = std::sqrt(dx * dx + dy * dy + dz * dz);

    const double f = kernel_shape(params.kind, u);
    chunk_sum += f;
    chunk_sum_sq += f * f;
    if ((i + 1) % kChunk == 0) {
      total += chunk_sum;
      total_sq += chunk_sum_sq;
      chunk_sum = 0.0;
      chunk_sum_sq = 0.0;
    }
  }
  total += chunk_sum;
  total_sq += chunk_sum_sq;

  const double nd = static_cast<double>(n);
  const double mean = total / nd;
  const double variance = std::max(0.0, total_sq / nd - mean * mean);
  const double scale = tau_max(params, constants);

  TauResult result;
  result.tau_s = scale * mean;
  result.method = TauMethod::MonteCarlo;
  result.stderr_s = scale * std::sqrt(variance / nd);
  result.n_samples = n;
  return result;
}

TauResult tau_asymptotic_small(const ModelParams& params, const ClockGeometry& geom,
                               const PhysicalConstants& constants) {
  const double rho = require_rho(params, geom);
  if (rho > 1.0) {
    throw std::invalid_argument(
        "tau_asymptotic_small is out of regime for R/sigma > 1");
  }
  TauResult result;
  result.tau_s = tau_max(params, constants);
  result.method = TauMethod::AsymptoticSmall;
  return result;
}

TauResult tau_asymptotic_large(const ModelParams& params, const ClockGeometry& geom,
                               const PhysicalConstants& constants) {
  const double rho = require_rho(params, geom);
  if (rho < kAsymptoticLargeGuard) {
    throw std::invalid_argument(
        "tau_asymptotic_large is out of regime for R/sigma < 10");
  }
  constexpr double kSqrtPi = 1.0 / std::numbers::inv_sqrtpi;
  const double six_sqrt_pi = 6.0 * kSqrtPi;
  double factor = 0.0;
  switch (params.kind) {
    case ModelKind::Csl:
      factor = six_sqrt_pi / (rho * rho * rho);
      break;
    case ModelKind::Dp:
      factor = six_sqrt_pi / (5.0 * rho);
      break;
  }
  TauResult result;
  result.tau_s = tau_max(params, constants) * factor;
  result.method = TauMethod::AsymptoticLarge;
  return result;
}

double delta_t(double tau_s, double t_s) {
  if (!(tau_s >= 0.0) || !std::isfinite(tau_s)) {
    throw std::invalid_argument("tau must be finite and >= 0");
  }
  if (!(t_s >= 0.0) || !std::isfinite(t_s)) {
    throw std::invalid_argument("t must be finite and >= 0");
  }
  return std::sqrt(tau_s * t_s);
}

}  // namespace tauclock
