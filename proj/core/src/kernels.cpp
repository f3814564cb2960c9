#include "tauclock/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tauclock {

namespace {

constexpr double kDpSeriesSwitch = 1e-3;
constexpr double kSqrtPi = 1.0 / std::numbers::inv_sqrtpi;

void require_model_valid(const ModelParams& params) {
  if (!(std::isfinite(params.sigma_m) && params.sigma_m > 0.0)) {
    throw std::invalid_argument("sigma_m must be finite and > 0");
  }
  if (params.kind == ModelKind::Csl &&
      !(std::isfinite(params.lambda_per_s) && params.lambda_per_s > 0.0)) {
    throw std::invalid_argument("lambda_per_s must be finite and > 0");
  }
}

}  // namespace

double kernel_shape(ModelKind kind, double u) {
  if (!(u >= 0.0) || !std::isfinite(u)) {
    throw std::invalid_argument("kernel_shape requires finite u >= 0");
  }
  switch (kind) {
    case ModelKind::Csl:
      return std::exp(-0.25 * u * u);
    case ModelKind::Dp: {
      if (u < kDpSeriesSwitch) {
        // (sqrt(pi)/u) erf(u/2) = 1 - z^2/3 + z^4/10 - z^6/42 + O(z^8),
        // z = u/2; at the switch point the truncation error is ~1e-26.
        const double z2 = 0.25 * u * u;
        return 1.0 + z2 * (-1.0 / 3.0 + z2 * (0.1 - z2 / 42.0));
      }
      return kSqrtPi / u * std::erf(0.5 * u);
    }
  }
  throw std::invalid_argument("unknown ModelKind");
}

double kernel_zero(const ModelParams& params, const PhysicalConstants& constants) {
  require_model_valid(params);
  switch (params.kind) {
    case ModelKind::Csl:
      return constants.hbar * constants.hbar * params.lambda_per_s /
             (constants.m0 * constants.m0);
    case ModelKind::Dp:
      return constants.hbar * constants.G /
             (kSqrtPi * params.sigma_m);
  }
  throw std::invalid_argument("unknown ModelKind");
}

double kernel_smeared(const ModelParams& params, double r_m,
                      const PhysicalConstants& constants) {
  if (!(r_m >= 0.0) || !std::isfinite(r_m)) {
    throw std::invalid_argument("kernel_smeared requires finite r >= 0");
  }
  require_model_valid(params);
  return kernel_zero(params, constants) *
         kernel_shape(params.kind, r_m / params.sigma_m);
}

double kernel_dp_fourier(const ModelParams& params, double k_per_m,
                         const PhysicalConstants& constants) {
  if (params.kind != ModelKind::Dp) {
    throw std::invalid_argument("Fourier kernel is defined only for DP");
  }
  require_model_valid(params);
  if (!(k_per_m > 0.0) || !std::isfinite(k_per_m)) {
    throw std::invalid_argument("kernel_dp_fourier requires finite k > 0");
  }
  const double sk = params.sigma_m * k_per_m;
  return 4.0 * std::numbers::pi * constants.hbar * constants.G /
         (k_per_m * k_per_m) * std::exp(-sk * sk);
}

}  // namespace tauclock
