#include "tauclock/params.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tauclock {

namespace {

void require_positive_finite(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw std::invalid_argument(std::string(name) + " must be finite and > 0");
  }
}

}  // namespace

const char* to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Csl:
      return "csl";
    case ModelKind::Dp:
      return "dp";
  }
  throw std::invalid_argument("unknown ModelKind");
}

ModelKind model_kind_from_string(const std::string& name) {
  if (name == "csl" || name == "CSL") return ModelKind::Csl;
  if (name == "dp" || name == "DP") return ModelKind::Dp;
  throw std::invalid_argument("unknown model \"" + name + "\" (expected csl or dp)");
}

ModelParams ModelParams::csl(double lambda_per_s, double sigma_m) {
  require_positive_finite(lambda_per_s, "lambda_per_s");
  require_positive_finite(sigma_m, "sigma_m");
  return ModelParams{ModelKind::Csl, lambda_per_s, sigma_m};
}

ModelParams ModelParams::dp(double sigma_m) {
  require_positive_finite(sigma_m, "sigma_m");
  return ModelParams{ModelKind::Dp, 0.0, sigma_m};
}

double ModelParams::gamma_m3_per_s() const {
  if (kind != ModelKind::Csl) {
    throw std::invalid_argument("gamma is defined only for CSL parameters");
  }
  return gamma_from_lambda(lambda_per_s, sigma_m);
}

double ModelParams::alpha_per_m2() const {
  require_positive_finite(sigma_m, "sigma_m");
  return 1.0 / (sigma_m * sigma_m);
}

ModelParams standard_params(ModelKind kind) {
  switch (kind) {
    case ModelKind::Csl:
      return ModelParams::csl(1e-16, 1e-7);
    case ModelKind::Dp:
      return ModelParams::dp(1e-9);
  }
  throw std::invalid_argument("unknown ModelKind");
}

double gamma_from_lambda(double lambda_per_s, double sigma_m) {
  require_positive_finite(lambda_per_s, "lambda_per_s");
  require_positive_finite(sigma_m, "sigma_m");
  const double four_pi_sigma2 = 4.0 * std::numbers::pi * sigma_m * sigma_m;
  return lambda_per_s * std::pow(four_pi_sigma2, 1.5);
}

double lambda_from_gamma(double gamma_m3_per_s, double sigma_m) {
  require_positive_finite(gamma_m3_per_s, "gamma_m3_per_s");
  require_positive_finite(sigma_m, "sigma_m");
  const double four_pi_sigma2 = 4.0 * std::numbers::pi * sigma_m * sigma_m;
  return gamma_m3_per_s / std::pow(four_pi_sigma2, 1.5);
}

BoundsReport check_bounds(const ModelParams& params) {
  BoundsReport report;
  report.within = true;
  switch (params.kind) {
    case ModelKind::Csl:
      if (!(params.lambda_per_s > kCslLambdaLowerBound)) {
        report.within = false;
        report.messages.push_back("lambda at or below lower bound 1e-20 1/s");
      }
      if (!(params.lambda_per_s < kCslLambdaUpperBound)) {
        report.within = false;
        report.messages.push_back("lambda at or above upper bound 1e-11 1/s");
      }
      break;
    case ModelKind::Dp:
      if (!(params.sigma_m >= kDpSigmaLowerBound)) {
        report.within = false;
        report.messages.push_back("sigma below lower bound 4.94e-10 m");
      }
      break;
  }
  return report;
}

}  // namespace tauclock
