// params.hpp: collapse-model parameter sets, conversions, and bounds checks
//
// Two noise models are supported:
//   CSL: mass-proportional continuous localization, parameters (lambda, sigma)
//   DP:  gravitational self-energy collapse, single parameter sigma
//
// Reference points: lambda = 1e-16 1/s with sigma = 1e-7 m for CSL, and
// sigma = 1e-9 m for DP.

#pragma once

#include <string>
#include <vector>

namespace tauclock {

enum class ModelKind { Csl, Dp };

const char* to_string(ModelKind kind);
// Accepts "csl"/"CSL" and "dp"/"DP"; throws std::invalid_argument otherwise.
ModelKind model_kind_from_string(const std::string& name);

struct ModelParams {
  ModelKind kind = ModelKind::Csl;
  double lambda_per_s = 0.0;  // CSL collapse rate per nucleon [1/s]; unused for DP
  double sigma_m = 0.0;       // smearing length [m]

  // Factories validate on construction: rates and lengths must be finite
  // and strictly positive.
  static ModelParams csl(double lambda_per_s, double sigma_m);
  static ModelParams dp(double sigma_m);

  // gamma = lambda (4 pi sigma^2)^(3/2), the CSL coupling in m^3/s.
  // Throws std::invalid_argument for DP parameters.
  double gamma_m3_per_s() const;

  // alpha = 1/sigma^2 [1/m^2]
  double alpha_per_m2() const;
};

ModelParams standard_params(ModelKind kind);

double gamma_from_lambda(double lambda_per_s, double sigma_m);
double lambda_from_gamma(double gamma_m3_per_s, double sigma_m);

// Experimentally allowed windows used for parameter bands:
//   CSL: 1e-20 < lambda < 1e-11 (exclusive at both ends)
//   DP:  sigma >= 4.94e-10 m (inclusive)
inline constexpr double kCslLambdaLowerBound = 1e-20;   // [1/s]
inline constexpr double kCslLambdaUpperBound = 1e-11;   // [1/s]
inline constexpr double kDpSigmaLowerBound = 4.94e-10;  // [m]

struct BoundsReport {
  bool within = false;                 // inside the allowed window
  std::vector<std::string> messages;   // one entry per violated bound
};

BoundsReport check_bounds(const ModelParams& params);

}  // namespace tauclock
