// noise.hpp: stochastic clock drift, correlated field increments, and the
// two-mass decoherence toy
//
// The noise field is white in time, so only time-integrated increments over
// finite steps are meaningful sample objects.  In time-fluctuation units the
// equal-time covariance over a step dt is D(|xi - xj|) dt / c^4 [s^2]; a
// single clock reduces to variance tau dt.
//
// Determinism contract: every realization is a pure function of
// (seed, realization_index), so ensembles can be sharded freely.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "tauclock/constants.hpp"
#include "tauclock/params.hpp"
#include "tauclock/vec3.hpp"

namespace tauclock {

struct DriftTrajectory {
  std::vector<double> t_grid_s;     // starts at 0, strictly increasing
  std::vector<double> delta_t_s;    // delta_t_s[0] == 0
  double tau_s = 0.0;
  std::uint64_t seed = 0;
};

// One Brownian realization of the clock-time drift: independent Gaussian
// increments with variance tau * (t[k+1] - t[k]).
DriftTrajectory sample_drift(double tau_s, const std::vector<double>& t_grid_s,
                             std::uint64_t seed, std::uint64_t realization_index = 0);

struct FieldIncrementSample {
  std::vector<Vec3> points_m;
  double dt_s = 0.0;
  std::vector<double> values_s;  // integrated time-fluctuation increments
  std::vector<std::vector<double>> covariance_used;  // exact target [s^2]
};

// Samples jointly Gaussian integrated increments at fixed spatial points.
// The covariance is factorized once by a symmetric eigendecomposition with
// eigenvalues floored at 1e-12 x (largest eigenvalue); coincident points
// make the exact matrix rank-deficient, and the floor is the documented
// maximum perturbation.
class GaussianFieldSampler {
 public:
  GaussianFieldSampler(std::vector<Vec3> points_m, const ModelParams& params,
                       double dt_s, const PhysicalConstants& constants = {});

  std::size_t n_points() const { return points_m_.size(); }
  const std::vector<Vec3>& points_m() const { return points_m_; }
  double dt_s() const { return dt_s_; }
  const std::vector<std::vector<double>>& covariance() const { return covariance_; }
  // ascending, after flooring
  const std::vector<double>& regularized_eigenvalues() const { return eigenvalues_; }
  double eigenvalue_floor() const { return floor_; }

  std::vector<double> draw_values(std::uint64_t seed,
                                  std::uint64_t realization_index) const;
  FieldIncrementSample draw(std::uint64_t seed,
                            std::uint64_t realization_index) const;

 private:
  std::vector<Vec3> points_m_;
  double dt_s_;
  std::vector<std::vector<double>> covariance_;
  std::vector<double> eigenvalues_;
  std::vector<double> factor_;  // row-major n x n, factor * N(0,I) has the covariance
  double floor_ = 0.0;
};

FieldIncrementSample sample_field_increments(const std::vector<Vec3>& points_m,
                                             const ModelParams& params, double dt_s,
                                             std::uint64_t seed,
                                             std::uint64_t realization_index = 0,
                                             const PhysicalConstants& constants = {});

struct DecoherenceSetup {
  double mass_kg = 0.0;
  double separation_m = 0.0;
  ModelParams model;
};

// Off-diagonal decay rate for two point masses held at separation d:
// Gamma = m^2 (D(0) - D(d)) / hbar^2.
double decoherence_rate(const DecoherenceSetup& setup,
                        const PhysicalConstants& constants = {});

struct CoherenceEstimate {
  std::complex<double> coherence;  // mean of exp(i (theta_1 - theta_2))
  double stderr_re = 0.0;
  double stderr_im = 0.0;
  std::uint64_t n_samples = 0;

  double modulus() const { return std::abs(coherence); }
  // delta-method standard error of the modulus
  double stderr_modulus() const;
};

// Random-phase unraveling cross-check: each realization accumulates phases
// theta_i = -(m c^2 / hbar) * delta_t_i from one integrated field increment
// over [0, t], and the estimator averages exp(i (theta_1 - theta_2)).  The
// noise average equals exp(-Gamma t).  At d = 0 the phases cancel exactly
// and the estimate is returned as exactly 1 without sampling.
CoherenceEstimate decoherence_mc(const DecoherenceSetup& setup, double t_s,
                                 std::uint64_t n, std::uint64_t seed,
                                 const PhysicalConstants& constants = {});

}  // namespace tauclock
