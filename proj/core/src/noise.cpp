#include "tauclock/noise.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "tauclock/errors.hpp"
#include "tauclock/kernels.hpp"
#include "tauclock/rng.hpp"

namespace tauclock {

namespace {

constexpr double kRelativeEigenvalueFloor = 1e-12;

double normal_component(const PhiloxStream& stream, std::uint64_t j) {
  const auto pair = stream.normal_pair(j / 2);
  return (j % 2 == 0) ? pair.first : pair.second;
}

void require_time_step(double dt_s) {
  if (!(std::isfinite(dt_s) && dt_s > 0.0)) {
    throw std::invalid_argument("dt must be finite and > 0");
  }
}

}  // namespace

DriftTrajectory sample_drift(double tau_s, const std::vector<double>& t_grid_s,
                             std::uint64_t seed, std::uint64_t realization_index) {
  if (!(tau_s >= 0.0) || !std::isfinite(tau_s)) {
    throw std::invalid_argument("tau must be finite and >= 0");
  }
  if (t_grid_s.empty() || t_grid_s.front() != 0.0) {
    throw std::invalid_argument("t_grid must start at 0");
  }
  for (std::size_t k = 1; k < t_grid_s.size(); ++k) {
    if (!std::isfinite(t_grid_s[k]) || !(t_grid_s[k] > t_grid_s[k - 1])) {
      throw std::invalid_argument("t_grid must be finite and strictly increasing");
    }
  }

  const PhiloxStream stream(seed, realization_index);
  DriftTrajectory trajectory;
  trajectory.t_grid_s = t_grid_s;
  trajectory.tau_s = tau_s;
  trajectory.seed = seed;
  trajectory.delta_t_s.resize(t_grid_s.size());
  trajectory.delta_t_s[0] = 0.0;
  for (std::size_t k = 1; k < t_grid_s.size(); ++k) {
    const double step_var = tau_s * (t_grid_s[k] - t_grid_s[k - 1]);
    const double z = normal_component(stream, k - 1);
    trajectory.delta_t_s[k] = trajectory.delta_t_s[k - 1] + std::sqrt(step_var) * z;
  }
  return trajectory;
}

GaussianFieldSampler::GaussianFieldSampler(std::vector<Vec3> points_m,
                                           const ModelParams& params, double dt_s,
                                           const PhysicalConstants& constants)
    : points_m_(std::move(points_m)), dt_s_(dt_s) {
  if (points_m_.empty()) {
    throw std::invalid_argument("at least one point is required");
  }
  require_time_step(dt_s_);
  for (const Vec3& p : points_m_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
      throw std::invalid_argument("point coordinates must be finite");
    }
  }

  const std::size_t n = points_m_.size();
  const double c2 = constants.c * constants.c;
  const double to_time_units = dt_s_ / (c2 * c2);

  covariance_.assign(n, std::vector<double>(n, 0.0));
  Eigen::MatrixXd cov(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double value =
          kernel_smeared(params, distance(points_m_[i], points_m_[j]), constants) *
          to_time_units;
      covariance_[i][j] = value;
      covariance_[j][i] = value;
      cov(i, j) = value;
      cov(j, i) = value;
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) {
    throw convergence_error("eigendecomposition of the covariance failed", 0.0, 0.0);
  }

  const Eigen::VectorXd raw = solver.eigenvalues();  // ascending
  floor_ = kRelativeEigenvalueFloor * raw(n - 1);
  eigenvalues_.resize(n);
  Eigen::VectorXd scale(n);
  for (std::size_t i = 0; i < n; ++i) {
    eigenvalues_[i] = std::max(raw(i), floor_);
    scale(i) = std::sqrt(eigenvalues_[i]);
  }

  const Eigen::MatrixXd factor = solver.eigenvectors() * scale.asDiagonal();
  factor_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      factor_[i * n + j] = factor(i, j);
    }
  }
}

std::vector<double> GaussianFieldSampler::draw_values(
    std::uint64_t seed, std::uint64_t realization_index) const {
  const PhiloxStream stream(seed, realization_index);
  const std::size_t n = points_m_.size();
  std::vector<double> z(n);
  for (std::size_t j = 0; j < n; ++j) {
    z[j] = normal_component(stream, j);
  }
  std::vector<double> values(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      acc += factor_[i * n + j] * z[j];
    }
    values[i] = acc;
  }
  return values;
}

FieldIncrementSample GaussianFieldSampler::draw(std::uint64_t seed,
                                                std::uint64_t realization_index) const {
  FieldIncrementSample sample;
  sample.points_m = points_m_;
  sample.dt_s = dt_s_;
  sample.values_s = draw_values(seed, realization_index);
  sample.covariance_used = covariance_;
  return sample;
}

FieldIncrementSample sample_field_increments(const std::vector<Vec3>& points_m,
                                             const ModelParams& params, double dt_s,
                                             std::uint64_t seed,
                                             std::uint64_t realization_index,
                                             const PhysicalConstants& constants) {
  const GaussianFieldSampler sampler(points_m, params, dt_s, constants);
  return sampler.draw(seed, realization_index);
}

double decoherence_rate(const DecoherenceSetup& setup,
                        const PhysicalConstants& constants) {
  if (!(std::isfinite(setup.mass_kg) && setup.mass_kg > 0.0)) {
    throw std::invalid_argument("mass must be finite and > 0");
  }
  if (!(setup.separation_m >= 0.0) || !std::isfinite(setup.separation_m)) {
    throw std::invalid_argument("separation must be finite and >= 0");
  }
  const double drop = kernel_zero(setup.model, constants) -
                      kernel_smeared(setup.model, setup.separation_m, constants);
  const double m_over_hbar = setup.mass_kg / constants.hbar;
  return m_over_hbar * m_over_hbar * std::max(0.0, drop);
}

double CoherenceEstimate::stderr_modulus() const {
  const double mod = std::abs(coherence);
  if (mod == 0.0) return std::max(stderr_re, stderr_im);
  const double re = coherence.real() * stderr_re;
  const double im = coherence.imag() * stderr_im;
  return std::sqrt(re * re + im * im) / mod;
}

CoherenceEstimate decoherence_mc(const DecoherenceSetup& setup, double t_s,
                                 std::uint64_t n, std::uint64_t seed,
                                 const PhysicalConstants& constants) {
  if (!(std::isfinite(t_s) && t_s > 0.0)) {
    throw std::invalid_argument("t must be finite and > 0");
  }
  if (n < 1000) {
    throw std::invalid_argument("decoherence_mc requires n >= 1000");
  }
  decoherence_rate(setup, constants);  // validates the setup

  CoherenceEstimate estimate;
  estimate.n_samples = n;
  if (setup.separation_m == 0.0) {
    estimate.coherence = {1.0, 0.0};
    return estimate;
  }

  const std::vector<Vec3> points = {{0.0, 0.0, 0.0}, {setup.separation_m, 0.0, 0.0}};
  const GaussianFieldSampler sampler(points, setup.model, t_s, constants);
  const double phase_per_second = setup.mass_kg * constants.c * constants.c / constants.hbar;

  double sum_cos = 0.0;
  double sum_sin = 0.0;
  double sum_cos_sq = 0.0;
  double sum_sin_sq = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::vector<double> values = sampler.draw_values(seed, i);
    const double dtheta = -phase_per_second * (values[0] - values[1]);
    const double c = std::cos(dtheta);
    const double s = std::sin(dtheta);
    sum_cos += c;
    sum_sin += s;
    sum_cos_sq += c * c;
    sum_sin_sq += s * s;
  }

  const double nd = static_cast<double>(n);
  const double mean_cos = sum_cos / nd;
  const double mean_sin = sum_sin / nd;
  estimate.coherence = {mean_cos, mean_sin};
  estimate.stderr_re =
      std::sqrt(std::max(0.0, sum_cos_sq / nd - mean_cos * mean_cos) / nd);
  estimate.stderr_im =
      std::sqrt(std::max(0.0, sum_sin_sq / nd - mean_sin * mean_sin) / nd);
  return estimate;
}

}  // namespace tauclock
