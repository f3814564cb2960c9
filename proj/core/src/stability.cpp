#include "tauclock/stability.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tauclock/constants.hpp"

namespace tauclock {

namespace {

const double kAgeOfUniverseS = PhysicalConstants{}.age_of_universe_s;

double segment_sigma_y(const StabilitySegment& segment, double t_s) {
  return segment.amplitude * std::pow(t_s, segment.exponent);
}

}  // namespace

StabilityModel::StabilityModel(std::vector<StabilitySegment> segments,
                               std::string name,
                               std::optional<double> clock_radius_m)
    : segments_(std::move(segments)),
      name_(std::move(name)),
      clock_radius_m_(clock_radius_m) {
  if (segments_.empty()) {
    throw std::invalid_argument("stability model needs at least one segment");
  }
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const StabilitySegment& s = segments_[i];
    if (!(std::isfinite(s.amplitude) && s.amplitude > 0.0)) {
      throw std::invalid_argument("segment amplitude must be finite and > 0");
    }
    if (!std::isfinite(s.exponent)) {
      throw std::invalid_argument("segment exponent must be finite");
    }
    if (!(std::isfinite(s.t_min_s) && std::isfinite(s.t_max_s) &&
          0.0 < s.t_min_s && s.t_min_s < s.t_max_s)) {
      throw std::invalid_argument("segment range must satisfy 0 < t_min < t_max");
    }
    if (i > 0 && s.t_min_s != segments_[i - 1].t_max_s) {
      throw std::invalid_argument("segments must be contiguous and non-overlapping");
    }
  }
  if (clock_radius_m_ && !(std::isfinite(*clock_radius_m_) && *clock_radius_m_ > 0.0)) {
    throw std::invalid_argument("clock radius must be finite and > 0");
  }
}

bool StabilityModel::contains(double t_s) const {
  return std::isfinite(t_s) && t_s >= domain_min_s() && t_s <= domain_max_s();
}

double StabilityModel::sigma_y(double t_s) const {
  if (!contains(t_s)) {
    throw std::invalid_argument("t is outside the stability model domain");
  }
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const bool last = (i + 1 == segments_.size());
    if (t_s < segments_[i].t_max_s || (last && t_s <= segments_[i].t_max_s)) {
      return segment_sigma_y(segments_[i], t_s);
    }
  }
  throw std::invalid_argument("t is outside the stability model domain");
}

StabilityModel StabilityModel::optical_lattice() {
  return StabilityModel({{1e-17, -0.5, 1.0, kAgeOfUniverseS}}, "optical-lattice");
}

StabilityModel StabilityModel::millisecond_pulsar() {
  // Nominal shape, not a fit to any instrument: sigma_y improves as
  // 1/sqrt(t) from 1e2 s until it meets a 1e-15 flicker floor at 1e8 s.
  return StabilityModel(
      {{1e-11, -0.5, 1e2, 1e8}, {1e-15, 0.0, 1e8, kAgeOfUniverseS}},
      "millisecond-pulsar", 1e4);
}

double clock_delta_t(const StabilityModel& model, double t_s) {
  return model.sigma_y(t_s) * t_s / std::numbers::sqrt3;
}

double collapse_to_clock_ratio(double tau_s, const StabilityModel& model,
                               double t_s) {
  if (!(tau_s >= 0.0) || !std::isfinite(tau_s)) {
    throw std::invalid_argument("tau must be finite and >= 0");
  }
  return std::sqrt(tau_s * t_s) / clock_delta_t(model, t_s);
}

std::optional<double> crossover_time(double tau_s, const StabilityModel& model) {
  if (!(tau_s > 0.0) || !std::isfinite(tau_s)) {
    throw std::invalid_argument("tau must be finite and > 0");
  }
  // Per segment: sqrt(tau t) = A t^(p+1) / sqrt(3) has the unique solution
  // t = (sqrt(3 tau) / A)^(1/(p + 1/2)) unless p = -1/2, where both sides
  // share the sqrt(t) scaling and never cross.
  for (const StabilitySegment& segment : model.segments()) {
    const double shifted = segment.exponent + 0.5;
    if (shifted == 0.0) continue;
    const double t = std::pow(std::sqrt(3.0 * tau_s) / segment.amplitude,
                              1.0 / shifted);
    if (std::isfinite(t) && t >= segment.t_min_s && t <= segment.t_max_s) {
      return t;
    }
  }
  return std::nullopt;
}

}  // namespace tauclock
