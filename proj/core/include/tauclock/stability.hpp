// stability.hpp: piecewise power-law clock stability models
//
// sigma_y(t) = A (t/1s)^p on each segment; segments must be contiguous and
// non-overlapping.  The clock-side time fluctuation is
// delta_t = sigma_y(t) * t / sqrt(3), compared against the collapse-side
// sqrt(tau * t).

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tauclock {

struct StabilitySegment {
  double amplitude = 0.0;  // sigma_y at t = 1 s
  double exponent = 0.0;   // p
  double t_min_s = 0.0;
  double t_max_s = 0.0;
};

class StabilityModel {
 public:
  // Segments must be sorted, with each t_min equal to the previous t_max.
  // Value continuity at the junctions is not required (floors may jump).
  explicit StabilityModel(std::vector<StabilitySegment> segments,
                          std::string name = "",
                          std::optional<double> clock_radius_m = std::nullopt);

  const std::vector<StabilitySegment>& segments() const { return segments_; }
  const std::string& name() const { return name_; }
  // Physical size of the clock, for finite-size suppression of the
  // collapse side; not all presets define one.
  const std::optional<double>& clock_radius_m() const { return clock_radius_m_; }

  double domain_min_s() const { return segments_.front().t_min_s; }
  double domain_max_s() const { return segments_.back().t_max_s; }
  bool contains(double t_s) const;

  // sigma_y(t); t must lie inside the domain.  Interior segment boundaries
  // resolve to the later segment; the overall endpoints are inclusive.
  double sigma_y(double t_s) const;

  // White-frequency optical lattice clock: sigma_y = 1e-17 (t/1s)^-1/2,
  // valid from 1 s out to the age of the universe.
  static StabilityModel optical_lattice();

  // Millisecond-pulsar timing, nominal two-segment shape: sqrt(t) averaging
  // improvement down to a 1e-15 floor, tagged with a 1e4 m clock radius.
  static StabilityModel millisecond_pulsar();

 private:
  std::vector<StabilitySegment> segments_;
  std::string name_;
  std::optional<double> clock_radius_m_;
};

// delta_t = sigma_y(t) * t / sqrt(3)
double clock_delta_t(const StabilityModel& model, double t_s);

// sqrt(tau * t) / clock_delta_t(t); dimensionless.  Time-independent inside
// p = -1/2 segments, where both sides scale as sqrt(t).
double collapse_to_clock_ratio(double tau_s, const StabilityModel& model, double t_s);

// Earliest time inside the domain where sqrt(tau t) = sigma_y(t) t / sqrt(3),
// solved in closed form per segment.  p = -1/2 segments never cross (the two
// sides keep a constant ratio).  Returns nullopt when no segment crosses.
std::optional<double> crossover_time(double tau_s, const StabilityModel& model);

}  // namespace tauclock
