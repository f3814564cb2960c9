// scan.hpp: parameter sweeps and report generation
//
// Two sweep families: fluctuation strength tau versus the radius ratio
// R/sigma, and clock-time uncertainty delta_t versus elapsed time with the
// experimentally allowed parameter bands.  Results land in a plain columnar
// table that the CSV/JSON writers serialize byte-reproducibly.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tauclock/constants.hpp"
#include "tauclock/params.hpp"

namespace tauclock {

enum class ScanVariable { RadiusRatio, Time };

struct LogGrid {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;

  // Log-spaced values with exact endpoints; requires 0 < min < max and
  // count >= 2.
  std::vector<double> values() const;
};

struct BandBounds {
  double csl_lambda_lo_per_s = kCslLambdaLowerBound;
  double csl_lambda_hi_per_s = kCslLambdaUpperBound;
  double dp_sigma_min_m = kDpSigmaLowerBound;
  // No experimental upper bound on the DP sigma exists; this default is a
  // tool choice and is flagged as such in output metadata.
  double dp_sigma_max_m = 1e-6;
};

struct ScanSpec {
  ScanVariable variable = ScanVariable::RadiusRatio;
  LogGrid grid;
  std::vector<ModelParams> models;
  std::optional<BandBounds> band_bounds;
  // When set, band edges use the finite-radius tau at this clock radius
  // instead of the optimal-clock plateau tau_max.
  std::optional<double> clock_radius_m;
};

struct ScanTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // NaN marks an unavailable entry
  std::vector<std::string> notes;         // one per row, "" when clean
  std::vector<std::pair<std::string, std::string>> metadata;
};

// tau(R/sigma) for every model in the spec; requires variable = RadiusRatio.
// A row whose quadrature fails carries NaN and a note instead of aborting
// the sweep.
ScanTable scan_tau_vs_radius(const ScanSpec& spec,
                             const PhysicalConstants& constants = {});

// delta_t(t) for every model plus band edges from the bound parameters;
// requires variable = Time and band_bounds present.  All edges are exact
// half-slope lines in log-log.
ScanTable scan_uncertainty_vs_time(const ScanSpec& spec,
                                   const PhysicalConstants& constants = {});

struct HeadlineReport {
  double csl_delta_t_s = 0.0;    // delta_t at 1 year, CSL reference
  double dp_delta_t_s = 0.0;     // delta_t at 1 year, DP reference
  double csl_log10 = 0.0;
  double dp_log10 = 0.0;
  double csl_target_log10 = -28.0;
  double dp_target_log10 = -31.0;
  bool csl_within_margin = false;  // |log10 - target| <= 0.7
  bool dp_within_margin = false;
};

HeadlineReport headline_numbers(const PhysicalConstants& constants = {});

// Scientific notation with 9 significant digits ("%.8e"), used for all
// numeric table output.
std::string format_scientific(double value);

std::string to_csv(const ScanTable& table);
std::string to_json(const ScanTable& table);
void write_csv(const ScanTable& table, const std::string& path);
void write_json(const ScanTable& table, const std::string& path);

}  // namespace tauclock
