#include "tauclock/scan.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "tauclock/errors.hpp"
#include "tauclock/tau.hpp"
#include "tauclock/version.hpp"

namespace tauclock {

namespace {

std::vector<std::string> model_prefixes(const std::vector<ModelParams>& models) {
  std::map<ModelKind, int> total;
  for (const ModelParams& m : models) ++total[m.kind];
  std::map<ModelKind, int> seen;
  std::vector<std::string> prefixes;
  prefixes.reserve(models.size());
  for (const ModelParams& m : models) {
    std::string prefix = to_string(m.kind);
    if (total[m.kind] > 1) prefix += std::to_string(++seen[m.kind]);
    prefixes.push_back(prefix);
  }
  return prefixes;
}

void append_common_metadata(ScanTable& table, const ScanSpec& spec,
                            const PhysicalConstants& constants) {
  table.metadata.emplace_back("generator", std::string("tauclock ") + kVersion);
  table.metadata.emplace_back("grid_min", format_scientific(spec.grid.min));
  table.metadata.emplace_back("grid_max", format_scientific(spec.grid.max));
  table.metadata.emplace_back("grid_count", std::to_string(spec.grid.count));
  table.metadata.emplace_back("hbar_J_s", format_scientific(constants.hbar));
  table.metadata.emplace_back("G_m3_per_kg_s2", format_scientific(constants.G));
  table.metadata.emplace_back("c_m_per_s", format_scientific(constants.c));
  table.metadata.emplace_back("m0_kg", format_scientific(constants.m0));
}

void append_model_metadata(ScanTable& table, const std::vector<ModelParams>& models,
                           const std::vector<std::string>& prefixes) {
  for (std::size_t i = 0; i < models.size(); ++i) {
    table.metadata.emplace_back(prefixes[i] + "_model", to_string(models[i].kind));
    if (models[i].kind == ModelKind::Csl) {
      table.metadata.emplace_back(prefixes[i] + "_lambda_per_s",
                                  format_scientific(models[i].lambda_per_s));
    }
    table.metadata.emplace_back(prefixes[i] + "_sigma_m",
                                format_scientific(models[i].sigma_m));
  }
}

void require_models(const ScanSpec& spec) {
  if (spec.models.empty()) {
    throw std::invalid_argument("scan requires at least one model");
  }
}

double band_edge_tau(ModelKind kind, double lambda_per_s, double sigma_m,
                     const std::optional<double>& clock_radius_m,
                     const PhysicalConstants& constants) {
  const ModelParams params = (kind == ModelKind::Csl)
                                 ? ModelParams::csl(lambda_per_s, sigma_m)
                                 : ModelParams::dp(sigma_m);
  if (!clock_radius_m) return tau_max(params, constants);
  return tau_quadrature(params, ClockGeometry::sphere(*clock_radius_m), constants).tau_s;
}

}  // namespace

std::vector<double> LogGrid::values() const {
  if (!(std::isfinite(min) && std::isfinite(max) && 0.0 < min && min < max)) {
    throw std::invalid_argument("log grid requires 0 < min < max, both finite");
  }
  if (count < 2) {
    throw std::invalid_argument("log grid requires count >= 2");
  }
  std::vector<double> grid(count);
  const double log_min = std::log(min);
  const double step = (std::log(max) - log_min) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = std::exp(log_min + step * static_cast<double>(i));
  }
  grid.front() = min;
  grid.back() = max;
  return grid;
}

ScanTable scan_tau_vs_radius(const ScanSpec& spec, const PhysicalConstants& constants) {
  if (spec.variable != ScanVariable::RadiusRatio) {
    throw std::invalid_argument("scan_tau_vs_radius requires variable = RadiusRatio");
  }
  require_models(spec);
  const std::vector<double> grid = spec.grid.values();
  const std::vector<std::string> prefixes = model_prefixes(spec.models);

  ScanTable table;
  table.columns.push_back("radius_ratio");
  for (const std::string& prefix : prefixes) {
    table.columns.push_back(prefix + "_tau_s");
  }
  table.metadata.emplace_back("scan", "tau_vs_radius");
  append_common_metadata(table, spec, constants);
  append_model_metadata(table, spec.models, prefixes);

  for (const double rho : grid) {
    std::vector<double> row;
    row.reserve(spec.models.size() + 1);
    row.push_back(rho);
    std::string note;
    for (std::size_t i = 0; i < spec.models.size(); ++i) {
      const ModelParams& model = spec.models[i];
      try {
        const ClockGeometry geom = ClockGeometry::sphere(rho * model.sigma_m);
        row.push_back(tau_quadrature(model, geom, constants).tau_s);
      } catch (const convergence_error& err) {
        row.push_back(std::numeric_limits<double>::quiet_NaN());
        if (!note.empty()) note += "; ";
        note += prefixes[i] + ": " + err.what();
      }
    }
    table.rows.push_back(std::move(row));
    table.notes.push_back(std::move(note));
  }
  return table;
}

ScanTable scan_uncertainty_vs_time(const ScanSpec& spec,
                                   const PhysicalConstants& constants) {
  if (spec.variable != ScanVariable::Time) {
    throw std::invalid_argument("scan_uncertainty_vs_time requires variable = Time");
  }
  require_models(spec);
  if (!spec.band_bounds) {
    throw std::invalid_argument("scan_uncertainty_vs_time requires band_bounds");
  }
  const BandBounds& bounds = *spec.band_bounds;
  const std::vector<double> grid = spec.grid.values();
  const std::vector<std::string> prefixes = model_prefixes(spec.models);

  bool has_csl = false;
  bool has_dp = false;
  double csl_sigma_m = standard_params(ModelKind::Csl).sigma_m;
  for (const ModelParams& m : spec.models) {
    if (m.kind == ModelKind::Csl && !has_csl) {
      has_csl = true;
      csl_sigma_m = m.sigma_m;  // shape reference for finite-radius bands
    }
    has_dp = has_dp || (m.kind == ModelKind::Dp);
  }

  // The model curves and band edges all follow delta_t = sqrt(tau t) at
  // fixed tau, so every column is an exact half-slope line in log-log.
  std::vector<double> model_tau(spec.models.size());
  for (std::size_t i = 0; i < spec.models.size(); ++i) {
    model_tau[i] = spec.clock_radius_m
                       ? tau_quadrature(spec.models[i],
                                        ClockGeometry::sphere(*spec.clock_radius_m),
                                        constants)
                             .tau_s
                       : tau_max(spec.models[i], constants);
  }
  double csl_tau_lo = 0.0;
  double csl_tau_hi = 0.0;
  double dp_tau_lo = 0.0;
  double dp_tau_hi = 0.0;
  if (has_csl) {
    csl_tau_lo = band_edge_tau(ModelKind::Csl, bounds.csl_lambda_lo_per_s,
                               csl_sigma_m, spec.clock_radius_m, constants);
    csl_tau_hi = band_edge_tau(ModelKind::Csl, bounds.csl_lambda_hi_per_s,
                               csl_sigma_m, spec.clock_radius_m, constants);
  }
  if (has_dp) {
    // Smaller sigma means stronger noise: the band's upper edge sits at the
    // experimental lower bound on sigma.
    dp_tau_hi = band_edge_tau(ModelKind::Dp, 0.0, bounds.dp_sigma_min_m,
                              spec.clock_radius_m, constants);
    dp_tau_lo = band_edge_tau(ModelKind::Dp, 0.0, bounds.dp_sigma_max_m,
                              spec.clock_radius_m, constants);
  }

  ScanTable table;
  table.columns.push_back("t_s");
  for (const std::string& prefix : prefixes) {
    table.columns.push_back(prefix + "_delta_t_s");
  }
  if (has_csl) {
    table.columns.push_back("csl_band_low_s");
    table.columns.push_back("csl_band_high_s");
  }
  if (has_dp) {
    table.columns.push_back("dp_band_low_s");
    table.columns.push_back("dp_band_high_s");
  }

  table.metadata.emplace_back("scan", "uncertainty_vs_time");
  append_common_metadata(table, spec, constants);
  append_model_metadata(table, spec.models, prefixes);
  if (has_csl) {
    table.metadata.emplace_back("csl_band_lambda_lo_per_s",
                                format_scientific(bounds.csl_lambda_lo_per_s));
    table.metadata.emplace_back("csl_band_lambda_hi_per_s",
                                format_scientific(bounds.csl_lambda_hi_per_s));
  }
  if (has_dp) {
    table.metadata.emplace_back("dp_band_sigma_min_m",
                                format_scientific(bounds.dp_sigma_min_m));
    table.metadata.emplace_back("dp_band_sigma_max_m",
                                format_scientific(bounds.dp_sigma_max_m));
    table.metadata.emplace_back(
        "dp_band_sigma_max_note",
        "tool default for the unconstrained band edge, not an experimental bound");
  }
  if (spec.clock_radius_m) {
    table.metadata.emplace_back("clock_radius_m",
                                format_scientific(*spec.clock_radius_m));
  } else {
    table.metadata.emplace_back("clock", "optimal (tau = tau_max)");
  }

  for (const double t : grid) {
    std::vector<double> row;
    row.reserve(table.columns.size());
    row.push_back(t);
    for (std::size_t i = 0; i < spec.models.size(); ++i) {
      row.push_back(delta_t(model_tau[i], t));
    }
    if (has_csl) {
      row.push_back(delta_t(csl_tau_lo, t));
      row.push_back(delta_t(csl_tau_hi, t));
    }
    if (has_dp) {
      row.push_back(delta_t(dp_tau_lo, t));
      row.push_back(delta_t(dp_tau_hi, t));
    }
    table.rows.push_back(std::move(row));
    table.notes.emplace_back();
  }
  return table;
}

HeadlineReport headline_numbers(const PhysicalConstants& constants) {
  HeadlineReport report;
  const double year = constants.seconds_per_year;
  report.csl_delta_t_s =
      delta_t(tau_max(standard_params(ModelKind::Csl), constants), year);
  report.dp_delta_t_s =
      delta_t(tau_max(standard_params(ModelKind::Dp), constants), year);
  report.csl_log10 = std::log10(report.csl_delta_t_s);
  report.dp_log10 = std::log10(report.dp_delta_t_s);
  report.csl_within_margin =
      std::abs(report.csl_log10 - report.csl_target_log10) <= 0.7;
  report.dp_within_margin =
      std::abs(report.dp_log10 - report.dp_target_log10) <= 0.7;
  return report;
}

std::string format_scientific(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.8e", value);
  return buffer;
}

std::string to_csv(const ScanTable& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const std::vector<double>& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += format_scientific(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const ScanTable& table) {
  nlohmann::json root;
  nlohmann::json metadata = nlohmann::json::object();
  for (const auto& [key, value] : table.metadata) {
    metadata[key] = value;
  }
  root["metadata"] = metadata;
  root["columns"] = table.columns;
  root["rows"] = table.rows;  // non-finite entries serialize as null
  bool any_note = false;
  for (const std::string& note : table.notes) {
    any_note = any_note || !note.empty();
  }
  if (any_note) root["notes"] = table.notes;
  return root.dump(2) + "\n";
}

namespace {

void write_text_file(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw io_error("cannot open " + path + " for writing");
  }
  out << text;
  out.flush();
  if (!out) {
    throw io_error("failed writing " + path);
  }
}

}  // namespace

void write_csv(const ScanTable& table, const std::string& path) {
  write_text_file(to_csv(table), path);
}

void write_json(const ScanTable& table, const std::string& path) {
  write_text_file(to_json(table), path);
}

}  // namespace tauclock
