// config.hpp: the shared flat key=value configuration format
//
// One "key = value" pair per line, '#' starts a comment, blank lines are
// ignored, duplicate keys are an error.  All CLI subcommands read and write
// this same format.
//
// Model parameters use the keys
//   model        csl | dp
//   lambda_per_s CSL collapse rate [1/s]
//   sigma_m      smearing length [m]
// Stability models use zero-based indexed segment keys plus optional extras
//   segments[i].A        sigma_y at 1 s
//   segments[i].p        power-law exponent
//   segments[i].t_min_s  segment start [s]
//   segments[i].t_max_s  segment end [s]
//   name                 label
//   clock_radius_m       physical clock size [m]
// Unrelated keys are ignored by each reader, so one file can configure
// several subcommands.

#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "tauclock/params.hpp"
#include "tauclock/stability.hpp"

namespace tauclock {

using ConfigMap = std::map<std::string, std::string>;

ConfigMap parse_config(std::istream& in);
ConfigMap parse_config_text(const std::string& text);
// Throws io_error when the file cannot be read.
ConfigMap load_config_file(const std::string& path);

// Deterministic: keys in sorted order, "key = value" lines, Unix newlines.
std::string serialize_config(const ConfigMap& config);

// Number parsing with full-token validation; throws std::invalid_argument
// naming the offending key.
double config_number(const ConfigMap& config, const std::string& key);
bool config_has(const ConfigMap& config, const std::string& key);

ModelParams model_params_from_config(const ConfigMap& config);
ConfigMap to_config(const ModelParams& params);

StabilityModel stability_model_from_config(const ConfigMap& config);
ConfigMap to_config(const StabilityModel& model);

}  // namespace tauclock
