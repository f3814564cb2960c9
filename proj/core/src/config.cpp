#include "tauclock/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "tauclock/errors.hpp"

namespace tauclock {

namespace {

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

std::string format_full_precision(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string segment_key(std::size_t i, const char* field) {
  return "segments[" + std::to_string(i) + "]." + field;
}

}  // namespace

ConfigMap parse_config(std::istream& in) {
  ConfigMap config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": empty key");
    }
    if (!config.emplace(key, value).second) {
      throw std::invalid_argument("config: duplicate key \"" + key + "\"");
    }
  }
  return config;
}

ConfigMap parse_config_text(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

ConfigMap load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw io_error("cannot open config file " + path);
  }
  return parse_config(in);
}

std::string serialize_config(const ConfigMap& config) {
  std::string out;
  for (const auto& [key, value] : config) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  }
  return out;
}

bool config_has(const ConfigMap& config, const std::string& key) {
  return config.find(key) != config.end();
}

double config_number(const ConfigMap& config, const std::string& key) {
  const auto it = config.find(key);
  if (it == config.end()) {
    throw std::invalid_argument("config: missing key \"" + key + "\"");
  }
  const std::string& text = it->second;
  if (text.empty()) {
    throw std::invalid_argument("config: empty value for \"" + key + "\"");
  }
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) {
    throw std::invalid_argument("config: \"" + key + "\" is not a number: " + text);
  }
  return value;
}

ModelParams model_params_from_config(const ConfigMap& config) {
  const auto it = config.find("model");
  if (it == config.end()) {
    throw std::invalid_argument("config: missing key \"model\"");
  }
  const ModelKind kind = model_kind_from_string(it->second);
  if (kind == ModelKind::Csl) {
    return ModelParams::csl(config_number(config, "lambda_per_s"),
                            config_number(config, "sigma_m"));
  }
  return ModelParams::dp(config_number(config, "sigma_m"));
}

ConfigMap to_config(const ModelParams& params) {
  ConfigMap config;
  config["model"] = to_string(params.kind);
  if (params.kind == ModelKind::Csl) {
    config["lambda_per_s"] = format_full_precision(params.lambda_per_s);
  }
  config["sigma_m"] = format_full_precision(params.sigma_m);
  return config;
}

StabilityModel stability_model_from_config(const ConfigMap& config) {
  std::vector<StabilitySegment> segments;
  for (std::size_t i = 0; config_has(config, segment_key(i, "A")); ++i) {
    StabilitySegment segment;
    segment.amplitude = config_number(config, segment_key(i, "A"));
    segment.exponent = config_number(config, segment_key(i, "p"));
    segment.t_min_s = config_number(config, segment_key(i, "t_min_s"));
    segment.t_max_s = config_number(config, segment_key(i, "t_max_s"));
    segments.push_back(segment);
  }
  if (segments.empty()) {
    throw std::invalid_argument("config: no stability segments (segments[0].A missing)");
  }
  std::string name;
  if (const auto it = config.find("name"); it != config.end()) name = it->second;
  std::optional<double> clock_radius_m;
  if (config_has(config, "clock_radius_m")) {
    clock_radius_m = config_number(config, "clock_radius_m");
  }
  return StabilityModel(std::move(segments), std::move(name), clock_radius_m);
}

ConfigMap to_config(const StabilityModel& model) {
  ConfigMap config;
  const auto& segments = model.segments();
  for (std::size_t i = 0; i < segments.size(); ++i) {
    config[segment_key(i, "A")] = format_full_precision(segments[i].amplitude);
    config[segment_key(i, "p")] = format_full_precision(segments[i].exponent);
    config[segment_key(i, "t_min_s")] = format_full_precision(segments[i].t_min_s);
    config[segment_key(i, "t_max_s")] = format_full_precision(segments[i].t_max_s);
  }
  if (!model.name().empty()) config["name"] = model.name();
  if (model.clock_radius_m()) {
    config["clock_radius_m"] = format_full_precision(*model.clock_radius_m());
  }
  return config;
}

}  // namespace tauclock
