// tauclock_cli.cpp: command line front end
//
// Exit codes: 0 success, 1 validation failure, 2 I/O failure,
// 3 numerical non-convergence.  Identical invocations with identical seeds
// produce byte-identical outputs; nothing time- or host-dependent is ever
// written.

#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "tauclock/tauclock.hpp"

namespace {

using tauclock::ConfigMap;
using tauclock::ModelKind;
using tauclock::ModelParams;
using tauclock::PhysicalConstants;

std::string full_precision(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void write_text_or_throw(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tauclock::io_error("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw tauclock::io_error("failed writing " + path);
}

// ---------------------------------------------------------------------------
// shared model/seed option plumbing

struct ModelOptions {
  std::string model;
  double lambda_per_s = 0.0;
  double sigma_m = 0.0;
  std::string config_path;
  bool strict = false;

  CLI::Option* model_opt = nullptr;
  CLI::Option* lambda_opt = nullptr;
  CLI::Option* sigma_opt = nullptr;
};

void add_model_options(CLI::App* cmd, ModelOptions& opts) {
  opts.model_opt = cmd->add_option("--model", opts.model,
                                   "Collapse model: csl or dp");
  opts.lambda_opt =
      cmd->add_option("--lambda,--lambda-per-s", opts.lambda_per_s,
                      "CSL collapse rate [1/s] (default: 1e-16)");
  opts.sigma_opt = cmd->add_option("--sigma,--sigma-m", opts.sigma_m,
                                   "Smearing length [m] (defaults: csl 1e-7, dp 1e-9)");
  cmd->add_option("--config", opts.config_path,
                  "key=value config file; command line flags override it");
  cmd->add_flag("--strict", opts.strict,
                "Treat out-of-bound parameters as errors instead of warnings");
}

ModelParams resolve_model(const ModelOptions& opts) {
  ConfigMap config;
  if (!opts.config_path.empty()) {
    config = tauclock::load_config_file(opts.config_path);
  }

  ModelKind kind;
  if (opts.model_opt->count() > 0) {
    kind = tauclock::model_kind_from_string(opts.model);
  } else if (tauclock::config_has(config, "model")) {
    kind = tauclock::model_kind_from_string(config.at("model"));
  } else {
    throw std::invalid_argument("no model given (use --model or a config file)");
  }

  const ModelParams reference = tauclock::standard_params(kind);
  double sigma = reference.sigma_m;
  if (opts.sigma_opt->count() > 0) {
    sigma = opts.sigma_m;
  } else if (tauclock::config_has(config, "sigma_m")) {
    sigma = tauclock::config_number(config, "sigma_m");
  }

  ModelParams params;
  if (kind == ModelKind::Csl) {
    double lambda = reference.lambda_per_s;
    if (opts.lambda_opt->count() > 0) {
      lambda = opts.lambda_per_s;
    } else if (tauclock::config_has(config, "lambda_per_s")) {
      lambda = tauclock::config_number(config, "lambda_per_s");
    }
    params = ModelParams::csl(lambda, sigma);
  } else {
    params = ModelParams::dp(sigma);
  }

  const tauclock::BoundsReport bounds = tauclock::check_bounds(params);
  if (!bounds.within) {
    std::string joined;
    for (const std::string& message : bounds.messages) {
      if (!joined.empty()) joined += "; ";
      joined += message;
    }
    if (opts.strict) {
      throw std::invalid_argument("parameters outside the experimental region: " +
                                  joined);
    }
    std::fprintf(stderr, "warning: parameters outside the experimental region: %s\n",
                 joined.c_str());
  }
  return params;
}

std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t seed_flag) {
  if (seed_opt->count() > 0) return seed_flag;
  const char* env = std::getenv("CHRONO_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (*end != '\0') {
    throw std::invalid_argument("CHRONO_SEED must be a non-negative integer");
  }
  return static_cast<std::uint64_t>(value);
}

void print_model(const ModelParams& params) {
  std::printf("model = %s\n", tauclock::to_string(params.kind));
  if (params.kind == ModelKind::Csl) {
    std::printf("lambda_per_s = %s\n", full_precision(params.lambda_per_s).c_str());
  }
  std::printf("sigma_m = %s\n", full_precision(params.sigma_m).c_str());
}

// ---------------------------------------------------------------------------
// constants

void run_constants() {
  const PhysicalConstants constants;
  std::printf("hbar_J_s = %s\n", full_precision(constants.hbar).c_str());
  std::printf("G_m3_per_kg_s2 = %s\n", full_precision(constants.G).c_str());
  std::printf("c_m_per_s = %s\n", full_precision(constants.c).c_str());
  std::printf("m0_kg = %s\n", full_precision(constants.m0).c_str());
  std::printf("seconds_per_year = %s\n",
              full_precision(constants.seconds_per_year).c_str());
  std::printf("age_of_universe_s = %s\n",
              full_precision(constants.age_of_universe_s).c_str());
}

// ---------------------------------------------------------------------------
// kernel

struct KernelOptions {
  ModelOptions model;
  double r_m = -1.0;
  double r_min_m = 0.0;
  double r_max_m = 0.0;
  std::size_t count = 200;
  std::string out_path;
  std::string json_path;
  CLI::Option* r_opt = nullptr;
  CLI::Option* r_min_opt = nullptr;
  CLI::Option* r_max_opt = nullptr;
};

void run_kernel(const KernelOptions& opts) {
  const ModelParams params = resolve_model(opts.model);
  if (opts.r_opt->count() > 0) {
    std::printf("r_m = %s\n", full_precision(opts.r_m).c_str());
    std::printf("kernel_m4_per_s3 = %s\n",
                full_precision(tauclock::kernel_smeared(params, opts.r_m)).c_str());
    std::printf("shape = %s\n",
                full_precision(tauclock::kernel_shape(
                                   params.kind, opts.r_m / params.sigma_m))
                    .c_str());
    return;
  }

  tauclock::LogGrid grid;
  grid.min = opts.r_min_opt->count() > 0 ? opts.r_min_m : 0.01 * params.sigma_m;
  grid.max = opts.r_max_opt->count() > 0 ? opts.r_max_m : 50.0 * params.sigma_m;
  grid.count = opts.count;

  tauclock::ScanTable table;
  table.columns = {"r_m", "kernel_m4_per_s3", "shape"};
  table.metadata.emplace_back("generator",
                              std::string("tauclock ") + tauclock::kVersion);
  table.metadata.emplace_back("command", "kernel");
  table.metadata.emplace_back("model", tauclock::to_string(params.kind));
  if (params.kind == ModelKind::Csl) {
    table.metadata.emplace_back("lambda_per_s",
                                tauclock::format_scientific(params.lambda_per_s));
  }
  table.metadata.emplace_back("sigma_m", tauclock::format_scientific(params.sigma_m));
  for (const double r : grid.values()) {
    table.rows.push_back({r, tauclock::kernel_smeared(params, r),
                          tauclock::kernel_shape(params.kind, r / params.sigma_m)});
    table.notes.emplace_back();
  }

  if (!opts.out_path.empty()) tauclock::write_csv(table, opts.out_path);
  if (!opts.json_path.empty()) tauclock::write_json(table, opts.json_path);
  if (opts.out_path.empty() && opts.json_path.empty()) {
    std::fputs(tauclock::to_csv(table).c_str(), stdout);
  }
}

// ---------------------------------------------------------------------------
// tau

struct TauOptions {
  ModelOptions model;
  double radius_m = 0.0;
  std::string method = "quadrature";
  std::uint64_t n = 1000000;
  std::uint64_t seed = 0;
  double t_s = -1.0;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* t_opt = nullptr;
};

void run_tau(const TauOptions& opts) {
  const ModelParams params = resolve_model(opts.model);
  const tauclock::ClockGeometry geom = tauclock::ClockGeometry::sphere(opts.radius_m);

  tauclock::TauResult result;
  if (opts.method == "quadrature") {
    result = tauclock::tau_quadrature(params, geom);
  } else if (opts.method == "monte-carlo") {
    result = tauclock::tau_monte_carlo(params, geom, opts.n,
                                       resolve_seed(opts.seed_opt, opts.seed));
  } else if (opts.method == "asymptotic-small") {
    result = tauclock::tau_asymptotic_small(params, geom);
  } else if (opts.method == "asymptotic-large") {
    result = tauclock::tau_asymptotic_large(params, geom);
  } else {
    throw std::invalid_argument(
        "unknown method \"" + opts.method +
        "\" (quadrature, monte-carlo, asymptotic-small, asymptotic-large)");
  }

  print_model(params);
  std::printf("radius_m = %s\n", full_precision(opts.radius_m).c_str());
  std::printf("method = %s\n", tauclock::to_string(result.method));
  std::printf("tau_s = %s\n", full_precision(result.tau_s).c_str());
  std::printf("tau_max_s = %s\n", full_precision(tauclock::tau_max(params)).c_str());
  std::printf("stderr_s = %s\n", full_precision(result.stderr_s).c_str());
  std::printf("n_samples = %" PRIu64 "\n", result.n_samples);
  if (opts.t_opt->count() > 0) {
    std::printf("t_s = %s\n", full_precision(opts.t_s).c_str());
    std::printf("delta_t_s = %s\n",
                full_precision(tauclock::delta_t(result.tau_s, opts.t_s)).c_str());
  }
}

// ---------------------------------------------------------------------------
// drift

struct DriftOptions {
  ModelOptions model;
  double tau_s = -1.0;
  double radius_m = 0.0;
  double t_max_s = 0.0;
  std::size_t steps = 100;
  std::size_t realizations = 1;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string json_path;
  CLI::Option* tau_opt = nullptr;
  CLI::Option* radius_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
};

double drift_tau(const DriftOptions& opts) {
  if (opts.tau_opt->count() > 0) return opts.tau_s;
  const ModelParams params = resolve_model(opts.model);
  if (opts.radius_opt->count() > 0) {
    return tauclock::tau_quadrature(params,
                                    tauclock::ClockGeometry::sphere(opts.radius_m))
        .tau_s;
  }
  return tauclock::tau_max(params);
}

void run_drift(const DriftOptions& opts) {
  const double tau_s = drift_tau(opts);
  if (opts.steps < 1) throw std::invalid_argument("--steps must be >= 1");
  if (opts.realizations < 1) {
    throw std::invalid_argument("--realizations must be >= 1");
  }
  if (!(opts.t_max_s > 0.0)) throw std::invalid_argument("--t-max-s must be > 0");
  const std::uint64_t seed = resolve_seed(opts.seed_opt, opts.seed);

  std::vector<double> grid(opts.steps + 1);
  for (std::size_t i = 0; i <= opts.steps; ++i) {
    grid[i] = opts.t_max_s * static_cast<double>(i) / static_cast<double>(opts.steps);
  }

  std::string csv = "t_s,delta_t_s,realization_id\n";
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < opts.realizations; ++r) {
    const tauclock::DriftTrajectory trajectory =
        tauclock::sample_drift(tau_s, grid, seed, r);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      csv += tauclock::format_scientific(trajectory.t_grid_s[i]);
      csv += ',';
      csv += tauclock::format_scientific(trajectory.delta_t_s[i]);
      csv += ',';
      csv += std::to_string(r);
      csv += '\n';
      rows.push_back({trajectory.t_grid_s[i], trajectory.delta_t_s[i], r});
    }
  }

  if (!opts.json_path.empty()) {
    nlohmann::json root;
    root["metadata"] = {{"generator", std::string("tauclock ") + tauclock::kVersion},
                        {"command", "drift"},
                        {"tau_s", tau_s},
                        {"seed", seed},
                        {"steps", opts.steps},
                        {"realizations", opts.realizations}};
    root["columns"] = {"t_s", "delta_t_s", "realization_id"};
    root["rows"] = rows;
    write_text_or_throw(root.dump(2) + "\n", opts.json_path);
  }
  if (!opts.out_path.empty()) {
    write_text_or_throw(csv, opts.out_path);
  } else if (opts.json_path.empty()) {
    std::fputs(csv.c_str(), stdout);
  }
}

// ---------------------------------------------------------------------------
// decohere

struct DecohereOptions {
  ModelOptions model;
  double mass_kg = 0.0;
  double separation_m = 0.0;
  double t_s = 1.0;
  std::uint64_t n = 100000;
  std::uint64_t seed = 0;
  bool mc = false;
  CLI::Option* seed_opt = nullptr;
};

void run_decohere(const DecohereOptions& opts) {
  const ModelParams params = resolve_model(opts.model);
  const tauclock::DecoherenceSetup setup{opts.mass_kg, opts.separation_m, params};
  const double gamma = tauclock::decoherence_rate(setup);

  print_model(params);
  std::printf("mass_kg = %s\n", full_precision(opts.mass_kg).c_str());
  std::printf("separation_m = %s\n", full_precision(opts.separation_m).c_str());
  std::printf("t_s = %s\n", full_precision(opts.t_s).c_str());
  std::printf("gamma_per_s = %s\n", full_precision(gamma).c_str());
  std::printf("predicted_coherence = %s\n",
              full_precision(std::exp(-gamma * opts.t_s)).c_str());
  if (opts.mc) {
    const std::uint64_t seed = resolve_seed(opts.seed_opt, opts.seed);
    const tauclock::CoherenceEstimate estimate =
        tauclock::decoherence_mc(setup, opts.t_s, opts.n, seed);
    std::printf("mc_coherence_re = %s\n",
                full_precision(estimate.coherence.real()).c_str());
    std::printf("mc_coherence_im = %s\n",
                full_precision(estimate.coherence.imag()).c_str());
    std::printf("mc_modulus = %s\n", full_precision(estimate.modulus()).c_str());
    std::printf("mc_stderr = %s\n", full_precision(estimate.stderr_modulus()).c_str());
    std::printf("n_samples = %" PRIu64 "\n", estimate.n_samples);
    std::printf("seed = %" PRIu64 "\n", seed);
  }
}

// ---------------------------------------------------------------------------
// stability

struct StabilityOptions {
  ModelOptions model;
  std::string preset = "optical-lattice";
  double t_s = 1.0;
  double tau_s = -1.0;
  double radius_m = 0.0;
  CLI::Option* tau_opt = nullptr;
  CLI::Option* radius_opt = nullptr;
  CLI::Option* model_given = nullptr;
};

tauclock::StabilityModel resolve_stability(const StabilityOptions& opts) {
  if (!opts.model.config_path.empty()) {
    const ConfigMap config = tauclock::load_config_file(opts.model.config_path);
    if (tauclock::config_has(config, "segments[0].A")) {
      return tauclock::stability_model_from_config(config);
    }
  }
  if (opts.preset == "optical-lattice") {
    return tauclock::StabilityModel::optical_lattice();
  }
  if (opts.preset == "millisecond-pulsar") {
    return tauclock::StabilityModel::millisecond_pulsar();
  }
  throw std::invalid_argument("unknown preset \"" + opts.preset +
                              "\" (optical-lattice, millisecond-pulsar)");
}

void run_stability(const StabilityOptions& opts) {
  const tauclock::StabilityModel model = resolve_stability(opts);
  std::printf("stability_model = %s\n",
              model.name().empty() ? "custom" : model.name().c_str());
  std::printf("t_s = %s\n", full_precision(opts.t_s).c_str());
  std::printf("sigma_y = %s\n", full_precision(model.sigma_y(opts.t_s)).c_str());
  std::printf("clock_delta_t_s = %s\n",
              full_precision(tauclock::clock_delta_t(model, opts.t_s)).c_str());

  // The collapse side is optional: provide either tau directly or collapse
  // model parameters.  A clock radius (flag, or the preset's tag) applies
  // the finite-size suppression.
  std::optional<double> tau_s;
  if (opts.tau_opt->count() > 0) {
    tau_s = opts.tau_s;
  } else if (opts.model_given->count() > 0) {
    const ModelParams params = resolve_model(opts.model);
    std::optional<double> radius;
    if (opts.radius_opt->count() > 0) {
      radius = opts.radius_m;
    } else if (model.clock_radius_m()) {
      radius = *model.clock_radius_m();
    }
    if (radius) {
      tau_s = tauclock::tau_quadrature(params, tauclock::ClockGeometry::sphere(*radius))
                  .tau_s;
      std::printf("clock_radius_m = %s\n", full_precision(*radius).c_str());
    } else {
      tau_s = tauclock::tau_max(params);
    }
    print_model(params);
  }
  if (!tau_s) return;

  std::printf("tau_s = %s\n", full_precision(*tau_s).c_str());
  std::printf("collapse_delta_t_s = %s\n",
              full_precision(tauclock::delta_t(*tau_s, opts.t_s)).c_str());
  std::printf("collapse_to_clock_ratio = %s\n",
              full_precision(tauclock::collapse_to_clock_ratio(*tau_s, model, opts.t_s))
                  .c_str());
  if (*tau_s > 0.0) {
    const std::optional<double> crossover = tauclock::crossover_time(*tau_s, model);
    if (crossover) {
      std::printf("crossover_time_s = %s\n", full_precision(*crossover).c_str());
    } else {
      std::printf("crossover_time_s = none\n");
    }
  }
}

// ---------------------------------------------------------------------------
// scan

struct ScanOptions {
  std::string variable = "radius";
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
  std::vector<std::string> models = {"csl", "dp"};
  double csl_lambda_per_s = 1e-16;
  double csl_sigma_m = 1e-7;
  double dp_sigma_m = 1e-9;
  double sigma_max_m = 1e-6;
  double finite_radius_m = 0.0;
  std::string out_path;
  std::string json_path;
  CLI::Option* finite_radius_opt = nullptr;
};

void run_scan(const ScanOptions& opts) {
  tauclock::ScanSpec spec;
  spec.grid = tauclock::LogGrid{opts.min, opts.max, opts.count};
  for (const std::string& name : opts.models) {
    const ModelKind kind = tauclock::model_kind_from_string(name);
    spec.models.push_back(kind == ModelKind::Csl
                              ? ModelParams::csl(opts.csl_lambda_per_s, opts.csl_sigma_m)
                              : ModelParams::dp(opts.dp_sigma_m));
  }
  if (opts.finite_radius_opt->count() > 0) {
    spec.clock_radius_m = opts.finite_radius_m;
  }

  tauclock::ScanTable table;
  if (opts.variable == "radius") {
    spec.variable = tauclock::ScanVariable::RadiusRatio;
    table = tauclock::scan_tau_vs_radius(spec);
  } else if (opts.variable == "time") {
    spec.variable = tauclock::ScanVariable::Time;
    tauclock::BandBounds bounds;
    bounds.dp_sigma_max_m = opts.sigma_max_m;
    spec.band_bounds = bounds;
    table = tauclock::scan_uncertainty_vs_time(spec);
  } else {
    throw std::invalid_argument("unknown scan variable \"" + opts.variable +
                                "\" (radius, time)");
  }

  if (!opts.out_path.empty()) tauclock::write_csv(table, opts.out_path);
  if (!opts.json_path.empty()) tauclock::write_json(table, opts.json_path);
  if (opts.out_path.empty() && opts.json_path.empty()) {
    std::fputs(tauclock::to_csv(table).c_str(), stdout);
  }
}

// ---------------------------------------------------------------------------
// headline

void run_headline() {
  const tauclock::HeadlineReport report = tauclock::headline_numbers();
  std::printf("csl_delta_t_1yr_s = %s\n", full_precision(report.csl_delta_t_s).c_str());
  std::printf("csl_log10 = %s\n", full_precision(report.csl_log10).c_str());
  std::printf("csl_target_log10 = %s\n",
              full_precision(report.csl_target_log10).c_str());
  std::printf("csl_within_margin = %s\n", report.csl_within_margin ? "yes" : "no");
  std::printf("dp_delta_t_1yr_s = %s\n", full_precision(report.dp_delta_t_s).c_str());
  std::printf("dp_log10 = %s\n", full_precision(report.dp_log10).c_str());
  std::printf("dp_target_log10 = %s\n", full_precision(report.dp_target_log10).c_str());
  std::printf("dp_within_margin = %s\n", report.dp_within_margin ? "yes" : "no");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tauclock: collapse-noise clock-uncertainty calculator"};
  app.require_subcommand(1);

  CLI::App* constants_cmd =
      app.add_subcommand("constants", "Print the physical constants in SI units");

  KernelOptions kernel_opts;
  CLI::App* kernel_cmd = app.add_subcommand(
      "kernel", "Evaluate or tabulate the smeared correlation kernel");
  add_model_options(kernel_cmd, kernel_opts.model);
  kernel_opts.r_opt = kernel_cmd->add_option("--r,--r-m", kernel_opts.r_m,
                                             "Single separation to evaluate [m]");
  kernel_opts.r_min_opt = kernel_cmd->add_option(
      "--r-min,--r-min-m", kernel_opts.r_min_m, "Grid start [m] (default 0.01 sigma)");
  kernel_opts.r_max_opt = kernel_cmd->add_option(
      "--r-max,--r-max-m", kernel_opts.r_max_m, "Grid end [m] (default 50 sigma)");
  kernel_cmd->add_option("--count", kernel_opts.count, "Grid points")
      ->capture_default_str();
  kernel_cmd->add_option("--out", kernel_opts.out_path, "CSV output path");
  kernel_cmd->add_option("--json", kernel_opts.json_path, "JSON output path");

  TauOptions tau_opts;
  CLI::App* tau_cmd =
      app.add_subcommand("tau", "Fluctuation strength of a spherical clock");
  add_model_options(tau_cmd, tau_opts.model);
  tau_cmd->add_option("--radius,--radius-m", tau_opts.radius_m, "Clock radius [m]")
      ->required();
  tau_cmd
      ->add_option("--method", tau_opts.method,
                   "quadrature | monte-carlo | asymptotic-small | asymptotic-large")
      ->capture_default_str();
  tau_cmd->add_option("--n", tau_opts.n, "Monte Carlo sample count")
      ->capture_default_str();
  tau_opts.seed_opt =
      tau_cmd->add_option("--seed", tau_opts.seed, "RNG seed (default: CHRONO_SEED or 0)");
  tau_opts.t_opt =
      tau_cmd->add_option("--t,--t-s", tau_opts.t_s, "Also report delta_t at this time [s]");

  DriftOptions drift_opts;
  CLI::App* drift_cmd =
      app.add_subcommand("drift", "Sample stochastic clock-drift trajectories");
  add_model_options(drift_cmd, drift_opts.model);
  drift_opts.tau_opt = drift_cmd->add_option(
      "--tau,--tau-s", drift_opts.tau_s, "Fluctuation strength [s] (overrides model)");
  drift_opts.radius_opt = drift_cmd->add_option(
      "--radius,--radius-m", drift_opts.radius_m,
      "Clock radius for finite-size tau [m] (default: optimal clock)");
  drift_cmd->add_option("--t-max,--t-max-s", drift_opts.t_max_s, "Trajectory length [s]")
      ->required();
  drift_cmd->add_option("--steps", drift_opts.steps, "Number of time steps")
      ->capture_default_str();
  drift_cmd->add_option("--realizations", drift_opts.realizations, "Trajectory count")
      ->capture_default_str();
  drift_opts.seed_opt =
      drift_cmd->add_option("--seed", drift_opts.seed, "RNG seed (default: CHRONO_SEED or 0)");
  drift_cmd->add_option("--out", drift_opts.out_path, "CSV output path");
  drift_cmd->add_option("--json", drift_opts.json_path, "JSON output path");

  DecohereOptions decohere_opts;
  CLI::App* decohere_cmd = app.add_subcommand(
      "decohere", "Two-mass decoherence rate and unraveling cross-check");
  add_model_options(decohere_cmd, decohere_opts.model);
  decohere_cmd
      ->add_option("--mass,--mass-kg", decohere_opts.mass_kg, "Point mass [kg]")
      ->required();
  decohere_cmd
      ->add_option("--separation,--separation-m", decohere_opts.separation_m,
                   "Superposition separation [m]")
      ->required();
  decohere_cmd->add_option("--t,--t-s", decohere_opts.t_s, "Evolution time [s]")
      ->capture_default_str();
  decohere_cmd->add_option("--n", decohere_opts.n, "Monte Carlo sample count")
      ->capture_default_str();
  decohere_opts.seed_opt = decohere_cmd->add_option(
      "--seed", decohere_opts.seed, "RNG seed (default: CHRONO_SEED or 0)");
  decohere_cmd->add_flag("--mc", decohere_opts.mc,
                         "Run the stochastic-unraveling Monte Carlo");

  StabilityOptions stability_opts;
  CLI::App* stability_cmd = app.add_subcommand(
      "stability", "Clock stability versus collapse-induced drift");
  add_model_options(stability_cmd, stability_opts.model);
  stability_opts.model_given = stability_opts.model.model_opt;
  stability_cmd
      ->add_option("--preset", stability_opts.preset,
                   "optical-lattice | millisecond-pulsar (ignored when --config "
                   "defines segments)")
      ->capture_default_str();
  stability_cmd->add_option("--t,--t-s", stability_opts.t_s, "Averaging time [s]")
      ->capture_default_str();
  stability_opts.tau_opt = stability_cmd->add_option(
      "--tau,--tau-s", stability_opts.tau_s,
      "Collapse fluctuation strength [s] (overrides model)");
  stability_opts.radius_opt = stability_cmd->add_option(
      "--radius,--radius-m", stability_opts.radius_m,
      "Clock radius for finite-size tau [m] (default: preset tag, if any)");

  ScanOptions scan_opts;
  CLI::App* scan_cmd =
      app.add_subcommand("scan", "Parameter sweeps (figure data) to CSV/JSON");
  scan_cmd->add_option("--variable", scan_opts.variable, "radius | time")
      ->capture_default_str();
  scan_cmd->add_option("--min", scan_opts.min, "Grid minimum (ratio or seconds)")
      ->required();
  scan_cmd->add_option("--max", scan_opts.max, "Grid maximum (ratio or seconds)")
      ->required();
  scan_cmd->add_option("--count", scan_opts.count, "Grid point count")->required();
  scan_cmd
      ->add_option("--models", scan_opts.models,
                   "Models to include (csl, dp)")
      ->delimiter(',')
      ->capture_default_str();
  scan_cmd
      ->add_option("--csl-lambda,--csl-lambda-per-s", scan_opts.csl_lambda_per_s,
                   "CSL collapse rate [1/s]")
      ->capture_default_str();
  scan_cmd
      ->add_option("--csl-sigma,--csl-sigma-m", scan_opts.csl_sigma_m,
                   "CSL smearing length [m]")
      ->capture_default_str();
  scan_cmd
      ->add_option("--dp-sigma,--dp-sigma-m", scan_opts.dp_sigma_m,
                   "DP smearing length [m]")
      ->capture_default_str();
  scan_cmd
      ->add_option("--sigma-max,--sigma-max-m", scan_opts.sigma_max_m,
                   "DP band sigma_max [m] (tool default, not an experimental bound)")
      ->capture_default_str();
  scan_opts.finite_radius_opt = scan_cmd->add_option(
      "--finite-radius,--finite-radius-m", scan_opts.finite_radius_m,
      "Use finite-radius tau at this clock radius instead of tau_max");
  scan_cmd->add_option("--out", scan_opts.out_path, "CSV output path");
  scan_cmd->add_option("--json", scan_opts.json_path, "JSON output path");

  CLI::App* headline_cmd = app.add_subcommand(
      "headline", "Reference-model delta_t at one year against the expected orders");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(constants_cmd)) {
      run_constants();
    } else if (app.got_subcommand(kernel_cmd)) {
      run_kernel(kernel_opts);
    } else if (app.got_subcommand(tau_cmd)) {
      run_tau(tau_opts);
    } else if (app.got_subcommand(drift_cmd)) {
      run_drift(drift_opts);
    } else if (app.got_subcommand(decohere_cmd)) {
      run_decohere(decohere_opts);
    } else if (app.got_subcommand(stability_cmd)) {
      run_stability(stability_opts);
    } else if (app.got_subcommand(scan_cmd)) {
      run_scan(scan_opts);
    } else if (app.got_subcommand(headline_cmd)) {
      run_headline();
    }
  } catch (const tauclock::io_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const tauclock::convergence_error& e) {
    std::fprintf(stderr, "error: %s (achieved %.3e, requested %.3e)\n", e.what(),
                 e.achieved_error, e.requested_error);
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
