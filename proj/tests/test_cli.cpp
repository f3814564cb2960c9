// End-to-end checks of the command line tool, run against the built binary.
// The binary path comes from --cli PATH (consumed before doctest sees the
// arguments) or the TAUCLOCK_CLI environment variable.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string g_cli_path;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    RunResult result;
    const std::string command = env_prefix + g_cli_path + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char chunk[4096];
    while (std::fgets(chunk, sizeof(chunk), pipe) != nullptr) result.output += chunk;
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

RunResult run_cli_stdout_only(const std::string& args) {
    RunResult result;
    const std::string command = g_cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char chunk[4096];
    while (std::fgets(chunk, sizeof(chunk), pipe) != nullptr) result.output += chunk;
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string scratch_path(const std::string& name) {
    return "/tmp/tauclock_cli_" + std::to_string(::getpid()) + "_" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

double parse_value(const std::string& output, const std::string& key) {
    std::istringstream lines(output);
    std::string line;
    while (std::getline(lines, line)) {
        const std::string prefix = key + " = ";
        if (line.rfind(prefix, 0) == 0) return std::stod(line.substr(prefix.size()));
    }
    FAIL("key not found in output: " << key << "\n" << output);
    return 0.0;
}

}  // namespace

TEST_CASE("help succeeds and lists every subcommand") {
    const auto result = run_cli("--help");
    CHECK(result.exit_code == 0);
    for (const char* name :
         {"kernel", "tau", "drift", "decohere", "stability", "scan", "headline",
          "constants"}) {
        CHECK(result.output.find(name) != std::string::npos);
    }
    CHECK(run_cli("tau --help").exit_code == 0);
}

TEST_CASE("unknown flags and subcommands exit with code 1") {
    CHECK(run_cli("nosuchcommand").exit_code == 1);
    CHECK(run_cli("tau --no-such-flag 1 --model csl --radius 1e-7").exit_code == 1);
    CHECK(run_cli("").exit_code == 1);
}

TEST_CASE("constants reports the SI values") {
    const auto result = run_cli("constants");
    CHECK(result.exit_code == 0);
    CHECK(parse_value(result.output, "hbar_J_s") == 1.054571817e-34);
    CHECK(parse_value(result.output, "c_m_per_s") == 299792458.0);
}

TEST_CASE("tau computes the reference example") {
    const auto result = run_cli("tau --model csl --lambda 1e-16 --sigma 1e-7 --radius 1e-7");
    CHECK(result.exit_code == 0);
    const double tau = parse_value(result.output, "tau_s");
    // tau_max times the shape factor at R = sigma
    CHECK(std::abs(tau / 3.71362624201831e-65 - 1.0) < 1e-10);
    CHECK(result.output.find("method = quadrature") != std::string::npos);
}

TEST_CASE("tau accepts unit-suffixed flag aliases") {
    const auto plain = run_cli("tau --model dp --sigma 1e-9 --radius 2e-9");
    const auto suffixed = run_cli("tau --model dp --sigma-m 1e-9 --radius-m 2e-9");
    CHECK(plain.exit_code == 0);
    CHECK(plain.output == suffixed.output);
}

TEST_CASE("validation failures exit with code 1 and print a diagnostic") {
    const auto result = run_cli("tau --model csl --radius -1e-7");
    CHECK(result.exit_code == 1);
    CHECK(result.output.find("error:") != std::string::npos);
    // diagnostics go to stderr, not stdout
    const auto quiet = run_cli_stdout_only("tau --model csl --radius -1e-7");
    CHECK(quiet.exit_code == 1);
    CHECK(quiet.output.empty());

    CHECK(run_cli("tau --model grw --radius 1e-7").exit_code == 1);
    CHECK(run_cli("tau --model csl --radius 1e-7 --method bogus").exit_code == 1);
    CHECK(run_cli("drift --tau-s 1e-60 --t-max-s 0 --steps 5").exit_code == 1);
}

TEST_CASE("unwritable output paths exit with code 2") {
    const auto result =
        run_cli("drift --tau-s 1e-60 --t-max-s 1e7 --out /nonexistent-dir/x.csv");
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("error:") != std::string::npos);
}

TEST_CASE("out-of-bound parameters warn by default and fail under --strict") {
    const auto lax = run_cli("tau --model csl --lambda 1e-25 --sigma 1e-7 --radius 1e-7");
    CHECK(lax.exit_code == 0);
    CHECK(lax.output.find("warning:") != std::string::npos);
    const auto lax_stdout =
        run_cli_stdout_only("tau --model csl --lambda 1e-25 --sigma 1e-7 --radius 1e-7");
    CHECK(lax_stdout.output.find("warning:") == std::string::npos);

    const auto strict =
        run_cli("tau --model csl --lambda 1e-25 --sigma 1e-7 --radius 1e-7 --strict");
    CHECK(strict.exit_code == 1);
}

TEST_CASE("config files supply defaults and flags override them") {
    const std::string config = scratch_path("model.cfg");
    write_file(config,
               "# reference CSL point\n"
               "model = csl\n"
               "lambda_per_s = 1e-16\n"
               "sigma_m = 1e-7\n");
    const auto from_config = run_cli("tau --config " + config + " --radius 1e-7");
    CHECK(from_config.exit_code == 0);
    const double base = parse_value(from_config.output, "tau_s");

    const auto overridden =
        run_cli("tau --config " + config + " --lambda 2e-16 --radius 1e-7");
    CHECK(overridden.exit_code == 0);
    CHECK(std::abs(parse_value(overridden.output, "tau_s") / (2.0 * base) - 1.0) < 1e-12);

    const auto missing = run_cli("tau --config /nonexistent/f.cfg --radius 1e-7");
    CHECK(missing.exit_code == 2);
    std::remove(config.c_str());
}

TEST_CASE("model is required when neither flag nor config provides it") {
    CHECK(run_cli("tau --radius 1e-7").exit_code == 1);
}

TEST_CASE("drift output is seeded, deterministic, and env-seeded") {
    const std::string file_a = scratch_path("drift_a.csv");
    const std::string file_b = scratch_path("drift_b.csv");
    const std::string args = "drift --tau-s 1e-60 --t-max-s 1e7 --steps 32 "
                             "--realizations 2 --seed 42 --out ";
    CHECK(run_cli(args + file_a).exit_code == 0);
    CHECK(run_cli(args + file_b).exit_code == 0);
    const std::string bytes = read_file(file_a);
    CHECK(bytes == read_file(file_b));
    CHECK(bytes.rfind("t_s,delta_t_s,realization_id\n", 0) == 0);
    CHECK(bytes.find('\r') == std::string::npos);

    // CHRONO_SEED drives the default seed; an explicit --seed wins over it
    const std::string env_args =
        "drift --tau-s 1e-60 --t-max-s 1e7 --steps 32 --realizations 2 --out ";
    CHECK(run_cli(env_args + file_a, "CHRONO_SEED=42 ").exit_code == 0);
    CHECK(read_file(file_a) == bytes);
    CHECK(run_cli(args + file_b, "CHRONO_SEED=99 ").exit_code == 0);
    CHECK(read_file(file_b) == bytes);
    CHECK(run_cli(env_args + file_a, "CHRONO_SEED=bogus ").exit_code == 1);

    std::remove(file_a.c_str());
    std::remove(file_b.c_str());
}

TEST_CASE("scan writes parseable CSV with the expected header") {
    const std::string file = scratch_path("scan.csv");
    CHECK(run_cli("scan --variable radius --min 0.1 --max 10 --count 5 --out " + file)
              .exit_code == 0);
    const std::string bytes = read_file(file);
    CHECK(bytes.rfind("radius_ratio,csl_tau_s,dp_tau_s\n", 0) == 0);
    std::size_t lines = 0;
    for (const char c : bytes) lines += c == '\n' ? 1 : 0;
    CHECK(lines == 6);
    std::remove(file.c_str());

    CHECK(run_cli("scan --variable bogus --min 1 --max 10 --count 3").exit_code == 1);
}

TEST_CASE("headline prints both reference magnitudes") {
    const auto result = run_cli("headline");
    CHECK(result.exit_code == 0);
    CHECK(std::abs(parse_value(result.output, "csl_log10") + 28.404411) < 1e-5);
    CHECK(std::abs(parse_value(result.output, "dp_log10") + 30.904636) < 1e-5);
    CHECK(result.output.find("csl_within_margin = yes") != std::string::npos);
    CHECK(result.output.find("dp_within_margin = yes") != std::string::npos);
}

TEST_CASE("stability reports the preset and the collapse comparison") {
    const auto result = run_cli("stability --preset optical-lattice --t-s 1 --model csl");
    CHECK(result.exit_code == 0);
    CHECK(parse_value(result.output, "sigma_y") == 1e-17);
    const double ratio = parse_value(result.output, "collapse_to_clock_ratio");
    CHECK(ratio < 1e-10);
    CHECK(ratio > 0.0);
    CHECK(run_cli("stability --preset bogus").exit_code == 1);
}

TEST_CASE("decohere monte carlo tracks the analytic envelope") {
    const auto result = run_cli(
        "decohere --model dp --mass-kg 1.05e-16 --separation-m 2e-9 --t-s 1 "
        "--mc --n 20000 --seed 3");
    CHECK(result.exit_code == 0);
    const double predicted = parse_value(result.output, "predicted_coherence");
    const double modulus = parse_value(result.output, "mc_modulus");
    const double stderr_modulus = parse_value(result.output, "mc_stderr");
    CHECK(std::abs(modulus - predicted) < 4.0 * stderr_modulus);
}

TEST_CASE("kernel tabulates to CSV and evaluates single points") {
    const std::string file = scratch_path("kernel.csv");
    CHECK(run_cli("kernel --model dp --count 16 --out " + file).exit_code == 0);
    const std::string bytes = read_file(file);
    CHECK(bytes.rfind("r_m,kernel_m4_per_s3,shape\n", 0) == 0);
    std::remove(file.c_str());

    const auto point = run_cli("kernel --model dp --r-m 2e-9");
    CHECK(point.exit_code == 0);
    CHECK(std::abs(parse_value(point.output, "shape") / 0.74682413281242703 - 1.0) < 1e-12);
}

int cli_test_main(int argc, char** argv) {
    std::vector<char*> forwarded;
    for (int i = 0; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg.rfind("--cli=", 0) == 0) {
            g_cli_path = arg.substr(6);
            continue;
        }
        if (arg == "--cli" && i + 1 < argc) {
            g_cli_path = argv[++i];
            continue;
        }
        forwarded.push_back(argv[i]);
    }
    if (g_cli_path.empty()) {
        if (const char* env = std::getenv("TAUCLOCK_CLI")) g_cli_path = env;
    }
    if (g_cli_path.empty()) {
        std::fprintf(stderr, "missing CLI path: pass --cli PATH or set TAUCLOCK_CLI\n");
        return 1;
    }
    doctest::Context context(static_cast<int>(forwarded.size()), forwarded.data());
    return context.run();
}

int main(int argc, char** argv) { return cli_test_main(argc, argv); }
