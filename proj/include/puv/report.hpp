#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace puv {

// User/config mistakes: reported before any computation runs (exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Output-path failures (exit code 3).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Suite { complex_ho, pu_quantum, pu_classical, field, all };
enum class ReportFormat { json, csv };

Suite suite_from_name(const std::string& name);       // throws ConfigError
std::string suite_name(Suite suite);
ReportFormat format_from_name(const std::string& name);

struct RunConfig {
  Suite suite = Suite::all;
  std::map<std::string, double> parameters;  // merged over defaults
  std::map<std::string, double> tolerances;  // overrides by check name
  std::string output_dir;
  ReportFormat format = ReportFormat::json;
  std::uint64_t seed = 12345;
  bool include_timings = false;

  double param(const std::string& name) const;
  double tolerance_or(const std::string& check, double fallback) const;
};

// Defaults: epsilon 0.3, omega1 2, omega2 1, m1 2, m2 1, k 2, t 0.7,
// basis 40, basis1/basis2 16, duration 10, step 1e-3.
std::map<std::string, double> default_parameters();

// Parses a JSON object mirroring RunConfig; missing fields keep defaults.
RunConfig load_config_file(const std::string& path);

struct VerificationReport {
  std::string check_name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  nlohmann::json metadata = nlohmann::json::object();
};

VerificationReport make_report(std::string name, double residual, double tolerance,
                               nlohmann::json metadata = nlohmann::json::object());

struct CheckDef {
  std::string name;
  Suite suite;
  double default_tolerance;
  VerificationReport (*run)(const RunConfig&);
};

const std::vector<CheckDef>& check_registry();

// Validates the configuration (throws ConfigError), then runs every check of
// the selected suite. Deterministic for a fixed seed.
std::vector<VerificationReport> run_suite(const RunConfig& config);

void validate_config(const RunConfig& config);

nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports);
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

// 0 all passed, 1 some check failed (2/3 reserved for config and I/O errors).
int exit_code_for(const std::vector<VerificationReport>& reports);

// Writes report.{json,csv} plus the plot-ready CSVs for the selected suite
// (spectra, propagator coefficients vs t, trajectory). Throws IoError.
void emit(const std::vector<VerificationReport>& reports, const RunConfig& config);

// Plot-data writers used by emit and the CLI subcommands.
void write_pu_spectrum_csv(const RunConfig& config, const std::string& path);
void write_cho_spectrum_csv(const RunConfig& config, const std::string& path);
void write_pu_coeff_csv(const RunConfig& config, const std::string& path,
                        double t_max = 6.0, int steps = 240);
void write_cho_abc_csv(const RunConfig& config, const std::string& path,
                       double t_max = 3.0, int steps = 240);
void write_trajectory_csv_file(const RunConfig& config, const std::string& path);

}  // namespace puv
