#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hypint/check_record.hpp"
#include "hypint/identity_suite.hpp"

namespace hypint {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class ReportFormat { json, csv };

/// Process exit codes of the verifier.
namespace exit_codes {
inline constexpr int ok = 0;
inline constexpr int failures = 2;
inline constexpr int unconverged_only = 3;
inline constexpr int usage = 64;
inline constexpr int io = 74;
}  // namespace exit_codes

/// Everything one verifier run needs. JSON keys match the member names,
/// except that `settings` is read from a `policy` object.
///
/// `suites`, `pairs`, `t_values` and `r_values` drive the (T, S)-indexed
/// suites; the remaining grids feed the suites that take other parameters.
struct GridConfig {
  std::vector<std::string> suites;
  std::vector<std::pair<double, double>> pairs;
  std::vector<std::complex<double>> t_values;
  std::vector<double> r_values;

  std::vector<double> w_values;                      // quadratic_transform
  std::vector<std::pair<double, double>> xy_values;  // product_formula
  std::vector<std::array<double, 3>> barnes_triples;
  std::vector<double> a_values;    // lemma22, lemma23, lemma24
  std::vector<double> tau_values;  // lemma22
  std::vector<double> b_values;    // lemma24
  std::vector<double> z_fractions; // lemma33: z = T + f (S - T)

  SuiteSettings settings;
  std::string output_path;  // empty: standard output
  ReportFormat format = ReportFormat::json;
};

const std::vector<std::string>& known_suites();

GridConfig default_config();

/// Reads a JSON config on top of the defaults. Keys that are present replace
/// the default entirely; unknown keys are rejected. Throws UsageError.
GridConfig parse_config(const nlohmann::json& doc);
GridConfig load_config(const std::string& path);

/// Throws UsageError naming the first offending field.
void validate(const GridConfig& config);

nlohmann::json to_json(const GridConfig& config);

struct StatusSummary {
  int pass = 0;
  int fail = 0;
  int unconverged = 0;
  int skipped = 0;
  int total = 0;
};

struct ReportDocument {
  std::string tool_version{kToolVersion};
  GridConfig config_echo;
  std::vector<CheckRecord> records;  // sorted by id
  StatusSummary summary;
  double wall_time = 0.0;
};

/// Runs every selected suite over its parameter grid, evaluating up to
/// `jobs` records concurrently. The result does not depend on `jobs`.
ReportDocument run(const GridConfig& config, int jobs = 1);

StatusSummary summarize(const std::vector<CheckRecord>& records);

/// 0 when no record failed or is unconverged (skipped records are neutral),
/// 2 when any failed, 3 when the only problems are unconverged records.
int exit_code(const ReportDocument& report);

nlohmann::json to_json(const ReportDocument& report);
std::string to_json_text(const ReportDocument& report);
std::string to_csv_text(const ReportDocument& report);

/// Writes in the config's format to its output path (or stdout). Throws
/// IoError.
void write_report(const ReportDocument& report);

}  // namespace hypint
