// hypint-verify: runs the identity checks over a parameter grid and writes a
// JSON or CSV report. Exit status: 0 all passed, 2 failures, 3 only
// unconverged records, 64 usage error, 74 I/O error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypint/errors.hpp"
#include "hypint/verifier.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Numerical verifier for the hypergeometric integral identities"};
  app.set_version_flag("--version", std::string(hypint::kToolVersion));

  std::string config_path;
  std::vector<std::string> suites;
  std::string output_path;
  std::string format;
  std::optional<double> tol;
  int jobs = 1;

  app.add_option("--config", config_path, "JSON grid configuration");
  app.add_option("--suite", suites, "suite to run (repeatable; overrides the config)");
  app.add_option("--output", output_path, "report path (default: standard output)");
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tol", tol, "pass threshold for every check")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", jobs, "records evaluated concurrently")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : hypint::exit_codes::usage;
  }

  try {
    hypint::GridConfig config =
        config_path.empty() ? hypint::default_config() : hypint::load_config(config_path);
    if (!suites.empty()) {
      config.suites.clear();
      for (const auto& s : suites) {
        if (s == "all") {
          config.suites = hypint::known_suites();
          break;
        }
        config.suites.push_back(s);
      }
    }
    if (!output_path.empty()) config.output_path = output_path;
    if (!format.empty()) {
      config.format = format == "csv" ? hypint::ReportFormat::csv : hypint::ReportFormat::json;
    }
    if (tol) config.settings.tolerance_override = *tol;

    const hypint::ReportDocument report = hypint::run(config, jobs);
    hypint::write_report(report);
    const auto& s = report.summary;
    std::cerr << "hypint-verify: " << s.total << " records, " << s.pass << " pass, "
              << s.fail << " fail, " << s.unconverged << " unconverged, " << s.skipped
              << " skipped\n";
    return hypint::exit_code(report);
  } catch (const hypint::UsageError& err) {
    std::cerr << "hypint-verify: usage error in '" << err.field() << "': " << err.what()
              << '\n';
    return hypint::exit_codes::usage;
  } catch (const hypint::IoError& err) {
    std::cerr << "hypint-verify: " << err.what() << '\n';
    return hypint::exit_codes::io;
  }
}
