#pragma once

#include <complex>
#include <map>
#include <string>
#include <string_view>

namespace hypint {

enum class CheckStatus { pass, fail, unconverged, skipped };

std::string_view to_string(CheckStatus status);
CheckStatus parse_status(std::string_view text);

/// One verified identity instance.
///
/// `status == pass` iff `abs_err <= tolerance || rel_err <= tolerance`, unless
/// an underlying computation was unconverged or the configuration was skipped.
/// Numeric parameters and diagnostics go in `metadata` (ordered, so output is
/// deterministic); free-form explanation goes in `note`.
struct CheckRecord {
  std::string id;
  std::string suite;
  std::complex<double> lhs;
  std::complex<double> rhs;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::fail;
  std::map<std::string, double> metadata;
  std::string note;

  bool passed() const { return status == CheckStatus::pass; }
};

/// Shortest round-trip decimal text, so ids and reports are byte-stable.
std::string format_real(double x);
/// "re+imi", e.g. "0.3+0.4i" or "1-2i".
std::string format_complex(std::complex<double> z);

/// Fills errors and status from lhs, rhs and tolerance.
CheckRecord make_record(std::string id, std::string suite,
                        std::complex<double> lhs, std::complex<double> rhs,
                        double tolerance);

/// Downgrades a passing record; a failing record stays failed.
void require(CheckRecord& record, bool condition, std::string_view reason);

/// Marks a record unconverged unless it already failed.
void mark_unconverged(CheckRecord& record, std::string_view reason);

}  // namespace hypint
