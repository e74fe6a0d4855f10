#include "hypint/check_record.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace hypint {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::unconverged: return "unconverged";
    case CheckStatus::skipped: return "skipped";
  }
  return "fail";
}

CheckStatus parse_status(std::string_view text) {
  if (text == "pass") return CheckStatus::pass;
  if (text == "fail") return CheckStatus::fail;
  if (text == "unconverged") return CheckStatus::unconverged;
  if (text == "skipped") return CheckStatus::skipped;
  throw std::invalid_argument("unknown check status: " + std::string(text));
}

std::string format_real(double x) {
  if (x == 0.0) return "0";  // folds -0
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

std::string format_complex(std::complex<double> z) {
  std::string out = format_real(z.real());
  const double im = z.imag();
  out += (std::signbit(im) && im != 0.0) ? "-" : "+";
  out += format_real(std::abs(im));
  out += "i";
  return out;
}

CheckRecord make_record(std::string id, std::string suite,
                        std::complex<double> lhs, std::complex<double> rhs,
                        double tolerance) {
  CheckRecord rec;
  rec.id = std::move(id);
  rec.suite = std::move(suite);
  rec.lhs = lhs;
  rec.rhs = rhs;
  rec.tolerance = tolerance;
  rec.abs_err = std::abs(lhs - rhs);
  const double scale = std::abs(rhs);
  if (scale > 0.0) {
    rec.rel_err = rec.abs_err / scale;
  } else {
    rec.rel_err = rec.abs_err == 0.0 ? 0.0 : INFINITY;
  }
  const bool ok = std::isfinite(rec.abs_err) &&
                  (rec.abs_err <= tolerance || rec.rel_err <= tolerance);
  rec.status = ok ? CheckStatus::pass : CheckStatus::fail;
  return rec;
}

namespace {

void append_note(CheckRecord& record, std::string_view reason) {
  if (reason.empty()) return;
  if (!record.note.empty()) record.note += "; ";
  record.note += reason;
}

}  // namespace

void require(CheckRecord& record, bool condition, std::string_view reason) {
  if (condition) return;
  record.status = CheckStatus::fail;
  append_note(record, reason);
}

void mark_unconverged(CheckRecord& record, std::string_view reason) {
  if (record.status != CheckStatus::fail) {
    record.status = CheckStatus::unconverged;
  }
  append_note(record, reason);
}

}  // namespace hypint
