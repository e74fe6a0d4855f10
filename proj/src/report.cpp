#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hypint/errors.hpp"
#include "hypint/verifier.hpp"

namespace hypint {

using nlohmann::json;

namespace {

// JSON has no inf/nan; those are written as strings.
json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

json complex_pair(std::complex<double> z) {
  return json::array({number(z.real()), number(z.imag())});
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string meta(const CheckRecord& rec, const char* key) {
  const auto it = rec.metadata.find(key);
  return it == rec.metadata.end() ? std::string() : format_real(it->second);
}

}  // namespace

json to_json(const ReportDocument& report) {
  json records = json::array();
  for (const auto& rec : report.records) {
    json m = json::object();
    for (const auto& [k, v] : rec.metadata) m[k] = number(v);
    records.push_back({{"id", rec.id},
                       {"suite", rec.suite},
                       {"lhs", complex_pair(rec.lhs)},
                       {"rhs", complex_pair(rec.rhs)},
                       {"abs_err", number(rec.abs_err)},
                       {"rel_err", number(rec.rel_err)},
                       {"tolerance", number(rec.tolerance)},
                       {"status", std::string(to_string(rec.status))},
                       {"metadata", m},
                       {"note", rec.note}});
  }
  const StatusSummary& s = report.summary;
  return {{"tool_version", report.tool_version},
          {"config_echo", to_json(report.config_echo)},
          {"records", records},
          {"summary",
           {{"pass", s.pass},
            {"fail", s.fail},
            {"unconverged", s.unconverged},
            {"skipped", s.skipped},
            {"total", s.total}}},
          {"wall_time", report.wall_time}};
}

std::string to_json_text(const ReportDocument& report) {
  return to_json(report).dump(2) + "\n";
}

std::string to_csv_text(const ReportDocument& report) {
  std::ostringstream out;
  out << "id,suite,T,S,t_re,t_im,r,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,"
         "tolerance,status,nodes,digits_lost\n";
  for (const auto& rec : report.records) {
    out << csv_field(rec.id) << ',' << csv_field(rec.suite) << ','
        << meta(rec, "T") << ',' << meta(rec, "S") << ',' << meta(rec, "t_re") << ','
        << meta(rec, "t_im") << ',' << meta(rec, "r") << ','
        << format_real(rec.lhs.real()) << ',' << format_real(rec.lhs.imag()) << ','
        << format_real(rec.rhs.real()) << ',' << format_real(rec.rhs.imag()) << ','
        << format_real(rec.abs_err) << ',' << format_real(rec.rel_err) << ','
        << format_real(rec.tolerance) << ',' << to_string(rec.status) << ','
        << meta(rec, "nodes") << ',' << meta(rec, "digits_lost") << '\n';
  }
  return out.str();
}

void write_report(const ReportDocument& report) {
  const GridConfig& c = report.config_echo;
  const std::string text =
      c.format == ReportFormat::csv ? to_csv_text(report) : to_json_text(report);
  if (c.output_path.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing report to standard output");
    return;
  }
  std::ofstream out(c.output_path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file: " + c.output_path);
  out << text;
  out.close();
  if (!out) throw IoError("failed writing report to " + c.output_path);
}

}  // namespace hypint
