#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "hypint/errors.hpp"
#include "hypint/verifier.hpp"

namespace hypint {

using nlohmann::json;

namespace {

const std::set<std::string>& config_keys() {
  static const std::set<std::string> keys = {
      "suites",     "pairs",          "t_values",   "r_values",
      "w_values",   "xy_values",      "barnes_triples", "a_values",
      "tau_values", "b_values",       "z_fractions", "policy",
      "output_path", "format"};
  return keys;
}

const std::set<std::string>& policy_keys() {
  static const std::set<std::string> keys = {
      "abs_tol", "rel_tol", "max_terms", "max_nodes", "cancellation_cap",
      "large_r_threshold", "tolerance", "margin"};
  return keys;
}

double as_real(const json& v, const std::string& field) {
  if (!v.is_number()) throw UsageError(field, field + ": expected a number");
  return v.get<double>();
}

std::vector<double> real_list(const json& v, const std::string& field) {
  if (!v.is_array()) throw UsageError(field, field + ": expected an array");
  std::vector<double> out;
  for (const auto& x : v) out.push_back(as_real(x, field));
  return out;
}

template <std::size_t N>
std::vector<std::array<double, N>> tuple_list(const json& v,
                                              const std::string& field) {
  if (!v.is_array()) throw UsageError(field, field + ": expected an array");
  std::vector<std::array<double, N>> out;
  for (const auto& item : v) {
    if (!item.is_array() || item.size() != N) {
      throw UsageError(field, field + ": expected " + std::to_string(N) +
                                  "-element arrays");
    }
    std::array<double, N> a{};
    for (std::size_t i = 0; i < N; ++i) a[i] = as_real(item[i], field);
    out.push_back(a);
  }
  return out;
}

std::vector<std::pair<double, double>> pair_list(const json& v,
                                                 const std::string& field) {
  std::vector<std::pair<double, double>> out;
  for (const auto& a : tuple_list<2>(v, field)) out.emplace_back(a[0], a[1]);
  return out;
}

json pairs_to_json(const std::vector<std::pair<double, double>>& v) {
  json out = json::array();
  for (const auto& [x, y] : v) out.push_back({x, y});
  return out;
}

void check(bool ok, const std::string& field, const std::string& what) {
  if (!ok) throw UsageError(field, field + ": " + what);
}

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> suites = {
      "theorem",   "quadratic_transform", "product_formula", "barnes",
      "lemma22",   "lemma23",             "lemma24",         "lemma31",
      "lemma32",   "lemma33",             "qintegral",       "qlimit",
      "obstruction"};
  return suites;
}

GridConfig default_config() {
  GridConfig c;
  c.suites = known_suites();
  c.pairs = {{0.25, 0.5}, {0.1, 0.9}, {0.4, 0.45}};
  c.t_values = {0.0, 0.5, 1.0, 2.0, {0.0, 0.5}, {0.3, 0.4}};
  c.r_values = {0.5, 1.0, 10.0, 100.0};
  c.w_values = {-2.0, -0.7, 0.0, 0.25, 0.5};
  c.xy_values = {{1.0, 1.0}, {0.3, 2.0}, {0.5, 0.5}, {4.0, 0.1}};
  c.barnes_triples = {{0.0, 0.5, 0.5}, {0.5, 0.5, 0.5}, {1.0, 1.0, 0.5},
                      {0.0, 1.0, 2.0}, {0.25, 0.75, 1.5}};
  c.a_values = {-0.5, 0.0, 1.0, 3.0};
  c.tau_values = {0.0, 0.5, 1.0};
  c.b_values = {0.0, 1.0, 2.5};
  c.z_fractions = {0.0, 0.5, 1.0};
  return c;
}

GridConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw UsageError("config", "config must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (!config_keys().contains(key)) {
      throw UsageError(key, "unknown config key: " + key);
    }
  }
  GridConfig c = default_config();
  if (doc.contains("suites")) {
    const json& v = doc["suites"];
    check(v.is_array(), "suites", "expected an array of names");
    c.suites.clear();
    for (const auto& s : v) {
      check(s.is_string(), "suites", "expected an array of names");
      c.suites.push_back(s.get<std::string>());
    }
    if (std::find(c.suites.begin(), c.suites.end(), "all") != c.suites.end()) {
      c.suites = known_suites();
    }
  }
  if (doc.contains("pairs")) c.pairs = pair_list(doc["pairs"], "pairs");
  if (doc.contains("t_values")) {
    c.t_values.clear();
    for (const auto& a : tuple_list<2>(doc["t_values"], "t_values")) {
      c.t_values.emplace_back(a[0], a[1]);
    }
  }
  if (doc.contains("r_values")) c.r_values = real_list(doc["r_values"], "r_values");
  if (doc.contains("w_values")) c.w_values = real_list(doc["w_values"], "w_values");
  if (doc.contains("xy_values")) c.xy_values = pair_list(doc["xy_values"], "xy_values");
  if (doc.contains("barnes_triples")) {
    c.barnes_triples = tuple_list<3>(doc["barnes_triples"], "barnes_triples");
  }
  if (doc.contains("a_values")) c.a_values = real_list(doc["a_values"], "a_values");
  if (doc.contains("tau_values")) c.tau_values = real_list(doc["tau_values"], "tau_values");
  if (doc.contains("b_values")) c.b_values = real_list(doc["b_values"], "b_values");
  if (doc.contains("z_fractions")) c.z_fractions = real_list(doc["z_fractions"], "z_fractions");

  if (doc.contains("policy")) {
    const json& p = doc["policy"];
    check(p.is_object(), "policy", "expected an object");
    for (const auto& [key, _] : p.items()) {
      if (!policy_keys().contains(key)) {
        throw UsageError("policy." + key, "unknown policy key: " + key);
      }
    }
    SuiteSettings& s = c.settings;
    if (p.contains("abs_tol")) {
      s.policy.abs_tol = s.spectral_policy.abs_tol = as_real(p["abs_tol"], "policy.abs_tol");
    }
    if (p.contains("rel_tol")) {
      s.policy.rel_tol = s.spectral_policy.rel_tol = as_real(p["rel_tol"], "policy.rel_tol");
    }
    if (p.contains("max_terms")) {
      check(p["max_terms"].is_number_integer(), "policy.max_terms", "expected an integer");
      s.policy.max_terms = s.spectral_policy.max_terms = p["max_terms"].get<int>();
    }
    if (p.contains("max_nodes")) {
      check(p["max_nodes"].is_number_integer(), "policy.max_nodes", "expected an integer");
      s.policy.max_nodes = s.spectral_policy.max_nodes = p["max_nodes"].get<int>();
    }
    if (p.contains("cancellation_cap")) {
      s.cancellation_cap = as_real(p["cancellation_cap"], "policy.cancellation_cap");
    }
    if (p.contains("large_r_threshold")) {
      s.large_r_threshold = as_real(p["large_r_threshold"], "policy.large_r_threshold");
    }
    if (p.contains("tolerance")) {
      s.tolerance_override = as_real(p["tolerance"], "policy.tolerance");
    }
    if (p.contains("margin")) s.halfline.margin = as_real(p["margin"], "policy.margin");
  }
  if (doc.contains("output_path")) {
    check(doc["output_path"].is_string(), "output_path", "expected a string");
    c.output_path = doc["output_path"].get<std::string>();
  }
  if (doc.contains("format")) {
    check(doc["format"].is_string(), "format", "expected \"json\" or \"csv\"");
    const auto f = doc["format"].get<std::string>();
    check(f == "json" || f == "csv", "format", "expected \"json\" or \"csv\"");
    c.format = f == "csv" ? ReportFormat::csv : ReportFormat::json;
  }
  return c;
}

GridConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& err) {
    throw UsageError("config", std::string("config is not valid JSON: ") + err.what());
  }
  return parse_config(doc);
}

void validate(const GridConfig& c) {
  check(!c.suites.empty(), "suites", "at least one suite is required");
  for (const auto& s : c.suites) {
    const auto& known = known_suites();
    check(std::find(known.begin(), known.end(), s) != known.end(), "suites",
          "unknown suite '" + s + "'");
  }
  for (const auto& [T, S] : c.pairs) {
    check(std::isfinite(T) && std::isfinite(S) && 0.0 < T && T < S && S < 1.0,
          "pairs", "every pair needs 0 < T < S < 1");
  }
  const SuiteSettings& s = c.settings;
  for (const auto& t : c.t_values) {
    check(std::isfinite(t.real()) && std::isfinite(t.imag()), "t_values",
          "values must be finite");
    check(std::abs(t.real()) <= s.cancellation_cap, "t_values",
          "|Re t| exceeds the cancellation cap " + format_real(s.cancellation_cap));
  }
  check(all_finite(c.r_values) &&
            std::all_of(c.r_values.begin(), c.r_values.end(), [](double r) { return r > 0.0; }),
        "r_values", "every r must be > 0");
  check(all_finite(c.w_values) &&
            std::all_of(c.w_values.begin(), c.w_values.end(), [](double w) { return w <= 0.5; }),
        "w_values", "every w must be <= 1/2");
  for (const auto& [x, y] : c.xy_values) {
    check(std::isfinite(x) && std::isfinite(y) && x > 0.0 && y > 0.0, "xy_values",
          "x and y must be > 0");
  }
  for (const auto& [a, b, cc] : c.barnes_triples) {
    check(std::isfinite(a) && std::isfinite(b) && std::isfinite(cc) && a >= 0.0 &&
              b > 0.0 && cc > 0.0,
          "barnes_triples", "need a >= 0 and b, c > 0");
  }
  check(all_finite(c.a_values) &&
            std::all_of(c.a_values.begin(), c.a_values.end(), [](double a) { return a > -1.0; }),
        "a_values", "every A must be > -1");
  check(all_finite(c.tau_values) &&
            std::all_of(c.tau_values.begin(), c.tau_values.end(), [](double t) { return t >= 0.0; }),
        "tau_values", "every tau must be >= 0");
  check(all_finite(c.b_values) &&
            std::all_of(c.b_values.begin(), c.b_values.end(), [](double b) { return b >= 0.0; }),
        "b_values", "every B must be >= 0");
  check(all_finite(c.z_fractions) &&
            std::all_of(c.z_fractions.begin(), c.z_fractions.end(),
                        [](double f) { return f >= 0.0 && f <= 1.0; }),
        "z_fractions", "fractions must lie in [0, 1]");
  try {
    s.policy.validate();
    s.spectral_policy.validate();
  } catch (const DomainError& err) {
    throw UsageError("policy", err.what());
  }
  check(std::isfinite(s.cancellation_cap) && s.cancellation_cap >= 0.0,
        "policy.cancellation_cap", "must be >= 0");
  check(std::isfinite(s.large_r_threshold) && s.large_r_threshold > 0.0,
        "policy.large_r_threshold", "must be > 0");
  check(!s.tolerance_override || *s.tolerance_override > 0.0, "policy.tolerance",
        "must be > 0");
  check(std::isfinite(s.halfline.margin) && s.halfline.margin >= 0.0, "policy.margin",
        "must be >= 0");
}

json to_json(const GridConfig& c) {
  json doc;
  doc["suites"] = c.suites;
  doc["pairs"] = pairs_to_json(c.pairs);
  json ts = json::array();
  for (const auto& t : c.t_values) ts.push_back({t.real(), t.imag()});
  doc["t_values"] = ts;
  doc["r_values"] = c.r_values;
  doc["w_values"] = c.w_values;
  doc["xy_values"] = pairs_to_json(c.xy_values);
  doc["barnes_triples"] = c.barnes_triples;
  doc["a_values"] = c.a_values;
  doc["tau_values"] = c.tau_values;
  doc["b_values"] = c.b_values;
  doc["z_fractions"] = c.z_fractions;
  const SuiteSettings& s = c.settings;
  json policy = {{"abs_tol", s.policy.abs_tol},
                 {"rel_tol", s.policy.rel_tol},
                 {"max_terms", s.policy.max_terms},
                 {"max_nodes", s.policy.max_nodes},
                 {"cancellation_cap", s.cancellation_cap},
                 {"large_r_threshold", s.large_r_threshold},
                 {"margin", s.halfline.margin}};
  if (s.tolerance_override) policy["tolerance"] = *s.tolerance_override;
  doc["policy"] = policy;
  doc["output_path"] = c.output_path;
  doc["format"] = c.format == ReportFormat::csv ? "csv" : "json";
  return doc;
}

}  // namespace hypint
