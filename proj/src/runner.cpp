#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <thread>

#include "hypint/errors.hpp"
#include "hypint/verifier.hpp"

namespace hypint {

namespace {

// A record whose computation has not run yet. `id` and `suite` are used only
// when the computation throws.
struct Task {
  std::string id;
  std::string suite;
  std::function<CheckRecord()> compute;
};

std::string pair_id(const std::string& suite, const ParameterPair& p) {
  return suite + "/T=" + format_real(p.T()) + "/S=" + format_real(p.S());
}

std::vector<Task> plan(const GridConfig& c) {
  std::vector<Task> tasks;
  const SuiteSettings& st = c.settings;
  std::vector<ParameterPair> pairs;
  for (const auto& [T, S] : c.pairs) pairs.emplace_back(T, S);

  auto add = [&](std::string id, std::string suite, std::function<CheckRecord()> f) {
    tasks.push_back({std::move(id), std::move(suite), std::move(f)});
  };
  const double tol = st.tolerance_or(1e-11);

  for (const auto& suite : c.suites) {
    if (suite == "theorem") {
      for (const auto& p : pairs) {
        for (const auto& t : c.t_values) {
          add(pair_id(suite, p) + "/t=" + format_complex(t), suite,
              [p, t, &st] { return theorem_1_1(p, t, st); });
        }
      }
    } else if (suite == "quadratic_transform") {
      for (const auto& t : c.t_values) {
        for (double w : c.w_values) {
          add(suite + "/t=" + format_complex(t) + "/w=" + format_real(w), suite,
              [t, w, tol] { return check_quadratic_transform(t, w, tol); });
        }
      }
    } else if (suite == "product_formula") {
      for (const auto& t : c.t_values) {
        for (const auto& [x, y] : c.xy_values) {
          add(suite + "/t=" + format_complex(t) + "/x=" + format_real(x) +
                  "/y=" + format_real(y),
              suite, [t, x, y, tol] { return check_product_formula(t, x, y, tol); });
        }
      }
    } else if (suite == "barnes") {
      for (const auto& [a, b, cc] : c.barnes_triples) {
        add(suite + "/a=" + format_real(a) + "/b=" + format_real(b) +
                "/c=" + format_real(cc),
            suite, [a, b, cc, &st] { return barnes_triple(a, b, cc, st); });
      }
    } else if (suite == "lemma22") {
      for (double A : c.a_values) {
        for (double tau : c.tau_values) {
          add(suite + "/A=" + format_real(A) + "/tau=" + format_real(tau), suite,
              [A, tau, &st] { return lemma_2_2(A, tau, st); });
        }
      }
    } else if (suite == "lemma23") {
      for (double A : c.a_values) {
        for (double r : c.r_values) {
          add(suite + "/A=" + format_real(A) + "/r=" + format_real(r), suite,
              [A, r, &st] { return lemma_2_3(A, r, st); });
        }
      }
    } else if (suite == "lemma24") {
      for (double A : c.a_values) {
        for (double r : c.r_values) {
          for (double B : c.b_values) {
            add(suite + "/A=" + format_real(A) + "/r=" + format_real(r) +
                    "/B=" + format_real(B),
                suite, [A, r, B, &st] { return lemma_2_4(A, r, B, st); });
          }
        }
      }
    } else if (suite == "lemma31" || suite == "lemma32" || suite == "qintegral" ||
               suite == "obstruction") {
      for (const auto& p : pairs) {
        for (double r : c.r_values) {
          std::function<CheckRecord()> f;
          if (suite == "lemma31") {
            f = [p, r, &st] { return lemma_3_1_weighted(r, p, st); };
          } else if (suite == "lemma32") {
            f = [p, r, &st] { return lemma_3_2(r, p, st); };
          } else if (suite == "qintegral") {
            f = [p, r, &st] { return q_integral(r, p, st); };
          } else {
            f = [p, r, &st] { return obstruction_n_r(r, p, st); };
          }
          add(pair_id(suite, p) + "/r=" + format_real(r), suite, std::move(f));
        }
      }
    } else if (suite == "lemma33") {
      for (const auto& p : pairs) {
        for (double frac : c.z_fractions) {
          const double z = frac == 1.0 ? p.S() : p.T() + frac * (p.S() - p.T());
          for (double r : c.r_values) {
            add(pair_id(suite, p) + "/z=" + format_real(z) + "/r=" + format_real(r),
                suite, [p, z, r, &st] { return lemma_3_3_spectral(z, r, p, st); });
          }
        }
      }
    } else if (suite == "qlimit") {
      for (const auto& p : pairs) {
        add(pair_id(suite, p), suite, [p, &st] { return q_limit_integral(p, st); });
      }
    } else {
      throw UsageError("suites", "unknown suite '" + suite + "'");
    }
  }
  return tasks;
}

CheckRecord evaluate(const Task& task) {
  try {
    return task.compute();
  } catch (const DegenerateConfiguration& err) {
    CheckRecord rec;
    rec.id = task.id;
    rec.suite = task.suite;
    rec.status = CheckStatus::skipped;
    rec.note = err.what();
    return rec;
  } catch (const std::exception& err) {
    CheckRecord rec;
    rec.id = task.id;
    rec.suite = task.suite;
    rec.status = CheckStatus::fail;
    rec.note = err.what();
    return rec;
  }
}

}  // namespace

StatusSummary summarize(const std::vector<CheckRecord>& records) {
  StatusSummary s;
  for (const auto& rec : records) {
    switch (rec.status) {
      case CheckStatus::pass: ++s.pass; break;
      case CheckStatus::fail: ++s.fail; break;
      case CheckStatus::unconverged: ++s.unconverged; break;
      case CheckStatus::skipped: ++s.skipped; break;
    }
  }
  s.total = static_cast<int>(records.size());
  return s;
}

ReportDocument run(const GridConfig& config, int jobs) {
  validate(config);
  if (jobs < 1) throw UsageError("jobs", "jobs must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  const std::vector<Task> tasks = plan(config);
  std::vector<CheckRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      records[i] = evaluate(tasks[i]);
    }
  };
  const auto n_threads =
      std::min<std::size_t>(static_cast<std::size_t>(jobs), tasks.size());
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < n_threads; ++k) pool.emplace_back(worker);
  }

  ReportDocument doc;
  doc.config_echo = config;
  std::stable_sort(records.begin(), records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  doc.records = std::move(records);
  doc.summary = summarize(doc.records);
  doc.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return doc;
}

int exit_code(const ReportDocument& report) {
  const StatusSummary s = summarize(report.records);
  if (s.fail > 0) return exit_codes::failures;
  if (s.unconverged > 0) return exit_codes::unconverged_only;
  return exit_codes::ok;
}

}  // namespace hypint
