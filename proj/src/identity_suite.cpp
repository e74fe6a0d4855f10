#include "hypint/identity_suite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hypint/errors.hpp"
#include "hypint/quadratic_family.hpp"

namespace hypint {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be finite");
  }
}

// Growth angle of F(+-is; 1/2; -A) for -1 < A < 0: the factor behaves like
// exp(2 s theta) there, eating into the exp(-pi s) decay of the weight.
double growth_angle(double A) {
  return A < 0.0 ? std::asin(std::sqrt(-A)) : 0.0;
}

std::string pair_prefix(const char* suite, const ParameterPair& p) {
  return std::string(suite) + "/T=" + format_real(p.T()) +
         "/S=" + format_real(p.S());
}

// Quadrature policy tight enough that integration error stays three orders
// below a check tolerance on a target of magnitude `scale`, without asking
// for more than double precision can deliver.
EvaluationPolicy tightened(EvaluationPolicy base, double tolerance,
                           double scale) {
  const double rel = std::max(1e-3 * tolerance, 1e-13);
  base.rel_tol = std::min(base.rel_tol, rel);
  if (scale > 0.0) base.abs_tol = std::min(base.abs_tol, rel * scale);
  return base;
}

void attach_estimate(CheckRecord& rec, const IntegralEstimate& est) {
  rec.metadata["nodes"] = est.nodes_used;
  rec.metadata["error_estimate"] = est.error_estimate;
  if (!est.converged) mark_unconverged(rec, "quadrature did not converge");
}

void attach_pair(CheckRecord& rec, const ParameterPair& p) {
  rec.metadata["T"] = p.T();
  rec.metadata["S"] = p.S();
}

double lemma_2_3_rhs(double A, double r) {
  return kPi * std::sqrt(1.0 + A) / (1.0 + r + A);
}

// Shared body of the two cosine-weighted spectral lemmas; with B absent the
// integrand and right-hand side are exactly those of the B = 0 case.
CheckRecord cosine_spectral_check(std::string id, const char* suite, double A,
                                  double r, std::optional<double> B,
                                  const SuiteSettings& settings) {
  require_finite(A, "A");
  require_finite(r, "r");
  if (!(A > -1.0)) throw DomainError("A must be > -1, got " + format_real(A));
  if (!(r > 0.0)) throw DomainError("r must be > 0, got " + format_real(r));
  if (B && !(*B >= 0.0 && std::isfinite(*B))) {
    throw DomainError("B must be >= 0, got " + format_real(*B));
  }

  double rhs = lemma_2_3_rhs(A, r);
  double denominator = 0.0;
  if (B && *B != 0.0) {
    const double sum = 1.0 + A + r + *B;
    denominator = sum * sum + 4.0 * r * A * *B;
    rhs = kPi * std::sqrt(1.0 + A) * std::sqrt(1.0 + *B) * sum / denominator;
  }

  const double tol = settings.tolerance_or(kSpectralLemmaTolerance);
  const auto policy = tightened(settings.spectral_policy, tol, rhs);
  const bool use_b = B && *B != 0.0;
  const double b_value = B.value_or(0.0);
  auto g = [&](double s) -> cplx {
    cplx v = spectral_weight_closed(s) * f_half_shifted(s, r) * f_it(s, A);
    if (use_b) v *= f_it(s, b_value);
    return v / (2.0 * kPi);
  };
  const double decay = kPi - 2.0 * growth_angle(A);
  const IntegralEstimate est =
      integrate_decaying_halfline(g, decay, policy, settings.halfline);

  auto rec = make_record(std::move(id), suite, est.value, rhs, tol);
  rec.metadata["A"] = A;
  rec.metadata["r"] = r;
  if (B) {
    rec.metadata["B"] = *B;
    if (use_b) {
      rec.metadata["denominator"] = denominator;
      require(rec, denominator > 0.0, "denominator (1+A+r+B)^2 + 4rAB <= 0");
    }
  }
  attach_estimate(rec, est);
  return rec;
}

}  // namespace

ParameterPair::ParameterPair(double T, double S) : T_(T), S_(S) {
  if (!std::isfinite(T) || !std::isfinite(S) || !(0.0 < T && T < S && S < 1.0)) {
    throw DomainError("parameter pair needs 0 < T < S < 1, got T = " +
                      format_real(T) + ", S = " + format_real(S));
  }
  sqrt_T_ = std::sqrt(T);
  sqrt_S_ = std::sqrt(S);
}

KernelAB kernel_AB(double z, const ParameterPair& p) {
  require_finite(z, "z");
  if (z < p.T() || z > p.S()) {
    throw DomainError("kernel_AB: z must lie in [T, S], got " + format_real(z));
  }
  const double y = std::sqrt(z);
  const double A = -(1.0 + y) * (y - p.sqrt_T()) / (2.0 * (1.0 - p.sqrt_T()) * y);
  const double B = (1.0 + y) * (p.sqrt_S() - y) / (2.0 * (1.0 - p.sqrt_S()) * y);
  return {A, B};
}

KernelI kernel_I(double z, double r, const ParameterPair& p) {
  require_finite(z, "z");
  if (z < p.T() || z > p.S()) {
    throw DomainError("kernel_I: z must lie in [T, S], got " + format_real(z));
  }
  const QuadraticCoefficients q = quadratic_coefficients(r, p);
  const double y = std::sqrt(z);
  const double I1 = kPi * (1.0 - y) * std::sqrt(y + p.sqrt_T()) *
                    std::sqrt(y + p.sqrt_S()) * std::sqrt(1.0 - p.sqrt_T()) *
                    std::sqrt(1.0 - p.sqrt_S());
  const double I2 = q.numerator(y) / q.quadratic(z);
  return {I1, I2};
}

cplx spectral_product(SpectralPoint t, double z, const ParameterPair& p) {
  const KernelAB ab = kernel_AB(z, p);
  const double one_minus_sqrt_S = 1.0 - p.sqrt_S();
  const double x = (p.S() - z) * (1.0 - z) / (one_minus_sqrt_S * one_minus_sqrt_S * z);
  return f_2it(t, -ab.A) * f_it(t, std::max(x, 0.0));
}

cplx main_integrand(double z, const ParameterPair& p, SpectralPoint t) {
  require_finite(z, "z");
  if (!(z > p.T() && z < p.S())) {
    throw DomainError("main_integrand: z must lie in (T, S), got " +
                      format_real(z));
  }
  const double y = std::sqrt(z);
  const double Y = (1.0 + y) * (y - p.sqrt_T()) / (2.0 * (1.0 - p.sqrt_T()) * y);
  const double one_minus_sqrt_S = 1.0 - p.sqrt_S();
  const double x = (p.S() - z) * (1.0 - z) / (one_minus_sqrt_S * one_minus_sqrt_S * z);
  return f_2it_unit_interval(t, Y) * f_it(t, x) / (1.0 - z);
}

double theorem_closed_form(const ParameterPair& p) {
  return kPi / (std::sqrt(1.0 - p.T()) * std::sqrt(1.0 - p.S()));
}

double q_closed_form(const ParameterPair& p) {
  return theorem_closed_form(p) /
         (std::sqrt(1.0 - p.sqrt_T()) * std::sqrt(1.0 - p.sqrt_S()));
}

IntegralEstimate integrate_main(const ParameterPair& p, SpectralPoint t,
                                const EvaluationPolicy& policy) {
  return integrate_chebyshev_weighted(
      [&](double z) { return main_integrand(z, p, t); }, p.T(), p.S(), policy);
}

IntegralEstimate integrate_q(double r, const ParameterPair& p,
                             const EvaluationPolicy& policy) {
  const QuadraticCoefficients q = quadratic_coefficients(r, p);
  const double span = p.sqrt_S() - p.sqrt_T();
  auto f = [&](double u) -> cplx {
    const double y = p.sqrt_T() + u * span;
    return 2.0 * (1.0 + r) * y * q.numerator(y) /
           ((1.0 + y) * q.quadratic(y * y));
  };
  return integrate_chebyshev_weighted(f, 0.0, 1.0, policy);
}

CheckRecord theorem_1_1(const ParameterPair& p, SpectralPoint t,
                        const SuiteSettings& settings) {
  if (std::abs(t.value().real()) > settings.cancellation_cap) {
    throw DomainError("theorem_1_1: |Re t| = " +
                      format_real(std::abs(t.value().real())) +
                      " exceeds the cancellation cap " +
                      format_real(settings.cancellation_cap));
  }
  const double tol = settings.tolerance_or(kTheoremTolerance);
  const double rhs = theorem_closed_form(p);
  const IntegralEstimate est =
      integrate_main(p, t, tightened(settings.policy, tol, rhs));

  auto rec = make_record(pair_prefix("theorem", p) + "/t=" +
                             format_complex(t.value()),
                         "theorem", est.value, rhs, tol);
  attach_pair(rec, p);
  rec.metadata["t_re"] = t.value().real();
  rec.metadata["t_im"] = t.value().imag();
  rec.metadata["digits_lost"] = std::log10(est.peak_magnitude / rhs);
  attach_estimate(rec, est);
  return rec;
}

CheckRecord barnes_triple(double a, double b, double c,
                          const SuiteSettings& settings) {
  require_finite(a, "a");
  require_finite(b, "b");
  require_finite(c, "c");
  if (!(a >= 0.0) || !(b > 0.0) || !(c > 0.0)) {
    throw DomainError("barnes_triple: need a >= 0 and b, c > 0");
  }
  const double rhs = std::tgamma(a + b) * std::tgamma(a + c) * std::tgamma(b + c);
  const double tol = settings.tolerance_or(kBarnesTolerance);

  auto g = [&](double s) -> cplx {
    const double bc = log_abs_gamma_sq(b, s) + log_abs_gamma_sq(c, s);
    double log_value;
    if (a == 0.0) {
      // Gamma(+-is)/Gamma(+-2is) = 4 cosh(pi s), finite at s = 0.
      log_value = std::log(2.0) + kPi * s + std::log1p(std::exp(-2.0 * kPi * s)) + bc;
    } else {
      log_value = log_abs_gamma_sq(a, s) + bc - log_abs_gamma_sq(0.0, 2.0 * s);
    }
    return std::exp(log_value) / (2.0 * kPi);
  };
  const IntegralEstimate est = integrate_decaying_halfline(
      g, kPi, tightened(settings.spectral_policy, tol, rhs), settings.halfline);

  auto rec = make_record("barnes/a=" + format_real(a) + "/b=" + format_real(b) +
                             "/c=" + format_real(c),
                         "barnes", est.value, rhs, tol);
  rec.metadata["a"] = a;
  rec.metadata["b"] = b;
  rec.metadata["c"] = c;
  attach_estimate(rec, est);
  return rec;
}

CheckRecord lemma_2_2(double A, double tau, const SuiteSettings& settings) {
  require_finite(A, "A");
  require_finite(tau, "tau");
  if (!(A > -1.0)) throw DomainError("lemma_2_2: A must be > -1");
  if (!(tau >= 0.0)) throw DomainError("lemma_2_2: tau must be >= 0");

  const double rhs = std::tgamma(0.5) * std::tgamma(1.0 + tau) *
                     std::tgamma(0.5 + tau) * std::pow(1.0 + A, -0.5 - tau);
  const double tol = settings.tolerance_or(kSpectralLemmaTolerance);
  // Gamma(+-is)Gamma(1/2+-is)/Gamma(+-2is) = 4 pi, so with the 1/(2 pi)
  // normalisation the integrand is 2 |Gamma(1/2 + tau + is)|^2 F(...).
  auto g = [&](double s) -> cplx {
    return 2.0 * std::exp(log_abs_gamma_sq(0.5 + tau, s)) * f_it(s, A);
  };
  const double decay = kPi - 2.0 * growth_angle(A);
  const IntegralEstimate est = integrate_decaying_halfline(
      g, decay, tightened(settings.spectral_policy, tol, rhs), settings.halfline);

  auto rec = make_record("lemma22/A=" + format_real(A) + "/tau=" + format_real(tau),
                         "lemma22", est.value, rhs, tol);
  rec.metadata["A"] = A;
  rec.metadata["tau"] = tau;
  attach_estimate(rec, est);
  return rec;
}

CheckRecord lemma_2_3(double A, double r, const SuiteSettings& settings) {
  return cosine_spectral_check(
      "lemma23/A=" + format_real(A) + "/r=" + format_real(r), "lemma23", A, r,
      std::nullopt, settings);
}

CheckRecord lemma_2_4(double A, double r, double B,
                      const SuiteSettings& settings) {
  return cosine_spectral_check("lemma24/A=" + format_real(A) + "/r=" +
                                   format_real(r) + "/B=" + format_real(B),
                               "lemma24", A, r, B, settings);
}

CheckRecord lemma_3_2(double r, const ParameterPair& p,
                      const SuiteSettings& settings) {
  require_finite(r, "r");
  if (!(r > 0.0)) throw DomainError("lemma_3_2: r must be > 0");
  const double closed = theorem_closed_form(p);
  const double rhs = kPi * closed / (1.0 + r);
  const double tol = settings.tolerance_or(kSpectralLemmaTolerance);
  auto g = [&](double t) -> cplx {
    return spectral_weight_closed(2.0 * t) * f_half_shifted(2.0 * t, r) *
           closed / kPi;
  };
  const IntegralEstimate est = integrate_decaying_halfline(
      g, 2.0 * kPi, tightened(settings.spectral_policy, tol, rhs),
      settings.halfline);
  auto rec = make_record(pair_prefix("lemma32", p) + "/r=" + format_real(r),
                         "lemma32", est.value, rhs, tol);
  attach_pair(rec, p);
  rec.metadata["r"] = r;
  attach_estimate(rec, est);
  return rec;
}

CheckRecord lemma_3_3_spectral(double z, double r, const ParameterPair& p,
                               const SuiteSettings& settings) {
  const KernelI kernel = kernel_I(z, r, p);
  const double rhs = kernel.I1 * kernel.I2;
  const double tol = settings.tolerance_or(kSpectralKernelTolerance);

  auto g = [&](double t) -> cplx {
    return spectral_weight_closed(2.0 * t) * f_half_shifted(2.0 * t, r) *
           spectral_product(t, z, p) / kPi;
  };
  const double Y = -kernel_AB(z, p).A;
  const double decay = 2.0 * kPi - 4.0 * std::asin(std::sqrt(Y));
  const IntegralEstimate est = integrate_decaying_halfline(
      g, decay, tightened(settings.spectral_policy, tol, rhs), settings.halfline);

  auto rec = make_record(pair_prefix("lemma33", p) + "/z=" + format_real(z) +
                             "/r=" + format_real(r),
                         "lemma33", est.value, rhs, tol);
  attach_pair(rec, p);
  rec.metadata["z"] = z;
  rec.metadata["r"] = r;
  attach_estimate(rec, est);
  return rec;
}

CheckRecord q_integral(double r, const ParameterPair& p,
                       const SuiteSettings& settings) {
  const double rhs = q_closed_form(p);
  const double tol = settings.tolerance_or(kQIntegralTolerance);
  const IntegralEstimate est =
      integrate_q(r, p, tightened(settings.policy, tol, rhs));
  auto rec = make_record(pair_prefix("qintegral", p) + "/r=" + format_real(r),
                         "qintegral", est.value, rhs, tol);
  attach_pair(rec, p);
  rec.metadata["r"] = r;
  attach_estimate(rec, est);
  return rec;
}

CheckRecord q_limit_integral(const ParameterPair& p,
                             const SuiteSettings& settings) {
  const double rhs = kPi * std::sqrt(p.c()) /
                     (std::sqrt(1.0 - p.T()) * std::sqrt(1.0 - p.S()));
  const double tol = settings.tolerance_or(kQIntegralTolerance);
  const double span = p.sqrt_S() - p.sqrt_T();
  const IntegralEstimate est = integrate_chebyshev_weighted(
      [&](double u) -> cplx { return 1.0 / (1.0 + p.sqrt_T() + u * span); },
      0.0, 1.0, tightened(settings.policy, tol, rhs));
  auto rec = make_record(pair_prefix("qlimit", p), "qlimit", est.value, rhs, tol);
  attach_pair(rec, p);
  attach_estimate(rec, est);
  return rec;
}

CheckRecord obstruction_n_r(double r, const ParameterPair& p,
                            const SuiteSettings& settings) {
  const std::string id = pair_prefix("obstruction", p) + "/r=" + format_real(r);
  QuadraticFamily fam;
  try {
    fam = quadratic_family(r, p);
  } catch (const DegenerateConfiguration& err) {
    CheckRecord rec;
    rec.id = id;
    rec.suite = "obstruction";
    rec.status = CheckStatus::skipped;
    rec.note = err.what();
    attach_pair(rec, p);
    rec.metadata["r"] = r;
    return rec;
  }

  const double closed = q_closed_form(p);
  const double tol = settings.tolerance_or(kDSumTolerance);
  const IntegralEstimate est =
      integrate_q(r, p, tightened(settings.policy, tol, closed));
  const cplx gap = est.value - closed;

  auto rec = make_record(id, "obstruction", fam.D_sum(), gap, tol);
  attach_pair(rec, p);
  rec.metadata["r"] = r;
  attach_estimate(rec, est);

  // n_r from Q(r) - closed = 2 i n_r pi sqrt(c) sqrt(r)(1+r) / sqrt(F^2-4EG)
  const cplx unit = 2.0 * cplx(0.0, 1.0) * kPi * std::sqrt(p.c()) *
                    std::sqrt(r) * (1.0 + r) / fam.discriminant_root;
  const cplx n_r = gap / unit;
  rec.metadata["n_r_re"] = n_r.real();
  rec.metadata["n_r_im"] = n_r.imag();

  const cplx d_sq = fam.D_square_closed();
  double square_residual = 0.0;
  double mod_min = INFINITY, mod_max = 0.0;
  for (const cplx& d : fam.D) {
    square_residual = std::max(square_residual, std::abs(d * d - d_sq) / std::abs(d_sq));
    mod_min = std::min(mod_min, std::abs(d));
    mod_max = std::max(mod_max, std::abs(d));
  }
  const double mod_spread = (mod_max - mod_min) / mod_max;
  const double a_residual = std::abs(fam.a - fam.a_closed()) / fam.a_closed();
  rec.metadata["d_square_residual"] = square_residual;
  rec.metadata["d_modulus_spread"] = mod_spread;
  rec.metadata["partial_fraction_residual"] = fam.partial_fraction_residual;
  rec.metadata["a_residual"] = a_residual;

  require(rec, fam.partial_fraction_residual <= kPartialFractionTolerance,
          "partial-fraction decomposition does not reproduce the kernel");
  require(rec, square_residual <= kDModulusTolerance,
          "D_i^2 differs from its closed form");
  require(rec, mod_spread <= kDModulusTolerance, "|D_i| are not all equal");
  require(rec, a_residual <= 1e-12, "a differs from its closed form");
  if (r >= settings.large_r_threshold) {
    const double nearest = std::round(n_r.real()) + 0.0;  // folds -0
    rec.metadata["n_r_nearest"] = nearest;
    require(rec, std::abs(n_r - nearest) <= kIntegralityTolerance,
            "n_r is not within tolerance of an integer");
    require(rec, std::abs(nearest) <= 4.0, "n_r outside [-4, 4]");
  }
  return rec;
}

CheckRecord lemma_3_1_weighted(double r, const ParameterPair& p,
                               const SuiteSettings& settings) {
  require_finite(r, "r");
  if (!(r > 0.0)) throw DomainError("lemma_3_1_weighted: r must be > 0");
  const double closed = theorem_closed_form(p);
  const double tol = settings.tolerance_or(kWeightedTolerance);
  EvaluationPolicy outer = settings.spectral_policy;
  outer.abs_tol = std::min(outer.abs_tol, 1e-3 * tol);

  int inner_unconverged = 0;
  int inner_nodes = 0;
  auto g = [&](double t) -> cplx {
    const cplx weight = spectral_weight_closed(2.0 * t) * f_half_shifted(2.0 * t, r) / kPi;
    // Inner accuracy only needs to match what the weight lets through.
    EvaluationPolicy inner = settings.policy;
    const double scale = std::max(std::abs(weight), 1e-300);
    inner.abs_tol = std::max(inner.abs_tol, outer.abs_tol / scale);
    const IntegralEstimate a_t = integrate_main(p, t, inner);
    inner_nodes += a_t.nodes_used;
    if (!a_t.converged) ++inner_unconverged;
    return weight * (a_t.value - closed);
  };
  const IntegralEstimate est =
      integrate_decaying_halfline(g, 2.0 * kPi, outer, settings.halfline);

  auto rec = make_record(pair_prefix("lemma31", p) + "/r=" + format_real(r),
                         "lemma31", est.value, 0.0, tol);
  attach_pair(rec, p);
  rec.metadata["r"] = r;
  rec.metadata["inner_nodes"] = inner_nodes;
  rec.metadata["inner_unconverged"] = inner_unconverged;
  attach_estimate(rec, est);
  if (inner_unconverged > 0) {
    mark_unconverged(rec, "inner A_t quadrature did not converge");
  }
  return rec;
}

}  // namespace hypint
