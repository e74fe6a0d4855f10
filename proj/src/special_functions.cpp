#include "hypint/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hypint/errors.hpp"

namespace hypint {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,
    -1259.1392167224028,     771.32342877765313,
    -176.61502916214059,     12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,
    1.5056327351493116e-7};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

double wrap_phase(double phase) {
  double w = std::remainder(phase, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

// log Gamma(z) for Re z >= 1/2, on the branch continuous from the positive
// real axis (not yet wrapped).
cplx log_gamma_lanczos(cplx z) {
  z -= 1.0;
  cplx series = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) {
    series += kLanczos[k] / (z + static_cast<double>(k));
  }
  const cplx base = z + kLanczosG + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(base) - base + std::log(series);
}

// log sin(pi z) modulo 2 pi i, stable for large |Im z|.
cplx log_sin_pi(cplx z) {
  // sin(pi z) has period 2 in Re z.
  const double x = z.real() - 2.0 * std::round(0.5 * z.real());
  const double y = z.imag();
  const cplx zr(x, y);
  if (y > 10.0) {
    return -kI * kPi * zr + std::log(0.5 * kI) +
           std::log(1.0 - std::exp(2.0 * kI * kPi * zr));
  }
  if (y < -10.0) {
    return kI * kPi * zr + std::log(-0.5 * kI) +
           std::log(1.0 - std::exp(-2.0 * kI * kPi * zr));
  }
  return std::log(std::sin(kPi * zr));
}

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 &&
         z.real() == std::floor(z.real());
}

// The common angle in every closed form: log(sqrt(x+1) + sqrt(x)) on the
// principal branch. For x >= 0 this is asinh(sqrt(x)); for -1 < x < 0 the
// base lies on the unit circle in the first quadrant, so the log is
// i arcsin(sqrt(-x)).
cplx principal_log_angle(double x) {
  if (x >= 0.0) return std::asinh(std::sqrt(x));
  return cplx(0.0, std::asin(std::sqrt(-x)));
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be finite");
  }
}

}  // namespace

void EvaluationPolicy::validate() const {
  if (!(abs_tol > 0.0)) throw DomainError("policy: abs_tol must be > 0");
  if (!(rel_tol > 0.0)) throw DomainError("policy: rel_tol must be > 0");
  if (max_terms < 16) throw DomainError("policy: max_terms must be >= 16");
  if (max_nodes < 8) throw DomainError("policy: max_nodes must be >= 8");
}

double EvaluationPolicy::tolerance_for(double scale) const {
  return std::max(abs_tol, rel_tol * std::abs(scale));
}

SpectralPoint::SpectralPoint(cplx t) : t_(t) {
  if (!std::isfinite(t.real()) || !std::isfinite(t.imag())) {
    throw DomainError("spectral point t must be finite");
  }
}

cplx log_gamma(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("log_gamma: argument must be finite");
  }
  if (is_nonpositive_integer(z)) {
    throw DomainError("log_gamma: pole of Gamma at z = " +
                      format_real(z.real()));
  }
  cplx value;
  if (z.real() < 0.5) {
    value = std::log(kPi) - log_sin_pi(z) - log_gamma_lanczos(1.0 - z);
  } else {
    value = log_gamma_lanczos(z);
  }
  return {value.real(), wrap_phase(value.imag())};
}

double log_abs_gamma_sq(double x, double y) {
  return 2.0 * log_gamma(cplx(x, y)).real();
}

cplx gauss_2f1_series(cplx a, cplx b, cplx c, double x,
                      const EvaluationPolicy& policy) {
  policy.validate();
  if (!(std::abs(x) < 1.0)) {
    throw DomainError("gauss_2f1_series: |x| must be < 1, got " +
                      format_real(x));
  }
  if (is_nonpositive_integer(c)) {
    throw DomainError("gauss_2f1_series: c is a non-positive integer");
  }
  cplx sum = 1.0;
  cplx term = 1.0;
  int small_run = 0;
  for (int k = 0; k < policy.max_terms; ++k) {
    const double kk = static_cast<double>(k);
    term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * x;
    sum += term;
    if (term == 0.0) return sum;  // terminating series
    // Two consecutive small terms, so a transient dip cannot stop early.
    if (std::abs(term) < policy.abs_tol * std::max(1.0, std::abs(sum))) {
      if (++small_run == 2) return sum;
    } else {
      small_run = 0;
    }
  }
  throw ConvergenceError("gauss_2f1_series: no convergence within " +
                             std::to_string(policy.max_terms) + " terms",
                         std::abs(term));
}

cplx gauss_2f1_transformed(cplx a, cplx b, cplx c, double x,
                           const EvaluationPolicy& policy) {
  if (!(x < 1.0)) {
    throw DomainError("gauss_2f1_transformed: x must be < 1");
  }
  if (x < -0.5) {
    const cplx prefactor = std::exp(-a * std::log(1.0 - x));
    return prefactor * gauss_2f1_series(a, c - b, c, x / (x - 1.0), policy);
  }
  return gauss_2f1_series(a, b, c, x, policy);
}

cplx f_it(SpectralPoint t, double x) {
  require_finite(x, "f_it: x");
  if (!(x > -1.0)) {
    throw DomainError("f_it: x must be > -1, got " + format_real(x));
  }
  return std::cos(2.0 * t.value() * principal_log_angle(x));
}

cplx f_2it_unit_interval(SpectralPoint t, double Y) {
  require_finite(Y, "f_2it_unit_interval: Y");
  if (!(Y > 0.0 && Y < 1.0)) {
    throw DomainError("f_2it_unit_interval: Y must lie in (0, 1), got " +
                      format_real(Y));
  }
  // cos(4it theta) = cosh(4t theta)
  return std::cosh(4.0 * t.value() * std::asin(std::sqrt(Y)));
}

cplx f_2it(SpectralPoint t, double w) {
  require_finite(w, "f_2it: w");
  if (w > 1.0) {
    throw DomainError("f_2it: w must be <= 1, got " + format_real(w));
  }
  if (w <= 0.0) return f_it(SpectralPoint(2.0 * t.value()), -w);
  return std::cosh(4.0 * t.value() * std::asin(std::sqrt(w)));
}

cplx f_half_shifted(cplx s, double r) {
  require_finite(r, "f_half_shifted: r");
  if (!(r > -1.0)) {
    throw DomainError("f_half_shifted: r must be > -1, got " +
                      format_real(r));
  }
  return std::cos(2.0 * SpectralPoint(s).value() * principal_log_angle(r)) /
         std::sqrt(1.0 + r);
}

double gamma_ratio_closed(double s) { return 4.0 * std::cosh(kPi * s); }

double spectral_weight_closed(double s) {
  const double e = std::exp(-kPi * std::abs(s));
  return 8.0 * kPi * kPi * e / (1.0 + e * e);
}

double gamma_ratio_via_log_gamma(double s) {
  if (s == 0.0) throw DomainError("gamma_ratio_via_log_gamma: s = 0");
  return std::exp(log_abs_gamma_sq(0.0, s) - log_abs_gamma_sq(0.0, 2.0 * s));
}

double spectral_weight_via_log_gamma(double s) {
  if (s == 0.0) throw DomainError("spectral_weight_via_log_gamma: s = 0");
  return std::exp(log_abs_gamma_sq(0.0, s) + 2.0 * log_abs_gamma_sq(0.5, s) -
                  log_abs_gamma_sq(0.0, 2.0 * s));
}

CheckRecord check_quadratic_transform(SpectralPoint t, double w,
                                      double tolerance) {
  require_finite(w, "check_quadratic_transform: w");
  if (w > 0.5) {
    throw DomainError(
        "check_quadratic_transform: the quadratic transformation needs "
        "w <= 1/2, got " + format_real(w));
  }
  const double X = 4.0 * w * (1.0 - w);
  // F(it, -it; 1/2; X): f_it for X <= 0, the doubled form at t/2 otherwise.
  const cplx lhs = X <= 0.0 ? f_it(t, -X)
                            : f_2it(SpectralPoint(0.5 * t.value()), X);
  const cplx rhs = f_2it(t, w);
  auto rec = make_record("quadratic_transform/t=" + format_complex(t.value()) +
                             "/w=" + format_real(w),
                         "quadratic_transform", lhs, rhs, tolerance);
  rec.metadata = {{"t_re", t.value().real()},
                  {"t_im", t.value().imag()},
                  {"w", w}};
  return rec;
}

CheckRecord check_product_formula(SpectralPoint t, double x, double y,
                                  double tolerance) {
  require_finite(x, "check_product_formula: x");
  require_finite(y, "check_product_formula: y");
  if (!(x > 0.0) || !(y > 0.0)) {
    throw DomainError("check_product_formula: x and y must be > 0");
  }
  const double sx = std::sqrt(x), sy = std::sqrt(y);
  const double sx1 = std::sqrt(x + 1.0), sy1 = std::sqrt(y + 1.0);

  const cplx lhs = 2.0 * f_it(t, x) * f_it(t, y);
  cplx rhs = 0.0;
  double companion = 0.0;
  for (const double eps : {1.0, -1.0}) {
    const double root = sx * sy1 + eps * sy * sx1;
    const double X = root * root;
    const double root1 = sx1 * sy1 + eps * sx * sy;
    companion = std::max(companion,
                         std::abs(X + 1.0 - root1 * root1) / (root1 * root1));
    rhs += f_it(t, X);
  }
  auto rec = make_record("product_formula/t=" + format_complex(t.value()) +
                             "/x=" + format_real(x) + "/y=" + format_real(y),
                         "product_formula", lhs, rhs, tolerance);
  rec.metadata = {{"t_re", t.value().real()},
                  {"t_im", t.value().imag()},
                  {"x", x},
                  {"y", y},
                  {"companion_residual", companion}};
  require(rec, companion <= 1e-12,
          "X + 1 != (sqrt(x+1)sqrt(y+1) + eps sqrt(x)sqrt(y))^2");
  return rec;
}

}  // namespace hypint
