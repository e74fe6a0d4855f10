#pragma once

#include <complex>

#include "hypint/check_record.hpp"
#include "hypint/policy.hpp"

namespace hypint {

using cplx = std::complex<double>;

/// Spectral parameter t of F(it, -it; 1/2; .) and relatives. Always finite.
class SpectralPoint {
 public:
  SpectralPoint(cplx t);  // NOLINT(google-explicit-constructor)
  SpectralPoint(double t) : SpectralPoint(cplx(t, 0.0)) {}  // NOLINT

  cplx value() const { return t_; }

 private:
  cplx t_;
};

/// Principal logarithm of Gamma(z): exp(log_gamma(z)) == Gamma(z) and the
/// imaginary part lies in (-pi, pi].
///
/// Lanczos approximation (g = 7, 9 coefficients) for Re z >= 1/2 and the
/// reflection formula below that. Throws DomainError at the poles
/// z = 0, -1, -2, ...
cplx log_gamma(cplx z);

/// log|Gamma(x + iy)|^2 = 2 Re log Gamma(x + iy), the form every spectral
/// weight needs since Gamma(x - iy) = conj(Gamma(x + iy)).
double log_abs_gamma_sq(double x, double y);

/// Partial sums of sum_k (a)_k (b)_k / ((c)_k k!) x^k for |x| < 1.
///
/// Stops once a term falls below abs_tol * max(1, |sum|); throws
/// ConvergenceError carrying the last term magnitude if max_terms is reached.
cplx gauss_2f1_series(cplx a, cplx b, cplx c, double x,
                      const EvaluationPolicy& policy);

/// Series evaluation for any real x < 1: Pfaff's transformation
/// F(a,b;c;x) = (1-x)^{-a} F(a, c-b; c; x/(x-1)) when x < -1/2, the raw
/// series otherwise. Independent of the closed forms below; tests use it as
/// their oracle.
cplx gauss_2f1_transformed(cplx a, cplx b, cplx c, double x,
                           const EvaluationPolicy& policy);

/// F(it, -it; 1/2; -x) = cos(2t log(sqrt(x+1) + sqrt(x))), x > -1.
cplx f_it(SpectralPoint t, double x);

/// F(2it, -2it; 1/2; Y) = cos(4it arcsin sqrt(Y)) for 0 < Y < 1.
cplx f_2it_unit_interval(SpectralPoint t, double Y);

/// F(1/2 + is, 1/2 - is; 1/2; -r) = (1+r)^{-1/2} cos(2s log(sqrt(r+1) +
/// sqrt(r))), r > -1.
cplx f_half_shifted(cplx s, double r);

/// F(2it, -2it; 1/2; w) for every real w <= 1, including the endpoint
/// w = 1 where the closed form is continuous (value cosh(2 pi t)).
/// Dispatches to f_it for w <= 0 and to the arcsine form on (0, 1].
cplx f_2it(SpectralPoint t, double w);

/// Gamma(is)Gamma(-is) / (Gamma(2is)Gamma(-2is)) = 4 cosh(pi s); finite
/// limit 4 at s = 0.
double gamma_ratio_closed(double s);

/// Gamma(+-is) Gamma^2(1/2 +- is) / Gamma(+-2is) = 4 pi^2 / cosh(pi s),
/// written so it cannot overflow for large s.
double spectral_weight_closed(double s);

/// The same two weights assembled from log_gamma; used only to cross-check
/// the closed forms. Undefined at s = 0.
double gamma_ratio_via_log_gamma(double s);
double spectral_weight_via_log_gamma(double s);

/// Quadratic transformation F(it,-it;1/2;4w(1-w)) = F(2it,-2it;1/2;w),
/// w <= 1/2. Both sides go through closed forms.
CheckRecord check_quadratic_transform(SpectralPoint t, double w,
                                      double tolerance = 1e-11);

/// Product formula 2 f_it(t,x) f_it(t,y) = f_it(t,X+) + f_it(t,X-) with
/// X_eps = (sqrt(x) sqrt(y+1) + eps sqrt(y) sqrt(x+1))^2, x, y > 0. Also
/// asserts X_eps + 1 = (sqrt(x+1) sqrt(y+1) + eps sqrt(x) sqrt(y))^2.
CheckRecord check_product_formula(SpectralPoint t, double x, double y,
                                  double tolerance = 1e-11);

}  // namespace hypint
