#include "hypint/quadratic_family.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypint/check_record.hpp"
#include "hypint/errors.hpp"

namespace hypint {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

bool root_less(cplx x, cplx y) {
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

}  // namespace

QuadraticCoefficients quadratic_coefficients(double r, const ParameterPair& p) {
  if (!std::isfinite(r) || !(r > 0.0)) {
    throw DomainError("quadratic family: r must be > 0, got " + format_real(r));
  }
  const double st = p.sqrt_T();
  const double ss = p.sqrt_S();
  QuadraticCoefficients q;
  q.r = r;
  q.R = 2.0 * r * p.c();
  q.p0 = st + ss - 2.0 * ss * st;
  q.k = st + ss - 2.0;
  q.E = q.p0 * q.p0 + 2.0 * q.R * ss * st;
  q.F = 2.0 * q.k * q.p0 + 2.0 * q.R * (1.0 + ss * st - 2.0 * st - 2.0 * ss) +
        q.R * q.R;
  q.G = q.k * q.k + 2.0 * q.R;
  return q;
}

cplx shifted_sum(const QuadraticCoefficients& q, const ParameterPair& p,
                 cplx y) {
  return q.numerator(y) / (2.0 * p.c() * y);
}

cplx arcsine_linear_integral(cplx u, const ParameterPair& p) {
  const cplx at_T = 1.0 - u * p.sqrt_T();
  const cplx at_S = 1.0 - u * p.sqrt_S();
  return kPi / (at_T * std::sqrt(at_S / at_T));
}

cplx QuadraticFamily::D_square_closed() const {
  // The (1 - sqrt T)(1 - sqrt S) factor is recovered from R / (2r).
  const double c = coeffs.R / (2.0 * coeffs.r);
  const double r = coeffs.r;
  const cplx gap = (alpha1 - alpha2) * coeffs.E;
  return -4.0 * kPi * kPi * c * r * (1.0 + r) * (1.0 + r) / (gap * gap);
}

double QuadraticFamily::a_closed() const {
  const double c = coeffs.R / (2.0 * coeffs.r);
  return 1.0 / (2.0 * c * (1.0 + coeffs.r));
}

QuadraticFamily quadratic_family(double r, const ParameterPair& p) {
  QuadraticFamily fam;
  fam.coeffs = quadratic_coefficients(r, p);
  const QuadraticCoefficients& q = fam.coeffs;

  const double disc = q.F * q.F - 4.0 * q.E * q.G;
  const double disc_scale = q.F * q.F + 4.0 * std::abs(q.E * q.G);
  if (std::abs(disc) <= 1e-10 * disc_scale) {
    throw DegenerateConfiguration("quadratic family: double root at r = " +
                                  format_real(r));
  }
  fam.discriminant_root = std::sqrt(cplx(disc, 0.0));

  cplx z1, z2;  // roots of E + Fz + Gz^2, i.e. 1/alpha
  if (disc > 0.0) {
    const double root = std::sqrt(disc);
    const double half = -0.5 * (q.F + std::copysign(root, q.F));
    z1 = half / q.G;
    z2 = q.E / half;
  } else {
    const double im = std::sqrt(-disc) / (2.0 * q.G);
    const double re = -q.F / (2.0 * q.G);
    z1 = cplx(re, im);
    z2 = cplx(re, -im);
  }
  if (root_less(z2, z1)) std::swap(z1, z2);
  for (const cplx z : {z1, z2}) {
    if (std::abs(z) == 0.0 || std::abs(z - 1.0) <= 1e-10) {
      throw DegenerateConfiguration(
          "quadratic family: root at z = " + format_complex(z) +
          " for r = " + format_real(r));
    }
  }

  fam.alpha1 = 1.0 / z1;
  fam.alpha2 = 1.0 / z2;
  fam.sqrt_alpha1 = std::sqrt(fam.alpha1);
  fam.sqrt_alpha2 = std::sqrt(fam.alpha2);
  const cplx u1 = fam.sqrt_alpha1;
  const cplx u2 = fam.sqrt_alpha2;
  const double c = p.c();
  const double E = q.E;
  const cplx a12 = fam.alpha1 - fam.alpha2;

  fam.a = -q.numerator(-1.0) / (q.E + q.F + q.G);
  // Residues at y = +-1/sqrt(alpha); shifted_sum evaluates 1 + A + r + B
  // with the signed y, which is what each pole needs.
  fam.b = c * shifted_sum(q, p, 1.0 / u1) / (a12 * (1.0 + 1.0 / u1) * E);
  fam.c = c * shifted_sum(q, p, -1.0 / u1) / (a12 * (1.0 - 1.0 / u1) * E);
  fam.d = c * shifted_sum(q, p, 1.0 / u2) / (-a12 * (1.0 + 1.0 / u2) * E);
  fam.e = c * shifted_sum(q, p, -1.0 / u2) / (-a12 * (1.0 - 1.0 / u2) * E);

  const double scale = 2.0 * (1.0 + r);
  fam.D = {scale * fam.b * arcsine_linear_integral(u1, p),
           scale * fam.c * arcsine_linear_integral(-u1, p),
           scale * fam.d * arcsine_linear_integral(u2, p),
           scale * fam.e * arcsine_linear_integral(-u2, p)};

  for (int j = 0; j <= 4; ++j) {
    const double z = p.T() + (p.S() - p.T()) * j / 4.0;
    const double y = std::sqrt(z);
    const double kernel = y * q.numerator(y) / ((1.0 + y) * q.quadratic(z));
    const cplx pieces = fam.a / (1.0 + y) + fam.b / (1.0 - u1 * y) +
                        fam.c / (1.0 + u1 * y) + fam.d / (1.0 - u2 * y) +
                        fam.e / (1.0 + u2 * y);
    fam.partial_fraction_residual =
        std::max(fam.partial_fraction_residual,
                 std::abs(kernel - pieces) / std::abs(kernel));
  }
  return fam;
}

cplx QuadraticFamily::a_term(const ParameterPair& p) const {
  return 2.0 * (1.0 + coeffs.r) * a * arcsine_linear_integral(-1.0, p);
}

}  // namespace hypint
