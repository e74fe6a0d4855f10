#pragma once

#include <array>
#include <complex>

#include "hypint/parameter_pair.hpp"

namespace hypint {

/// Polynomial data of the r-dependent rational kernel:
/// R = 2r(1 - sqrt T)(1 - sqrt S) and the coefficients of
/// E(r) + F(r) z + G(r) z^2, together with the numerator
/// N(y) = p0 + R y + k y^2 (y = sqrt z) of I2.
struct QuadraticCoefficients {
  double r = 0.0;
  double R = 0.0;
  double E = 0.0;
  double F = 0.0;
  double G = 0.0;
  double p0 = 0.0;  ///< sqrt T + sqrt S - 2 sqrt S sqrt T
  double k = 0.0;   ///< sqrt T + sqrt S - 2

  double quadratic(double z) const { return E + F * z + G * z * z; }
  template <class Y>
  Y numerator(Y y) const { return p0 + R * y + k * y * y; }
};

QuadraticCoefficients quadratic_coefficients(double r, const ParameterPair& p);

/// The full partial-fraction decomposition
///
///   sqrt(z) N(sqrt z) / ((1 + sqrt z)(E + Fz + Gz^2))
///     = a/(1+y) + b/(1-sqrt(a1) y) + c/(1+sqrt(a1) y)
///       + d/(1-sqrt(a2) y) + e/(1+sqrt(a2) y),     y = sqrt z,
///
/// with E + Fz + Gz^2 = E (1 - a1 z)(1 - a2 z), and the four D-terms that
/// the b..e pieces contribute to Q(r).
///
/// Roots are ordered by (real, imag) of 1/alpha; sqrt(alpha) is the
/// principal root. Every asserted identity is symmetric under either choice.
struct QuadraticFamily {
  QuadraticCoefficients coeffs;
  std::complex<double> alpha1;
  std::complex<double> alpha2;
  std::complex<double> sqrt_alpha1;
  std::complex<double> sqrt_alpha2;
  std::complex<double> discriminant_root;  ///< principal sqrt(F^2 - 4EG)
  std::complex<double> a, b, c, d, e;
  std::array<std::complex<double>, 4> D;
  /// max relative mismatch of the decomposition at 5 points of [T, S].
  double partial_fraction_residual = 0.0;

  std::complex<double> D_sum() const { return D[0] + D[1] + D[2] + D[3]; }
  /// -4 pi^2 (1-sqrt T)(1-sqrt S) r (1+r)^2 / ((a1 - a2)^2 E^2), the common
  /// value of every D_i^2.
  std::complex<double> D_square_closed() const;
  /// Closed form of a: 1 / (2 (1-sqrt T)(1-sqrt S)(1+r)).
  double a_closed() const;
  /// Contribution of the a-term to Q(r); equals the closed form of Q.
  std::complex<double> a_term(const ParameterPair& p) const;
};

/// Builds the decomposition. Throws DomainError for r <= 0 and
/// DegenerateConfiguration when the quadratic has a double root or a root
/// at z = 0 or z = 1.
QuadraticFamily quadratic_family(double r, const ParameterPair& p);

/// 1 + A(z) + r + B(z) as a function of a (possibly complex, possibly
/// negative) y standing for sqrt z: N(y) / (2 (1-sqrt T)(1-sqrt S) y).
std::complex<double> shifted_sum(const QuadraticCoefficients& q,
                                 const ParameterPair& p,
                                 std::complex<double> y);

/// Integral over q in (0,1) of 1 / (sqrt(q(1-q)) (1 - u (sqrt T +
/// q (sqrt S - sqrt T)))), valid when the linear factor has no zero on the
/// segment: pi / ((1 - u sqrt T) sqrt((1 - u sqrt S)/(1 - u sqrt T))).
std::complex<double> arcsine_linear_integral(std::complex<double> u,
                                             const ParameterPair& p);

}  // namespace hypint
