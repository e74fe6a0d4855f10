#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hypint/errors.hpp"
#include "hypint/identity_suite.hpp"
#include "hypint/quadratic_family.hpp"

using namespace hypint;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<ParameterPair>& pairs() {
  static const std::vector<ParameterPair> p = {{0.25, 0.5}, {0.1, 0.9}, {0.4, 0.45}};
  return p;
}

// Midpoint rule in theta for int_0^1 f(q) / sqrt(q(1-q)) dq with
// q = (1 - cos theta)/2; independent of the library engine's node layout.
cplx arcsine_mean(const std::function<cplx(double)>& f, int n) {
  cplx sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const double theta = kPi * (j + 0.5) / n;
    sum += f(0.5 * (1.0 - std::cos(theta)));
  }
  return sum * kPi / static_cast<double>(n);
}

}  // namespace

TEST(ParameterPair, Validation) {
  EXPECT_NO_THROW(ParameterPair(0.25, 0.5));
  EXPECT_THROW(ParameterPair(0.5, 0.25), DomainError);
  EXPECT_THROW(ParameterPair(0.0, 0.5), DomainError);
  EXPECT_THROW(ParameterPair(0.3, 1.0), DomainError);
  EXPECT_THROW(ParameterPair(0.3, 0.3), DomainError);
}

TEST(Kernel, EndpointsOfAandB) {
  for (const auto& p : pairs()) {
    EXPECT_NEAR(kernel_AB(p.T(), p).A, 0.0, 1e-15);
    EXPECT_NEAR(kernel_AB(p.S(), p).B, 0.0, 1e-15);
    for (int j = 0; j <= 32; ++j) {
      const double z = p.T() + (p.S() - p.T()) * j / 32.0;
      const KernelAB ab = kernel_AB(z, p);
      EXPECT_GT(ab.A, -1.0);
      EXPECT_LE(ab.A, 0.0);
      EXPECT_GE(ab.B, 0.0);
    }
  }
  EXPECT_THROW(kernel_AB(0.6, pairs()[0]), DomainError);
}

TEST(Kernel, ShiftedSumIdentity) {
  // 1 + A + r + B == N(sqrt z) / (2 (1-sqrt T)(1-sqrt S) sqrt z)
  for (const auto& p : pairs()) {
    for (double r : {0.5, 1.0, 10.0}) {
      const double z = 0.5 * (p.T() + p.S());
      const KernelAB ab = kernel_AB(z, p);
      const auto q = quadratic_coefficients(r, p);
      const cplx lhs = 1.0 + ab.A + r + ab.B;
      EXPECT_LT(std::abs(lhs - shifted_sum(q, p, std::sqrt(z))), 1e-12 * std::abs(lhs));
    }
  }
}

TEST(Kernel, I1PositiveAndDenominatorPositive) {
  for (const auto& p : pairs()) {
    for (double r : {0.01, 0.1, 0.5, 1.0, 10.0, 100.0}) {
      const auto q = quadratic_coefficients(r, p);
      for (int j = 0; j <= 32; ++j) {
        const double z = p.T() + (p.S() - p.T()) * j / 32.0;
        EXPECT_GT(q.quadratic(z), 0.0) << "r=" << r << " z=" << z;
        if (j > 0 && j < 32) EXPECT_GT(kernel_I(z, r, p).I1, 0.0);
      }
    }
  }
}

TEST(Kernel, I2LeadingOrderInR) {
  // (1+r) I2 - 1/(2 (1-sqrt T)(1-sqrt S) sqrt z) shrinks like 1/r.
  const ParameterPair p(0.25, 0.5);
  const double z = 0.4;
  auto dev = [&](double r) {
    return std::abs((1.0 + r) * kernel_I(z, r, p).I2 - 1.0 / (2.0 * p.c() * std::sqrt(z)));
  };
  const double ratio1 = dev(10.0) / dev(100.0);
  const double ratio2 = dev(100.0) / dev(1000.0);
  EXPECT_GT(ratio1, 5.0);
  EXPECT_LT(ratio1, 20.0);
  EXPECT_GT(ratio2, 5.0);
  EXPECT_LT(ratio2, 20.0);
}

TEST(Coefficients, EAndGPositive) {
  for (const auto& p : pairs()) {
    for (double r : {1.0, 10.0, 100.0}) {
      const auto q = quadratic_coefficients(r, p);
      EXPECT_GT(q.E, 0.0);
      EXPECT_GT(q.G, 0.0);
    }
  }
  EXPECT_THROW(quadratic_coefficients(0.0, pairs()[0]), DomainError);
  EXPECT_THROW(quadratic_coefficients(-1.0, pairs()[0]), DomainError);
}

TEST(Family, ACoefficientClosedForm) {
  const ParameterPair p(0.25, 0.5);
  const QuadraticFamily fam = quadratic_family(10.0, p);
  const double expected = 1.0 / (2.0 * p.c() * 11.0);
  EXPECT_NEAR(fam.a.real(), expected, 1e-12 * expected);
  EXPECT_NEAR(fam.a.imag(), 0.0, 1e-15);
}

TEST(Family, PartialFractionsReproduceKernel) {
  for (const auto& p : pairs()) {
    for (double r : {0.5, 1.0, 10.0, 100.0}) {
      const QuadraticFamily fam = quadratic_family(r, p);
      EXPECT_LE(fam.partial_fraction_residual, 1e-9) << "r=" << r;
    }
  }
}

TEST(Family, RootRelation) {
  // At sqrt z = 1/sqrt(alpha_1):
  // (sqrt z - sqrt T)(sqrt z - sqrt S) = -z c (1+A+r+B)^2 / ((1+sqrt z)^2 r)
  for (const auto& p : pairs()) {
    for (double r : {1.0, 10.0, 100.0}) {
      const QuadraticFamily fam = quadratic_family(r, p);
      for (cplx u : {fam.sqrt_alpha1, fam.sqrt_alpha2}) {
        const cplx y = 1.0 / u;
        const cplx z = y * y;
        const cplx sum = shifted_sum(fam.coeffs, p, y);
        const cplx lhs = (y - p.sqrt_T()) * (y - p.sqrt_S());
        const cplx rhs = -z * p.c() * sum * sum / ((1.0 + y) * (1.0 + y) * r);
        EXPECT_LE(std::abs(lhs - rhs), 1e-9 * std::max(1.0, std::abs(lhs)))
            << "r=" << r;
      }
    }
  }
}

TEST(Family, DTermsSquareAndModulus) {
  for (const auto& p : pairs()) {
    for (double r : {0.5, 1.0, 10.0, 50.0, 100.0}) {
      const QuadraticFamily fam = quadratic_family(r, p);
      const cplx d2 = fam.D_square_closed();
      for (const cplx& d : fam.D) {
        EXPECT_LE(std::abs(d * d - d2), 1e-9 * std::abs(d2)) << "r=" << r;
        EXPECT_NEAR(std::abs(d), std::sqrt(std::abs(d2)), 1e-9 * std::sqrt(std::abs(d2)));
      }
    }
  }
}

TEST(Family, DTermSumMatchesQGap) {
  const ParameterPair p(0.25, 0.5);
  EvaluationPolicy pol;
  pol.abs_tol = 1e-13;
  pol.rel_tol = 1e-13;
  for (double r : {1.0, 10.0, 100.0}) {
    const QuadraticFamily fam = quadratic_family(r, p);
    const cplx gap = integrate_q(r, p, pol).value - q_closed_form(p);
    EXPECT_LE(std::abs(fam.D_sum() - gap), 1e-8) << "r=" << r;
  }
}

TEST(Family, ATermEqualsClosedForm) {
  for (const auto& p : pairs()) {
    for (double r : {0.5, 10.0}) {
      const QuadraticFamily fam = quadratic_family(r, p);
      EXPECT_NEAR(fam.a_term(p).real(), q_closed_form(p), 1e-12 * q_closed_form(p));
    }
  }
}

TEST(Family, RootOrderingIsDeterministic) {
  const ParameterPair p(0.1, 0.9);
  const QuadraticFamily a = quadratic_family(3.0, p);
  const QuadraticFamily b = quadratic_family(3.0, p);
  EXPECT_EQ(a.alpha1, b.alpha1);
  EXPECT_EQ(a.alpha2, b.alpha2);
  const cplx z1 = 1.0 / a.alpha1, z2 = 1.0 / a.alpha2;
  EXPECT_TRUE(z1.real() < z2.real() || (z1.real() == z2.real() && z1.imag() <= z2.imag()));
}

TEST(ArcsineLinearIntegral, MatchesDirectQuadrature) {
  for (const auto& p : pairs()) {
    for (cplx u : {cplx(-1.0), cplx(0.3, 0.0), cplx(0.5, 0.8), cplx(-2.0, -1.0)}) {
      const cplx direct = arcsine_mean(
          [&](double q) {
            return 1.0 / (1.0 - u * (p.sqrt_T() + q * (p.sqrt_S() - p.sqrt_T())));
          },
          4096);
      EXPECT_LT(std::abs(arcsine_linear_integral(u, p) - direct), 1e-11 * std::abs(direct))
          << u;
    }
  }
}
