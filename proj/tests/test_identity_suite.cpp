#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hypint/errors.hpp"
#include "hypint/identity_suite.hpp"

using namespace hypint;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

// Adaptive Simpson, used on the t = 0 integral after z = T + (S-T) sin^2 phi,
// which turns dz / ((1-z) sqrt((z-T)(S-z))) into 2 dphi / (1-z).
double simpson(const std::function<double(double)>& f, double a, double b, double fa,
               double fm, double fb, double whole, double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * eps) {
    return left + right + (left + right - whole) / 15.0;
  }
  return simpson(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1);
}

double adaptive(const std::function<double(double)>& f, double a, double b, double eps) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return simpson(f, a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), eps, 40);
}

double elementary_theorem_oracle(double T, double S) {
  return adaptive(
      [&](double phi) {
        const double s = std::sin(phi);
        return 2.0 / (1.0 - (T + (S - T) * s * s));
      },
      0.0, kPi / 2.0, 1e-13);
}

const std::vector<ParameterPair>& pairs() {
  static const std::vector<ParameterPair> p = {{0.25, 0.5}, {0.1, 0.9}, {0.4, 0.45}};
  return p;
}

}  // namespace

TEST(MainIdentity, ElementaryCaseAgainstIndependentOracle) {
  const ParameterPair p(0.25, 0.5);
  const double oracle = elementary_theorem_oracle(0.25, 0.5);
  EXPECT_NEAR(oracle, kPi / std::sqrt(3.0 / 8.0), 1e-11);
  const CheckRecord rec = theorem_1_1(p, 0.0);
  EXPECT_TRUE(rec.passed());
  EXPECT_NEAR(rec.lhs.real(), oracle, 1e-10);
  EXPECT_EQ(rec.id, "theorem/T=0.25/S=0.5/t=0+0i");
}

TEST(MainIdentity, TIndependence) {
  const std::vector<cplx> ts = {0.0, 0.5, 1.0, 1.5, 2.0, {0.0, 0.5}, {0.0, 1.0}, {0.3, 0.4}};
  for (const auto& p : pairs()) {
    std::vector<cplx> values;
    for (const cplx& t : ts) {
      const CheckRecord rec = theorem_1_1(p, t);
      EXPECT_TRUE(rec.passed()) << rec.id << " rel " << rec.rel_err;
      values.push_back(rec.lhs);
    }
    for (const cplx& a : values) {
      for (const cplx& b : values) {
        EXPECT_LE(std::abs(a - b) / std::abs(b), 1e-7);
      }
    }
  }
}

TEST(MainIdentity, DigitsLostGrowsWithRealT) {
  const ParameterPair p(0.1, 0.9);
  const double small = theorem_1_1(p, 0.5).metadata.at("digits_lost");
  const double large = theorem_1_1(p, 2.0).metadata.at("digits_lost");
  EXPECT_GT(large, small);
}

TEST(MainIdentity, CancellationCap) {
  EXPECT_THROW(theorem_1_1(pairs()[0], 2.5), DomainError);
  SuiteSettings wide;
  wide.cancellation_cap = 3.0;
  EXPECT_NO_THROW(theorem_1_1(pairs()[0], 2.5, wide));
  // Imaginary t does not grow the integrand.
  EXPECT_NO_THROW(theorem_1_1(pairs()[0], cplx(0.0, 5.0)));
}

TEST(MainIdentity, DegenerateLimit) {
  // As S -> T the answer tends to pi / (1 - T).
  const double T = 0.3;
  const CheckRecord tight = theorem_1_1(ParameterPair(T, T + 1e-7), 1.0);
  EXPECT_TRUE(tight.passed());
  EXPECT_NEAR(tight.lhs.real(), kPi / (1.0 - T), 1e-6);
  const CheckRecord loose = theorem_1_1(ParameterPair(T, T + 1e-4), 1.0);
  EXPECT_TRUE(loose.passed()) << loose.rel_err;
}

TEST(MainIdentity, NumeratorSymmetry) {
  // f_it(t, x(z)) with x = (S-z)(1-z)/((1-sqrt S)^2 z) equals the F(2it,-2it)
  // form at -B(z), the shape of the first factor with S in place of T.
  for (const auto& p : pairs()) {
    for (int j = 1; j < 16; ++j) {
      const double z = p.T() + (p.S() - p.T()) * j / 16.0;
      const double b = kernel_AB(z, p).B;
      const double oms = 1.0 - p.sqrt_S();
      const double x = (p.S() - z) * (1.0 - z) / (oms * oms * z);
      for (cplx t : {cplx(0.7), cplx(1.9), cplx(0.3, 0.4)}) {
        const cplx lhs = f_it(t, x);
        const cplx rhs = f_2it(t, -b);
        EXPECT_LE(std::abs(lhs - rhs), 1e-10 * std::max(1.0, std::abs(rhs)));
      }
    }
  }
}

TEST(SpectralProduct, Boundaries) {
  const ParameterPair p(0.25, 0.5);
  EXPECT_EQ(spectral_product(0.0, 0.3, p), cplx(1.0));
  const double oms = 1.0 - p.sqrt_S();
  const double xT = (p.S() - p.T()) * (1.0 - p.T()) / (oms * oms * p.T());
  EXPECT_LT(std::abs(spectral_product(1.2, p.T(), p) - f_it(1.2, xT)), 1e-14);
  const double AS = kernel_AB(p.S(), p).A;
  EXPECT_LT(std::abs(spectral_product(1.2, p.S(), p) - f_2it(1.2, -AS)), 1e-14);
  EXPECT_THROW(main_integrand(p.T(), p, 1.0), DomainError);
}

TEST(Barnes, Examples) {
  struct Case { double a, b, c, rhs; };
  for (const Case& k : {Case{0.0, 0.5, 0.5, kPi}, Case{0.5, 0.5, 0.5, 1.0},
                        Case{1.0, 1.0, 0.5, kPi / 4.0}}) {
    const CheckRecord rec = barnes_triple(k.a, k.b, k.c);
    EXPECT_NEAR(rec.rhs.real(), k.rhs, 1e-14);
    EXPECT_TRUE(rec.passed()) << rec.id << " rel " << rec.rel_err;
  }
  EXPECT_THROW(barnes_triple(-0.1, 1.0, 1.0), DomainError);
}

TEST(ShiftedGammaIntegral, Examples) {
  EXPECT_NEAR(lemma_2_2(0.0, 0.0).rhs.real(), kPi, 1e-14);
  EXPECT_NEAR(lemma_2_2(3.0, 0.0).rhs.real(), kPi / 2.0, 1e-14);
  EXPECT_NEAR(lemma_2_2(-0.5, 1.0).rhs.real(), kPi * std::sqrt(2.0), 1e-13);
  for (double A : {-0.5, 0.0, 3.0}) {
    for (double tau : {0.0, 1.0}) {
      const CheckRecord rec = lemma_2_2(A, tau);
      EXPECT_TRUE(rec.passed()) << rec.id << " rel " << rec.rel_err;
    }
  }
  EXPECT_THROW(lemma_2_2(-1.0, 0.0), DomainError);
}

TEST(CosineSpectralIntegral, Examples) {
  EXPECT_NEAR(lemma_2_3(0.0, 2.0).rhs.real(), kPi / 3.0, 1e-14);
  EXPECT_NEAR(lemma_2_3(3.0, 1.0).rhs.real(), 2.0 * kPi / 5.0, 1e-14);
  for (double A : {-0.5, 0.0, 3.0}) {
    for (double r : {0.5, 10.0}) {
      const CheckRecord rec = lemma_2_3(A, r);
      EXPECT_TRUE(rec.passed()) << rec.id << " rel " << rec.rel_err;
    }
  }
}

TEST(CosineSpectralIntegral, SmallRApproachesShiftedGammaValue) {
  EXPECT_NEAR(lemma_2_3(1.0, 1e-9).lhs.real(), lemma_2_2(1.0, 0.0).rhs.real(), 1e-7);
}

TEST(TwoParameterCosineIntegral, Examples) {
  EXPECT_NEAR(lemma_2_4(0.0, 1.0, 1.0).rhs.real(), kPi * std::sqrt(2.0) / 3.0, 1e-14);
  EXPECT_NEAR(lemma_2_4(1.0, 1.0, 1.0).rhs.real(), 2.0 * kPi / 5.0, 1e-14);
  EXPECT_TRUE(lemma_2_4(1.0, 1.0, 1.0).passed());
  EXPECT_TRUE(lemma_2_4(-0.5, 3.0, 2.5).passed());
}

TEST(TwoParameterCosineIntegral, ZeroBReproducesOneParameterCaseExactly) {
  for (double A : {-0.5, 0.0, 1.0}) {
    for (double r : {0.5, 10.0}) {
      const CheckRecord a = lemma_2_3(A, r);
      const CheckRecord b = lemma_2_4(A, r, 0.0);
      EXPECT_EQ(a.lhs, b.lhs);
      EXPECT_EQ(a.rhs, b.rhs);
      EXPECT_EQ(a.abs_err, b.abs_err);
      EXPECT_EQ(a.status, b.status);
    }
  }
}

TEST(WeightOnlyIntegral, MatchesClosedForm) {
  for (const auto& p : pairs()) {
    for (double r : {0.5, 1.0, 10.0}) {
      const CheckRecord rec = lemma_3_2(r, p);
      EXPECT_NEAR(rec.rhs.real(), kPi * kPi / ((1.0 + r) * std::sqrt((1 - p.T()) * (1 - p.S()))),
                  1e-13);
      EXPECT_TRUE(rec.passed()) << rec.id;
    }
  }
}

TEST(SpectralKernelIdentity, InteriorAndEndpoints) {
  const ParameterPair p(0.25, 0.5);
  EXPECT_TRUE(lemma_3_3_spectral(0.375, 2.0, p).passed());
  EXPECT_TRUE(lemma_3_3_spectral(p.T(), 2.0, p).passed());
  EXPECT_TRUE(lemma_3_3_spectral(p.S(), 2.0, p).passed());
  const CheckRecord rec = lemma_3_3_spectral(0.375, 2.0, p);
  EXPECT_LE(rec.rel_err, 1e-8);
}

TEST(QIntegral, ClosedFormAndLimit) {
  const ParameterPair p(0.25, 0.5);
  const CheckRecord rec = q_integral(50.0, p);
  EXPECT_TRUE(rec.passed());
  EXPECT_LE(rec.rel_err, 1e-8);
  for (const auto& pp : pairs()) {
    EXPECT_TRUE(q_limit_integral(pp).passed());
    EXPECT_TRUE(q_integral(0.5, pp).passed());
  }
}

TEST(Obstruction, LargeRHasZeroWindingAndEqualModuli) {
  for (const auto& p : pairs()) {
    for (double r : {50.0, 100.0, 400.0}) {
      const CheckRecord rec = obstruction_n_r(r, p);
      ASSERT_TRUE(rec.passed()) << rec.id << " " << rec.note;
      EXPECT_EQ(rec.metadata.at("n_r_nearest"), 0.0);
      EXPECT_LE(std::hypot(rec.metadata.at("n_r_re"), rec.metadata.at("n_r_im")), 1e-6);
      EXPECT_LE(rec.metadata.at("d_modulus_spread"), 1e-9);
      EXPECT_LE(rec.abs_err, 1e-8);
    }
  }
}

TEST(Obstruction, SmallRStillChecksIdentities) {
  const CheckRecord rec = obstruction_n_r(0.5, pairs()[1]);
  EXPECT_TRUE(rec.passed()) << rec.note;
  EXPECT_EQ(rec.metadata.count("n_r_nearest"), 0u);
}

TEST(WeightedMainIdentity, WeightedIntegralVanishes) {
  for (double r : {1.0, 10.0}) {
    const CheckRecord rec = lemma_3_1_weighted(r, pairs()[0]);
    EXPECT_TRUE(rec.passed()) << rec.id;
    EXPECT_LE(std::abs(rec.lhs), 1e-6);
  }
}

TEST(Settings, ToleranceOverride) {
  SuiteSettings s;
  s.tolerance_override = 1e-30;
  const CheckRecord rec = theorem_1_1(pairs()[0], 1.0, s);
  EXPECT_EQ(rec.tolerance, 1e-30);
}
