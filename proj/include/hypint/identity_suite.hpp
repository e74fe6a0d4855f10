#pragma once

#include <complex>
#include <optional>

#include "hypint/check_record.hpp"
#include "hypint/parameter_pair.hpp"
#include "hypint/policy.hpp"
#include "hypint/quadrature.hpp"
#include "hypint/special_functions.hpp"

namespace hypint {

// Default pass thresholds per check family.
inline constexpr double kTheoremTolerance = 1e-7;
inline constexpr double kBarnesTolerance = 1e-8;
inline constexpr double kSpectralLemmaTolerance = 1e-8;
inline constexpr double kSpectralKernelTolerance = 1e-7;
inline constexpr double kQIntegralTolerance = 1e-7;
inline constexpr double kDSumTolerance = 1e-8;
inline constexpr double kDModulusTolerance = 1e-9;
inline constexpr double kIntegralityTolerance = 1e-6;
inline constexpr double kWeightedTolerance = 1e-6;
inline constexpr double kPartialFractionTolerance = 1e-9;

/// Knobs shared by every check.
struct SuiteSettings {
  /// Finite-interval (Chebyshev) quadrature.
  EvaluationPolicy policy;
  /// Half-line spectral quadrature.
  EvaluationPolicy spectral_policy;
  HalflineOptions halfline;
  /// Largest |Re t| accepted by theorem_1_1; the integrand grows like
  /// exp(2 pi |Re t|) while the answer stays O(1).
  double cancellation_cap = 2.0;
  /// r at and above which the obstruction integer is asserted.
  double large_r_threshold = 10.0;
  /// Replaces every check's default pass threshold when set.
  std::optional<double> tolerance_override;

  double tolerance_or(double fallback) const {
    return tolerance_override.value_or(fallback);
  }
};

struct KernelAB {
  double A;
  double B;
};

struct KernelI {
  double I1;
  double I2;
};

/// (A(z), B(z)) with A = -(1+sqrt z)(sqrt z - sqrt T)/(2(1-sqrt T) sqrt z)
/// and B = (1+sqrt z)(sqrt S - sqrt z)/(2(1-sqrt S) sqrt z), T <= z <= S.
/// A > -1 and B >= 0 on that range.
KernelAB kernel_AB(double z, const ParameterPair& p);

/// I1(z) and I2(r, z), T <= z <= S, r > 0.
KernelI kernel_I(double z, double r, const ParameterPair& p);

/// Product of the two hypergeometric factors of A_t(S,T) at z in [T, S]:
/// F(2it,-2it;1/2;Y(z)) F(it,-it;1/2;-x(z)) with Y = -A(z) and
/// x = (S-z)(1-z)/((1-sqrt S)^2 z). Endpoints use the continuous limits.
cplx spectral_product(SpectralPoint t, double z, const ParameterPair& p);

/// Smooth part of the A_t(S,T) integrand, spectral_product / (1 - z), for
/// T < z < S. The Chebyshev weight 1/sqrt((z-T)(S-z)) is not included.
cplx main_integrand(double z, const ParameterPair& p, SpectralPoint t);

/// pi / sqrt((1-T)(1-S))
double theorem_closed_form(const ParameterPair& p);

/// pi / (sqrt((1-T)(1-S)) sqrt((1-sqrt T)(1-sqrt S)))
double q_closed_form(const ParameterPair& p);

/// A_t(S,T) by Chebyshev quadrature. `policy` is used as given.
IntegralEstimate integrate_main(const ParameterPair& p, SpectralPoint t,
                                const EvaluationPolicy& policy);

/// Q_{S,T}(r) through q = (sqrt z - sqrt T)/(sqrt S - sqrt T).
IntegralEstimate integrate_q(double r, const ParameterPair& p,
                             const EvaluationPolicy& policy);

CheckRecord theorem_1_1(const ParameterPair& p, SpectralPoint t,
                        const SuiteSettings& settings = {});

/// (1/2pi) int_0^inf Gamma(a+-is)Gamma(b+-is)Gamma(c+-is)/Gamma(+-2is) ds
/// against Gamma(a+b)Gamma(a+c)Gamma(b+c); a >= 0, b, c > 0.
CheckRecord barnes_triple(double a, double b, double c,
                          const SuiteSettings& settings = {});

/// A > -1, tau >= 0.
CheckRecord lemma_2_2(double A, double tau, const SuiteSettings& settings = {});
/// A > -1, r > 0.
CheckRecord lemma_2_3(double A, double r, const SuiteSettings& settings = {});
/// A > -1, r > 0, B >= 0. B == 0 reproduces lemma_2_3 exactly.
CheckRecord lemma_2_4(double A, double r, double B,
                      const SuiteSettings& settings = {});

/// Weight-only spectral integral against (1+r)^{-1} pi^2/sqrt((1-T)(1-S)).
CheckRecord lemma_3_2(double r, const ParameterPair& p,
                      const SuiteSettings& settings = {});

/// The spectral kernel identity at T <= z <= S: weighted t-integral of
/// B_t(z) against I1(z) I2(r, z).
CheckRecord lemma_3_3_spectral(double z, double r, const ParameterPair& p,
                               const SuiteSettings& settings = {});

/// Q(r) against its closed form.
CheckRecord q_integral(double r, const ParameterPair& p,
                       const SuiteSettings& settings = {});

/// The r -> infinity base integral over q in (0,1) of
/// 1/((1 + sqrt T + q(sqrt S - sqrt T)) sqrt(q(1-q))).
CheckRecord q_limit_integral(const ParameterPair& p,
                             const SuiteSettings& settings = {});

/// D-term sum against Q(r) - closed form, D_i^2 against its closed form,
/// equal moduli, and (for r >= large_r_threshold) integrality of n_r.
/// A degenerate quadratic yields a skipped record.
CheckRecord obstruction_n_r(double r, const ParameterPair& p,
                            const SuiteSettings& settings = {});

/// The weighted t-integral of A_t(S,T) - closed form, expected to vanish.
CheckRecord lemma_3_1_weighted(double r, const ParameterPair& p,
                               const SuiteSettings& settings = {});

}  // namespace hypint
