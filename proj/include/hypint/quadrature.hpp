#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hypint/policy.hpp"

namespace hypint {

/// Result of any quadrature call. Errors are absolute; callers derive
/// relative errors against their own targets.
struct IntegralEstimate {
  std::complex<double> value;
  double error_estimate = 0.0;
  int nodes_used = 0;
  bool converged = false;
  /// Largest |integrand| seen at any node (after weights are absorbed).
  /// Feeds the digits-lost diagnostic.
  double peak_magnitude = 0.0;
  /// Successive |I_2N - I_N| differences of the Chebyshev engine; empty for
  /// the half-line engine.
  std::vector<double> refinement;
};

using RealToComplex = std::function<std::complex<double>(double)>;

/// Integral of f(z) / sqrt((z - lo)(hi - z)) over (lo, hi).
///
/// With z = lo + (hi - lo)(1 + cos theta)/2 the weight is absorbed exactly
/// and the integral becomes the mean of f over theta in (0, pi), which the
/// midpoint rule integrates with spectral accuracy. f is never evaluated at
/// lo or hi. The node count doubles from 8 until two successive estimates
/// differ by at most policy.tolerance_for(value); that difference is the
/// error estimate. Hitting max_nodes returns an unconverged estimate.
IntegralEstimate integrate_chebyshev_weighted(const RealToComplex& f,
                                              double lo, double hi,
                                              const EvaluationPolicy& policy);

struct HalflineOptions {
  /// Extra length added to the envelope-derived truncation point.
  double margin = 2.0;
  /// Width of the initial panels in the adaptive Gauss-Kronrod pass.
  double initial_panel = 1.0;
};

/// Integral of g over (0, inf) for |g(s)| <= C exp(-decay_rate s).
///
/// C is estimated from 8 log-spaced samples of |g(s)| exp(decay_rate s);
/// the integral is truncated at s_max = ln(C / abs_tol) / decay_rate +
/// margin and (0, s_max) is integrated by globally adaptive 21-point
/// Gauss-Kronrod bisection. The tail bound C exp(-decay_rate s_max) /
/// decay_rate is included in error_estimate. Throws DomainError if the
/// samples do not decay.
IntegralEstimate integrate_decaying_halfline(const RealToComplex& g,
                                             double decay_rate,
                                             const EvaluationPolicy& policy,
                                             const HalflineOptions& options = {});

}  // namespace hypint
