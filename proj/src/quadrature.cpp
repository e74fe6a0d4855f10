#include "hypint/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>

#include "hypint/check_record.hpp"
#include "hypint/errors.hpp"
#include "hypint/summation.hpp"

namespace hypint {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;

// 21-point Kronrod rule and its embedded 10-point Gauss rule (QUADPACK qk21).
// Odd entries of kXgk are the Gauss abscissae; kXgk[10] is the centre.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double lo;
  double hi;
  cplx value;
  double error;
};

struct PanelOrder {
  // Largest error first; ties broken by position so the refinement sequence
  // is fully determined by the integrand.
  bool operator()(const Panel& a, const Panel& b) const {
    if (a.error != b.error) return a.error < b.error;
    return a.lo > b.lo;
  }
};

cplx checked(const RealToComplex& f, double x, double& peak) {
  const cplx v = f(x);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw DomainError("quadrature: integrand is not finite at " +
                      format_real(x));
  }
  peak = std::max(peak, std::abs(v));
  return v;
}

Panel gauss_kronrod21(const RealToComplex& f, double lo, double hi,
                      double& peak) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const cplx fc = checked(f, centre, peak);
  cplx kronrod = kWgk[10] * fc;
  cplx gauss = 0.0;
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const cplx pair = checked(f, centre - dx, peak) + checked(f, centre + dx, peak);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

IntegralEstimate integrate_chebyshev_weighted(const RealToComplex& f,
                                              double lo, double hi,
                                              const EvaluationPolicy& policy) {
  policy.validate();
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw DomainError("integrate_chebyshev_weighted: need finite lo < hi");
  }
  IntegralEstimate est;
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  auto midpoint_rule = [&](int n) {
    std::vector<cplx> values(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      const double theta = (k + 0.5) * kPi / n;
      values[static_cast<std::size_t>(k)] =
          checked(f, mid + half * std::cos(theta), est.peak_magnitude);
    }
    est.nodes_used += n;
    return pairwise_sum(std::span<const cplx>(values)) * (kPi / n);
  };

  int n = std::min(8, policy.max_nodes);
  cplx previous = midpoint_rule(n);
  est.value = previous;
  est.error_estimate = INFINITY;
  while (2 * n <= policy.max_nodes) {
    n *= 2;
    const cplx current = midpoint_rule(n);
    const double diff = std::abs(current - previous);
    est.refinement.push_back(diff);
    est.value = current;
    est.error_estimate = diff;
    if (diff <= policy.tolerance_for(std::abs(current))) {
      est.converged = true;
      break;
    }
    previous = current;
  }
  // Peak of f times the theta-measure pi, so it compares to the integral.
  est.peak_magnitude *= kPi;
  return est;
}

IntegralEstimate integrate_decaying_halfline(const RealToComplex& g,
                                             double decay_rate,
                                             const EvaluationPolicy& policy,
                                             const HalflineOptions& options) {
  policy.validate();
  if (!std::isfinite(decay_rate) || !(decay_rate > 0.0)) {
    throw DomainError("integrate_decaying_halfline: decay_rate must be > 0");
  }
  if (!(options.margin >= 0.0) || !(options.initial_panel > 0.0)) {
    throw DomainError("integrate_decaying_halfline: bad options");
  }
  IntegralEstimate est;

  // Envelope: 8 samples log-spaced over [0.5, 32] / decay_rate.
  constexpr int kSamples = 8;
  std::array<double, kSamples> where{};
  std::array<double, kSamples> mag{};
  double envelope = 0.0;
  for (int k = 0; k < kSamples; ++k) {
    const double s = 0.5 / decay_rate * std::pow(64.0, k / 7.0);
    where[k] = s;
    mag[k] = std::abs(checked(g, s, est.peak_magnitude));
    envelope = std::max(envelope, mag[k] * std::exp(decay_rate * s));
  }
  est.nodes_used += kSamples;
  const double head = *std::max_element(mag.begin(), mag.begin() + 4);
  const double tail = std::max(mag[6], mag[7]);
  if (tail > 0.0 && tail >= head) {
    throw DomainError(
        "integrate_decaying_halfline: integrand does not decay at rate " +
        format_real(decay_rate) + ": |g| = " + format_real(tail) +
        " near s = " + format_real(where[7]) + " vs " + format_real(head) +
        " near the origin");
  }

  double s_max = options.margin;
  const double target = policy.abs_tol * decay_rate;
  if (envelope > target) {
    s_max += std::log(envelope / target) / decay_rate;
  }
  const double tail_bound = envelope * std::exp(-decay_rate * s_max) / decay_rate;

  const int initial = std::clamp(
      static_cast<int>(std::ceil(s_max / options.initial_panel)), 1, 4096);
  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> queue;
  cplx total = 0.0;
  double total_error = 0.0;
  for (int k = 0; k < initial; ++k) {
    const double a = s_max * k / initial;
    const double b = s_max * (k + 1) / initial;
    Panel p = gauss_kronrod21(g, a, b, est.peak_magnitude);
    est.nodes_used += 21;
    total += p.value;
    total_error += p.error;
    queue.push(p);
  }

  while (total_error + tail_bound > policy.tolerance_for(std::abs(total))) {
    if (est.nodes_used + 42 > policy.max_nodes) break;
    const Panel worst = queue.top();
    queue.pop();
    const double m = 0.5 * (worst.lo + worst.hi);
    const Panel left = gauss_kronrod21(g, worst.lo, m, est.peak_magnitude);
    const Panel right = gauss_kronrod21(g, m, worst.hi, est.peak_magnitude);
    est.nodes_used += 42;
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }

  // Final value by pairwise summation in panel order, independent of the
  // order in which panels were refined.
  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  std::vector<cplx> values;
  std::vector<double> errors;
  values.reserve(panels.size());
  errors.reserve(panels.size());
  for (const Panel& p : panels) {
    values.push_back(p.value);
    errors.push_back(p.error);
  }
  est.value = pairwise_sum(std::span<const cplx>(values));
  est.error_estimate =
      pairwise_sum(std::span<const double>(errors)) + tail_bound;
  est.converged =
      est.error_estimate <= policy.tolerance_for(std::abs(est.value));
  return est;
}

}  // namespace hypint
