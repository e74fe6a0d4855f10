#pragma once

namespace hypint {

/// Tolerances and work caps shared by the series and quadrature engines.
struct EvaluationPolicy {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_terms = 4096;  ///< series term cap
  int max_nodes = 1 << 18;  ///< quadrature node cap

  /// Throws DomainError unless abs_tol > 0, rel_tol > 0, max_terms >= 16 and
  /// max_nodes >= 8.
  void validate() const;

  /// Target for a quantity of magnitude `scale`.
  double tolerance_for(double scale) const;
};

}  // namespace hypint
