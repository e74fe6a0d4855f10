#pragma once

namespace hypint {

/// The fixed pair 0 < T < S < 1.
class ParameterPair {
 public:
  /// Throws DomainError unless 0 < T < S < 1.
  ParameterPair(double T, double S);

  double T() const { return T_; }
  double S() const { return S_; }
  double sqrt_T() const { return sqrt_T_; }
  double sqrt_S() const { return sqrt_S_; }
  /// (1 - sqrt T)(1 - sqrt S)
  double c() const { return (1.0 - sqrt_T_) * (1.0 - sqrt_S_); }

 private:
  double T_;
  double S_;
  double sqrt_T_;
  double sqrt_S_;
};

}  // namespace hypint
