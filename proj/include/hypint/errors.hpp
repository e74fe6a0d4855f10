#pragma once

#include <stdexcept>
#include <string>

namespace hypint {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series or iteration failed to reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last_term)
      : std::runtime_error(what), last_term_(last_term) {}

  double last_term() const noexcept { return last_term_; }

 private:
  double last_term_;
};

/// The quadratic E + Fz + Gz^2 has a double root, or a root at z = 0 or z = 1.
class DegenerateConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad grid configuration or command line. `field` names the offending key.
class UsageError : public std::invalid_argument {
 public:
  UsageError(std::string field, const std::string& what)
      : std::invalid_argument(what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hypint
