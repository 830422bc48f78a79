#pragma once

#include <stdexcept>
#include <string>

namespace wpr {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A measure whose denominator vanishes at the requested point
// (e.g. hazard rate beyond the effective support).
class UndefinedMeasureError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A series or support summation hit its term cap before reaching tolerance.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, double partial_sum, double tail_bound)
      : std::runtime_error(what), partial_sum_(partial_sum), tail_bound_(tail_bound) {}

  double partial_sum() const noexcept { return partial_sum_; }
  double tail_bound() const noexcept { return tail_bound_; }

private:
  double partial_sum_;
  double tail_bound_;
};

// A request whose cost exceeds the configured resource cap.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace wpr
