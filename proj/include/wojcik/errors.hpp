#pragma once

#include <stdexcept>
#include <string>

namespace wojcik {

// Raised when a parameter lies outside the domain an operation is defined on
// (phi outside [0,1), non-normalized coin state, n out of range, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Raised when a request exceeds a fixed enumeration budget.
class BudgetError : public std::length_error {
 public:
  explicit BudgetError(const std::string& what) : std::length_error(what) {}
};

// Raised when a quantity is well-defined only away from a degenerate
// parameter choice (0/0 ratios, non-contracting decay rates).
class DegenerateError : public std::runtime_error {
 public:
  explicit DegenerateError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace wojcik
