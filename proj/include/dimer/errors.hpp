#pragma once

#include <stdexcept>
#include <string>

namespace dimer {

// Bad input values: non-finite couplings, negative radii, empty ranges.
class InvalidParameter : public std::invalid_argument {
 public:
  explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

// Arguments outside the mathematical domain, e.g. T <= 0.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Density matrix that is not Hermitian, unit-trace and PSD within tolerance.
class InvalidState : public std::invalid_argument {
 public:
  explicit InvalidState(const std::string& what) : std::invalid_argument(what) {}
};

// Solver failure or an unrepresentable result (overflow).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dimer
