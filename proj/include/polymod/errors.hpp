#pragma once

#include <stdexcept>
#include <string>

namespace polymod {

// Argument outside the mathematical domain of an operation (H <= 0, k >= 1,
// evaluation at a pole, a point outside the polygon, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An iteration failed to converge or a computed quantity failed its
// post-hoc verification.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// f(lo) and f(hi) do not straddle zero.
class BracketError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Inputs that are individually valid but not mutually consistent, e.g. a
// c^2 that does not belong to the given slit endpoint.
class InconsistentInputError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// The discrete problem could not be assembled (empty Dirichlet side, bad grid).
class SetupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace polymod
