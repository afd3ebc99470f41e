#pragma once

#include <stdexcept>

namespace surd {

// Raised when a value lies outside the mathematical domain of an operation
// (even root of a negative number, pole of a rational term, a hypothesis of
// an error theorem that does not hold).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised for malformed arguments: non-positive tolerances, root index out of
// range, unparsable numeric literals.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace surd
