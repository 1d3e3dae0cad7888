#pragma once

#include <stdexcept>
#include <string>

namespace eugb {

/// Raised when an operation is called outside its mathematical domain
/// (division by zero, quotient of non-divisible monomials, mixed contexts).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal invariant failed. Always a bug in this library.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace eugb
