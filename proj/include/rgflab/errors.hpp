#pragma once

#include <stdexcept>
#include <string>

namespace rgflab {

// Input that violates an operation's precondition (not an RGF, pattern out of
// a bijection's domain, unknown registry id, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Enumeration requested above the configured length ceiling.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Checked 64-bit coefficient arithmetic overflowed.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A rational function whose denominator does not divide its numerator.
class NonPolynomialError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rgflab
