#pragma once

#include <stdexcept>
#include <string>

namespace gnewton {

/// Arithmetic between polynomials in different indeterminates.
class IndeterminateMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two truncated series of different orders were combined or compared.
class OrderMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Series inversion or logarithmic derivative with a constant term that is
/// not a unit of the coefficient ring.
class NonInvertibleConstantTerm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Bad family or command parameter.
class InvalidParam : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation (k > n, division
/// by zero, inexact polynomial quotient, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace gnewton
