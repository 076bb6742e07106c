#pragma once

#include <optional>
#include <string>
#include <variant>

#include "gnewton/poly.hpp"
#include "gnewton/rational.hpp"

namespace gnewton {

/// Coefficient-domain element: a rational scalar or a univariate polynomial.
///
/// Mixed scalar/polynomial arithmetic promotes the scalar to a constant
/// polynomial. Two polynomials must share an indeterminate name, otherwise
/// IndeterminateMismatch is thrown (this also applies to ==).
class RingElem {
 public:
  RingElem() = default;
  RingElem(long value) : value_(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  RingElem(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  RingElem(UniPoly value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

  /// The indeterminate q (or any other name) as a ring element.
  static RingElem indeterminate(const std::string& var);

  bool is_scalar() const { return std::holds_alternative<Rational>(value_); }
  bool is_poly() const { return std::holds_alternative<UniPoly>(value_); }
  const Rational& scalar() const { return std::get<Rational>(value_); }
  const UniPoly& poly() const { return std::get<UniPoly>(value_); }
  /// Polynomial view; a scalar becomes a constant in `var`.
  UniPoly as_poly(const std::string& var) const;

  bool is_zero() const;
  bool is_one() const;
  /// Scalar value when this is a scalar or a constant polynomial.
  std::optional<Rational> constant_value() const;

  /// Multiplicative inverse; only units (nonzero constants) are invertible.
  RingElem inverse() const;
  RingElem pow(unsigned exponent) const;

  /// "num/den" for scalars, the readable polynomial form otherwise.
  std::string to_string() const;

  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem& operator*=(const RingElem& o);
  /// Division by a nonzero scalar.
  RingElem& operator/=(const Rational& c);

  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(RingElem a, const RingElem& b) { return a *= b; }
  friend RingElem operator/(RingElem a, const Rational& c) { return a /= c; }
  friend RingElem operator-(const RingElem& a);

  friend bool operator==(const RingElem& a, const RingElem& b);

 private:
  std::variant<Rational, UniPoly> value_;
};

RingElem ring_add(const RingElem& a, const RingElem& b);
RingElem ring_mul(const RingElem& a, const RingElem& b);
Rational poly_eval(const UniPoly& p, const Rational& at);

/// Substitutes a rational for the indeterminate; scalars are returned as is.
Rational evaluate_at(const RingElem& a, const Rational& at);

}  // namespace gnewton
