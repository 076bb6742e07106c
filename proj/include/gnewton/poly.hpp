#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gnewton/rational.hpp"

namespace gnewton {

/// Dense univariate polynomial over Rational in a named indeterminate.
/// coeffs()[i] is the coefficient of var^i. The zero polynomial has no
/// coefficients; otherwise the highest stored coefficient is nonzero.
class UniPoly {
 public:
  explicit UniPoly(std::string var = "q") : var_(std::move(var)) {}
  UniPoly(std::string var, std::vector<Rational> coeffs);

  /// c * var^degree
  static UniPoly monomial(std::string var, Rational c, std::size_t degree);
  static UniPoly constant(std::string var, Rational c);

  const std::string& var() const { return var_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  /// Coefficient of var^i (zero past the degree).
  Rational coeff(std::size_t i) const;
  /// True when the polynomial is a (possibly zero) constant.
  bool is_constant() const { return coeffs_.size() <= 1; }

  Rational eval(const Rational& at) const;
  UniPoly derivative() const;

  /// Quotient and remainder by a nonzero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  /// Quotient that must leave no remainder; throws DomainError otherwise.
  UniPoly exact_div(const UniPoly& divisor) const;

  /// Human-readable form such as "1+q+2*q^2" or "-1/2*x^3"; "0" for zero.
  std::string to_string() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }

  /// Same indeterminate and same coefficients.
  friend bool operator==(const UniPoly& a, const UniPoly& b);

 private:
  void check_var(const UniPoly& o) const;
  void normalize();

  std::string var_;
  std::vector<Rational> coeffs_;
};

}  // namespace gnewton
