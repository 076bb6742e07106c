#include "gnewton/ring.hpp"

#include "gnewton/errors.hpp"

namespace gnewton {

namespace {

// Shared indeterminate of two elements; empty when both are scalars.
std::string common_var(const RingElem& a, const RingElem& b) {
  if (a.is_poly() && b.is_poly()) {
    if (a.poly().var() != b.poly().var()) {
      throw IndeterminateMismatch("ring elements in different indeterminates: '" + a.poly().var() + "' and '" +
                                  b.poly().var() + "'");
    }
    return a.poly().var();
  }
  if (a.is_poly()) return a.poly().var();
  if (b.is_poly()) return b.poly().var();
  return {};
}

}  // namespace

RingElem RingElem::indeterminate(const std::string& var) { return UniPoly::monomial(var, Rational(1), 1); }

UniPoly RingElem::as_poly(const std::string& var) const {
  if (is_poly()) return poly();
  return UniPoly::constant(var, scalar());
}

bool RingElem::is_zero() const { return is_scalar() ? scalar().is_zero() : poly().is_zero(); }

bool RingElem::is_one() const {
  auto c = constant_value();
  return c && c->is_one();
}

std::optional<Rational> RingElem::constant_value() const {
  if (is_scalar()) return scalar();
  if (poly().is_constant()) return poly().coeff(0);
  return std::nullopt;
}

RingElem RingElem::inverse() const {
  auto c = constant_value();
  if (!c || c->is_zero()) throw NonInvertibleConstantTerm("element is not a unit: " + to_string());
  if (is_scalar()) return c->inverse();
  return UniPoly::constant(poly().var(), c->inverse());
}

RingElem RingElem::pow(unsigned exponent) const {
  if (is_scalar()) return scalar().pow(exponent);
  UniPoly result = UniPoly::constant(poly().var(), Rational(1));
  UniPoly base = poly();
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string RingElem::to_string() const { return is_scalar() ? scalar().to_string() : poly().to_string(); }

RingElem& RingElem::operator+=(const RingElem& o) {
  std::string var = common_var(*this, o);
  if (var.empty()) {
    std::get<Rational>(value_) += o.scalar();
  } else {
    value_ = as_poly(var) + o.as_poly(var);
  }
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  std::string var = common_var(*this, o);
  if (var.empty()) {
    std::get<Rational>(value_) -= o.scalar();
  } else {
    value_ = as_poly(var) - o.as_poly(var);
  }
  return *this;
}

RingElem& RingElem::operator*=(const RingElem& o) {
  std::string var = common_var(*this, o);
  if (var.empty()) {
    std::get<Rational>(value_) *= o.scalar();
  } else if (o.is_scalar()) {
    std::get<UniPoly>(value_) *= o.scalar();
  } else if (is_scalar()) {
    value_ = o.poly() * scalar();
  } else {
    std::get<UniPoly>(value_) *= o.poly();
  }
  return *this;
}

RingElem& RingElem::operator/=(const Rational& c) {
  Rational inv = c.inverse();
  if (is_scalar()) {
    std::get<Rational>(value_) *= inv;
  } else {
    std::get<UniPoly>(value_) *= inv;
  }
  return *this;
}

RingElem operator-(const RingElem& a) {
  if (a.is_scalar()) return -a.scalar();
  return -a.poly();
}

bool operator==(const RingElem& a, const RingElem& b) {
  std::string var = common_var(a, b);
  if (var.empty()) return a.scalar() == b.scalar();
  return a.as_poly(var) == b.as_poly(var);
}

RingElem ring_add(const RingElem& a, const RingElem& b) { return a + b; }

RingElem ring_mul(const RingElem& a, const RingElem& b) { return a * b; }

Rational poly_eval(const UniPoly& p, const Rational& at) { return p.eval(at); }

Rational evaluate_at(const RingElem& a, const Rational& at) {
  return a.is_scalar() ? a.scalar() : a.poly().eval(at);
}

}  // namespace gnewton
