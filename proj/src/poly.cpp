#include "gnewton/poly.hpp"

#include <algorithm>

#include "gnewton/errors.hpp"

namespace gnewton {

UniPoly::UniPoly(std::string var, std::vector<Rational> coeffs)
    : var_(std::move(var)), coeffs_(std::move(coeffs)) {
  normalize();
}

UniPoly UniPoly::monomial(std::string var, Rational c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = std::move(c);
  return UniPoly(std::move(var), std::move(coeffs));
}

UniPoly UniPoly::constant(std::string var, Rational c) {
  return UniPoly(std::move(var), std::vector<Rational>{std::move(c)});
}

std::optional<std::size_t> UniPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational UniPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational UniPoly::eval(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  }
  return UniPoly(var_, std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  check_var(divisor);
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.size() <= dd) return {UniPoly(var_), *this};
  std::vector<Rational> quot(rem.size() - dd);
  const Rational lead_inv = divisor.coeffs_.back().inverse();
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i].is_zero()) continue;
    Rational factor = rem[i] * lead_inv;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= factor * divisor.coeffs_[j];
    quot[i - dd] = std::move(factor);
  }
  return {UniPoly(var_, std::move(quot)), UniPoly(var_, std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& divisor) const {
  auto [quot, rem] = divmod(divisor);
  if (!rem.is_zero()) {
    throw DomainError("inexact polynomial quotient: (" + to_string() + ") / (" + divisor.to_string() + ")");
  }
  return quot;
}

std::string UniPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string mag = (c.sign() < 0 ? -c : c).to_string();
    std::string term;
    if (i == 0) {
      term = mag;
    } else {
      if (mag != "1") term = mag + "*";
      term += var_;
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (c.sign() < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    out += term;
  }
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  check_var(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  check_var(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  check_var(o);
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  a.check_var(b);
  return a.coeffs_ == b.coeffs_;
}

void UniPoly::check_var(const UniPoly& o) const {
  if (var_ != o.var_) {
    throw IndeterminateMismatch("polynomials in different indeterminates: '" + var_ + "' and '" + o.var_ + "'");
  }
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

}  // namespace gnewton
