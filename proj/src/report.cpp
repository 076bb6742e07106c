#include "gnewton/report.hpp"

#include "gnewton/errors.hpp"

namespace gnewton {

VerificationReport make_report(std::string identity, long n, RingElem lhs, RingElem rhs, nlohmann::json extra) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.n = n;
  r.equal = (lhs == rhs);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.extra = std::move(extra);
  return r;
}

nlohmann::json to_json(const Rational& r) { return r.to_string(); }

nlohmann::json to_json(const UniPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
  return arr;
}

nlohmann::json to_json(const RingElem& a) { return a.is_scalar() ? to_json(a.scalar()) : to_json(a.poly()); }

nlohmann::json to_json(const std::vector<RingElem>& values) {
  auto arr = nlohmann::json::array();
  for (const auto& v : values) arr.push_back(to_json(v));
  return arr;
}

nlohmann::json to_json(const Partition& lambda) { return lambda.parts(); }

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json j = report.extra;
  j["identity"] = report.identity;
  j["n"] = report.n;
  j["lhs"] = to_json(report.lhs);
  j["rhs"] = to_json(report.rhs);
  j["equal"] = report.equal;
  return j;
}

RingElem ring_from_json(const nlohmann::json& j, const std::string& var) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_array()) {
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(Rational::parse(c.get<std::string>()));
    return UniPoly(var, std::move(coeffs));
  }
  throw InvalidParam("cannot read ring element from JSON: " + j.dump());
}

}  // namespace gnewton
