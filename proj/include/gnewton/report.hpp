#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gnewton/partitions.hpp"
#include "gnewton/rational.hpp"
#include "gnewton/ring.hpp"

namespace gnewton {

/// Outcome of checking one identity instance: both sides, exactly compared.
struct VerificationReport {
  std::string identity;
  long n = 0;
  RingElem lhs;
  RingElem rhs;
  bool equal = false;
  /// Module-specific fields (basis, set sizes, family echo, ...).
  nlohmann::json extra = nlohmann::json::object();
};

VerificationReport make_report(std::string identity, long n, RingElem lhs, RingElem rhs,
                               nlohmann::json extra = nlohmann::json::object());

// Wire formats. Scalars are "num/den" strings (den omitted when 1); polynomials
// are arrays of coefficient strings, lowest degree first.
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const UniPoly& p);
nlohmann::json to_json(const RingElem& a);
nlohmann::json to_json(const std::vector<RingElem>& values);
nlohmann::json to_json(const Partition& lambda);
nlohmann::json to_json(const VerificationReport& report);

/// Inverse of to_json(RingElem); arrays are read as polynomials in `var`.
RingElem ring_from_json(const nlohmann::json& j, const std::string& var = "q");

}  // namespace gnewton
