#include "gnewton/families.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "gnewton/errors.hpp"

namespace gnewton {

namespace {

constexpr long kMaxEnumerationBound = 20'000'000;

const std::map<FamilyKind, std::pair<std::set<std::string>, std::set<std::string>>>& param_schema() {
  // kind -> (required, optional)
  static const std::map<FamilyKind, std::pair<std::set<std::string>, std::set<std::string>>> schema{
      {FamilyKind::Ones, {{"n"}, {}}},
      {FamilyKind::GeometricQ, {{"n"}, {"q"}}},
      {FamilyKind::ArithProg, {{"n", "r", "m"}, {}}},
      {FamilyKind::JacobiStirling, {{"n"}, {"gamma"}}},
      {FamilyKind::ZetaNodes, {{"s", "N"}, {}}},
      {FamilyKind::PrimeNodes, {{"s", "limit"}, {}}},
  };
  return schema;
}

std::string trim(std::string s) {
  auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

RingElem sign(long exponent) { return RingElem(exponent % 2 == 0 ? 1L : -1L); }

nlohmann::json row_extra(const FamilySpec& spec, long k) { return {{"family", spec.to_json()}, {"k", k}}; }

// Two-dimensional recurrence table T(a, b), 0 <= b <= a <= max_a, with
// T(0,0) = 1 and T(a,b) = T(a-1,b-1) + weight(a,b) T(a-1,b).
template <typename WeightFn>
RingElem triangle_value(long a, long b, WeightFn weight) {
  if (a < 0 || b < 0 || b > a) return RingElem(0L);
  std::vector<RingElem> row{RingElem(1L)};
  for (long i = 1; i <= a; ++i) {
    std::vector<RingElem> next(static_cast<std::size_t>(i + 1), RingElem(0L));
    for (long j = 0; j <= i; ++j) {
      RingElem v(0L);
      if (j >= 1) v += row[static_cast<std::size_t>(j - 1)];
      if (j <= i - 1) v += weight(i, j) * row[static_cast<std::size_t>(j)];
      next[static_cast<std::size_t>(j)] = std::move(v);
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(b)];
}

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> out;
  for (long d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime_trial(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<long> primes_by_trial_division(long limit) {
  std::vector<long> out;
  for (long n = 2; n <= limit; ++n) {
    if (is_prime_trial(n)) out.push_back(n);
  }
  return out;
}

// Sum of 1/n^s over 1 <= n <= bound for which accept(factorization) holds.
template <typename AcceptFn>
Rational enumerate_integers(long s, long bound, long limit, AcceptFn accept) {
  if (bound > kMaxEnumerationBound) {
    throw InvalidParam("integer enumeration bound " + std::to_string(bound) + " exceeds " +
                       std::to_string(kMaxEnumerationBound));
  }
  Rational sum;
  for (long n = 1; n <= bound; ++n) {
    auto f = factorize(n);
    if (!f.empty() && f.back().first > limit) continue;
    if (accept(f)) sum += Rational(1, n).pow(static_cast<unsigned>(s));
  }
  return sum;
}

long checked_pow(long base, long exponent) {
  long out = 1;
  for (long i = 0; i < exponent; ++i) {
    if (out > kMaxEnumerationBound / std::max(base, 1L)) return kMaxEnumerationBound + 1;
    out *= base;
  }
  return out;
}

void strict_chains(long s, long max_index, long remaining, const Rational& prefix, Rational& sum) {
  if (remaining == 0) {
    sum += prefix;
    return;
  }
  for (long i = max_index; i >= remaining; --i) {
    strict_chains(s, i - 1, remaining - 1, prefix * Rational(1, i).pow(static_cast<unsigned>(s)), sum);
  }
}

void weak_chains(long s, long max_index, long remaining, const Rational& prefix, Rational& sum) {
  if (remaining == 0) {
    sum += prefix;
    return;
  }
  for (long i = max_index; i >= 1; --i) {
    weak_chains(s, i, remaining - 1, prefix * Rational(1, i).pow(static_cast<unsigned>(s)), sum);
  }
}

RingElem jacobi_node(long i, const RingElem& gamma) {
  // i(i-1+2 gamma)
  return RingElem(i) * (RingElem(i - 1) + RingElem(2L) * gamma);
}

RingElem gamma_of(const FamilySpec& spec) {
  if (spec.has("gamma")) return spec.rational("gamma");
  return RingElem::indeterminate("gamma");
}

}  // namespace

// ---------------------------------------------------------------------------

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Ones: return "ONES";
    case FamilyKind::GeometricQ: return "GEOMETRIC_Q";
    case FamilyKind::ArithProg: return "ARITH_PROG";
    case FamilyKind::JacobiStirling: return "JACOBI_STIRLING";
    case FamilyKind::ZetaNodes: return "ZETA_NODES";
    case FamilyKind::PrimeNodes: return "PRIME_NODES";
  }
  return "?";
}

FamilyKind parse_family_kind(const std::string& text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  for (auto kind : {FamilyKind::Ones, FamilyKind::GeometricQ, FamilyKind::ArithProg, FamilyKind::JacobiStirling,
                    FamilyKind::ZetaNodes, FamilyKind::PrimeNodes}) {
    if (to_string(kind) == upper) return kind;
  }
  throw InvalidParam("unknown family kind '" + text + "'");
}

FamilySpec::FamilySpec(FamilyKind kind, std::map<std::string, std::string> params)
    : kind_(kind), params_(std::move(params)) {
  validate();
}

FamilySpec FamilySpec::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) throw InvalidParam("family spec must be an object with a \"kind\"");
  for (const auto& [key, value] : j.items()) {
    if (key != "kind" && key != "params") throw InvalidParam("unexpected family spec field '" + key + "'");
  }
  std::map<std::string, std::string> params;
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw InvalidParam("family \"params\" must be an object");
    for (const auto& [key, value] : j["params"].items()) {
      if (value.is_string()) {
        params[key] = value.get<std::string>();
      } else if (value.is_number_integer()) {
        params[key] = std::to_string(value.get<long>());
      } else {
        throw InvalidParam("family parameter '" + key + "' must be an integer or a rational string");
      }
    }
  }
  return FamilySpec(parse_family_kind(j["kind"].get<std::string>()), std::move(params));
}

FamilySpec FamilySpec::parse(const std::string& kind, const std::string& params) {
  std::map<std::string, std::string> out;
  std::stringstream in(params);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidParam("parameter '" + item + "' is not of the form name=value");
    std::string key = trim(item.substr(0, eq));
    if (out.count(key) != 0) throw InvalidParam("parameter '" + key + "' given twice");
    out[key] = trim(item.substr(eq + 1));
  }
  return FamilySpec(parse_family_kind(kind), std::move(out));
}

long FamilySpec::integer(const std::string& name) const {
  auto it = params_.find(name);
  if (it == params_.end()) throw InvalidParam("missing parameter '" + name + "'");
  Rational v = Rational::parse(it->second);
  if (v.den() != 1 || !v.num().fits_slong_p()) throw InvalidParam("parameter '" + name + "' must be an integer");
  return v.num().get_si();
}

Rational FamilySpec::rational(const std::string& name) const {
  auto it = params_.find(name);
  if (it == params_.end()) throw InvalidParam("missing parameter '" + name + "'");
  return Rational::parse(it->second);
}

FamilySpec FamilySpec::with(const std::string& name, const std::string& value) const {
  auto params = params_;
  params[name] = value;
  return FamilySpec(kind_, std::move(params));
}

nlohmann::json FamilySpec::to_json() const {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [key, value] : params_) params[key] = value;
  return {{"kind", to_string(kind_)}, {"params", params}};
}

void FamilySpec::validate() const {
  const auto& [required, optional] = param_schema().at(kind_);
  for (const auto& [key, value] : params_) {
    if (required.count(key) == 0 && optional.count(key) == 0) {
      throw InvalidParam("parameter '" + key + "' is not accepted by family " + to_string(kind_));
    }
    Rational::parse(value);
  }
  for (const auto& key : required) {
    if (params_.count(key) == 0) throw InvalidParam("family " + to_string(kind_) + " requires parameter '" + key + "'");
  }
  switch (kind_) {
    case FamilyKind::Ones:
    case FamilyKind::GeometricQ:
    case FamilyKind::ArithProg:
    case FamilyKind::JacobiStirling:
      if (integer("n") < 0) throw InvalidParam("n must be nonnegative");
      break;
    case FamilyKind::ZetaNodes:
      if (integer("s") < 1) throw InvalidParam("s must be a positive integer");
      if (integer("N") < 0) throw InvalidParam("N must be nonnegative");
      break;
    case FamilyKind::PrimeNodes:
      if (integer("s") < 1) throw InvalidParam("s must be a positive integer");
      if (integer("limit") < 2) throw InvalidParam("prime limit must be at least 2");
      break;
  }
}

Family build_family(const FamilySpec& spec) {
  std::vector<RingElem> values;
  std::vector<std::string> flags;
  switch (spec.kind()) {
    case FamilyKind::Ones:
      values.assign(static_cast<std::size_t>(spec.integer("n")), RingElem(1L));
      break;
    case FamilyKind::GeometricQ: {
      RingElem q = spec.has("q") ? RingElem(spec.rational("q")) : RingElem::indeterminate("q");
      RingElem power(1L);
      for (long i = 0; i < spec.integer("n"); ++i) {
        values.push_back(power);
        power *= q;
      }
      break;
    }
    case FamilyKind::ArithProg: {
      Rational r = spec.rational("r");
      Rational m = spec.rational("m");
      for (long j = 0; j <= spec.integer("n"); ++j) values.emplace_back(r + Rational(j) * m);
      if (r.is_zero() && m.is_zero()) flags.emplace_back("all-zero progression (r = m = 0)");
      break;
    }
    case FamilyKind::JacobiStirling: {
      RingElem gamma = gamma_of(spec);
      for (long i = 1; i <= spec.integer("n"); ++i) values.push_back(jacobi_node(i, gamma));
      break;
    }
    case FamilyKind::ZetaNodes: {
      auto s = static_cast<unsigned>(spec.integer("s"));
      for (long i = 1; i <= spec.integer("N"); ++i) values.emplace_back(Rational(1, i).pow(s));
      break;
    }
    case FamilyKind::PrimeNodes: {
      auto s = static_cast<unsigned>(spec.integer("s"));
      for (long p : prime_sieve(spec.integer("limit"))) values.emplace_back(Rational(1, p).pow(s));
      break;
    }
  }
  return Family{spec, VariableSet(std::move(values)), std::move(flags)};
}

// ---------------------------------------------------------------------------

RingElem q_pochhammer(const RingElem& a, long n, const std::string& var) {
  if (n < 0) throw DomainError("q-Pochhammer needs n >= 0");
  RingElem q = RingElem::indeterminate(var);
  RingElem out = UniPoly::constant(var, Rational(1));
  RingElem aqj = a;
  for (long j = 0; j < n; ++j) {
    out *= RingElem(1L) - aqj;
    aqj *= q;
  }
  return out;
}

UniPoly q_binomial(long n, long k, const std::string& var) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("q-binomial [" + std::to_string(n) + " " + std::to_string(k) + "] needs 0 <= k <= n");
  }
  RingElem q = RingElem::indeterminate(var);
  UniPoly num = q_pochhammer(q, n, var).as_poly(var);
  UniPoly den = (q_pochhammer(q, k, var) * q_pochhammer(q, n - k, var)).as_poly(var);
  return num.exact_div(den);
}

std::vector<VerificationReport> verify_q_row(long n, long max_k) {
  if (n < 1) throw InvalidParam("q-row needs n >= 1");
  const FamilySpec spec(FamilyKind::GeometricQ, {{"n", std::to_string(n)}});
  const Family fam = build_family(spec);
  const BasisTable brute = bruteforce_table(fam.vars, static_cast<std::size_t>(std::max(max_k, 0L)));
  std::vector<VerificationReport> out;
  for (long k = 0; k <= max_k; ++k) {
    auto idx = static_cast<std::size_t>(k);
    auto extra = row_extra(spec, k);
    if (k <= n) {
      UniPoly closed = UniPoly::monomial("q", Rational(1), static_cast<std::size_t>(k * (k - 1) / 2)) * q_binomial(n, k);
      out.push_back(make_report("q-row-e", n, brute.e[idx], closed, extra));
    }
    out.push_back(make_report("q-row-h", n, brute.h[idx], q_binomial(n + k - 1, k), extra));
    if (k >= 1) {
      UniPoly one = UniPoly::constant("q", Rational(1));
      UniPoly num = one - UniPoly::monomial("q", Rational(1), static_cast<std::size_t>(n * k));
      UniPoly den = one - UniPoly::monomial("q", Rational(1), static_cast<std::size_t>(k));
      out.push_back(make_report("q-row-p", n, brute.p[idx], num.exact_div(den), extra));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<Rational>> pascal_triangle(long max_n) {
  std::vector<std::vector<Rational>> rows;
  for (long a = 0; a <= max_n; ++a) {
    std::vector<Rational> row(static_cast<std::size_t>(a + 1));
    row.front() = Rational(1);
    row.back() = Rational(1);
    for (long b = 1; b < a; ++b) {
      row[static_cast<std::size_t>(b)] = rows.back()[static_cast<std::size_t>(b - 1)] + rows.back()[static_cast<std::size_t>(b)];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

Rational pascal_entry(const std::vector<std::vector<Rational>>& tri, long a, long b) {
  if (a < 0 || b < 0 || b > a) return Rational(0);
  return tri.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b));
}

}  // namespace

std::vector<VerificationReport> verify_ones_row(long n, long max_k) {
  if (n < 0 || max_k < 0) throw InvalidParam("ones row needs n >= 0 and max_k >= 0");
  const FamilySpec spec(FamilyKind::Ones, {{"n", std::to_string(n)}});
  const BasisTable brute = bruteforce_table(build_family(spec).vars, static_cast<std::size_t>(max_k));
  const auto tri = pascal_triangle(n + max_k);
  std::vector<VerificationReport> out;
  for (long k = 0; k <= max_k; ++k) {
    auto idx = static_cast<std::size_t>(k);
    auto extra = row_extra(spec, k);
    out.push_back(make_report("ones-row-e", n, brute.e[idx], pascal_entry(tri, n, k), extra));
    // h_0 = 1 even on the empty set, where n+k-1 = -1.
    Rational h_closed = k == 0 ? Rational(1) : pascal_entry(tri, n + k - 1, k);
    out.push_back(make_report("ones-row-h", n, brute.h[idx], h_closed, extra));
    out.push_back(make_report("ones-row-p", n, brute.p[idx], k == 0 ? Rational(0) : Rational(n), extra));
  }
  return out;
}

// ---------------------------------------------------------------------------

BernoulliCache bernoulli_polynomials(std::size_t max_n) {
  BernoulliCache cache;
  for (std::size_t n = 0; n <= max_n; ++n) {
    UniPoly b = UniPoly::monomial("x", Rational(1), n);
    for (std::size_t j = 0; j < n; ++j) {
      b -= cache.polys[j] * (binomial(static_cast<long>(n), static_cast<long>(j)) / Rational(static_cast<long>(n - j + 1)));
    }
    cache.polys.push_back(std::move(b));
  }
  return cache;
}

Rational arith_prog_power_sum_closed(const Rational& r, const Rational& m, long n, long k) {
  if (m.is_zero()) throw InvalidParam("Bernoulli power-sum formula divides by m; m must be nonzero");
  if (k < 0 || n < 0) throw InvalidParam("arithmetic progression power sum needs n >= 0 and k >= 0");
  const auto cache = bernoulli_polynomials(static_cast<std::size_t>(k + 1));
  const UniPoly& b = cache[static_cast<std::size_t>(k + 1)];
  Rational shift = r / m;
  Rational diff = b.eval(Rational(n + 1) + shift) - b.eval(shift);
  return m.pow(static_cast<unsigned>(k)) / Rational(k + 1) * diff;
}

VerificationReport verify_arith_prog_power_sum(const Rational& r, const Rational& m, long n, long k) {
  if (k < 1) throw InvalidParam("arithmetic progression power sum check needs k >= 1");
  Rational direct;
  for (long j = 0; j <= n; ++j) direct += (r + Rational(j) * m).pow(static_cast<unsigned>(k));
  const FamilySpec spec(FamilyKind::ArithProg,
                        {{"n", std::to_string(n)}, {"r", r.to_string()}, {"m", m.to_string()}});
  return make_report("arith-prog-power-sum", n, direct, arith_prog_power_sum_closed(r, m, n, k), row_extra(spec, k));
}

Rational stirling2(long a, long b) {
  return triangle_value(a, b, [](long, long j) { return RingElem(j); }).scalar();
}

Rational stirling1(long a, long b) {
  return triangle_value(a, b, [](long i, long) { return RingElem(-(i - 1)); }).scalar();
}

RingElem whitney2(const RingElem& m, const RingElem& r, long a, long b) {
  return triangle_value(a, b, [&](long, long j) { return r + RingElem(j) * m; });
}

RingElem whitney1(const RingElem& m, const RingElem& r, long a, long b) {
  return triangle_value(a, b, [&](long i, long) { return -(r + RingElem(i - 1) * m); });
}

std::vector<VerificationReport> verify_whitney_stirling_crosscheck(long n, long k) {
  if (n < 1 || k < 0) throw InvalidParam("Whitney/Stirling cross-check needs n >= 1 and k >= 0");
  const FamilySpec spec(FamilyKind::ArithProg, {{"n", std::to_string(n)}, {"r", "0"}, {"m", "1"}});
  const VariableSet vars = build_family(spec).vars;
  auto idx = static_cast<std::size_t>(k);
  auto extra = row_extra(spec, k);
  std::vector<VerificationReport> out;
  out.push_back(make_report("stirling2-h", n, complete_bruteforce(vars, idx), stirling2(n + k, n), extra));
  out.push_back(make_report("stirling1-e", n, elementary_bruteforce(vars, idx),
                            sign(k) * RingElem(stirling1(n + 1, n + 1 - k)), extra));
  return out;
}

std::vector<VerificationReport> verify_whitney_row(const Rational& r, const Rational& m, long n, long max_k) {
  const FamilySpec spec(FamilyKind::ArithProg, {{"n", std::to_string(n)}, {"r", r.to_string()}, {"m", m.to_string()}});
  const BasisTable brute = bruteforce_table(build_family(spec).vars, static_cast<std::size_t>(std::max(max_k, 0L)));
  std::vector<VerificationReport> out;
  for (long k = 0; k <= max_k; ++k) {
    auto idx = static_cast<std::size_t>(k);
    auto extra = row_extra(spec, k);
    out.push_back(make_report("whitney2-h", n, brute.h[idx], whitney2(m, r, n + k, n), extra));
    out.push_back(make_report("whitney1-e", n, brute.e[idx], sign(k) * whitney1(m, r, n + 1, n + 1 - k), extra));
  }
  return out;
}

// ---------------------------------------------------------------------------

RingElem jacobi_stirling2(long a, long b, const RingElem& gamma) {
  return triangle_value(a, b, [&](long, long j) { return jacobi_node(j, gamma); });
}

RingElem jacobi_stirling1(long a, long b, const RingElem& gamma) {
  return triangle_value(a, b, [&](long i, long) { return jacobi_node(i - 1, gamma); });
}

std::vector<VerificationReport> verify_jacobi_stirling_row(long n, const RingElem& gamma, long max_k) {
  if (n < 0 || max_k < 0) throw InvalidParam("Jacobi-Stirling row needs n >= 0 and max_k >= 0");
  std::map<std::string, std::string> params{{"n", std::to_string(n)}};
  if (gamma.is_scalar()) params["gamma"] = gamma.scalar().to_string();
  const FamilySpec spec(FamilyKind::JacobiStirling, std::move(params));
  std::vector<RingElem> nodes;
  for (long i = 1; i <= n; ++i) nodes.push_back(jacobi_node(i, gamma));
  const BasisTable brute = bruteforce_table(VariableSet(std::move(nodes)), static_cast<std::size_t>(max_k));
  std::vector<VerificationReport> out;
  for (long k = 0; k <= max_k; ++k) {
    auto idx = static_cast<std::size_t>(k);
    auto extra = row_extra(spec, k);
    if (k <= n) out.push_back(make_report("jacobi-stirling1-e", n, brute.e[idx], jacobi_stirling1(n + 1, n + 1 - k, gamma), extra));
    out.push_back(make_report("jacobi-stirling2-h", n, brute.h[idx], jacobi_stirling2(n + k, n, gamma), extra));
  }
  return out;
}

// ---------------------------------------------------------------------------

Rational truncated_multiple_zeta(long s, long N, long k) {
  Rational sum;
  strict_chains(s, N, k, Rational(1), sum);
  return sum;
}

Rational truncated_multiple_zeta_star(long s, long N, long k) {
  Rational sum;
  weak_chains(s, N, k, Rational(1), sum);
  return sum;
}

Rational truncated_zeta(long s, long N) {
  Rational sum;
  for (long i = 1; i <= N; ++i) sum += Rational(1, i).pow(static_cast<unsigned>(s));
  return sum;
}

std::vector<VerificationReport> verify_zeta_row(long s, long N, long max_k) {
  if (s < 1 || N < 0 || max_k < 0) throw InvalidParam("zeta row needs s >= 1, N >= 0, max_k >= 0");
  const FamilySpec spec(FamilyKind::ZetaNodes, {{"s", std::to_string(s)}, {"N", std::to_string(N)}});
  const BasisTable brute = bruteforce_table(build_family(spec).vars, static_cast<std::size_t>(max_k));
  std::vector<VerificationReport> out;
  for (long k = 0; k <= max_k; ++k) {
    auto idx = static_cast<std::size_t>(k);
    auto extra = row_extra(spec, k);
    out.push_back(make_report("zeta-row-e", N, brute.e[idx], truncated_multiple_zeta(s, N, k), extra));
    out.push_back(make_report("zeta-row-h", N, brute.h[idx], truncated_multiple_zeta_star(s, N, k), extra));
    out.push_back(make_report("zeta-row-p", N, brute.p[idx], k == 0 ? Rational(0) : truncated_zeta(s * k, N), extra));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<long> prime_sieve(long limit) {
  if (limit < 2) return {};
  std::vector<bool> composite(static_cast<std::size_t>(limit + 1), false);
  std::vector<long> primes;
  for (long i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (long j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

Rational squarefree_prime_sum(long s, long limit, long k) {
  auto primes = primes_by_trial_division(limit);
  if (static_cast<long>(primes.size()) < k) return Rational(0);
  long bound = 1;
  for (long i = 0; i < k; ++i) {
    long p = primes[primes.size() - 1 - static_cast<std::size_t>(i)];
    bound = bound > kMaxEnumerationBound / p ? kMaxEnumerationBound + 1 : bound * p;
  }
  return enumerate_integers(s, bound, limit, [k](const std::vector<std::pair<long, int>>& f) {
    if (static_cast<long>(f.size()) != k) return false;
    return std::all_of(f.begin(), f.end(), [](const auto& pe) { return pe.second == 1; });
  });
}

Rational prime_multiset_sum(long s, long limit, long k) {
  auto primes = primes_by_trial_division(limit);
  if (primes.empty()) return k == 0 ? Rational(1) : Rational(0);
  long bound = checked_pow(primes.back(), k);
  return enumerate_integers(s, bound, limit, [k](const std::vector<std::pair<long, int>>& f) {
    long total = 0;
    for (const auto& pe : f) total += pe.second;
    return total == k;
  });
}

Rational truncated_prime_zeta(long s, long limit) {
  Rational sum;
  for (long p : primes_by_trial_division(limit)) sum += Rational(1, p).pow(static_cast<unsigned>(s));
  return sum;
}

std::vector<VerificationReport> verify_prime_row(long s, long limit, long max_k) {
  if (s < 1 || limit < 2 || max_k < 0) throw InvalidParam("prime row needs s >= 1, limit >= 2, max_k >= 0");
  const FamilySpec spec(FamilyKind::PrimeNodes, {{"s", std::to_string(s)}, {"limit", std::to_string(limit)}});
  const BasisTable brute = bruteforce_table(build_family(spec).vars, static_cast<std::size_t>(max_k));
  std::vector<VerificationReport> out;
  for (long k = 0; k <= max_k; ++k) {
    auto idx = static_cast<std::size_t>(k);
    auto extra = row_extra(spec, k);
    out.push_back(make_report("prime-row-e", limit, brute.e[idx], squarefree_prime_sum(s, limit, k), extra));
    out.push_back(make_report("prime-row-h", limit, brute.h[idx], prime_multiset_sum(s, limit, k), extra));
    out.push_back(make_report("prime-row-p", limit, brute.p[idx], k == 0 ? Rational(0) : truncated_prime_zeta(s * k, limit), extra));
  }
  return out;
}

// ---------------------------------------------------------------------------

RowOracle row_oracle(const FamilySpec& spec, long k) {
  if (k < 0) throw InvalidParam("k must be nonnegative");
  RowOracle out;
  switch (spec.kind()) {
    case FamilyKind::Ones: {
      long n = spec.integer("n");
      out.e = binomial(n, k);
      out.h = k == 0 ? Rational(1) : binomial(n + k - 1, k);
      out.p = k == 0 ? Rational(0) : Rational(n);
      break;
    }
    case FamilyKind::GeometricQ: {
      long n = spec.integer("n");
      RingElem e = k <= n ? RingElem(UniPoly::monomial("q", Rational(1), static_cast<std::size_t>(k * (k - 1) / 2)) *
                                     q_binomial(n, k))
                          : RingElem(0L);
      RingElem h = k == 0 ? RingElem(1L) : (n == 0 ? RingElem(0L) : RingElem(q_binomial(n + k - 1, k)));
      RingElem p(0L);
      if (k >= 1) {
        UniPoly one = UniPoly::constant("q", Rational(1));
        p = (one - UniPoly::monomial("q", Rational(1), static_cast<std::size_t>(n * k)))
                .exact_div(one - UniPoly::monomial("q", Rational(1), static_cast<std::size_t>(k)));
      }
      if (spec.has("q")) {
        Rational q = spec.rational("q");
        e = evaluate_at(e, q);
        h = evaluate_at(h, q);
        p = evaluate_at(p, q);
      }
      out.e = e;
      out.h = h;
      out.p = p;
      break;
    }
    case FamilyKind::ArithProg: {
      long n = spec.integer("n");
      Rational r = spec.rational("r");
      Rational m = spec.rational("m");
      out.e = sign(k) * whitney1(m, r, n + 1, n + 1 - k);
      out.h = whitney2(m, r, n + k, n);
      if (k == 0) {
        out.p = RingElem(0L);
      } else if (!m.is_zero()) {
        out.p = arith_prog_power_sum_closed(r, m, n, k);
      }
      break;
    }
    case FamilyKind::JacobiStirling: {
      long n = spec.integer("n");
      RingElem gamma = gamma_of(spec);
      out.e = k <= n ? jacobi_stirling1(n + 1, n + 1 - k, gamma) : RingElem(0L);
      out.h = jacobi_stirling2(n + k, n, gamma);
      break;
    }
    case FamilyKind::ZetaNodes: {
      long s = spec.integer("s");
      long N = spec.integer("N");
      out.e = truncated_multiple_zeta(s, N, k);
      out.h = truncated_multiple_zeta_star(s, N, k);
      out.p = k == 0 ? Rational(0) : truncated_zeta(s * k, N);
      break;
    }
    case FamilyKind::PrimeNodes: {
      long s = spec.integer("s");
      long limit = spec.integer("limit");
      out.e = squarefree_prime_sum(s, limit, k);
      out.h = prime_multiset_sum(s, limit, k);
      out.p = k == 0 ? Rational(0) : truncated_prime_zeta(s * k, limit);
      break;
    }
  }
  return out;
}

}  // namespace gnewton
