// gnewton: tables, identity verification and exact fuzzing from the command line.
//
// Exit codes: 0 all checks exact, 1 some identity check failed, 2 bad configuration.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gnewton/errors.hpp"
#include "gnewton/families.hpp"
#include "gnewton/report.hpp"
#include "gnewton/series.hpp"
#include "gnewton/suites.hpp"
#include "gnewton/symfun.hpp"
#include "gnewton/twovar.hpp"

using nlohmann::json;
using namespace gnewton;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string family;
  std::string params;
  std::string family_json;
  std::optional<std::string> vars;
  std::optional<std::string> yvars;
  std::optional<long> n;
  std::optional<long> k_max;
  std::optional<long> truncation;
  std::optional<long> cases;
  std::uint64_t seed = 42;
  std::optional<long> nx;
  std::optional<long> ny;
  std::optional<long> max_size;
  bool allow_zero = false;
  bool serial = false;
  std::string format = "json";
  std::string out;
  std::string which = "E";
  std::string suite;
};

// A CSV cell: scalars as num/den, polynomials in their printed form.
std::string cell(const RingElem& v) { return v.to_string(); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += csv_escape(cells[i]);
  }
  return line + "\n";
}

long nonnegative(const std::optional<long>& v, long fallback, const char* flag) {
  long x = v.value_or(fallback);
  if (x < 0) throw ConfigError(std::string(flag) + " must be nonnegative");
  return x;
}

std::map<std::string, std::string> parse_kv(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("--params expects k=v,...");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

bool has_family(const RunConfig& c) { return !c.family.empty() || !c.family_json.empty(); }

FamilySpec family_spec(const RunConfig& c) {
  if (!c.family_json.empty()) {
    json j;
    try {
      j = json::parse(c.family_json);
    } catch (const json::exception& e) {
      throw ConfigError(std::string("--family-json: ") + e.what());
    }
    return FamilySpec::from_json(j);
  }
  return FamilySpec::parse(c.family, c.params);
}

// The X set for bases/series: a family or an inline list (possibly empty).
VariableSet x_set(const RunConfig& c, json& source) {
  if (has_family(c) && c.vars) throw ConfigError("give either --family or --vars, not both");
  if (has_family(c)) {
    Family fam = build_family(family_spec(c));
    source = {{"family", fam.spec.to_json()}, {"flags", fam.flags}};
    return fam.vars;
  }
  if (!c.vars) throw ConfigError("a variable set is required: --family or --vars");
  VariableSet x = VariableSet::parse(*c.vars);
  source = {{"vars", to_json(x.values())}};
  return x;
}

// --- bases -------------------------------------------------------------------

struct Output {
  json document;
  std::string csv;
  bool passed = true;
};

Output cmd_bases(const RunConfig& c) {
  const long k_max = nonnegative(c.k_max, 5, "--k-max");
  json source;
  const VariableSet x = x_set(c, source);
  const BasisTable t = basis_table(x, static_cast<std::size_t>(k_max));

  Output out;
  out.document = {{"command", "bases"}, {"source", source}, {"k_max", k_max},
                  {"e", to_json(t.e)},  {"h", to_json(t.h)}, {"p", to_json(t.p)}};
  out.csv = csv_row({"k", "e", "h", "p"});
  for (long k = 0; k <= k_max; ++k) {
    out.csv += csv_row({std::to_string(k), cell(t.e[k]), cell(t.h[k]), cell(t.p[k])});
  }
  return out;
}

// --- verify ------------------------------------------------------------------

Output cmd_verify(const RunConfig& c) {
  std::vector<std::string> names;
  if (c.suite == "all") {
    names = suite_names();
  } else {
    names.push_back(canonical_suite_name(c.suite));
  }

  SuiteOptions opts;
  opts.seed = c.seed;
  opts.cases = static_cast<std::size_t>(nonnegative(c.cases, 0, "--cases"));
  opts.max_size = static_cast<std::size_t>(nonnegative(c.max_size, 0, "--max-size"));
  if (c.nx) opts.nx = static_cast<std::size_t>(nonnegative(c.nx, 0, "--nx"));
  if (c.ny) opts.ny = static_cast<std::size_t>(nonnegative(c.ny, 0, "--ny"));
  if (c.n) opts.n = nonnegative(c.n, 0, "--n");
  if (c.k_max) opts.k_max = nonnegative(c.k_max, 0, "--k-max");
  if (c.truncation) opts.truncation = static_cast<std::size_t>(nonnegative(c.truncation, 0, "--truncation"));
  opts.allow_zero = c.allow_zero;
  opts.execution = c.serial ? Execution::Serial : Execution::Parallel;
  if (opts.nx && *opts.nx == 0) throw ConfigError("--nx must be at least 1");
  if (opts.ny && *opts.ny == 0) throw ConfigError("--ny must be at least 1");

  json source = nullptr;
  if (has_family(c) || c.vars) {
    opts.x = x_set(c, source);
    if (c.yvars) opts.y = VariableSet::parse(*c.yvars);
  } else {
    if (c.yvars) throw ConfigError("--yvars needs --vars or --family");
    // Row-suite parameter overrides, e.g. "s=2,limit=30".
    opts.params = parse_kv(c.params);
  }

  Output out;
  json suites = json::array();
  std::size_t cases = 0, checks = 0, failed = 0;
  out.csv = csv_row({"suite", "case", "identity", "n", "equal", "lhs", "rhs"});
  for (const auto& name : names) {
    SuiteResult r = run_suite(name, opts);
    cases += r.cases;
    checks += r.reports.size();
    failed += r.failures();
    out.passed = out.passed && r.passed();
    for (const auto& rep : r.reports) {
      out.csv += csv_row({r.name, rep.extra.value("case", json(0)).dump(), rep.identity, std::to_string(rep.n),
                          rep.equal ? "true" : "false", cell(rep.lhs), cell(rep.rhs)});
    }
    suites.push_back(r.to_json());
  }
  out.document = {{"command", "verify"}, {"seed", c.seed},   {"source", source}, {"cases", cases},
                  {"checks", checks},    {"failed", failed}, {"passed", out.passed}, {"suites", suites}};
  return out;
}

// --- table -------------------------------------------------------------------

// The parameter swept by --n for each family, if any.
std::optional<std::string> sweep_key(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::ZetaNodes:
      return "N";
    case FamilyKind::PrimeNodes:
      return std::nullopt;
    default:
      return "n";
  }
}

Output cmd_table(const RunConfig& c) {
  if (!has_family(c)) throw ConfigError("table needs --family or --family-json");
  if (c.vars) throw ConfigError("table takes a family, not --vars");
  const long k_max = nonnegative(c.k_max, 5, "--k-max");

  // Validate the base spec before any computation. A sweep fills in the key.
  std::vector<FamilySpec> specs;
  if (c.n) {
    FamilyKind kind = c.family_json.empty() ? parse_family_kind(c.family) : family_spec(c).kind();
    auto key = sweep_key(kind);
    if (!key) throw ConfigError("--n does not apply to " + to_string(kind));
    const long top = nonnegative(c.n, 0, "--n");
    if (top < 1) throw ConfigError("--n must be at least 1");
    std::map<std::string, std::string> params;
    if (c.family_json.empty()) {
      params = parse_kv(c.params);
    } else {
      params = family_spec(c).params();
    }
    params[*key] = "1";
    const FamilySpec base(kind, params);
    for (long v = 1; v <= top; ++v) specs.push_back(base.with(*key, std::to_string(v)));
  } else {
    specs.push_back(family_spec(c));
  }
  const FamilyKind kind = specs.front().kind();

  Output out;
  json rows = json::array();
  out.csv = csv_row({"params", "k", "e", "h", "p", "e_oracle", "h_oracle", "p_oracle", "match"});
  for (const auto& spec : specs) {
    Family fam = build_family(spec);
    const BasisTable t = basis_table(fam.vars, static_cast<std::size_t>(k_max));
    std::string params_text;
    for (const auto& [key, value] : spec.params()) params_text += (params_text.empty() ? "" : ";") + key + "=" + value;
    for (long k = 0; k <= k_max; ++k) {
      RowOracle o = row_oracle(spec, k);
      bool match = (!o.e || *o.e == t.e[k]) && (!o.h || *o.h == t.h[k]) && (!o.p || *o.p == t.p[k]);
      out.passed = out.passed && match;
      auto opt_json = [](const std::optional<RingElem>& v) { return v ? to_json(*v) : json(nullptr); };
      auto opt_cell = [](const std::optional<RingElem>& v) { return v ? cell(*v) : std::string(); };
      rows.push_back({{"params", spec.to_json()["params"]},
                      {"k", k},
                      {"e", to_json(t.e[k])},
                      {"h", to_json(t.h[k])},
                      {"p", to_json(t.p[k])},
                      {"e_oracle", opt_json(o.e)},
                      {"h_oracle", opt_json(o.h)},
                      {"p_oracle", opt_json(o.p)},
                      {"match", match}});
      out.csv += csv_row({params_text, std::to_string(k), cell(t.e[k]), cell(t.h[k]), cell(t.p[k]), opt_cell(o.e),
                          opt_cell(o.h), opt_cell(o.p), match ? "true" : "false"});
    }
  }
  out.document = {{"command", "table"}, {"family", to_string(kind)}, {"k_max", k_max},
                  {"passed", out.passed}, {"rows", rows}};
  return out;
}

// --- series ------------------------------------------------------------------

Output cmd_series(const RunConfig& c) {
  const long order = nonnegative(c.truncation, 8, "--truncation");
  const std::string& which = c.which;
  if (which != "E" && which != "H" && which != "P" && which != "Pi" && which != "pi") {
    throw ConfigError("--which must be one of E, H, P, Pi, pi");
  }
  json source;
  const VariableSet x = x_set(c, source);
  TruncatedSeries s(static_cast<std::size_t>(order));
  const auto T = static_cast<std::size_t>(order);
  if (which == "E") {
    s = build_E(x, T);
  } else if (which == "H") {
    s = build_H(x, T);
  } else if (which == "P") {
    s = build_P(x, T);
  } else {
    if (!c.yvars) throw ConfigError("--which " + which + " needs --yvars");
    const VariableSet y = VariableSet::parse(*c.yvars);
    source["yvars"] = to_json(y.values());
    s = pair_product_series(x, y, T, which == "Pi" ? PairBasis::CompleteMonomial : PairBasis::ElementaryMonomial);
  }

  Output out;
  out.document = {{"command", "series"}, {"which", which}, {"truncation", order}, {"source", source},
                  {"coeffs", to_json(s.coeffs())}};
  out.csv = csv_row({"power", "coefficient"});
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) out.csv += csv_row({std::to_string(i), cell(s[i])});
  return out;
}

void emit(const Output& out, const RunConfig& c) {
  std::string text = c.format == "csv" ? out.csv : out.document.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ConfigError("cannot open " + c.out);
  f << text;
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", c.out, "Write output to PATH instead of stdout");
}

void add_source(CLI::App* sub, RunConfig& c) {
  sub->add_option("--family", c.family, "ONES, GEOMETRIC_Q, ARITH_PROG, JACOBI_STIRLING, ZETA_NODES, PRIME_NODES");
  sub->add_option("--params", c.params, "Family parameters k=v,...");
  sub->add_option("--family-json", c.family_json, "Family as {\"kind\":...,\"params\":{...}}");
  sub->add_option("--vars", c.vars, "Inline rationals \"a,b,c\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symmetric functions: bases, identity verification and family tables."};
  app.require_subcommand(1);
  RunConfig c;

  auto* bases = app.add_subcommand("bases", "e_k, h_k, p_k for k <= K");
  add_source(bases, c);
  bases->add_option("--k-max,-K", c.k_max, "Largest degree (default 5)");
  add_common(bases, c);

  auto* verify = app.add_subcommand("verify", "Run an identity suite (or \"all\")");
  verify->add_option("suite", c.suite, "Suite name or alias")->required();
  add_source(verify, c);
  verify->add_option("--yvars", c.yvars, "Inline Y for the two-set suites");
  verify->add_option("--n", c.n, "Degree bound (row suites: the single n)");
  verify->add_option("--k-max,-K", c.k_max, "Coefficient bound");
  verify->add_option("--truncation", c.truncation, "Series truncation order");
  verify->add_option("--cases", c.cases, "Random cases (0 = suite default)");
  verify->add_option("--seed", c.seed, "RNG seed");
  verify->add_option("--nx", c.nx, "Fixed |X| for random cases");
  verify->add_option("--ny", c.ny, "Fixed |Y| for random pairs");
  verify->add_option("--max-size", c.max_size, "Largest random |X|");
  verify->add_flag("--allow-zero", c.allow_zero, "Allow zero entries in random sets");
  verify->add_flag("--serial", c.serial, "Run cases on one thread");
  add_common(verify, c);

  auto* table = app.add_subcommand("table", "Family row: computed values beside closed forms");
  table->add_option("--family", c.family, "Family kind");
  table->add_option("--params", c.params, "Family parameters k=v,...");
  table->add_option("--family-json", c.family_json, "Family as JSON");
  table->add_option("--vars", c.vars, "Rejected: table needs a family");
  table->add_option("--n", c.n, "Sweep n (N for ZETA_NODES) over 1..N");
  table->add_option("--k-max,-K", c.k_max, "Largest k (default 5)");
  add_common(table, c);

  auto* series = app.add_subcommand("series", "Truncated E, H, P or two-set Pi, pi");
  add_source(series, c);
  series->add_option("--yvars", c.yvars, "Y for Pi / pi");
  series->add_option("--which", c.which, "E, H, P, Pi or pi");
  series->add_option("--truncation", c.truncation, "Coefficients t^0..t^T (default 8)");
  add_common(series, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  try {
    Output out;
    if (*bases) {
      out = cmd_bases(c);
    } else if (*verify) {
      out = cmd_verify(c);
    } else if (*table) {
      out = cmd_table(c);
    } else {
      out = cmd_series(c);
    }
    emit(out, c);
    return out.passed ? 0 : kExitFailure;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitConfig;
}
