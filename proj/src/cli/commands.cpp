// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mcensus/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>

#include "mcensus/canonical.hpp"
#include "mcensus/census.hpp"
#include "mcensus/centralizer.hpp"
#include "mcensus/errors.hpp"
#include "mcensus/factor.hpp"

namespace mcensus::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kFormatHelp = R"(Text formats:
  element     integer index in [0, q); for GF(p^k) the digits of the index
              in base p are the coefficients of the element over GF(p)
  polynomial  sum of terms c*x^e, x^e, x or c separated by '+', e.g.
              "x^2+x+1" or "2*x^3+1"
  matrix      rows separated by ';', entries by ',', e.g. "0,1;1,1"

Exit codes: 0 success, 1 domain error or failed verification,
            2 usage error, 3 budget exceeded, 4 internal error)";

struct Options {
  std::uint64_t q = 0;
  std::optional<unsigned> k;
  std::uint64_t field_budget = kDefaultFieldBudget;
  std::optional<std::size_t> n;
  std::optional<std::string> poly;
  std::optional<std::string> matrix;
  std::uint64_t seed = 0;
  std::string mode = "both";
  std::optional<unsigned> threads;
  std::optional<std::uint64_t> budget;
  std::string format = "json";
  bool no_timing = false;
};

struct Outcome {
  Json params = Json::object();
  Json result = Json::object();
  int exit_code = kExitOk;
  /// Replaces the envelope when set (csv output).
  std::optional<std::string> raw;
};

FieldSpec make_field(const Options& o) {
  if (o.k) return FieldSpec::make(o.q, *o.k, o.field_budget);
  return FieldSpec::from_order(o.q, o.field_budget);
}

Json field_params(const FieldSpec& f) {
  return Json{{"q", f.order()}, {"p", f.characteristic()}, {"k", f.extension_degree()}};
}

std::string dec(const BigInt& v) { return to_decimal(v); }

Json factor_list(const Factorization& fac) {
  Json list = Json::array();
  for (const auto& [poly, mult] : fac.factors) {
    list.push_back({{"poly", format_poly(poly)}, {"multiplicity", mult}});
  }
  return list;
}

unsigned resolve_threads(const Options& o) {
  if (o.threads) return *o.threads;
  const char* env = std::getenv("MATRIX_CENSUS_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v > 4096) {
    throw ParseError("MATRIX_CENSUS_THREADS is not a thread count", 0);
  }
  return static_cast<unsigned>(v);
}

Outcome cmd_count(const Options& o) {
  const FieldSpec f = make_field(o);
  Outcome out;
  out.params = field_params(f);
  if (!o.poly) {
    if (!o.n) throw DomainError("invalid_argument", "count needs --n or --poly");
    out.params["n"] = *o.n;
    out.result = {{"count", dec(count_irreducible_case(f.order(), *o.n))},
                  {"factorization", Json::array()},
                  {"formula", "irreducible"}};
    return out;
  }
  const Polynomial g = parse_poly(*o.poly, f);
  if (!g.is_monic() || g.is_constant()) {
    throw DomainError("not_monic", "--poly must be monic of degree >= 1");
  }
  const std::size_t n = *g.degree();
  if (o.n && *o.n != n) {
    throw DomainError("degree_mismatch", "--poly has degree " + std::to_string(n) +
                                             " but --n is " + std::to_string(*o.n));
  }
  out.params["n"] = n;
  out.params["poly"] = format_poly(g);
  out.params["seed"] = o.seed;
  const Factorization fac = factorize(g, o.seed);
  out.result = {{"count", dec(count_with_charpoly(g, o.seed))},
                {"factorization", factor_list(fac)},
                {"formula", fac.is_irreducible() ? "irreducible" : "general"}};
  return out;
}

Json mismatch(const char* check, const std::optional<Polynomial>& g,
              const BigInt& observed, const BigInt& expected) {
  Json m{{"check", check}};
  if (g) m["poly"] = format_poly(*g);
  m["observed"] = dec(observed);
  m["expected"] = dec(expected);
  return m;
}

// formula: partition identity only. bruteforce: census total, and the
// irreducible-case product on every irreducible key. both: everything, plus
// the general count on every monic polynomial of degree n.
Outcome cmd_verify(const Options& o) {
  const FieldSpec f = make_field(o);
  if (!o.n) throw DomainError("invalid_argument", "verify needs --n");
  const std::size_t n = *o.n;
  const bool formula = o.mode != "bruteforce";
  const bool brute = o.mode != "formula";
  const unsigned threads = resolve_threads(o);
  Outcome out;
  out.params = field_params(f);
  out.params["n"] = n;
  out.params["mode"] = o.mode;
  out.params["seed"] = o.seed;
  out.params["threads"] = threads;
  if (o.budget) out.params["budget"] = *o.budget;

  const BigInt expected_total = big_pow(BigInt(f.order()), n * n);
  Json mismatches = Json::array();
  Json checked = Json::object();
  BigInt total;

  std::optional<PartitionReport> partition;
  if (formula) {
    partition = verify_partition(f, n, o.budget.value_or(kDefaultPolynomialBudget), o.seed);
    total = partition->sum;
    checked["partition"] = true;
    if (!partition->holds) {
      mismatches.push_back(mismatch("partition", std::nullopt, partition->sum,
                                    partition->expected));
    }
  }
  if (brute) {
    const CensusReport census =
        census_bruteforce(f, n, {o.budget.value_or(kDefaultCensusBudget), threads});
    total = census.total;
    if (census.total != expected_total) {
      mismatches.push_back(mismatch("census_total", std::nullopt, census.total, expected_total));
    }
    const auto polys = big_pow(BigInt(f.order()), n).convert_to<std::uint64_t>();
    const BigInt irreducible_count = count_irreducible_case(f.order(), n);
    std::uint64_t irreducible = 0;
    std::uint64_t general = 0;
    for (std::uint64_t i = 0; i < polys; ++i) {
      const Polynomial g = monic_from_index(f, n, i);
      const auto it = census.entries.find(g);
      const BigInt observed = it == census.entries.end() ? BigInt(0) : it->second;
      if (is_irreducible(g)) {
        ++irreducible;
        if (observed != irreducible_count) mismatches.push_back(mismatch("irreducible", g, observed, irreducible_count));
      }
      if (formula) {
        ++general;
        const BigInt& expected = partition->counts.at(g);
        if (observed != expected) mismatches.push_back(mismatch("general", g, observed, expected));
      }
    }
    checked["census_total"] = true;
    checked["irreducible"] = irreducible;
    if (formula) checked["general"] = general;
  }

  const bool pass = mismatches.empty();
  out.result = {{"pass", pass},
                {"checked", std::move(checked)},
                {"mismatches", std::move(mismatches)},
                {"total", dec(total)},
                {"expected_total", dec(expected_total)}};
  out.exit_code = pass ? kExitOk : kExitDomain;
  return out;
}

Outcome cmd_census(const Options& o) {
  const FieldSpec f = make_field(o);
  if (!o.n) throw DomainError("invalid_argument", "census needs --n");
  const unsigned threads = resolve_threads(o);
  const CensusReport report =
      census_bruteforce(f, *o.n, {o.budget.value_or(kDefaultCensusBudget), threads});
  Outcome out;
  out.params = field_params(f);
  out.params["n"] = *o.n;
  out.params["threads"] = threads;
  if (o.budget) out.params["budget"] = *o.budget;
  if (o.format == "csv") {
    std::string csv = "poly,count\n";
    for (const auto& [g, c] : report.entries) csv += format_poly(g) + "," + dec(c) + "\n";
    out.raw = std::move(csv);
    return out;
  }
  Json entries = Json::array();
  for (const auto& [g, c] : report.entries) {
    entries.push_back({{"poly", format_poly(g)}, {"count", dec(c)}});
  }
  out.result = {{"entries", std::move(entries)}, {"total", dec(report.total)}};
  return out;
}

SquareMatrix require_matrix(const Options& o, const FieldSpec& f, Outcome& out) {
  if (!o.matrix) throw DomainError("invalid_argument", "--matrix is required");
  SquareMatrix m = parse_matrix(*o.matrix, f);
  out.params = field_params(f);
  out.params["n"] = m.size();
  out.params["matrix"] = format_matrix(m);
  return m;
}

Outcome cmd_rcf(const Options& o) {
  const FieldSpec f = make_field(o);
  Outcome out;
  const SquareMatrix m = require_matrix(o, f, out);
  const auto r = rcf(m);
  Json blocks = Json::array();
  for (const auto& b : r.blocks) blocks.push_back(format_poly(b));
  out.result = {{"blocks", std::move(blocks)},
                {"transition", format_matrix(r.transition)},
                {"form", format_matrix(r.form())}};
  return out;
}

Outcome cmd_centralizer(const Options& o) {
  const FieldSpec f = make_field(o);
  Outcome out;
  const SquareMatrix m = require_matrix(o, f, out);
  const std::uint64_t budget = o.budget.value_or(kDefaultEnumerationBudget);
  out.params["budget"] = budget;
  const auto c = centralizer(m);
  Json basis = Json::array();
  for (const auto& x : c.basis) basis.push_back(format_matrix(x));
  Json units = nullptr;
  try {
    units = dec(centralizer_unit_count(m, budget));
  } catch (const BudgetExceeded&) {
    // Reported as null; the rest of the description is still useful.
  }
  out.result = {{"dimension", c.dimension},
                {"order", dec(c.order)},
                {"basis", std::move(basis)},
                {"units", std::move(units)},
                {"is_polynomial_centralizer", is_polynomial_centralizer(m)}};
  return out;
}

Outcome cmd_factor(const Options& o) {
  const FieldSpec f = make_field(o);
  if (!o.poly) throw DomainError("invalid_argument", "--poly is required");
  const Polynomial g = parse_poly(*o.poly, f);
  const Factorization fac = factorize(g, o.seed);
  Outcome out;
  out.params = field_params(f);
  out.params["poly"] = format_poly(g);
  out.params["seed"] = o.seed;
  out.result = {{"leading", fac.leading},
                {"factors", factor_list(fac)},
                {"irreducible", fac.is_irreducible()}};
  return out;
}

Outcome cmd_orbit(const Options& o) {
  const FieldSpec f = make_field(o);
  Outcome out;
  const SquareMatrix m = require_matrix(o, f, out);
  const std::uint64_t budget = o.budget.value_or(kDefaultEnumerationBudget);
  out.params["budget"] = budget;
  const auto r = orbit_stabilizer_report(m, budget);
  out.result = {{"charpoly", format_poly(r.charpoly)},
                {"gl_order", dec(r.gl_order)},
                {"stabilizer_order", dec(r.stabilizer_order)},
                {"orbit_size", dec(r.orbit_size)},
                {"formula_count", dec(r.formula_count)},
                {"consistent", r.consistent}};
  return out;
}

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::usage: return "usage";
    case ErrorKind::budget: return "budget";
    case ErrorKind::internal: return "internal";
  }
  return "internal";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain: return kExitDomain;
    case ErrorKind::usage: return kExitUsage;
    case ErrorKind::budget: return kExitBudget;
    case ErrorKind::internal: return kExitInternal;
  }
  return kExitInternal;
}

int report_error(std::ostream& err, const std::string& code, const char* kind,
                 const std::string& message, int exit_code,
                 std::optional<std::size_t> position = std::nullopt) {
  Json e{{"code", code}, {"kind", kind}, {"message", message}};
  if (position) e["position"] = *position;
  e["exit_code"] = exit_code;
  err << Json{{"error", std::move(e)}}.dump() << '\n';
  return exit_code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Count n x n matrices over GF(q) by characteristic polynomial.", "mcensus"};
  app.footer(kFormatHelp);
  app.require_subcommand(1);
  Options o;

  auto field_flags = [&](CLI::App* sub) {
    sub->add_option("--q", o.q, "Field order q = p^k, or the prime p when --k is given")
        ->required();
    sub->add_option("--k", o.k, "Extension degree (makes --q the characteristic)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--field-budget", o.field_budget, "Largest accepted field order")
        ->capture_default_str();
    sub->add_flag("--no-timing", o.no_timing, "Report timing_ms as 0");
  };
  auto n_flag = [&](CLI::App* sub) {
    return sub->add_option("--n", o.n, "Matrix dimension")->check(CLI::PositiveNumber);
  };
  auto seed_flag = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Seed for randomized factorization")
        ->capture_default_str();
  };
  auto threads_flag = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads,
                    "Worker threads (0: all cores; falls back to MATRIX_CENSUS_THREADS)");
  };
  auto budget_flag = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("--budget", o.budget, what)->check(CLI::PositiveNumber);
  };

  std::vector<std::pair<CLI::App*, std::function<Outcome(const Options&)>>> commands;

  auto* count = app.add_subcommand("count", "Matrices with a given characteristic polynomial");
  field_flags(count);
  n_flag(count);
  count->add_option("--poly", o.poly, "Monic characteristic polynomial (default: any irreducible)");
  seed_flag(count);
  commands.emplace_back(count, cmd_count);

  auto* verify = app.add_subcommand("verify", "Check the formulas against brute-force census");
  field_flags(verify);
  n_flag(verify)->required();
  verify->add_option("--mode", o.mode, "formula, bruteforce or both")
      ->check(CLI::IsMember({"formula", "bruteforce", "both"}))
      ->capture_default_str();
  threads_flag(verify);
  budget_flag(verify, "Cap on enumerated matrices (and polynomials in formula mode)");
  seed_flag(verify);
  commands.emplace_back(verify, cmd_verify);

  auto* census = app.add_subcommand("census", "Histogram of characteristic polynomials");
  field_flags(census);
  n_flag(census)->required();
  threads_flag(census);
  budget_flag(census, "Cap on enumerated matrices");
  census->add_option("--format", o.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  commands.emplace_back(census, cmd_census);

  auto* rcf_cmd = app.add_subcommand("rcf", "Rational canonical form of a matrix");
  field_flags(rcf_cmd);
  rcf_cmd->add_option("--matrix", o.matrix, "Matrix")->required();
  commands.emplace_back(rcf_cmd, cmd_rcf);

  auto* cent = app.add_subcommand("centralizer", "Centralizer of a matrix");
  field_flags(cent);
  cent->add_option("--matrix", o.matrix, "Matrix")->required();
  budget_flag(cent, "Cap on enumerated centralizer elements");
  commands.emplace_back(cent, cmd_centralizer);

  auto* fac = app.add_subcommand("factor", "Factor a polynomial");
  field_flags(fac);
  fac->add_option("--poly", o.poly, "Polynomial")->required();
  seed_flag(fac);
  commands.emplace_back(fac, cmd_factor);

  auto* orbit = app.add_subcommand("orbit", "Orbit-stabilizer report for a matrix");
  field_flags(orbit);
  orbit->add_option("--matrix", o.matrix, "Matrix with irreducible charpoly")->required();
  budget_flag(orbit, "Cap on enumerated centralizer elements");
  commands.emplace_back(orbit, cmd_orbit);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    return report_error(err, "usage_error", "usage", e.what(), kExitUsage);
  }

  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome result = handler(o);
      if (result.raw) {
        out << *result.raw;
        return result.exit_code;
      }
      const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start);
      Json envelope{{"schema_version", "1"},
                    {"command", sub->get_name()},
                    {"params", std::move(result.params)},
                    {"result", std::move(result.result)},
                    {"timing_ms", o.no_timing ? 0 : elapsed.count()}};
      out << envelope.dump() << '\n';
      return result.exit_code;
    } catch (const ParseError& e) {
      return report_error(err, e.code(), "usage", e.what(), kExitUsage, e.position());
    } catch (const Error& e) {
      return report_error(err, e.code(), kind_name(e.kind()), e.what(),
                          exit_code_for(e.kind()));
    } catch (const std::exception& e) {
      return report_error(err, "internal", "internal", e.what(), kExitInternal);
    }
  }
  return report_error(err, "usage_error", "usage", "no command given", kExitUsage);
}

}  // namespace mcensus::cli
