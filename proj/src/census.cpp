// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mcensus/census.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_map>

#include "mcensus/detail/linalg.hpp"
#include "mcensus/errors.hpp"
#include "mcensus/factor.hpp"

namespace mcensus {

namespace test_hooks {
namespace {
std::atomic<std::int64_t> g_formula_offset{0};
}  // namespace

void set_formula_offset(std::int64_t offset) {
#ifdef MCENSUS_TEST_HOOKS
  g_formula_offset.store(offset);
#else
  if (offset != 0) {
    throw InternalError("test hooks are disabled in this build");
  }
#endif
}

std::int64_t formula_offset() { return g_formula_offset.load(); }
}  // namespace test_hooks

namespace {

void require_q_n(const BigInt& q, std::uint64_t n) {
  if (q < 2) throw DomainError("invalid_argument", "q must be >= 2");
  if (n < 1) throw DomainError("invalid_argument", "n must be >= 1");
}

BigInt gl_order_product(const BigInt& q, std::uint64_t n) {
  const BigInt qn = big_pow(q, n);
  BigInt acc = 1;
  BigInt qk = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    acc *= qn - qk;
    qk *= q;
  }
  return acc;
}

// Dense histogram when q^n is small, hash map otherwise.
class Histogram {
 public:
  explicit Histogram(std::uint64_t keys) {
    if (keys <= (std::uint64_t{1} << 20)) dense_.assign(keys, 0);
  }
  void add(std::uint64_t key, std::uint64_t count = 1) {
    if (!dense_.empty()) {
      dense_[key] += count;
    } else {
      sparse_[key] += count;
    }
  }
  void merge_into(Histogram& other) const {
    for (std::uint64_t k = 0; k < dense_.size(); ++k) {
      if (dense_[k] != 0) other.add(k, dense_[k]);
    }
    for (const auto& [k, v] : sparse_) other.add(k, v);
  }
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t k = 0; k < dense_.size(); ++k) {
      if (dense_[k] != 0) fn(k, dense_[k]);
    }
    for (const auto& [k, v] : sparse_) fn(k, v);
  }

 private:
  std::vector<std::uint64_t> dense_;
  std::unordered_map<std::uint64_t, std::uint64_t> sparse_;
};

void census_chunk(const FieldSpec& f, std::size_t n, std::uint64_t begin,
                  std::uint64_t end, Histogram& hist) {
  const std::uint64_t q = f.order();
  std::vector<Elem> entries(n * n);
  std::uint64_t rest = begin;
  for (auto& e : entries) {
    e = static_cast<Elem>(rest % q);
    rest /= q;
  }
  std::vector<Elem> coeffs(n + 1);
  detail::BerkowitzScratch scratch;
  for (std::uint64_t index = begin; index < end; ++index) {
    detail::berkowitz(f, entries, n, coeffs, scratch);
    std::uint64_t key = 0;
    for (std::size_t i = n; i-- > 0;) key = key * q + coeffs[i];
    hist.add(key);
    for (auto& e : entries) {
      if (++e < q) break;
      e = 0;
    }
  }
}

}  // namespace

ExactRational f_product(const BigInt& u, std::uint64_t v) {
  if (u < 2) throw DomainError("invalid_argument", "u must be >= 2");
  ExactRational acc = 1;
  BigInt power = 1;
  for (std::uint64_t i = 1; i <= v; ++i) {
    power *= u;
    acc *= ExactRational(power - 1, power);
  }
  return acc;
}

BigInt gl_order(const BigInt& q, std::uint64_t n) {
  require_q_n(q, n);
  BigInt order = gl_order_product(q, n);
#ifdef MCENSUS_SELF_CHECK
  if (ExactRational(big_pow(q, n * n)) * f_product(q, n) !=
      ExactRational(order)) {
    throw InternalError("|GL_n(q)| disagrees with q^(n^2) F(q, n)");
  }
#endif
  return order;
}

BigInt count_irreducible_case(const BigInt& q, std::uint64_t n) {
  require_q_n(q, n);
  const BigInt qn = big_pow(q, n);
  BigInt acc = 1;
  BigInt qi = q;
  for (std::uint64_t i = 1; i < n; ++i) {
    acc *= qn - qi;
    qi *= q;
  }
#ifdef MCENSUS_SELF_CHECK
  const BigInt gl = gl_order_product(q, n);
  if (gl % (qn - 1) != 0 || gl / (qn - 1) != acc) {
    throw InternalError("irreducible-case count is not |GL_n(q)| / (q^n - 1)");
  }
#endif
  return acc;
}

namespace {

Factorization require_monic_factorization(const Polynomial& g,
                                          std::uint64_t seed) {
  if (!g.is_monic() || g.is_constant()) {
    throw DomainError("not_monic",
                      "characteristic polynomial must be monic of degree >= 1");
  }
  return factorize(g, seed);
}

}  // namespace

ExactRational count_with_charpoly_rational(const Polynomial& g,
                                           std::uint64_t seed) {
  const Factorization fac = require_monic_factorization(g, seed);
  const BigInt q = g.field().order();
  const std::uint64_t n = *g.degree();
  ExactRational value = ExactRational(big_pow(q, n * n - n)) * f_product(q, n);
  for (const auto& [f, mult] : fac.factors) {
    value /= f_product(big_pow(q, *f.degree()), mult);
  }
  return value;
}

BigInt count_with_charpoly(const Polynomial& g, std::uint64_t seed) {
  const Factorization fac = require_monic_factorization(g, seed);
  const BigInt q = g.field().order();
  const std::uint64_t n = *g.degree();
  // q^(n^2) F(q, n) = |GL_n(q)| turns the rational formula into
  // |GL_n(q)| q^(sum d_i n_i^2 - n) / prod |GL_{n_i}(q^{d_i})|.
  std::uint64_t exponent = 0;
  BigInt denominator = 1;
  for (const auto& [f, mult] : fac.factors) {
    const std::uint64_t d = *f.degree();
    exponent += d * mult * mult;
    denominator *= gl_order(big_pow(q, d), mult);
  }
  const BigInt numerator = gl_order(q, n) * big_pow(q, exponent - n);
  if (numerator % denominator != 0) {
    throw InternalError("charpoly count for " + format_poly(g) +
                        " is not an integer");
  }
  BigInt count = numerator / denominator;
#ifdef MCENSUS_SELF_CHECK
  if (count_with_charpoly_rational(g, seed) != ExactRational(count)) {
    throw InternalError("integer and rational count forms disagree");
  }
  if (fac.is_irreducible() && count != count_irreducible_case(q, n)) {
    throw InternalError("general count disagrees with the irreducible case");
  }
#endif
  return count + test_hooks::formula_offset();
}

CensusReport census_bruteforce(const FieldSpec& spec, std::size_t n,
                               const CensusOptions& options) {
  if (n < 1) throw DomainError("invalid_argument", "n must be >= 1");
  const std::uint64_t q = spec.order();
  const BigInt total = big_pow(BigInt(q), n * n);
  if (total > options.budget) {
    throw BudgetExceeded(spec.name() + " has " + total.str() + " " +
                         std::to_string(n) + "x" + std::to_string(n) +
                         " matrices, budget " + std::to_string(options.budget));
  }
  const auto count = total.convert_to<std::uint64_t>();
  const std::uint64_t keys = big_pow(BigInt(q), n).convert_to<std::uint64_t>();

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, count / 4096)));

  std::vector<Histogram> partial(threads, Histogram(keys));
  if (threads == 1) {
    census_chunk(spec, n, 0, count, partial[0]);
  } else {
    std::vector<std::thread> workers;
    const std::uint64_t step = count / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = t * step;
      const std::uint64_t end = t + 1 == threads ? count : begin + step;
      workers.emplace_back(census_chunk, std::cref(spec), n, begin, end,
                           std::ref(partial[t]));
    }
    for (auto& w : workers) w.join();
  }
  Histogram merged(keys);
  for (const auto& h : partial) h.merge_into(merged);

  CensusReport report;
  report.q = q;
  report.n = n;
  merged.for_each([&](std::uint64_t key, std::uint64_t value) {
    report.entries.emplace(monic_from_index(spec, n, key), BigInt(value));
    report.total += value;
  });
  return report;
}

PartitionReport verify_partition(const FieldSpec& spec, std::size_t n,
                                 std::uint64_t budget, std::uint64_t seed) {
  if (n < 1) throw DomainError("invalid_argument", "n must be >= 1");
  const BigInt polys = big_pow(BigInt(spec.order()), n);
  if (polys > budget) {
    throw BudgetExceeded(polys.str() + " monic polynomials exceed budget " +
                         std::to_string(budget));
  }
  PartitionReport report;
  report.expected = big_pow(BigInt(spec.order()), n * n);
  const auto count = polys.convert_to<std::uint64_t>();
  for (std::uint64_t i = 0; i < count; ++i) {
    Polynomial g = monic_from_index(spec, n, i);
    BigInt c = count_with_charpoly(g, seed);
    report.sum += c;
    report.counts.emplace(std::move(g), std::move(c));
  }
  report.holds = report.sum == report.expected;
  return report;
}

OrbitStabilizerReport orbit_stabilizer_report(const SquareMatrix& m,
                                              std::uint64_t budget) {
  Polynomial chi = charpoly(m);
  if (!is_irreducible(chi)) {
    throw DomainError("reducible_charpoly",
                      "characteristic polynomial " + format_poly(chi) +
                          " is reducible");
  }
  const BigInt q = m.field().order();
  const std::uint64_t n = m.size();
  OrbitStabilizerReport report{m, std::move(chi), gl_order(q, n),
                               centralizer_unit_count(m, budget), 0,
                               count_irreducible_case(q, n), false};
  if (report.gl_order % report.stabilizer_order != 0) {
    throw InternalError("stabilizer order does not divide |GL_n(q)|");
  }
  report.orbit_size = report.gl_order / report.stabilizer_order;
  report.consistent =
      report.orbit_size == report.formula_count &&
      report.orbit_size * report.stabilizer_order == report.gl_order &&
      report.stabilizer_order == big_pow(q, n) - 1;
  return report;
}

}  // namespace mcensus
