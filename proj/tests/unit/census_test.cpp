// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mcensus/census.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mcensus/canonical.hpp"
#include "mcensus/errors.hpp"
#include "mcensus/factor.hpp"
#include "support/oracles.hpp"

namespace mcensus {
namespace {

using testing::all_matrices;

// Charpoly histogram from the cofactor-expansion oracle.
std::map<Polynomial, BigInt, PolyOrder> oracle_census(const FieldSpec& f, std::size_t n) {
  std::map<Polynomial, BigInt, PolyOrder> out;
  for (const auto& m : all_matrices(f, n)) out[testing::oracle_charpoly(m)] += 1;
  return out;
}

std::uint64_t invertible_oracle(const FieldSpec& f, std::size_t n) {
  std::uint64_t count = 0;
  for (const auto& m : all_matrices(f, n)) count += testing::oracle_det(m) != 0 ? 1 : 0;
  return count;
}

TEST(CensusTest, FProductExamples) {
  EXPECT_EQ(f_product(7, 0), 1);
  EXPECT_EQ(f_product(2, 1), ExactRational(1, 2));
  EXPECT_EQ(f_product(2, 2), ExactRational(3, 8));
  EXPECT_THROW(f_product(1, 2), DomainError);
}

TEST(CensusTest, GlOrderExamples) {
  EXPECT_EQ(gl_order(5, 1), 4);
  EXPECT_EQ(gl_order(2, 2), 6);
  EXPECT_EQ(gl_order(2, 3), 168);
  const auto f2 = FieldSpec::make(2, 1);
  EXPECT_EQ(invertible_oracle(f2, 2), 6U);
  EXPECT_EQ(invertible_oracle(f2, 3), 168U);
  EXPECT_EQ(gl_order(3, 2), invertible_oracle(FieldSpec::make(3, 1), 2));
  EXPECT_THROW(gl_order(1, 2), DomainError);
  EXPECT_THROW(gl_order(2, 0), DomainError);
}

TEST(CensusTest, GlOrderMatchesFProductIdentity) {
  for (std::uint64_t q = 2; q <= 16; ++q) {
    for (std::uint64_t n = 1; n <= 8; ++n) {
      ASSERT_EQ(ExactRational(big_pow(BigInt(q), n * n)) * f_product(q, n),
                ExactRational(gl_order(q, n)));
    }
  }
}

TEST(CensusTest, IrreducibleCaseExamples) {
  EXPECT_EQ(count_irreducible_case(7, 1), 1);
  EXPECT_EQ(count_irreducible_case(2, 2), 2);
  EXPECT_EQ(count_irreducible_case(2, 3), 24);
  EXPECT_EQ(count_irreducible_case(3, 2), 6);
}

TEST(CensusTest, CountWithCharpolyExamples) {
  const auto f2 = FieldSpec::make(2, 1);
  const auto oracle = oracle_census(f2, 2);
  for (const auto& [text, expected] : {std::pair{"x^2", 4}, {"x^2+x", 6}, {"x^2+x+1", 2}, {"x^2+1", 4}}) {
    const auto g = parse_poly(text, f2);
    EXPECT_EQ(count_with_charpoly(g), expected) << text;
    EXPECT_EQ(oracle.at(g), expected) << text;
    EXPECT_EQ(count_with_charpoly_rational(g), expected) << text;
  }
  EXPECT_THROW(count_with_charpoly(Polynomial::constant(f2, 1)), DomainError);
  const auto f3 = FieldSpec::make(3, 1);
  EXPECT_THROW(count_with_charpoly(parse_poly("2*x^2+1", f3)), DomainError);
}

TEST(CensusTest, BruteforceExamples) {
  const auto f2 = FieldSpec::make(2, 1);
  const auto one = census_bruteforce(f2, 1);
  EXPECT_EQ(one.total, 2);
  EXPECT_EQ(one.entries.size(), 2U);
  EXPECT_EQ(one.entries.at(parse_poly("x", f2)), 1);
  EXPECT_EQ(one.entries.at(parse_poly("x+1", f2)), 1);

  const auto two = census_bruteforce(f2, 2);
  EXPECT_EQ(two.total, 16);
  EXPECT_EQ(two.entries, oracle_census(f2, 2));

  const auto f3 = FieldSpec::make(3, 1);
  const auto three = census_bruteforce(f3, 2);
  EXPECT_EQ(three.total, 81);
  int irreducible = 0;
  for (const auto& [g, count] : three.entries) {
    if (!is_irreducible(g)) continue;
    ++irreducible;
    EXPECT_EQ(count, 6) << format_poly(g);
  }
  EXPECT_EQ(irreducible, 3);
  EXPECT_EQ(three.entries, oracle_census(f3, 2));
}

TEST(CensusTest, BruteforceMatchesCofactorOracleOnLargerCases) {
  const auto f2 = FieldSpec::make(2, 1);
  EXPECT_EQ(census_bruteforce(f2, 3).entries, oracle_census(f2, 3));
  const auto f4 = FieldSpec::make(2, 2);
  EXPECT_EQ(census_bruteforce(f4, 2).entries, oracle_census(f4, 2));
}

TEST(CensusTest, BruteforceAgreesWithFormulas) {
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, std::size_t>>{
           {2, 2}, {2, 3}, {3, 2}, {4, 2}, {5, 2}, {2, 4}, {3, 3}}) {
    const auto f = FieldSpec::from_order(q);
    const auto report = census_bruteforce(f, n);
    ASSERT_EQ(report.total, big_pow(BigInt(q), n * n));
    // Every monic polynomial occurs (companion matrices), so the map is full.
    ASSERT_EQ(report.entries.size(), big_pow(BigInt(q), n));
    for (const auto& [g, count] : report.entries) {
      ASSERT_TRUE(g.is_monic());
      ASSERT_EQ(*g.degree(), n);
      ASSERT_EQ(count, count_with_charpoly(g)) << f.name() << " " << format_poly(g);
      if (is_irreducible(g)) ASSERT_EQ(count, count_irreducible_case(q, n));
    }
  }
}

TEST(CensusTest, DeterministicAcrossThreadCounts) {
  const auto f = FieldSpec::make(3, 1);
  const auto base = census_bruteforce(f, 3, {kDefaultCensusBudget, 1});
  for (unsigned threads : {2U, 3U, 7U, 0U}) {
    const auto other = census_bruteforce(f, 3, {kDefaultCensusBudget, threads});
    ASSERT_EQ(other.entries, base.entries) << threads;
    ASSERT_EQ(other.total, base.total);
  }
}

TEST(CensusTest, BruteforceBudget) {
  const auto f2 = FieldSpec::make(2, 1);
  EXPECT_THROW(census_bruteforce(f2, 9), BudgetExceeded);
  EXPECT_THROW(census_bruteforce(f2, 3, {511, 1}), BudgetExceeded);
  EXPECT_NO_THROW(census_bruteforce(f2, 3, {512, 1}));
}

TEST(CensusTest, PartitionExamples) {
  const auto f2 = FieldSpec::make(2, 1);
  const auto two = verify_partition(f2, 2);
  EXPECT_TRUE(two.holds);
  EXPECT_EQ(two.sum, 16);
  EXPECT_EQ(two.counts.at(parse_poly("x^2+x", f2)), 6);
  EXPECT_EQ(verify_partition(f2, 3).sum, 512);
  const auto f3 = FieldSpec::make(3, 1);
  EXPECT_EQ(verify_partition(f3, 1).sum, 3);
  EXPECT_THROW(verify_partition(f3, 3, 26), BudgetExceeded);
}

TEST(CensusTest, PartitionHoldsOnSmallFields) {
  for (std::uint64_t q : {2U, 3U, 4U, 5U, 7U}) {
    const auto f = FieldSpec::from_order(q);
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto r = verify_partition(f, n);
      ASSERT_TRUE(r.holds) << f.name() << " n=" << n;
      ASSERT_EQ(r.expected, big_pow(BigInt(q), n * n));
    }
  }
}

// M -> M + cI shifts the charpoly by g(x) -> g(x - c).
TEST(CensusTest, ShiftSymmetry) {
  std::mt19937_64 rng(97);
  for (const auto& f : {FieldSpec::make(2, 1), FieldSpec::make(3, 1), FieldSpec::make(2, 2),
                        FieldSpec::make(5, 1)}) {
    for (int i = 0; i < 30; ++i) {
      const std::size_t n = 1 + rng() % 5;
      std::vector<Elem> c(n + 1);
      for (auto& e : c) e = testing::random_elem(f, rng);
      c[n] = 1;
      const Polynomial g(f, c);
      for (Elem shift = 0; shift < f.order(); ++shift) {
        const auto moved = compose(g, Polynomial(f, {f.neg(shift), 1}));
        ASSERT_EQ(count_with_charpoly(moved), count_with_charpoly(g));
      }
    }
  }
  const auto f3 = FieldSpec::make(3, 1);
  const auto census = census_bruteforce(f3, 2);
  for (const auto& [g, count] : census.entries) {
    for (Elem shift = 1; shift < 3; ++shift) {
      const auto moved = compose(g, Polynomial(f3, {f3.neg(shift), 1}));
      ASSERT_EQ(census.entries.at(moved), count);
    }
  }
}

TEST(CensusTest, OrbitStabilizerExamples) {
  const auto f2 = FieldSpec::make(2, 1);
  const auto r = orbit_stabilizer_report(companion(parse_poly("x^2+x+1", f2)));
  EXPECT_EQ(r.gl_order, 6);
  EXPECT_EQ(r.stabilizer_order, 3);
  EXPECT_EQ(r.orbit_size, 2);
  EXPECT_EQ(r.formula_count, 2);
  EXPECT_TRUE(r.consistent);

  for (const char* text : {"x^3+x+1", "x^3+x^2+1"}) {
    const auto c = orbit_stabilizer_report(companion(parse_poly(text, f2)));
    EXPECT_EQ(c.gl_order, 168);
    EXPECT_EQ(c.stabilizer_order, 7);
    EXPECT_EQ(c.orbit_size, 24);
    EXPECT_TRUE(c.consistent);
  }

  try {
    orbit_stabilizer_report(companion(parse_poly("x^2", f2)));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "reducible_charpoly");
  }
}

TEST(CensusTest, OrbitSizeMatchesExplicitOrbit) {
  const auto f2 = FieldSpec::make(2, 1);
  const auto m = companion(parse_poly("x^3+x+1", f2));
  std::set<std::uint64_t> orbit;
  for (const auto& p : all_matrices(f2, 3)) {
    const auto inv = try_invert(p);
    if (inv) orbit.insert(static_cast<std::uint64_t>(matrix_index(p * m * *inv)));
  }
  EXPECT_EQ(orbit_stabilizer_report(m).orbit_size, orbit.size());
}

TEST(CensusTest, FormulaOffsetHook) {
  const auto f2 = FieldSpec::make(2, 1);
  test_hooks::set_formula_offset(1);
  EXPECT_EQ(count_with_charpoly(parse_poly("x^2", f2)), 5);
  EXPECT_FALSE(verify_partition(f2, 2).holds);
  test_hooks::set_formula_offset(0);
  EXPECT_TRUE(verify_partition(f2, 2).holds);
}

}  // namespace
}  // namespace mcensus
