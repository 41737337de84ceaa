// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mcensus/factor.hpp"

#include <gtest/gtest.h>

#include <random>

#include "mcensus/errors.hpp"
#include "support/oracles.hpp"

namespace mcensus {
namespace {

using testing::oracle_irreducible;

TEST(FactorTest, IrreducibilityExamples) {
  const auto f2 = FieldSpec::make(2, 1);
  EXPECT_TRUE(is_irreducible(parse_poly("x^2+x+1", f2)));
  EXPECT_FALSE(is_irreducible(parse_poly("x^2+1", f2)));
  for (const auto& f : {FieldSpec::make(2, 1), FieldSpec::make(3, 2)}) {
    for (Elem c = 0; c < f.order(); ++c) {
      EXPECT_TRUE(is_irreducible(Polynomial(f, {c, 1})));
    }
  }
  EXPECT_FALSE(is_irreducible(Polynomial::constant(f2, 1)));
  EXPECT_THROW(is_irreducible(Polynomial(f2)), DomainError);
  // Non-monic input is judged up to units.
  const auto f3 = FieldSpec::make(3, 1);
  EXPECT_TRUE(is_irreducible(parse_poly("2*x^2+2", f3)));
}

TEST(FactorTest, IrreducibilityAgreesWithTrialDivision) {
  for (const auto& f : {FieldSpec::make(2, 1), FieldSpec::make(3, 1),
                        FieldSpec::make(2, 2), FieldSpec::make(5, 1)}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < n; ++i) count *= f.order();
      if (count > 4096) continue;
      for (std::uint64_t i = 0; i < count; ++i) {
        const auto g = monic_from_index(f, n, i);
        ASSERT_EQ(is_irreducible(g), oracle_irreducible(g)) << format_poly(g);
      }
    }
  }
}

TEST(FactorTest, FactorizeExamples) {
  const auto f2 = FieldSpec::make(2, 1);
  const auto a = factorize(parse_poly("x^2+x", f2));
  ASSERT_EQ(a.factors.size(), 2U);
  EXPECT_EQ(a.leading, 1U);
  EXPECT_EQ(a.factors[0], (Factor{parse_poly("x", f2), 1}));
  EXPECT_EQ(a.factors[1], (Factor{parse_poly("x+1", f2), 1}));

  const auto b = factorize(parse_poly("x^4+x^2+1", f2));
  ASSERT_EQ(b.factors.size(), 1U);
  EXPECT_EQ(b.factors[0], (Factor{parse_poly("x^2+x+1", f2), 2}));

  const auto f5 = FieldSpec::make(5, 1);
  const auto g = parse_poly("x^3+x+1", f5);
  ASSERT_TRUE(oracle_irreducible(g));
  const auto c = factorize(g);
  ASSERT_EQ(c.factors.size(), 1U);
  EXPECT_EQ(c.factors[0], (Factor{g, 1}));
  EXPECT_TRUE(c.is_irreducible());
}

TEST(FactorTest, PerfectPowersInCharacteristicP) {
  const auto f3 = FieldSpec::make(3, 1);
  // (x+1)^3 (x^2+1)^6 x^9 has a vanishing derivative in places.
  const auto g = pow(parse_poly("x+1", f3), 3) * pow(parse_poly("x^2+1", f3), 6) *
                 pow(parse_poly("x", f3), 9) * Polynomial::constant(f3, 2);
  const auto fac = factorize(g);
  EXPECT_EQ(fac.expand(), g);
  EXPECT_EQ(fac.leading, 2U);
  ASSERT_EQ(fac.factors.size(), 3U);
  EXPECT_EQ(fac.factors[0], (Factor{parse_poly("x", f3), 9}));
  EXPECT_EQ(fac.factors[1], (Factor{parse_poly("x+1", f3), 3}));
  EXPECT_EQ(fac.factors[2], (Factor{parse_poly("x^2+1", f3), 6}));

  const auto f4 = FieldSpec::make(2, 2);
  const auto h = pow(parse_poly("x^2+2*x+1", f4), 4) * parse_poly("x+3", f4);
  EXPECT_EQ(factorize(h).expand(), h);
}

TEST(FactorTest, ReconstructionAndCanonicalOrder) {
  std::mt19937_64 rng(101);
  for (const auto& f : {FieldSpec::make(2, 1), FieldSpec::make(3, 1),
                        FieldSpec::make(2, 2), FieldSpec::make(5, 1),
                        FieldSpec::make(3, 2)}) {
    for (int i = 0; i < 200; ++i) {
      auto g = testing::random_poly(f, 10, rng);
      if (g.is_zero()) continue;
      const auto fac = factorize(g, rng());
      ASSERT_EQ(fac.expand(), g) << format_poly(g);
      for (std::size_t j = 0; j < fac.factors.size(); ++j) {
        ASSERT_TRUE(fac.factors[j].poly.is_monic());
        ASSERT_TRUE(is_irreducible(fac.factors[j].poly));
        ASSERT_GE(fac.factors[j].multiplicity, 1U);
        if (j > 0) ASSERT_TRUE(PolyOrder{}(fac.factors[j - 1].poly, fac.factors[j].poly));
      }
    }
  }
}

TEST(FactorTest, ResultDoesNotDependOnSeed) {
  std::mt19937_64 rng(5);
  for (const auto& f : {FieldSpec::make(3, 1), FieldSpec::make(2, 3),
                        FieldSpec::make(5, 1)}) {
    for (int i = 0; i < 40; ++i) {
      // Products of several same-degree factors force equal-degree splitting.
      Polynomial g = Polynomial::constant(f, 1);
      for (int j = 0; j < 4; ++j) g = g * testing::random_monic_irreducible(f, 2, rng);
      const auto base = factorize(g, 0);
      for (std::uint64_t seed : {1ULL, 2ULL, 0xdeadbeefULL}) {
        ASSERT_EQ(factorize(g, seed), base);
      }
      ASSERT_EQ(factorize(g, 0), base);
    }
  }
}

TEST(FactorTest, NecklaceCounts) {
  const auto f2 = FieldSpec::make(2, 1);
  EXPECT_EQ(count_monic_irreducibles(f2, 1), 2);
  EXPECT_EQ(count_monic_irreducibles(f2, 2), 1);
  EXPECT_EQ(count_monic_irreducibles(f2, 3), 2);
  EXPECT_THROW(count_monic_irreducibles(f2, 0), DomainError);

  // Enumeration oracle.
  for (const auto& f : {FieldSpec::make(2, 1), FieldSpec::make(3, 1),
                        FieldSpec::make(2, 2)}) {
    for (unsigned n = 1; n <= 4; ++n) {
      std::uint64_t count = 1;
      for (unsigned i = 0; i < n; ++i) count *= f.order();
      std::uint64_t irreducible = 0;
      for (std::uint64_t i = 0; i < count; ++i) {
        irreducible += oracle_irreducible(monic_from_index(f, n, i)) ? 1 : 0;
      }
      EXPECT_EQ(count_monic_irreducibles(f, n), irreducible) << f.name() << " n=" << n;
    }
  }
}

TEST(FactorTest, ZeroPolynomialRejected) {
  const auto f2 = FieldSpec::make(2, 1);
  EXPECT_THROW(factorize(Polynomial(f2)), DomainError);
  const auto c = factorize(Polynomial::constant(f2, 1));
  EXPECT_TRUE(c.factors.empty());
}

}  // namespace
}  // namespace mcensus
