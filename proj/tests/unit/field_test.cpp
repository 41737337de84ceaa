// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mcensus/field.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "mcensus/errors.hpp"

namespace mcensus {
namespace {

// First monic polynomial of degree 2 or 3 over GF(p), in the (c_{k-1}, ..., c_0)
// lexicographic scan, that has no root in GF(p). For these degrees "no root"
// is the same as irreducible.
std::vector<std::uint32_t> first_rootless(std::uint64_t p, unsigned k) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t n = 0; n < count; ++n) {
    std::vector<std::uint32_t> c(k + 1, 0);
    c[k] = 1;
    std::uint64_t rest = n;
    for (unsigned i = 0; i < k; ++i) {
      c[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    bool root = false;
    for (std::uint64_t x = 0; x < p && !root; ++x) {
      std::uint64_t acc = 0;
      for (unsigned i = k + 1; i-- > 0;) acc = (acc * x + c[i]) % p;
      root = acc == 0;
    }
    if (!root) return c;
  }
  return {};
}

std::vector<std::pair<std::uint64_t, unsigned>> small_fields() {
  return {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4},
          {5, 2}, {3, 3}, {2, 5}, {7, 2}, {2, 6}, {3, 4}};
}

TEST(FieldTest, PrimeFieldHasNoModulus) {
  const auto f = FieldSpec::make(2, 1);
  EXPECT_EQ(f.order(), 2U);
  EXPECT_TRUE(f.modulus().empty());
  EXPECT_TRUE(f.is_prime_field());
}

TEST(FieldTest, ModulusIsFirstIrreducibleInScanOrder) {
  const auto f4 = FieldSpec::make(2, 2);
  const std::vector<std::uint32_t> expected4{1, 1, 1};  // x^2+x+1
  EXPECT_EQ(std::vector<std::uint32_t>(f4.modulus().begin(), f4.modulus().end()),
            expected4);
  EXPECT_EQ(first_rootless(2, 2), expected4);

  const auto f9 = FieldSpec::make(3, 2);
  const std::vector<std::uint32_t> expected9{1, 0, 1};  // x^2+1
  EXPECT_EQ(std::vector<std::uint32_t>(f9.modulus().begin(), f9.modulus().end()),
            expected9);
  EXPECT_EQ(first_rootless(3, 2), expected9);

  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 3}, {3, 3}, {5, 2}, {7, 2}}) {
    const auto f = FieldSpec::make(p, k);
    EXPECT_EQ(std::vector<std::uint32_t>(f.modulus().begin(), f.modulus().end()),
              first_rootless(p, k))
        << f.name();
  }
}

TEST(FieldTest, ConstructionIsDeterministic) {
  for (auto [p, k] : small_fields()) {
    const auto a = FieldSpec::make(p, k);
    const auto b = FieldSpec::make(p, k);
    EXPECT_TRUE(a == b);
    EXPECT_TRUE(std::equal(a.modulus().begin(), a.modulus().end(),
                           b.modulus().begin(), b.modulus().end()));
    for (Elem x = 0; x < a.order(); ++x) {
      for (Elem y = 0; y < a.order(); y += 3) {
        ASSERT_EQ(a.mul(x, y), b.mul(x, y));
      }
    }
  }
}

TEST(FieldTest, Examples) {
  const auto f2 = FieldSpec::make(2, 1);
  EXPECT_EQ(f2.add(1, 1), 0U);

  const auto f4 = FieldSpec::make(2, 2);
  const Elem t = 2;  // coefficients (c0, c1) = (0, 1)
  EXPECT_EQ(f4.mul(t, t), 3U);  // t + 1

  const auto f3 = FieldSpec::make(3, 1);
  EXPECT_EQ(f3.inv(2), 2U);
}

TEST(FieldTest, IndexBijection) {
  const auto f2 = FieldSpec::make(2, 1);
  EXPECT_EQ(element_index(index_element(f2, 0)), 0U);
  EXPECT_EQ(element_index(index_element(f2, 1)), 1U);

  const auto f4 = FieldSpec::make(2, 2);
  const std::vector<std::uint32_t> t_plus_1{1, 1};
  EXPECT_EQ(f4.from_digits(t_plus_1), 3U);

  const auto f9 = FieldSpec::make(3, 2);
  EXPECT_EQ(index_element(f9, 5).coefficients(),
            (std::vector<std::uint32_t>{2, 1}));

  for (auto [p, k] : small_fields()) {
    const auto f = FieldSpec::make(p, k);
    for (std::uint64_t i = 0; i < f.order(); ++i) {
      const auto e = index_element(f, i);
      ASSERT_EQ(element_index(e), i);
      ASSERT_EQ(f.from_digits(e.coefficients()), i);
    }
  }
}

// Multiplication must agree with schoolbook polynomial multiplication
// reduced by the modulus.
TEST(FieldTest, MultiplicationMatchesReductionModuloModulus) {
  for (auto [p, k] : small_fields()) {
    const auto f = FieldSpec::make(p, k);
    if (k == 1) continue;
    const auto m = f.modulus();
    for (Elem a = 0; a < f.order(); ++a) {
      for (Elem b = 0; b < f.order(); ++b) {
        const auto da = f.digits(a);
        const auto db = f.digits(b);
        std::vector<std::uint64_t> prod(2 * k - 1, 0);
        for (unsigned i = 0; i < k; ++i) {
          for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
        for (std::size_t i = prod.size(); i-- > k;) {
          const std::uint64_t lead = prod[i];
          for (unsigned j = 0; j <= k; ++j) {
            prod[i - k + j] = (prod[i - k + j] + (p - lead) * m[j]) % p;
          }
        }
        std::vector<std::uint32_t> expect(prod.begin(), prod.begin() + k);
        ASSERT_EQ(f.digits(f.mul(a, b)), expect) << f.name() << " " << a << "*" << b;
      }
    }
  }
}

TEST(FieldTest, FieldAxiomsExhaustive) {
  for (auto [p, k] : small_fields()) {
    const auto f = FieldSpec::make(p, k);
    if (f.order() > 27) continue;
    for (Elem a = 0; a < f.order(); ++a) {
      ASSERT_EQ(f.add(a, f.neg(a)), 0U);
      ASSERT_EQ(f.sub(a, a), 0U);
      if (a != 0) ASSERT_EQ(f.mul(a, f.inv(a)), 1U);
      for (Elem b = 0; b < f.order(); ++b) {
        ASSERT_EQ(f.add(a, b), f.add(b, a));
        ASSERT_EQ(f.mul(a, b), f.mul(b, a));
        for (Elem c = 0; c < f.order(); ++c) {
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
          ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
          ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        }
      }
    }
  }
}

TEST(FieldTest, LagrangeInMultiplicativeGroup) {
  for (auto [p, k] : small_fields()) {
    const auto f = FieldSpec::make(p, k);
    for (Elem a = 1; a < f.order(); ++a) {
      // Repeated multiplication, independent of the exponent tables.
      Elem acc = 1;
      for (std::uint64_t i = 0; i < f.order() - 1; ++i) acc = f.mul(acc, a);
      ASSERT_EQ(acc, 1U) << f.name() << " a=" << a;
      ASSERT_EQ(f.pow(a, f.order() - 1), 1U);
    }
  }
}

TEST(FieldTest, FrobeniusIsAutomorphism) {
  for (auto [p, k] : small_fields()) {
    const auto f = FieldSpec::make(p, k);
    for (Elem a = 0; a < f.order(); ++a) {
      Elem direct = 1;
      for (std::uint64_t i = 0; i < p; ++i) direct = f.mul(direct, a);
      ASSERT_EQ(f.frobenius(a), direct);
      ASSERT_EQ(f.frobenius(f.frobenius_inverse(a)), a);
      for (Elem b = 0; b < f.order(); ++b) {
        ASSERT_EQ(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
        ASSERT_EQ(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
      }
    }
  }
}

TEST(FieldTest, PowHandlesLargeExponents) {
  const auto f = FieldSpec::make(3, 2);
  const BigInt huge = big_pow(BigInt(10), 40) + 3;
  for (Elem a = 0; a < f.order(); ++a) {
    EXPECT_EQ(f.pow(a, huge), f.pow(a, 3U)) << "q-1 = 8 divides 10^40";
  }
  EXPECT_EQ(f.pow(0, BigInt(0)), 1U);
}

TEST(FieldTest, ElementValueType) {
  const auto f4 = FieldSpec::make(2, 2);
  const auto t = f4.element(2);
  EXPECT_EQ((t * t).index(), 3U);
  EXPECT_EQ((t * t.inv()).index(), 1U);
  EXPECT_EQ((t + t).index(), 0U);
  EXPECT_EQ(t.frobenius(), t * t);
  EXPECT_EQ((-t).index(), 2U);
}

TEST(FieldTest, Errors) {
  EXPECT_THROW(FieldSpec::make(4, 1), DomainError);
  EXPECT_THROW(FieldSpec::make(1, 1), DomainError);
  EXPECT_THROW(FieldSpec::make(2, 0), DomainError);
  EXPECT_THROW(FieldSpec::make(2, 21), BudgetExceeded);
  EXPECT_THROW(FieldSpec::make(3, 3, 26), BudgetExceeded);
  EXPECT_NO_THROW(FieldSpec::make(3, 3, 27));
  const auto f3 = FieldSpec::make(3, 1);
  EXPECT_THROW(f3.inv(0), DomainError);
  EXPECT_THROW(f3.element(3), DomainError);
  const auto f5 = FieldSpec::make(5, 1);
  try {
    (void)(f3.element(1) + f5.element(1));
    FAIL() << "mixed fields accepted";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "field_mismatch");
  }
}

TEST(FieldTest, FromOrderSplitsPrimePowers) {
  EXPECT_EQ(FieldSpec::from_order(4).characteristic(), 2U);
  EXPECT_EQ(FieldSpec::from_order(4).extension_degree(), 2U);
  EXPECT_EQ(FieldSpec::from_order(9).extension_degree(), 2U);
  EXPECT_EQ(FieldSpec::from_order(7).extension_degree(), 1U);
  EXPECT_THROW(FieldSpec::from_order(6), DomainError);
  EXPECT_THROW(FieldSpec::from_order(1), DomainError);
}

TEST(FieldTest, ParseElement) {
  const auto f9 = FieldSpec::make(3, 2);
  EXPECT_EQ(parse_element(f9, "8"), 8U);
  EXPECT_THROW(parse_element(f9, "9"), DomainError);
  EXPECT_THROW(parse_element(f9, "a"), ParseError);
  EXPECT_THROW(parse_element(f9, ""), ParseError);
}

}  // namespace
}  // namespace mcensus
