// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

// Exact arithmetic in GF(p) and GF(p^k).
//
// An element of GF(p^k) is a polynomial c_0 + c_1 t + ... + c_{k-1} t^{k-1}
// over GF(p), reduced modulo the field's modulus. Internally each element is
// stored as its index  c_0 + c_1 p + ... + c_{k-1} p^{k-1}, which is a
// bijection onto [0, q). Containers such as Polynomial and SquareMatrix keep
// raw indices (`Elem`) next to a FieldSpec and use the raw operations below;
// FieldElement is the self-describing value type for user-facing code.

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mcensus/bigint.hpp"

namespace mcensus {

/// Raw element index in [0, q).
using Elem = std::uint32_t;

/// Default cap on the field order q.
inline constexpr std::uint64_t kDefaultFieldBudget = std::uint64_t{1} << 20;

class FieldElement;

class FieldSpec {
 public:
  /// Builds GF(p^k). For k >= 2 the modulus is the first monic irreducible
  /// degree-k polynomial when the tuples (c_{k-1}, ..., c_0) are scanned in
  /// ascending lexicographic order.
  static FieldSpec make(std::uint64_t p, unsigned k,
                        std::uint64_t budget = kDefaultFieldBudget);

  /// Splits a prime power q into (p, k) and builds the field.
  static FieldSpec from_order(std::uint64_t q,
                              std::uint64_t budget = kDefaultFieldBudget);

  std::uint64_t characteristic() const noexcept;
  unsigned extension_degree() const noexcept;
  std::uint64_t order() const noexcept;
  bool is_prime_field() const noexcept { return extension_degree() == 1; }

  /// Modulus coefficients over GF(p), low to high, including the leading 1.
  /// Empty for prime fields.
  std::span<const std::uint32_t> modulus() const noexcept;

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  /// Throws DomainError("division_by_zero") for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  Elem pow(Elem a, const BigInt& e) const;
  /// a^p.
  Elem frobenius(Elem a) const noexcept;
  /// Inverse of frobenius: the unique b with b^p = a.
  Elem frobenius_inverse(Elem a) const noexcept;
  /// The image of an integer under Z -> GF(p) -> GF(q).
  Elem from_integer(std::int64_t value) const noexcept;

  /// Base-p digits (c_0, ..., c_{k-1}) of an element index.
  std::vector<std::uint32_t> digits(Elem a) const;
  /// Throws DomainError when a digit is >= p or the length is not k.
  Elem from_digits(std::span<const std::uint32_t> digits) const;

  /// Throws DomainError("index_out_of_range") when i >= q.
  FieldElement element(std::uint64_t i) const;
  bool contains(std::uint64_t i) const noexcept { return i < order(); }

  /// Fields compare equal when (p, k) agree; the modulus is a function of
  /// (p, k) alone.
  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept;

  std::string name() const;

 private:
  struct Impl;
  explicit FieldSpec(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Throws DomainError("field_mismatch") unless a == b.
void require_same_field(const FieldSpec& a, const FieldSpec& b);

class FieldElement {
 public:
  FieldElement(FieldSpec spec, Elem value);

  const FieldSpec& field() const noexcept { return spec_; }
  Elem index() const noexcept { return value_; }
  std::vector<std::uint32_t> coefficients() const {
    return spec_.digits(value_);
  }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement inv() const;
  FieldElement pow(const BigInt& e) const;
  FieldElement frobenius() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.spec_ == b.spec_ && a.value_ == b.value_;
  }

 private:
  FieldSpec spec_;
  Elem value_;
};

/// Bijection elements <-> [0, q): index = sum c_i p^i.
inline std::uint64_t element_index(const FieldElement& a) { return a.index(); }
inline FieldElement index_element(const FieldSpec& spec, std::uint64_t i) {
  return spec.element(i);
}

/// Element text format: the decimal index. Throws ParseError.
Elem parse_element(const FieldSpec& spec, const std::string& text);
std::string format_element(Elem a);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace mcensus
