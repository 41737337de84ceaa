// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mcensus/bigint.hpp"
#include "mcensus/field.hpp"

namespace mcensus {

/// Dense univariate polynomial over a finite field. Coefficient i belongs to
/// x^i. The coefficient vector never ends in zero; the zero polynomial has no
/// coefficients and no degree.
class Polynomial {
 public:
  explicit Polynomial(FieldSpec spec) : spec_(std::move(spec)) {}
  /// Trailing zeros are stripped. Throws DomainError for indices >= q.
  Polynomial(FieldSpec spec, std::vector<Elem> coefficients);

  static Polynomial constant(const FieldSpec& spec, Elem c);
  static Polynomial x(const FieldSpec& spec);
  static Polynomial monomial(const FieldSpec& spec, Elem c, std::size_t e);

  const FieldSpec& field() const noexcept { return spec_; }
  std::span<const Elem> coefficients() const noexcept { return coeffs_; }
  Elem coeff(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }

  /// std::nullopt stands for the degree of the zero polynomial.
  std::optional<std::size_t> degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept {
    return coeffs_.size() == 1 && coeffs_[0] == 1;
  }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const noexcept {
    return !coeffs_.empty() && coeffs_.back() == 1;
  }
  /// Leading coefficient; 0 for the zero polynomial.
  Elem leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

  /// Scales by the inverse of the leading coefficient. Zero stays zero.
  Polynomial monic() const;
  Polynomial scaled(Elem c) const;
  Polynomial shifted(std::size_t e) const;  ///< times x^e

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.spec_ == b.spec_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  FieldSpec spec_;
  std::vector<Elem> coeffs_;
};

/// Quotient and remainder with deg(remainder) < deg(divisor).
/// Throws DomainError("division_by_zero").
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                         const Polynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// Monic lcm; lcm with zero is zero.
Polynomial lcm(const Polynomial& a, const Polynomial& b);

/// a^e mod m by square-and-multiply.
Polynomial powmod(const Polynomial& a, const BigInt& e, const Polynomial& m);
Polynomial pow(const Polynomial& a, std::uint64_t e);

Polynomial derivative(const Polynomial& a);
Elem eval(const Polynomial& a, Elem at);
/// a(inner(x)).
Polynomial compose(const Polynomial& a, const Polynomial& inner);

/// Global canonical order: ascending degree, then coefficient tuples compared
/// lexicographically from the constant term upward by element index.
struct PolyOrder {
  bool operator()(const Polynomial& a, const Polynomial& b) const noexcept;
};

/// Index of a monic degree-n polynomial among all q^n of them:
/// sum_{i<n} c_i q^i.
std::uint64_t monic_index(const Polynomial& g);
Polynomial monic_from_index(const FieldSpec& spec, std::size_t n,
                            std::uint64_t index);

/// Grammar: terms `c*x^e`, `x^e`, `x`, `c` separated by `+`, whitespace
/// ignored; c is a field element index. Repeated powers are summed.
Polynomial parse_poly(const std::string& text, const FieldSpec& spec);
/// Descending powers, zero terms omitted, unit coefficients omitted on
/// non-constant terms; "0" for the zero polynomial.
std::string format_poly(const Polynomial& p);

}  // namespace mcensus
