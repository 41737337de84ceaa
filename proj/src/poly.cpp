// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mcensus/poly.hpp"

#include <algorithm>
#include <cctype>

#include "mcensus/errors.hpp"

namespace mcensus {

Polynomial::Polynomial(FieldSpec spec, std::vector<Elem> coefficients)
    : spec_(std::move(spec)), coeffs_(std::move(coefficients)) {
  for (auto c : coeffs_) {
    if (!spec_.contains(c)) {
      throw DomainError("coefficient_out_of_range",
                        "coefficient " + std::to_string(c) + " not in " +
                            spec_.name());
    }
  }
  normalize();
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const FieldSpec& spec, Elem c) {
  return Polynomial(spec, {c});
}

Polynomial Polynomial::x(const FieldSpec& spec) {
  return Polynomial(spec, {0, 1});
}

Polynomial Polynomial::monomial(const FieldSpec& spec, Elem c,
                                std::size_t e) {
  std::vector<Elem> coeffs(e + 1, 0);
  coeffs[e] = c;
  return Polynomial(spec, std::move(coeffs));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(spec_.inv(leading()));
}

Polynomial Polynomial::scaled(Elem c) const {
  Polynomial out(spec_);
  if (c == 0) return out;
  out.coeffs_.resize(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out.coeffs_[i] = spec_.mul(coeffs_[i], c);
  }
  return out;
}

Polynomial Polynomial::shifted(std::size_t e) const {
  if (is_zero()) return *this;
  Polynomial out(spec_);
  out.coeffs_.assign(e, 0);
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = spec_.neg(c);
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.spec_, b.spec_);
  const FieldSpec& f = a.spec_;
  Polynomial out(f);
  out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
    out.coeffs_[i] = f.add(a.coeff(i), b.coeff(i));
  }
  out.normalize();
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.spec_, b.spec_);
  const FieldSpec& f = a.spec_;
  Polynomial out(f);
  out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
    out.coeffs_[i] = f.sub(a.coeff(i), b.coeff(i));
  }
  out.normalize();
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.spec_, b.spec_);
  const FieldSpec& f = a.spec_;
  Polynomial out(f);
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out.coeffs_[i + j] =
          f.add(out.coeffs_[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  out.normalize();
  return out;
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) {
  return divmod(a, b).first;
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) {
  return divmod(a, b).second;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                         const Polynomial& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) {
    throw DomainError("division_by_zero", "polynomial division by zero");
  }
  const FieldSpec& f = a.field();
  const auto bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Elem> rem(a.coefficients().begin(), a.coefficients().end());
  if (rem.size() <= db) return {Polynomial(f), a};
  std::vector<Elem> quot(rem.size() - db, 0);
  const Elem lead_inv = f.inv(b.leading());
  for (std::size_t i = rem.size(); i-- > db;) {
    const Elem c = f.mul(rem[i], lead_inv);
    if (c == 0) continue;
    const std::size_t shift = i - db;
    quot[shift] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[shift + j] = f.sub(rem[shift + j], f.mul(c, bc[j]));
    }
  }
  rem.resize(db);
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a;
  Polynomial r1 = b;
  while (!r1.is_zero()) {
    Polynomial r2 = r0 % r1;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return r0.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
  return (a / gcd(a, b) * b).monic();
}

Polynomial powmod(const Polynomial& a, const BigInt& e, const Polynomial& m) {
  if (e < 0) throw DomainError("invalid_argument", "negative exponent");
  Polynomial result = Polynomial::constant(a.field(), 1) % m;
  Polynomial base = a % m;
  const std::size_t bits = e == 0 ? 0 : boost::multiprecision::msb(e) + 1;
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result % m;
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) {
      result = result * base % m;
    }
  }
  return result;
}

Polynomial pow(const Polynomial& a, std::uint64_t e) {
  Polynomial result = Polynomial::constant(a.field(), 1);
  Polynomial base = a;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Polynomial derivative(const Polynomial& a) {
  const FieldSpec& f = a.field();
  const auto c = a.coefficients();
  if (c.size() <= 1) return Polynomial(f);
  std::vector<Elem> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) {
    out[i - 1] =
        f.mul(c[i], f.from_integer(static_cast<std::int64_t>(i % f.characteristic())));
  }
  return Polynomial(f, std::move(out));
}

Elem eval(const Polynomial& a, Elem at) {
  const FieldSpec& f = a.field();
  Elem acc = 0;
  const auto c = a.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = f.add(f.mul(acc, at), c[i]);
  return acc;
}

Polynomial compose(const Polynomial& a, const Polynomial& inner) {
  require_same_field(a.field(), inner.field());
  Polynomial acc(a.field());
  const auto c = a.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * inner + Polynomial::constant(a.field(), c[i]);
  }
  return acc;
}

bool PolyOrder::operator()(const Polynomial& a,
                           const Polynomial& b) const noexcept {
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  if (ca.size() != cb.size()) return ca.size() < cb.size();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(),
                                      cb.end());
}

std::uint64_t monic_index(const Polynomial& g) {
  if (!g.is_monic()) {
    throw DomainError("not_monic", "expected a monic polynomial");
  }
  const std::uint64_t q = g.field().order();
  const auto c = g.coefficients();
  std::uint64_t index = 0;
  for (std::size_t i = c.size() - 1; i-- > 0;) index = index * q + c[i];
  return index;
}

Polynomial monic_from_index(const FieldSpec& spec, std::size_t n,
                            std::uint64_t index) {
  const std::uint64_t q = spec.order();
  std::vector<Elem> c(n + 1, 0);
  c[n] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = static_cast<Elem>(index % q);
    index /= q;
  }
  return Polynomial(spec, std::move(c));
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, const FieldSpec& spec)
      : text_(text), spec_(spec) {}

  Polynomial parse() {
    std::vector<Elem> acc;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    while (true) {
      auto [coeff, exponent] = term();
      if (acc.size() <= exponent) acc.resize(exponent + 1, 0);
      acc[exponent] = spec_.add(acc[exponent], coeff);
      skip_ws();
      if (at_end()) break;
      if (text_[pos_] != '+') {
        throw ParseError(std::string("unexpected '") + text_[pos_] + "'",
                         pos_);
      }
      ++pos_;
      skip_ws();
    }
    return Polynomial(spec_, std::move(acc));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
  }

  std::uint64_t number() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (!at_end() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (UINT64_MAX - digit) / 10) {
        throw ParseError("number too large", start);
      }
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a number", start);
    return value;
  }

  std::size_t power() {
    skip_ws();
    if (!at_end() && text_[pos_] == '^') {
      ++pos_;
      const std::size_t start = pos_;
      const std::uint64_t e = number();
      if (e > 4096) throw ParseError("exponent too large", start);
      return static_cast<std::size_t>(e);
    }
    return 1;
  }

  bool variable() {
    skip_ws();
    if (!at_end() && text_[pos_] == 'x') {
      ++pos_;
      return true;
    }
    return false;
  }

  std::pair<Elem, std::size_t> term() {
    skip_ws();
    if (variable()) return {1, power()};
    const std::size_t start = pos_;
    const std::uint64_t c = number();
    if (!spec_.contains(c)) {
      throw DomainError("coefficient_out_of_range",
                        "coefficient " + std::to_string(c) + " at position " +
                            std::to_string(start) + " outside [0, " +
                            std::to_string(spec_.order()) + ")");
    }
    skip_ws();
    if (!at_end() && text_[pos_] == '*') {
      ++pos_;
      if (!variable()) throw ParseError("expected 'x'", pos_);
      return {static_cast<Elem>(c), power()};
    }
    return {static_cast<Elem>(c), 0};
  }

  const std::string& text_;
  const FieldSpec& spec_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& text, const FieldSpec& spec) {
  return PolyParser(text, spec).parse();
}

std::string format_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += format_element(c[i]);
      continue;
    }
    if (c[i] != 1) out += format_element(c[i]) + "*";
    out += 'x';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace mcensus
