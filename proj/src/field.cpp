// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mcensus/field.hpp"

#include <charconv>
#include <limits>

#include "mcensus/errors.hpp"

namespace mcensus {

namespace {

using Digits = std::vector<std::uint32_t>;

// Remainder of a modulo a monic b, both over GF(p), low-to-high digits.
Digits digit_mod(Digits a, const Digits& b, std::uint64_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        a[shift + i] = static_cast<std::uint32_t>(
            (a[shift + i] + (p - lead) * b[i] % p) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

Digits digit_mulmod(const Digits& a, const Digits& b, const Digits& m,
                    std::uint64_t p) {
  Digits prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return digit_mod(std::move(prod), m, p);
}

bool has_monic_factor_of_degree(const Digits& f, unsigned d,
                                std::uint64_t p) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < d; ++i) count *= p;
  Digits g(d + 1, 0);
  g[d] = 1;
  for (std::uint64_t n = 0; n < count; ++n) {
    std::uint64_t rest = n;
    for (unsigned i = 0; i < d; ++i) {
      g[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    const Digits r = digit_mod(f, g, p);
    bool zero = true;
    for (auto c : r) zero = zero && c == 0;
    if (zero) return true;
  }
  return false;
}

bool digits_irreducible(const Digits& f, std::uint64_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= k; ++d) {
    if (has_monic_factor_of_degree(f, d, p)) return false;
  }
  return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

struct FieldSpec::Impl {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t q = 0;
  Digits modulus;
  // exp_table has 2(q-1) entries so exp_table[log a + log b] needs no mod.
  std::vector<Elem> exp_table;
  std::vector<std::uint32_t> log_table;
  // Dense addition table for small extension fields of odd characteristic.
  std::vector<Elem> add_table;

  Digits to_digits(Elem a) const {
    Digits d(k);
    for (unsigned i = 0; i < k; ++i) {
      d[i] = static_cast<std::uint32_t>(a % p);
      a = static_cast<Elem>(a / p);
    }
    return d;
  }
  Elem from_digits(const Digits& d) const {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return static_cast<Elem>(v);
  }

  Elem slow_mul(Elem a, Elem b) const {
    if (k == 1) return static_cast<Elem>(std::uint64_t{a} * b % p);
    return from_digits(
        digit_mulmod(to_digits(a), to_digits(b), modulus, p));
  }

  Elem slow_pow(Elem a, std::uint64_t e) const {
    Elem result = 1;
    Elem base = a;
    while (e != 0) {
      if (e & 1U) result = slow_mul(result, base);
      e >>= 1U;
      if (e != 0) base = slow_mul(base, base);
    }
    return result;
  }

  Elem digit_add(Elem a, Elem b) const {
    std::uint64_t result = 0;
    std::uint64_t weight = 1;
    for (unsigned i = 0; i < k; ++i) {
      const std::uint64_t s = (a % p + b % p) % p;
      a = static_cast<Elem>(a / p);
      b = static_cast<Elem>(b / p);
      result += s * weight;
      weight *= p;
    }
    return static_cast<Elem>(result);
  }

  void build_tables() {
    const std::uint64_t m = q - 1;
    Elem generator = 1;
    if (q > 2) {
      const auto primes = distinct_prime_factors(m);
      for (Elem g = 2; g < q; ++g) {
        bool primitive = true;
        for (auto r : primes) {
          if (slow_pow(g, m / r) == 1) {
            primitive = false;
            break;
          }
        }
        if (primitive) {
          generator = g;
          break;
        }
      }
    }
    exp_table.assign(2 * m, 0);
    log_table.assign(q, 0);
    Elem x = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
      exp_table[i] = x;
      exp_table[i + m] = x;
      log_table[x] = static_cast<std::uint32_t>(i);
      x = slow_mul(x, generator);
    }
    if (k > 1 && p != 2 && q <= 256) {
      add_table.resize(q * q);
      for (Elem a = 0; a < q; ++a) {
        for (Elem b = 0; b < q; ++b) add_table[a * q + b] = digit_add(a, b);
      }
    }
  }
};

FieldSpec FieldSpec::make(std::uint64_t p, unsigned k, std::uint64_t budget) {
  if (!is_prime(p)) {
    throw DomainError("not_prime",
                      "field characteristic " + std::to_string(p) +
                          " is not prime");
  }
  if (k < 1) {
    throw DomainError("invalid_argument", "extension degree must be >= 1");
  }
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > budget / p) {
      throw BudgetExceeded("field order " + std::to_string(p) + "^" +
                           std::to_string(k) + " exceeds budget " +
                           std::to_string(budget));
    }
    q *= p;
  }
  if (q > budget) {
    throw BudgetExceeded("field order exceeds budget " +
                         std::to_string(budget));
  }
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = k;
  impl->q = q;
  if (k >= 2) {
    Digits candidate(k + 1, 0);
    candidate[k] = 1;
    for (std::uint64_t n = 0; n < q; ++n) {
      std::uint64_t rest = n;
      for (unsigned i = 0; i < k; ++i) {
        candidate[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (candidate[0] != 0 && digits_irreducible(candidate, p)) {
        impl->modulus = candidate;
        break;
      }
    }
    if (impl->modulus.empty()) {
      throw InternalError("no irreducible modulus found");
    }
  }
  impl->build_tables();
  return FieldSpec(std::move(impl));
}

FieldSpec FieldSpec::from_order(std::uint64_t q, std::uint64_t budget) {
  if (q < 2) {
    throw DomainError("not_prime_power",
                      std::to_string(q) + " is not a prime power");
  }
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned k = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) {
    throw DomainError("not_prime_power",
                      std::to_string(q) + " is not a prime power");
  }
  return make(p, k, budget);
}

std::uint64_t FieldSpec::characteristic() const noexcept { return impl_->p; }
unsigned FieldSpec::extension_degree() const noexcept { return impl_->k; }
std::uint64_t FieldSpec::order() const noexcept { return impl_->q; }

std::span<const std::uint32_t> FieldSpec::modulus() const noexcept {
  return impl_->modulus;
}

Elem FieldSpec::add(Elem a, Elem b) const noexcept {
  const Impl& f = *impl_;
  if (f.k == 1) {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= f.p ? s - f.p : s);
  }
  if (f.p == 2) return a ^ b;
  if (!f.add_table.empty()) return f.add_table[a * f.q + b];
  return f.digit_add(a, b);
}

Elem FieldSpec::neg(Elem a) const noexcept {
  const Impl& f = *impl_;
  if (f.p == 2) return a;
  if (f.k == 1) return a == 0 ? 0 : static_cast<Elem>(f.p - a);
  std::uint64_t result = 0;
  std::uint64_t weight = 1;
  for (unsigned i = 0; i < f.k; ++i) {
    const std::uint64_t d = a % f.p;
    a = static_cast<Elem>(a / f.p);
    result += ((f.p - d) % f.p) * weight;
    weight *= f.p;
  }
  return static_cast<Elem>(result);
}

Elem FieldSpec::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem FieldSpec::mul(Elem a, Elem b) const noexcept {
  const Impl& f = *impl_;
  if (f.k == 1) return static_cast<Elem>(std::uint64_t{a} * b % f.p);
  if (a == 0 || b == 0) return 0;
  return f.exp_table[f.log_table[a] + f.log_table[b]];
}

Elem FieldSpec::inv(Elem a) const {
  if (a == 0) throw DomainError("division_by_zero", "inverse of zero");
  const Impl& f = *impl_;
  const std::uint64_t m = f.q - 1;
  return f.exp_table[(m - f.log_table[a]) % m];
}

Elem FieldSpec::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const Impl& f = *impl_;
  const std::uint64_t m = f.q - 1;
  const unsigned __int128 l =
      static_cast<unsigned __int128>(f.log_table[a]) * (e % m);
  return f.exp_table[static_cast<std::uint64_t>(l % m)];
}

Elem FieldSpec::pow(Elem a, const BigInt& e) const {
  if (e < 0) throw DomainError("invalid_argument", "negative exponent");
  if (e == 0) return 1;
  if (a == 0) return 0;
  const BigInt reduced = e % BigInt(order() - 1);
  return pow(a, reduced.convert_to<std::uint64_t>());
}

Elem FieldSpec::frobenius(Elem a) const noexcept {
  return pow(a, impl_->p);
}

Elem FieldSpec::frobenius_inverse(Elem a) const noexcept {
  // a^(q/p) inverts a -> a^p on GF(q).
  return pow(a, impl_->q / impl_->p);
}

Elem FieldSpec::from_integer(std::int64_t value) const noexcept {
  const auto p = static_cast<std::int64_t>(impl_->p);
  return static_cast<Elem>(((value % p) + p) % p);
}

std::vector<std::uint32_t> FieldSpec::digits(Elem a) const {
  return impl_->to_digits(a);
}

Elem FieldSpec::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != impl_->k) {
    throw DomainError("invalid_argument", "expected " +
                                              std::to_string(impl_->k) +
                                              " coefficients");
  }
  for (auto d : digits) {
    if (d >= impl_->p) {
      throw DomainError("coefficient_out_of_range",
                        "coefficient " + std::to_string(d) +
                            " not reduced mod " + std::to_string(impl_->p));
    }
  }
  return impl_->from_digits(Digits(digits.begin(), digits.end()));
}

FieldElement FieldSpec::element(std::uint64_t i) const {
  if (i >= order()) {
    throw DomainError("index_out_of_range",
                      "element index " + std::to_string(i) +
                          " outside [0, " + std::to_string(order()) + ")");
  }
  return FieldElement(*this, static_cast<Elem>(i));
}

bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
  return a.impl_ == b.impl_ ||
         (a.impl_->p == b.impl_->p && a.impl_->k == b.impl_->k);
}

std::string FieldSpec::name() const {
  if (impl_->k == 1) return "GF(" + std::to_string(impl_->p) + ")";
  return "GF(" + std::to_string(impl_->p) + "^" + std::to_string(impl_->k) +
         ")";
}

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) {
    throw DomainError("field_mismatch",
                      "operands belong to " + a.name() + " and " + b.name());
  }
}

FieldElement::FieldElement(FieldSpec spec, Elem value)
    : spec_(std::move(spec)), value_(value) {
  if (!spec_.contains(value_)) {
    throw DomainError("index_out_of_range", "element index out of range");
  }
}

FieldElement FieldElement::inv() const {
  return {spec_, spec_.inv(value_)};
}

FieldElement FieldElement::pow(const BigInt& e) const {
  return {spec_, spec_.pow(value_, e)};
}

FieldElement FieldElement::frobenius() const {
  return {spec_, spec_.frobenius(value_)};
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.spec_, b.spec_);
  return {a.spec_, a.spec_.add(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.spec_, b.spec_);
  return {a.spec_, a.spec_.sub(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.spec_, b.spec_);
  return {a.spec_, a.spec_.mul(a.value_, b.value_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.spec_, b.spec_);
  return {a.spec_, a.spec_.div(a.value_, b.value_)};
}

FieldElement FieldElement::operator-() const {
  return {spec_, spec_.neg(value_)};
}

Elem parse_element(const FieldSpec& spec, const std::string& text) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw ParseError("invalid field element '" + text + "'",
                     static_cast<std::size_t>(ptr - first));
  }
  if (!spec.contains(value)) {
    throw DomainError("coefficient_out_of_range",
                      "element " + text + " outside [0, " +
                          std::to_string(spec.order()) + ")");
  }
  return static_cast<Elem>(value);
}

std::string format_element(Elem a) { return std::to_string(a); }

}  // namespace mcensus
