// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mcensus/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "mcensus/errors.hpp"

namespace mcensus {

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// The unique h with h^p = a, for a polynomial whose derivative vanishes.
Polynomial pth_root(const Polynomial& a) {
  const FieldSpec& f = a.field();
  const std::size_t p = f.characteristic();
  const auto c = a.coefficients();
  std::vector<Elem> out((c.size() - 1) / p + 1, 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = f.frobenius_inverse(c[i * p]);
  }
  return Polynomial(f, std::move(out));
}

// Monic squarefree parts with their multiplicities.
void squarefree(const Polynomial& g, unsigned scale,
                std::vector<std::pair<Polynomial, unsigned>>& out) {
  if (g.is_constant()) return;
  const unsigned p = static_cast<unsigned>(g.field().characteristic());
  Polynomial c = gcd(g, derivative(g));
  Polynomial w = g / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Polynomial y = gcd(w, c);
    Polynomial part = w / y;
    if (!part.is_one()) out.emplace_back(part.monic(), i * scale);
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (!c.is_one()) squarefree(pth_root(c.monic()).monic(), scale * p, out);
}

// Products of all irreducible factors of equal degree, for squarefree monic g.
std::vector<std::pair<Polynomial, unsigned>> distinct_degree(Polynomial g) {
  const FieldSpec& f = g.field();
  const BigInt q = f.order();
  const Polynomial x = Polynomial::x(f);
  std::vector<std::pair<Polynomial, unsigned>> out;
  Polynomial h = x % g;
  unsigned d = 1;
  while (2 * d <= *g.degree()) {
    h = powmod(h, q, g);
    Polynomial part = gcd(g, h - x);
    if (!part.is_one()) {
      g = g / part;
      h = h % g;
      out.emplace_back(std::move(part), d);
    }
    ++d;
  }
  if (*g.degree() > 0) out.emplace_back(g, static_cast<unsigned>(*g.degree()));
  return out;
}

Polynomial random_below(const FieldSpec& f, std::size_t degree,
                        std::mt19937_64& rng) {
  std::vector<Elem> c(degree);
  for (auto& e : c) e = static_cast<Elem>(rng() % f.order());
  return Polynomial(f, std::move(c));
}

// Splits a monic product of distinct irreducibles of degree d.
void equal_degree(const Polynomial& g, unsigned d, std::mt19937_64& rng,
                  std::vector<Polynomial>& out) {
  const std::size_t n = *g.degree();
  if (n == d) {
    out.push_back(g);
    return;
  }
  const FieldSpec& f = g.field();
  const Polynomial one = Polynomial::constant(f, 1);
  const bool even = f.characteristic() == 2;
  const BigInt half_exp = (big_pow(BigInt(f.order()), d) - 1) / 2;
  const unsigned trace_terms = f.extension_degree() * d;
  while (true) {
    Polynomial a = random_below(f, n, rng);
    if (a.is_constant()) continue;
    Polynomial b(f);
    if (even) {
      Polynomial term = a % g;
      b = term;
      for (unsigned i = 1; i < trace_terms; ++i) {
        term = term * term % g;
        b = b + term;
      }
    } else {
      b = powmod(a, half_exp, g) - one;
    }
    Polynomial split = gcd(g, b);
    if (split.is_constant() || *split.degree() == n) continue;
    equal_degree(split, d, rng, out);
    equal_degree(g / split, d, rng, out);
    return;
  }
}

}  // namespace

Polynomial Factorization::expand() const {
  Polynomial acc = Polynomial::constant(field, leading);
  for (const auto& factor : factors) {
    acc = acc * pow(factor.poly, factor.multiplicity);
  }
  return acc;
}

bool is_irreducible(const Polynomial& f) {
  if (f.is_zero()) {
    throw DomainError("zero_polynomial", "irreducibility of zero");
  }
  if (f.is_constant()) return false;
  const unsigned n = static_cast<unsigned>(*f.degree());
  if (n == 1) return true;
  const Polynomial g = f.monic();
  const FieldSpec& spec = g.field();
  const BigInt q = spec.order();
  const Polynomial x = Polynomial::x(spec);
  // frob[j] = x^(q^j) mod g
  std::vector<Polynomial> frob{x % g};
  for (unsigned j = 1; j <= n; ++j) frob.push_back(powmod(frob.back(), q, g));
  if (!(frob[n] == frob[0])) return false;
  for (unsigned l : prime_divisors(n)) {
    if (!gcd(g, frob[n / l] - x).is_one()) return false;
  }
  return true;
}

Factorization factorize(const Polynomial& g, std::uint64_t seed) {
  if (g.is_zero()) {
    throw DomainError("zero_polynomial", "cannot factor the zero polynomial");
  }
  const FieldSpec& spec = g.field();
  Factorization result{spec, g.leading(), {}};
  std::vector<std::pair<Polynomial, unsigned>> parts;
  squarefree(g.monic(), 1, parts);

  std::mt19937_64 rng(seed);
  std::map<Polynomial, unsigned, PolyOrder> multiplicity;
  for (const auto& [part, mult] : parts) {
    for (const auto& [block, degree] : distinct_degree(part)) {
      std::vector<Polynomial> irreducibles;
      equal_degree(block, degree, rng, irreducibles);
      for (auto& f : irreducibles) multiplicity[f] += mult;
    }
  }
  for (auto& [f, m] : multiplicity) result.factors.push_back({f, m});
  return result;
}

BigInt count_monic_irreducibles(const FieldSpec& spec, unsigned n) {
  if (n < 1) throw DomainError("invalid_argument", "degree must be >= 1");
  auto mobius = [](unsigned m) {
    int sign = 1;
    for (unsigned d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        m /= d;
        if (m % d == 0) return 0;
        sign = -sign;
      }
    }
    if (m > 1) sign = -sign;
    return sign;
  };
  const BigInt q = spec.order();
  BigInt sum = 0;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(d);
    if (mu != 0) sum += mu * big_pow(q, n / d);
  }
  return sum / n;
}

}  // namespace mcensus
