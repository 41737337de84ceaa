// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mcensus/matrix.hpp"

#include <algorithm>
#include <cctype>

#include "mcensus/canonical.hpp"
#include "mcensus/detail/linalg.hpp"
#include "mcensus/errors.hpp"

namespace mcensus {

namespace {

void require_compatible(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_field(a.field(), b.field());
  if (a.size() != b.size()) {
    throw DomainError("dimension_mismatch",
                      "matrices of size " + std::to_string(a.size()) +
                          " and " + std::to_string(b.size()));
  }
}

}  // namespace

SquareMatrix::SquareMatrix(FieldSpec spec, std::size_t n)
    : spec_(std::move(spec)), n_(n), a_(n * n, 0) {
  if (n == 0) throw DomainError("invalid_argument", "matrix size must be >= 1");
}

SquareMatrix::SquareMatrix(FieldSpec spec, std::size_t n,
                           std::vector<Elem> entries)
    : spec_(std::move(spec)), n_(n), a_(std::move(entries)) {
  if (n == 0) throw DomainError("invalid_argument", "matrix size must be >= 1");
  if (a_.size() != n * n) {
    throw DomainError("dimension_mismatch", "expected n*n entries");
  }
  for (auto e : a_) {
    if (!spec_.contains(e)) {
      throw DomainError("coefficient_out_of_range",
                        "entry " + std::to_string(e) + " not in " +
                            spec_.name());
    }
  }
}

SquareMatrix SquareMatrix::identity(const FieldSpec& spec, std::size_t n) {
  return scalar(spec, n, 1);
}

SquareMatrix SquareMatrix::scalar(const FieldSpec& spec, std::size_t n,
                                  Elem c) {
  SquareMatrix m(spec, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, c);
  return m;
}

SquareMatrix SquareMatrix::diagonal(const FieldSpec& spec,
                                    std::span<const Elem> d) {
  SquareMatrix m(spec, d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
  return m;
}

SquareMatrix SquareMatrix::from_rows(
    const FieldSpec& spec, const std::vector<std::vector<Elem>>& rows) {
  std::vector<Elem> entries;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw DomainError("dimension_mismatch", "matrix rows must be square");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return {spec, rows.size(), std::move(entries)};
}

SquareMatrix SquareMatrix::from_index(const FieldSpec& spec, std::size_t n,
                                      const BigInt& index) {
  const BigInt q = spec.order();
  if (index < 0 || index >= big_pow(q, n * n)) {
    throw DomainError("index_out_of_range", "matrix index out of range");
  }
  std::vector<Elem> entries(n * n);
  BigInt rest = index;
  for (auto& e : entries) {
    e = static_cast<Elem>(static_cast<std::uint64_t>(rest % q));
    rest /= q;
  }
  return {spec, n, std::move(entries)};
}

void SquareMatrix::set(std::size_t i, std::size_t j, Elem v) {
  if (!spec_.contains(v)) {
    throw DomainError("coefficient_out_of_range", "entry not in field");
  }
  a_.at(i * n_ + j) = v;
}

bool SquareMatrix::is_zero() const noexcept {
  return std::all_of(a_.begin(), a_.end(), [](Elem e) { return e == 0; });
}

Vec SquareMatrix::column(std::size_t j) const {
  Vec v(n_);
  for (std::size_t i = 0; i < n_; ++i) v[i] = a_[i * n_ + j];
  return v;
}

SquareMatrix SquareMatrix::transpose() const {
  SquareMatrix t(spec_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) t.a_[j * n_ + i] = a_[i * n_ + j];
  }
  return t;
}

SquareMatrix SquareMatrix::scaled(Elem c) const {
  SquareMatrix out = *this;
  for (auto& e : out.a_) e = spec_.mul(e, c);
  return out;
}

SquareMatrix SquareMatrix::pow(std::uint64_t e) const {
  SquareMatrix result = identity(spec_, n_);
  SquareMatrix base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Vec SquareMatrix::apply(std::span<const Elem> v) const {
  if (v.size() != n_) {
    throw DomainError("dimension_mismatch", "vector length differs from n");
  }
  Vec out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    Elem acc = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      acc = spec_.add(acc, spec_.mul(a_[i * n_ + j], v[j]));
    }
    out[i] = acc;
  }
  return out;
}

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
  require_compatible(a, b);
  SquareMatrix out = a;
  for (std::size_t i = 0; i < out.a_.size(); ++i) {
    out.a_[i] = a.spec_.add(a.a_[i], b.a_[i]);
  }
  return out;
}

SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
  require_compatible(a, b);
  SquareMatrix out = a;
  for (std::size_t i = 0; i < out.a_.size(); ++i) {
    out.a_[i] = a.spec_.sub(a.a_[i], b.a_[i]);
  }
  return out;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  require_compatible(a, b);
  const FieldSpec& f = a.spec_;
  const std::size_t n = a.n_;
  SquareMatrix out(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Elem aik = a.a_[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        out.a_[i * n + j] =
            f.add(out.a_[i * n + j], f.mul(aik, b.a_[k * n + j]));
      }
    }
  }
  return out;
}

BigInt matrix_index(const SquareMatrix& m) {
  const BigInt q = m.field().order();
  BigInt index = 0;
  const auto e = m.entries();
  for (std::size_t i = e.size(); i-- > 0;) index = index * q + e[i];
  return index;
}

Polynomial charpoly(const SquareMatrix& m) {
  detail::BerkowitzScratch scratch;
  std::vector<Elem> coeffs(m.size() + 1);
  detail::berkowitz(m.field(), m.entries(), m.size(), coeffs, scratch);
  return Polynomial(m.field(), std::move(coeffs));
}

Polynomial minpoly(const SquareMatrix& m) {
  Polynomial acc = Polynomial::constant(m.field(), 1);
  for (std::size_t j = 0; j < m.size(); ++j) {
    Vec e(m.size(), 0);
    e[j] = 1;
    acc = lcm(acc, vector_order(m, e));
  }
  return acc;
}

Elem determinant(const SquareMatrix& m) {
  const FieldSpec& f = m.field();
  const Elem c0 = charpoly(m).coeff(0);
  return m.size() % 2 == 0 ? c0 : f.neg(c0);
}

RankKernel rank_kernel(const SquareMatrix& m) {
  std::vector<Elem> a(m.entries().begin(), m.entries().end());
  const auto pivots = detail::rref(m.field(), a, m.size(), m.size());
  return {pivots.size(),
          detail::rref_kernel(m.field(), a, m.size(), pivots)};
}

std::optional<SquareMatrix> try_invert(const SquareMatrix& m) {
  const FieldSpec& f = m.field();
  const std::size_t n = m.size();
  std::vector<Elem> aug(n * 2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i * 2 * n + j] = m(i, j);
    aug[i * 2 * n + n + i] = 1;
  }
  const auto pivots = detail::rref(f, aug, n, 2 * n);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  std::vector<Elem> inv(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i * n + j] = aug[i * 2 * n + n + j];
  }
  return SquareMatrix(f, n, std::move(inv));
}

SquareMatrix invert(const SquareMatrix& m) {
  auto inv = try_invert(m);
  if (!inv) throw DomainError("singular_matrix", "matrix is not invertible");
  return std::move(*inv);
}

SquareMatrix evaluate(const Polynomial& p, const SquareMatrix& m) {
  require_same_field(p.field(), m.field());
  SquareMatrix acc(m.field(), m.size());
  const auto c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * m + SquareMatrix::scalar(m.field(), m.size(), c[i]);
  }
  return acc;
}

Vec evaluate_on(const Polynomial& p, const SquareMatrix& m,
                std::span<const Elem> v) {
  require_same_field(p.field(), m.field());
  const FieldSpec& f = m.field();
  Vec acc(m.size(), 0);
  const auto c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = m.apply(acc);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      acc[j] = f.add(acc[j], f.mul(c[i], v[j]));
    }
  }
  return acc;
}

SquareMatrix parse_matrix(const std::string& text, const FieldSpec& spec) {
  std::vector<std::vector<Elem>> rows(1);
  std::string token;
  std::size_t token_start = 0;
  auto flush = [&](std::size_t pos) {
    std::size_t b = 0;
    while (b < token.size() &&
           std::isspace(static_cast<unsigned char>(token[b])) != 0) {
      ++b;
    }
    std::size_t e = token.size();
    while (e > b && std::isspace(static_cast<unsigned char>(token[e - 1])) != 0) {
      --e;
    }
    const std::string trimmed = token.substr(b, e - b);
    if (trimmed.empty()) throw ParseError("empty matrix entry", pos);
    try {
      rows.back().push_back(parse_element(spec, trimmed));
    } catch (const ParseError&) {
      throw ParseError("invalid matrix entry '" + trimmed + "'",
                       token_start + b);
    }
    token.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == ',' || c == ';') {
      flush(i);
      if (c == ';') rows.emplace_back();
      token_start = i + 1;
    } else {
      token += c;
    }
  }
  flush(text.size());
  const std::size_t n = rows.size();
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      throw ParseError("row " + std::to_string(r) + " has " +
                           std::to_string(rows[r].size()) +
                           " entries, expected " + std::to_string(n),
                       0);
    }
  }
  return SquareMatrix::from_rows(spec, rows);
}

std::string format_matrix(const SquareMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i != 0) out += ';';
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != 0) out += ',';
      out += format_element(m(i, j));
    }
  }
  return out;
}

}  // namespace mcensus
