// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcensus/bigint.hpp"
#include "mcensus/field.hpp"
#include "mcensus/poly.hpp"

namespace mcensus {

/// Column vector of raw element indices; its field is implied by context.
using Vec = std::vector<Elem>;

/// Dense n x n matrix over a finite field, row-major.
class SquareMatrix {
 public:
  /// Zero matrix. Throws DomainError for n == 0.
  SquareMatrix(FieldSpec spec, std::size_t n);
  SquareMatrix(FieldSpec spec, std::size_t n, std::vector<Elem> entries);

  static SquareMatrix zero(const FieldSpec& spec, std::size_t n) {
    return {spec, n};
  }
  static SquareMatrix identity(const FieldSpec& spec, std::size_t n);
  static SquareMatrix scalar(const FieldSpec& spec, std::size_t n, Elem c);
  static SquareMatrix diagonal(const FieldSpec& spec, std::span<const Elem> d);
  static SquareMatrix from_rows(const FieldSpec& spec,
                                const std::vector<std::vector<Elem>>& rows);
  /// Inverse of matrix_index.
  static SquareMatrix from_index(const FieldSpec& spec, std::size_t n,
                                 const BigInt& index);

  const FieldSpec& field() const noexcept { return spec_; }
  std::size_t size() const noexcept { return n_; }
  std::span<const Elem> entries() const noexcept { return a_; }

  Elem operator()(std::size_t i, std::size_t j) const noexcept {
    return a_[i * n_ + j];
  }
  void set(std::size_t i, std::size_t j, Elem v);

  bool is_zero() const noexcept;
  Vec column(std::size_t j) const;

  SquareMatrix transpose() const;
  SquareMatrix scaled(Elem c) const;
  SquareMatrix pow(std::uint64_t e) const;
  /// M v
  Vec apply(std::span<const Elem> v) const;

  friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b);
  friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b);
  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.spec_ == b.spec_ && a.n_ == b.n_ && a.a_ == b.a_;
  }

 private:
  FieldSpec spec_;
  std::size_t n_;
  std::vector<Elem> a_;
};

/// Row-major base-q index: sum over (i, j) of M[i][j] * q^(i n + j).
BigInt matrix_index(const SquareMatrix& m);

/// det(xI - M) by Berkowitz's division-free recurrence. Monic, degree n.
Polynomial charpoly(const SquareMatrix& m);

/// Monic least-degree p with p(M) = 0, as the lcm of the orders of the
/// standard basis vectors.
Polynomial minpoly(const SquareMatrix& m);

Elem determinant(const SquareMatrix& m);

struct RankKernel {
  std::size_t rank = 0;
  std::vector<Vec> kernel;  ///< one vector per free column, ascending
};

/// Gauss-Jordan elimination; pivots are the first nonzero entry in each
/// column scanning rows top-down.
RankKernel rank_kernel(const SquareMatrix& m);

/// Throws DomainError("singular_matrix") when M is not in GL_n.
SquareMatrix invert(const SquareMatrix& m);
std::optional<SquareMatrix> try_invert(const SquareMatrix& m);

/// p(M).
SquareMatrix evaluate(const Polynomial& p, const SquareMatrix& m);
/// p(M) v, by Horner on vectors.
Vec evaluate_on(const Polynomial& p, const SquareMatrix& m,
                std::span<const Elem> v);

/// Rows separated by ';', entries by ',', each entry an element index.
SquareMatrix parse_matrix(const std::string& text, const FieldSpec& spec);
std::string format_matrix(const SquareMatrix& m);

}  // namespace mcensus
