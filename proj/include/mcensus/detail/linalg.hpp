// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

// Elimination helpers shared by the matrix, canonical and centralizer code.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mcensus/field.hpp"

namespace mcensus::detail {

/// Reduces the rows x cols row-major array `a` to reduced row echelon form in
/// place. Column by column, the pivot is the first row at or below the
/// current one holding a nonzero entry. Returns the pivot columns.
std::vector<std::size_t> rref(const FieldSpec& f, std::vector<Elem>& a,
                              std::size_t rows, std::size_t cols);

/// Null space basis of a matrix already in reduced row echelon form: one
/// vector per free column, in ascending column order.
std::vector<std::vector<Elem>> rref_kernel(const FieldSpec& f,
                                           std::span<const Elem> a,
                                           std::size_t cols,
                                           std::span<const std::size_t> pivots);

struct BerkowitzScratch {
  std::vector<Elem> toeplitz, krylov, next, poly, poly_next;
};

/// Characteristic polynomial det(xI - A) of the n x n row-major array `a`,
/// written low-to-high into `out` (n + 1 entries, out[n] == 1).
void berkowitz(const FieldSpec& f, std::span<const Elem> a, std::size_t n,
               std::span<Elem> out, BerkowitzScratch& scratch);

/// Span of vectors inserted one at a time, remembering for every stored row
/// how it combines the inserted originals.
class IncrementalBasis {
 public:
  IncrementalBasis(FieldSpec f, std::size_t dim) : f_(std::move(f)), dim_(dim) {}

  struct Reduction {
    std::vector<Elem> residual;
    /// v - residual = sum combination[i] * original[i]
    std::vector<Elem> combination;
  };

  Reduction reduce(std::span<const Elem> v) const;
  bool contains(std::span<const Elem> v) const;
  /// Coordinates of v in the inserted originals, or nullopt outside the span.
  std::optional<std::vector<Elem>> coordinates(std::span<const Elem> v) const;

  /// Inserts v. Returns the dependency coefficients when v already lies in
  /// the span (v = sum c_i original_i); v is not stored in that case.
  std::optional<std::vector<Elem>> insert(std::span<const Elem> v);

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t originals() const noexcept { return originals_; }

 private:
  struct Row {
    std::vector<Elem> v;
    std::vector<Elem> combo;
    std::size_t pivot;
  };

  FieldSpec f_;
  std::size_t dim_;
  std::size_t originals_ = 0;
  std::vector<Row> rows_;
};

}  // namespace mcensus::detail
