// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mcensus/detail/linalg.hpp"

#include <algorithm>

namespace mcensus::detail {

std::vector<std::size_t> rref(const FieldSpec& f, std::vector<Elem>& a,
                              std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    const Elem scale = f.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) {
      a[r * cols + j] = f.mul(a[r * cols + j], scale);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Elem factor = a[i * cols + c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] =
            f.sub(a[i * cols + j], f.mul(factor, a[r * cols + j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Elem>> rref_kernel(
    const FieldSpec& f, std::span<const Elem> a, std::size_t cols,
    std::span<const std::size_t> pivots) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = f.neg(a[r * cols + free]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

IncrementalBasis::Reduction IncrementalBasis::reduce(
    std::span<const Elem> v) const {
  Reduction out{std::vector<Elem>(v.begin(), v.end()),
                std::vector<Elem>(originals_, 0)};
  for (const Row& row : rows_) {
    const Elem c = out.residual[row.pivot];
    if (c == 0) continue;
    for (std::size_t j = row.pivot; j < dim_; ++j) {
      out.residual[j] = f_.sub(out.residual[j], f_.mul(c, row.v[j]));
    }
    for (std::size_t j = 0; j < row.combo.size(); ++j) {
      out.combination[j] = f_.add(out.combination[j], f_.mul(c, row.combo[j]));
    }
  }
  return out;
}

bool IncrementalBasis::contains(std::span<const Elem> v) const {
  const auto r = reduce(v);
  return std::all_of(r.residual.begin(), r.residual.end(),
                     [](Elem e) { return e == 0; });
}

std::optional<std::vector<Elem>> IncrementalBasis::coordinates(
    std::span<const Elem> v) const {
  auto r = reduce(v);
  for (auto e : r.residual) {
    if (e != 0) return std::nullopt;
  }
  return std::move(r.combination);
}

std::optional<std::vector<Elem>> IncrementalBasis::insert(
    std::span<const Elem> v) {
  auto r = reduce(v);
  std::size_t pivot = 0;
  while (pivot < dim_ && r.residual[pivot] == 0) ++pivot;
  if (pivot == dim_) return std::move(r.combination);

  Row row;
  row.pivot = pivot;
  row.combo.resize(originals_ + 1);
  for (std::size_t j = 0; j < originals_; ++j) {
    row.combo[j] = f_.neg(r.combination[j]);
  }
  row.combo[originals_] = 1;
  const Elem scale = f_.inv(r.residual[pivot]);
  for (auto& e : r.residual) e = f_.mul(e, scale);
  for (auto& e : row.combo) e = f_.mul(e, scale);
  row.v = std::move(r.residual);
  rows_.push_back(std::move(row));
  ++originals_;
  return std::nullopt;
}

void berkowitz(const FieldSpec& f, std::span<const Elem> a, std::size_t n,
               std::span<Elem> out, BerkowitzScratch& s) {
  // s.poly holds the characteristic polynomial of the trailing principal
  // block, highest power first.
  s.poly.assign({1, f.neg(a[n * n - 1])});
  for (std::size_t k = n - 1; k-- > 0;) {
    const std::size_t m = n - 1 - k;
    s.toeplitz.assign(m + 2, 0);
    s.toeplitz[0] = 1;
    s.toeplitz[1] = f.neg(a[k * n + k]);
    s.krylov.resize(m);
    for (std::size_t i = 0; i < m; ++i) s.krylov[i] = a[(k + 1 + i) * n + k];
    for (std::size_t j = 0; j < m; ++j) {
      // R * A1^j * C
      Elem dot = 0;
      for (std::size_t i = 0; i < m; ++i) {
        dot = f.add(dot, f.mul(a[k * n + k + 1 + i], s.krylov[i]));
      }
      s.toeplitz[j + 2] = f.neg(dot);
      if (j + 1 < m) {
        s.next.assign(m, 0);
        for (std::size_t r = 0; r < m; ++r) {
          Elem acc = 0;
          const std::size_t row = (k + 1 + r) * n + k + 1;
          for (std::size_t c = 0; c < m; ++c) {
            acc = f.add(acc, f.mul(a[row + c], s.krylov[c]));
          }
          s.next[r] = acc;
        }
        std::swap(s.krylov, s.next);
      }
    }
    s.poly_next.assign(m + 2, 0);
    for (std::size_t i = 0; i < m + 2; ++i) {
      Elem acc = 0;
      for (std::size_t j = 0; j <= std::min(i, m); ++j) {
        acc = f.add(acc, f.mul(s.toeplitz[i - j], s.poly[j]));
      }
      s.poly_next[i] = acc;
    }
    std::swap(s.poly, s.poly_next);
  }
  for (std::size_t i = 0; i <= n; ++i) out[i] = s.poly[n - i];
}

}  // namespace mcensus::detail
