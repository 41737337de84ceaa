// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "mcensus/bigint.hpp"
#include "mcensus/matrix.hpp"

namespace mcensus {

/// Default cap on brute-force scans (span combinations, subspaces).
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1}
                                                           << 20;

/// C(M) = {X : MX = XM}.
struct CentralizerDescription {
  /// Reduced echelon basis in the n^2 row-major coordinates.
  std::vector<SquareMatrix> basis;
  std::size_t dimension = 0;
  BigInt order;  ///< q^dimension
};

CentralizerDescription centralizer(const SquareMatrix& m);

/// |C(M) ∩ GL_n|. Irreducible charpoly: q^n - 1 without enumeration.
/// Otherwise counts invertible elements among all q^dim combinations and
/// throws BudgetExceeded when q^dim > budget.
BigInt centralizer_unit_count(const SquareMatrix& m,
                              std::uint64_t budget = kDefaultEnumerationBudget);

/// Counts the invertible elements of C(M) by enumeration only.
BigInt centralizer_unit_count_enumerated(
    const CentralizerDescription& c,
    std::uint64_t budget = kDefaultEnumerationBudget);

/// True iff C(M) equals F[M] = span{I, M, M^2, ...}.
bool is_polynomial_centralizer(const SquareMatrix& m);

struct Subspace {
  /// Reduced row echelon basis, one row per basis vector.
  std::vector<Vec> basis;
  friend bool operator==(const Subspace&, const Subspace&) = default;
};

/// Every subspace V with 0 < dim V < n, dim V <= dimension_cap and
/// M V ⊆ V. Throws BudgetExceeded when the number of candidate subspaces
/// exceeds the budget.
std::vector<Subspace> invariant_subspaces(
    const SquareMatrix& m, std::size_t dimension_cap,
    std::uint64_t budget = kDefaultEnumerationBudget);

/// Number of subspaces of GF(q)^n of dimension k.
BigInt gaussian_binomial(const BigInt& q, std::size_t n, std::size_t k);

}  // namespace mcensus
