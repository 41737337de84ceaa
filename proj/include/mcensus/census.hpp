// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

// Counting n x n matrices over GF(q) by characteristic polynomial: closed
// formulas, the orbit-stabilizer bookkeeping for the irreducible case, and a
// brute-force enumeration to check both against.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mcensus/bigint.hpp"
#include "mcensus/centralizer.hpp"
#include "mcensus/matrix.hpp"
#include "mcensus/poly.hpp"

namespace mcensus {

/// Default cap on q^(n^2) for census_bruteforce.
inline constexpr std::uint64_t kDefaultCensusBudget = std::uint64_t{1} << 26;
/// Default cap on q^n for verify_partition.
inline constexpr std::uint64_t kDefaultPolynomialBudget = std::uint64_t{1}
                                                          << 20;

/// prod_{i=1}^{v} (1 - u^-i); 1 for v == 0.
ExactRational f_product(const BigInt& u, std::uint64_t v);

/// |GL_n(q)| = prod_{k=0}^{n-1} (q^n - q^k).
BigInt gl_order(const BigInt& q, std::uint64_t n);

/// Number of n x n matrices with a given irreducible degree-n characteristic
/// polynomial: prod_{i=1}^{n-1} (q^n - q^i).
BigInt count_irreducible_case(const BigInt& q, std::uint64_t n);

/// Number of n x n matrices over g's field whose characteristic polynomial is
/// the monic g = prod f_i^{n_i}:
///   q^(n^2 - n) F(q, n) / prod F(q^{d_i}, n_i).
/// Throws DomainError("not_monic") for non-monic or constant g.
BigInt count_with_charpoly(const Polynomial& g, std::uint64_t seed = 0);

/// Same value, evaluated literally in exact rational arithmetic.
ExactRational count_with_charpoly_rational(const Polynomial& g,
                                           std::uint64_t seed = 0);

struct CensusReport {
  std::uint64_t q = 0;
  std::size_t n = 0;
  std::map<Polynomial, BigInt, PolyOrder> entries;
  BigInt total;
};

struct CensusOptions {
  std::uint64_t budget = kDefaultCensusBudget;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Histogram of charpoly over every n x n matrix, enumerated in matrix_index
/// order. Deterministic for any thread count.
CensusReport census_bruteforce(const FieldSpec& spec, std::size_t n,
                               const CensusOptions& options = {});

struct PartitionReport {
  bool holds = false;
  BigInt sum;       ///< sum of count_with_charpoly over all monic degree-n g
  BigInt expected;  ///< q^(n^2)
  std::map<Polynomial, BigInt, PolyOrder> counts;
};

PartitionReport verify_partition(
    const FieldSpec& spec, std::size_t n,
    std::uint64_t budget = kDefaultPolynomialBudget, std::uint64_t seed = 0);

struct OrbitStabilizerReport {
  SquareMatrix matrix;
  Polynomial charpoly;
  BigInt gl_order;
  BigInt stabilizer_order;
  BigInt orbit_size;
  BigInt formula_count;
  bool consistent = false;
};

/// Throws DomainError("reducible_charpoly") unless charpoly(m) is
/// irreducible.
OrbitStabilizerReport orbit_stabilizer_report(
    const SquareMatrix& m, std::uint64_t budget = kDefaultEnumerationBudget);

namespace test_hooks {
/// Added to every count_with_charpoly result. Only for exercising failure
/// paths in tests; must stay 0 otherwise.
void set_formula_offset(std::int64_t offset);
std::int64_t formula_offset();
}  // namespace test_hooks

}  // namespace mcensus
