// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "mcensus/bigint.hpp"
#include "mcensus/poly.hpp"

namespace mcensus {

struct Factor {
  Polynomial poly;  ///< monic irreducible
  unsigned multiplicity = 0;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// leading * prod poly_i^multiplicity_i, factors sorted by PolyOrder.
struct Factorization {
  FieldSpec field;
  Elem leading = 1;
  std::vector<Factor> factors;

  Polynomial expand() const;
  bool is_irreducible() const {
    return factors.size() == 1 && factors[0].multiplicity == 1;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Rabin's test. Constants are not irreducible; throws for the zero
/// polynomial.
bool is_irreducible(const Polynomial& f);

/// Squarefree decomposition, distinct-degree splitting, then Cantor-Zassenhaus
/// equal-degree splitting driven by a PRNG seeded with `seed`. The result is
/// canonical and does not depend on the seed.
Factorization factorize(const Polynomial& g, std::uint64_t seed = 0);

/// Number of monic irreducible polynomials of degree n over GF(q), by the
/// necklace formula.
BigInt count_monic_irreducibles(const FieldSpec& spec, unsigned n);

}  // namespace mcensus
