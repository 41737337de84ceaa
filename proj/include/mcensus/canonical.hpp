// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

// Rational canonical form built from prime-power (primary) cyclic blocks.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mcensus/matrix.hpp"
#include "mcensus/poly.hpp"

namespace mcensus {

/// transition^-1 * M * transition == block_diagonal(companion(blocks[i])).
/// Blocks are powers f^e of monic irreducibles, sorted by f in PolyOrder and
/// then by descending e.
struct RationalCanonicalForm {
  std::vector<Polynomial> blocks;
  SquareMatrix transition;
  std::size_t dimension = 0;

  /// The block-diagonal matrix of companion blocks.
  SquareMatrix form() const;
};

/// Subdiagonal ones, last column the negated low coefficients of f.
/// Throws DomainError for non-monic or constant f.
SquareMatrix companion(const Polynomial& f);

SquareMatrix block_diagonal(const FieldSpec& spec,
                            std::span<const SquareMatrix> blocks);

/// Minimal monic p with p(M) v = 0; the zero vector has order 1.
Polynomial vector_order(const SquareMatrix& m, std::span<const Elem> v);

RationalCanonicalForm rcf(const SquareMatrix& m);

/// Throws InternalError when `form` violates any RationalCanonicalForm
/// invariant with respect to m.
void check_rcf(const SquareMatrix& m, const RationalCanonicalForm& form);

struct Similarity {
  bool similar = false;
  /// Q with Q^-1 A Q == B when similar.
  std::optional<SquareMatrix> witness;
};

Similarity are_similar(const SquareMatrix& a, const SquareMatrix& b);

}  // namespace mcensus
