// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mcensus/canonical.hpp"

#include <algorithm>

#include "mcensus/detail/linalg.hpp"
#include "mcensus/errors.hpp"
#include "mcensus/factor.hpp"

namespace mcensus {

namespace {

struct CyclicBlock {
  Vec generator;
  unsigned exponent;  // order of generator is f^exponent
};

// Cyclic decomposition of the f-primary component of M: ker f(M)^mult.
// Every step picks the first basis vector whose conductor into the span
// built so far has the largest degree, then subtracts the part of f^k(M) w
// that already lies in that span so the new cyclic subspace is a direct
// summand.
std::vector<CyclicBlock> primary_blocks(const SquareMatrix& m,
                                        const Polynomial& f, unsigned mult) {
  const FieldSpec& spec = m.field();
  const std::size_t n = m.size();
  const std::size_t d = *f.degree();
  const SquareMatrix f_of_m = evaluate(f, m);
  const std::vector<Vec> basis =
      rank_kernel(evaluate(pow(f, mult), m)).kernel;

  detail::IncrementalBasis span(spec, n);
  std::vector<CyclicBlock> blocks;
  while (span.rank() < basis.size()) {
    const Vec* best = nullptr;
    unsigned best_k = 0;
    for (const Vec& w : basis) {
      unsigned k = 0;
      Vec u = w;
      while (!span.contains(u)) {
        u = f_of_m.apply(u);
        ++k;
      }
      if (k > best_k) {
        best_k = k;
        best = &w;
      }
    }
    if (best == nullptr) throw InternalError("primary component exhausted");

    Vec w = *best;
    Vec image = w;
    for (unsigned i = 0; i < best_k; ++i) image = f_of_m.apply(image);
    const auto coords = span.coordinates(image);
    if (!coords) throw InternalError("conductor image left the span");

    const Polynomial f_k = pow(f, best_k);
    std::size_t offset = 0;
    for (const CyclicBlock& block : blocks) {
      const std::size_t len = block.exponent * d;
      Polynomial g(spec, std::vector<Elem>(coords->begin() + static_cast<std::ptrdiff_t>(offset),
                                           coords->begin() + static_cast<std::ptrdiff_t>(offset + len)));
      offset += len;
      auto [h, r] = divmod(g, f_k);
      if (!r.is_zero()) {
        throw InternalError("conductor does not divide component coefficient");
      }
      const Vec correction = evaluate_on(h, m, block.generator);
      for (std::size_t j = 0; j < n; ++j) w[j] = spec.sub(w[j], correction[j]);
    }

    Vec power = w;
    for (std::size_t t = 0; t < best_k * d; ++t) {
      if (span.insert(power)) {
        throw InternalError("cyclic block is not a direct summand");
      }
      power = m.apply(power);
    }
    blocks.push_back({std::move(w), best_k});
  }
  return blocks;
}

}  // namespace

SquareMatrix companion(const Polynomial& f) {
  if (!f.is_monic() || f.is_constant()) {
    throw DomainError("not_monic",
                      "companion matrix needs a monic non-constant polynomial");
  }
  const FieldSpec& spec = f.field();
  const std::size_t n = *f.degree();
  SquareMatrix c(spec, n);
  for (std::size_t i = 1; i < n; ++i) c.set(i, i - 1, 1);
  for (std::size_t i = 0; i < n; ++i) c.set(i, n - 1, spec.neg(f.coeff(i)));
  return c;
}

SquareMatrix block_diagonal(const FieldSpec& spec,
                            std::span<const SquareMatrix> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  SquareMatrix out(spec, n);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) out.set(at + i, at + j, b(i, j));
    }
    at += b.size();
  }
  return out;
}

SquareMatrix RationalCanonicalForm::form() const {
  std::vector<SquareMatrix> parts;
  parts.reserve(blocks.size());
  for (const auto& b : blocks) parts.push_back(companion(b));
  return block_diagonal(transition.field(), parts);
}

Polynomial vector_order(const SquareMatrix& m, std::span<const Elem> v) {
  const FieldSpec& spec = m.field();
  if (v.size() != m.size()) {
    throw DomainError("dimension_mismatch", "vector length differs from n");
  }
  detail::IncrementalBasis krylov(spec, m.size());
  Vec power(v.begin(), v.end());
  while (true) {
    auto dependency = krylov.insert(power);
    if (dependency) {
      // M^d v = sum c_i M^i v, so the order is x^d - sum c_i x^i.
      std::vector<Elem> coeffs(dependency->size() + 1);
      for (std::size_t i = 0; i < dependency->size(); ++i) {
        coeffs[i] = spec.neg((*dependency)[i]);
      }
      coeffs.back() = 1;
      return Polynomial(spec, std::move(coeffs));
    }
    power = m.apply(power);
  }
}

RationalCanonicalForm rcf(const SquareMatrix& m) {
  const FieldSpec& spec = m.field();
  const std::size_t n = m.size();
  const Factorization chi = factorize(charpoly(m));

  RationalCanonicalForm out{{}, SquareMatrix(spec, n), n};
  std::vector<Elem> columns;
  columns.reserve(n * n);
  for (const auto& factor : chi.factors) {
    auto blocks = primary_blocks(m, factor.poly, factor.multiplicity);
    std::stable_sort(blocks.begin(), blocks.end(),
                     [](const CyclicBlock& a, const CyclicBlock& b) {
                       return a.exponent > b.exponent;
                     });
    for (const auto& block : blocks) {
      out.blocks.push_back(pow(factor.poly, block.exponent));
      Vec power = block.generator;
      for (std::size_t t = 0; t < block.exponent * *factor.poly.degree(); ++t) {
        columns.insert(columns.end(), power.begin(), power.end());
        power = m.apply(power);
      }
    }
  }
  if (columns.size() != n * n) {
    throw InternalError("cyclic blocks do not fill the space");
  }
  // `columns` holds the transition column by column.
  out.transition = SquareMatrix(spec, n, std::move(columns)).transpose();
#ifdef MCENSUS_SELF_CHECK
  check_rcf(m, out);
#endif
  return out;
}

void check_rcf(const SquareMatrix& m, const RationalCanonicalForm& form) {
  std::size_t total = 0;
  const Polynomial* prev_base = nullptr;
  unsigned prev_exp = 0;
  std::vector<Factorization> split;
  split.reserve(form.blocks.size());
  for (const auto& block : form.blocks) {
    if (!block.is_monic() || block.is_constant()) {
      throw InternalError("rcf block is not monic");
    }
    total += *block.degree();
    split.push_back(factorize(block));
    const auto& fac = split.back();
    if (fac.factors.size() != 1) {
      throw InternalError("rcf block " + format_poly(block) +
                          " is not a prime power");
    }
    const Polynomial& base = fac.factors[0].poly;
    const unsigned e = fac.factors[0].multiplicity;
    if (prev_base != nullptr) {
      const bool ordered =
          PolyOrder{}(*prev_base, base) || (*prev_base == base && prev_exp >= e);
      if (!ordered) throw InternalError("rcf blocks out of order");
    }
    prev_base = &base;
    prev_exp = e;
  }
  if (total != m.size() || form.dimension != m.size()) {
    throw InternalError("rcf block degrees do not sum to n");
  }
  const auto inv = try_invert(form.transition);
  if (!inv) throw InternalError("rcf transition is singular");
  if (!(*inv * m * form.transition == form.form())) {
    throw InternalError("rcf transition does not conjugate to the form");
  }
}

Similarity are_similar(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_field(a.field(), b.field());
  if (a.size() != b.size()) {
    throw DomainError("dimension_mismatch", "matrices of different size");
  }
  const auto ra = rcf(a);
  const auto rb = rcf(b);
  if (ra.blocks != rb.blocks) return {false, std::nullopt};
  return {true, ra.transition * invert(rb.transition)};
}

}  // namespace mcensus
