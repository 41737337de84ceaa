// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mcensus/centralizer.hpp"

#include <algorithm>

#include "mcensus/canonical.hpp"
#include "mcensus/detail/linalg.hpp"
#include "mcensus/errors.hpp"
#include "mcensus/factor.hpp"

namespace mcensus {

namespace {

bool invertible(const FieldSpec& f, std::vector<Elem> a, std::size_t n) {
  return detail::rref(f, a, n, n).size() == n;
}

// Advances a base-q odometer; false after the last combination.
bool next_combination(std::vector<Elem>& digits, std::uint64_t q) {
  for (auto& d : digits) {
    if (++d < q) return true;
    d = 0;
  }
  return false;
}

}  // namespace

CentralizerDescription centralizer(const SquareMatrix& m) {
  const FieldSpec& f = m.field();
  const std::size_t n = m.size();
  const std::size_t unknowns = n * n;
  // Row (i, j) encodes (MX - XM)_{ij} as a form in the entries of X.
  std::vector<Elem> system(unknowns * unknowns, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Elem* row = &system[(i * n + j) * unknowns];
      for (std::size_t k = 0; k < n; ++k) {
        row[k * n + j] = f.add(row[k * n + j], m(i, k));
        row[i * n + k] = f.sub(row[i * n + k], m(k, j));
      }
    }
  }
  const auto pivots = detail::rref(f, system, unknowns, unknowns);
  const auto kernel = detail::rref_kernel(f, system, unknowns, pivots);

  std::vector<Elem> rows;
  rows.reserve(kernel.size() * unknowns);
  for (const auto& v : kernel) rows.insert(rows.end(), v.begin(), v.end());
  detail::rref(f, rows, kernel.size(), unknowns);

  CentralizerDescription out;
  out.dimension = kernel.size();
  out.order = big_pow(BigInt(f.order()), out.dimension);
  for (std::size_t r = 0; r < kernel.size(); ++r) {
    out.basis.emplace_back(
        f, n,
        std::vector<Elem>(rows.begin() + static_cast<std::ptrdiff_t>(r * unknowns),
                          rows.begin() + static_cast<std::ptrdiff_t>((r + 1) * unknowns)));
  }
  return out;
}

BigInt centralizer_unit_count_enumerated(const CentralizerDescription& c,
                                         std::uint64_t budget) {
  if (c.basis.empty()) return 0;
  const FieldSpec& f = c.basis.front().field();
  const std::size_t n = c.basis.front().size();
  if (c.order > budget) {
    throw BudgetExceeded("centralizer has " + c.order.str() +
                         " elements, budget " + std::to_string(budget));
  }
  std::vector<Elem> coeffs(c.dimension, 0);
  std::vector<Elem> x(n * n);
  std::uint64_t count = 0;
  do {
    std::fill(x.begin(), x.end(), 0);
    for (std::size_t b = 0; b < coeffs.size(); ++b) {
      if (coeffs[b] == 0) continue;
      const auto e = c.basis[b].entries();
      for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = f.add(x[i], f.mul(coeffs[b], e[i]));
      }
    }
    if (invertible(f, x, n)) ++count;
  } while (next_combination(coeffs, f.order()));
  return count;
}

BigInt centralizer_unit_count(const SquareMatrix& m, std::uint64_t budget) {
  const FieldSpec& f = m.field();
  if (is_irreducible(charpoly(m))) {
    // C(M) is the field F[M] with q^n elements.
    const BigInt fast = big_pow(BigInt(f.order()), m.size()) - 1;
#ifdef MCENSUS_SELF_CHECK
    const auto c = centralizer(m);
    if (c.order <= budget &&
        centralizer_unit_count_enumerated(c, budget) != fast) {
      throw InternalError("centralizer unit count disagrees with q^n - 1");
    }
#endif
    return fast;
  }
  return centralizer_unit_count_enumerated(centralizer(m), budget);
}

bool is_polynomial_centralizer(const SquareMatrix& m) {
  const auto c = centralizer(m);
  const Polynomial mp = minpoly(m);
  const std::size_t deg = *mp.degree();
  if (c.dimension != deg) return false;
  detail::IncrementalBasis powers(m.field(), m.size() * m.size());
  SquareMatrix power = SquareMatrix::identity(m.field(), m.size());
  for (std::size_t i = 0; i < deg; ++i) {
    powers.insert(power.entries());
    power = power * m;
  }
  return std::all_of(c.basis.begin(), c.basis.end(), [&](const SquareMatrix& x) {
    return powers.contains(x.entries());
  });
}

BigInt gaussian_binomial(const BigInt& q, std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= big_pow(q, n - i) - 1;
    den *= big_pow(q, i + 1) - 1;
  }
  return num / den;
}

std::vector<Subspace> invariant_subspaces(const SquareMatrix& m,
                                          std::size_t dimension_cap,
                                          std::uint64_t budget) {
  const FieldSpec& f = m.field();
  const std::size_t n = m.size();
  const std::size_t top = std::min(dimension_cap, n - 1);
  BigInt candidates = 0;
  for (std::size_t r = 1; r <= top; ++r) {
    candidates += gaussian_binomial(f.order(), n, r);
  }
  if (candidates > budget) {
    throw BudgetExceeded(candidates.str() + " subspaces exceed budget " +
                         std::to_string(budget));
  }

  std::vector<Subspace> out;
  for (std::size_t r = 1; r <= top; ++r) {
    // Pivot columns chosen as the positions of `true` in a sorted mask.
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(r), true);
    do {
      std::vector<std::size_t> pivots;
      for (std::size_t c = 0; c < n; ++c) {
        if (mask[c]) pivots.push_back(c);
      }
      // Free slots: (row, column) right of the row's pivot, not a pivot column.
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t c = pivots[i] + 1; c < n; ++c) {
          if (!mask[c]) slots.emplace_back(i, c);
        }
      }
      std::vector<Elem> values(slots.size(), 0);
      do {
        std::vector<Vec> rows(r, Vec(n, 0));
        for (std::size_t i = 0; i < r; ++i) rows[i][pivots[i]] = 1;
        for (std::size_t s = 0; s < slots.size(); ++s) {
          rows[slots[s].first][slots[s].second] = values[s];
        }
        const bool invariant = std::all_of(rows.begin(), rows.end(), [&](const Vec& b) {
          Vec w = m.apply(b);
          for (std::size_t i = 0; i < r; ++i) {
            const Elem c = w[pivots[i]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
              w[j] = f.sub(w[j], f.mul(c, rows[i][j]));
            }
          }
          return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
        });
        if (invariant) out.push_back({std::move(rows)});
      } while (next_combination(values, f.order()));
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return out;
}

}  // namespace mcensus
