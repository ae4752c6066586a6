#pragma once

// Test-only oracles, kept independent of the library's computation paths:
// determinants by cofactor expansion (vs. Gaussian elimination), the
// quasideterminant recursion without memoization (vs. the shared-memo
// evaluator), and classical symmetric polynomials on scalars.

#include <optional>
#include <vector>

#include "qvieta/quasidet.hpp"

namespace oracles {

using qvieta::BlockMatrix;
using qvieta::Matrix;
using qvieta::Rational;

inline Rational det_laplace(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  if (n == 1) return m[0][0];
  Rational acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Rational>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      row.reserve(n - 1);
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][c] * det_laplace(minor);
    acc += (c % 2 == 0) ? term : -term;
  }
  return acc;
}

inline std::vector<std::vector<Rational>> scalar_grid(const BlockMatrix& a) {
  std::vector<std::vector<Rational>> g;
  for (int p : a.row_labels()) {
    std::vector<Rational> row;
    for (int q : a.col_labels()) row.push_back(a.entry(p, q).at(0, 0));
    g.push_back(std::move(row));
  }
  return g;
}

// Direct recursion on materialized submatrices, no memo table.
inline std::optional<Matrix> naive_quasidet(const BlockMatrix& a, int p, int q) {
  if (a.order() == 1) return a.entry(p, q);
  const BlockMatrix sub = a.submatrix(p, q);
  Matrix acc = a.entry(p, q);
  for (int j : sub.col_labels())
    for (int i : sub.row_labels()) {
      auto inner = naive_quasidet(sub, i, j);
      if (!inner) return std::nullopt;
      auto inv = inner->try_inverse();
      if (!inv) return std::nullopt;
      acc -= a.entry(p, j) * *inv * a.entry(i, q);
    }
  return acc;
}

// Classical elementary and complete symmetric polynomials of scalars.
inline Rational elementary_classical(const std::vector<Rational>& xs, int k) {
  // e_k via the generating recurrence on prefixes
  std::vector<Rational> e(static_cast<std::size_t>(k) + 1);
  e[0] = Rational(1);
  for (const Rational& x : xs)
    for (int j = k; j >= 1; --j)
      e[static_cast<std::size_t>(j)] += x * e[static_cast<std::size_t>(j - 1)];
  return e[static_cast<std::size_t>(k)];
}

inline Rational complete_classical(const std::vector<Rational>& xs, int k) {
  // h_k by direct enumeration of weakly increasing index tuples
  Rational acc;
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
    if (remaining == 0) {
      Rational term(1);
      for (std::size_t i : idx) term *= xs[i];
      acc += term;
      return;
    }
    for (std::size_t i = start; i < xs.size(); ++i) {
      idx.push_back(i);
      self(self, i, remaining - 1);
      idx.pop_back();
    }
  };
  rec(rec, 0, k);
  return acc;
}

}  // namespace oracles
