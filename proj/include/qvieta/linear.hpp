#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qvieta/rational.hpp"

namespace qvieta {

using RationalGrid = std::vector<std::vector<Rational>>;

// Solves A X = B for square A by fraction-free (Bareiss) elimination.
// Rows of [A | B] are scaled to integers first; every division performed
// during the elimination is exact. Returns nullopt when A is singular.
inline std::optional<RationalGrid> solve_square_exact(const RationalGrid& A,
                                                      const RationalGrid& B) {
  const std::size_t m = A.size();
  if (m == 0) return RationalGrid{};
  if (B.size() != m) throw std::invalid_argument("solve_square_exact: row count mismatch");
  const std::size_t k = B[0].size();
  const std::size_t w = m + k;

  std::vector<std::vector<mpz_class>> M(m, std::vector<mpz_class>(w));
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != m || B[i].size() != k)
      throw std::invalid_argument("solve_square_exact: ragged input");
    mpz_class l(1);
    for (const auto& x : A[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
    for (const auto& x : B[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
    for (std::size_t j = 0; j < m; ++j)
      M[i][j] = A[i][j].numerator() * (l / A[i][j].denominator());
    for (std::size_t j = 0; j < k; ++j)
      M[i][m + j] = B[i][j].numerator() * (l / B[i][j].denominator());
  }

  mpz_class prev(1);
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t pivot = c;
    while (pivot < m && M[pivot][c] == 0) ++pivot;
    if (pivot == m) return std::nullopt;
    if (pivot != c) M[pivot].swap(M[c]);
    for (std::size_t i = c + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < w; ++j) {
        mpz_class t = M[i][j] * M[c][c] - M[i][c] * M[c][j];
        mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      M[i][c] = 0;
    }
    prev = M[c][c];
  }

  RationalGrid X(m, std::vector<Rational>(k));
  for (std::size_t ii = m; ii-- > 0;) {
    for (std::size_t j = 0; j < k; ++j) {
      Rational acc{mpz_class(M[ii][m + j])};
      for (std::size_t t = ii + 1; t < m; ++t)
        acc -= Rational(mpz_class(M[ii][t])) * X[t][j];
      X[ii][j] = acc / Rational(mpz_class(M[ii][ii]));
    }
  }
  return X;
}

// Rank of an arbitrary rational grid by exact Gaussian elimination.
inline int rank_exact(RationalGrid A) {
  if (A.empty()) return 0;
  const std::size_t ncols = A[0].size();
  std::size_t row = 0;
  int rank = 0;
  for (std::size_t c = 0; c < ncols && row < A.size(); ++c) {
    std::size_t pivot = row;
    while (pivot < A.size() && A[pivot][c].is_zero()) ++pivot;
    if (pivot == A.size()) continue;
    A[pivot].swap(A[row]);
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == row || A[i][c].is_zero()) continue;
      const Rational f = A[i][c] / A[row][c];
      for (std::size_t j = c; j < ncols; ++j) A[i][j] -= f * A[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

// One exact solution of A x = b (free variables pinned to zero), or nullopt
// when the system is inconsistent. A may be rectangular.
inline std::optional<std::vector<Rational>> solve_any_exact(RationalGrid A,
                                                            std::vector<Rational> b) {
  const std::size_t nrows = A.size();
  if (nrows == 0) return std::vector<Rational>{};
  const std::size_t ncols = A[0].size();
  std::vector<std::ptrdiff_t> pivot_col(nrows, -1);
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < nrows; ++c) {
    std::size_t p = row;
    while (p < nrows && A[p][c].is_zero()) ++p;
    if (p == nrows) continue;
    A[p].swap(A[row]);
    std::swap(b[p], b[row]);
    const Rational pk = A[row][c];
    for (std::size_t j = c; j < ncols; ++j) A[row][j] /= pk;
    b[row] /= pk;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == row || A[i][c].is_zero()) continue;
      const Rational f = A[i][c];
      for (std::size_t j = c; j < ncols; ++j) A[i][j] -= f * A[row][j];
      b[i] -= f * b[row];
    }
    pivot_col[row] = static_cast<std::ptrdiff_t>(c);
    ++row;
  }
  for (std::size_t i = row; i < nrows; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  std::vector<Rational> x(ncols);
  for (std::size_t i = 0; i < row; ++i) x[static_cast<std::size_t>(pivot_col[i])] = b[i];
  return x;
}

}  // namespace qvieta
