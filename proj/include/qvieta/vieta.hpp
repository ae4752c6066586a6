#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qvieta/combinatorics.hpp"
#include "qvieta/linear.hpp"
#include "qvieta/quasidet.hpp"
#include "qvieta/rng.hpp"

namespace qvieta {

// Ordered tuple of ring elements certified generic: all Vandermonde
// quasideterminants exist and are invertible, the Theorem-3 denominators
// are invertible, and the linear-oracle system is nonsingular.
// `attempts` counts the random draws rejected before certification.
struct GenericTuple {
  int n = 0;
  int dim = 0;
  std::vector<Matrix> elements;
  std::uint64_t seed = 0;
  int attempts = 0;
};

enum class CoeffMethod { theorem2, theorem3, linear_oracle };

struct CoefficientVector {
  std::vector<Matrix> as;  // a_1 .. a_n
  CoeffMethod method = CoeffMethod::theorem2;
};

struct Certification {
  bool ok = true;
  std::string first_failure;  // empty when ok
};

namespace detail {

[[noreturn]] inline void not_generic(const std::string& site) {
  throw std::domain_error("tuple not generic: " + site);
}

// pw[c][e] = xs[c]^e for e = 0..max_exp
inline std::vector<std::vector<Matrix>> power_table(std::span<const Matrix> xs, int max_exp) {
  std::vector<std::vector<Matrix>> pw;
  pw.reserve(xs.size());
  for (const Matrix& x : xs) {
    std::vector<Matrix> col;
    col.reserve(static_cast<std::size_t>(max_exp) + 1);
    col.push_back(Matrix::identity(x.dim()));
    for (int e = 1; e <= max_exp; ++e) col.push_back(col.back() * x);
    pw.push_back(std::move(col));
  }
  return pw;
}

// Rows x^{top}, x^{top-1}, ..., 1 with one exponent optionally skipped;
// row labels are 1-based ranks.
inline BlockMatrix power_block(const std::vector<std::vector<Matrix>>& pw, int ncols,
                               int top, int skip_exp = -1) {
  std::vector<std::vector<Matrix>> grid;
  for (int e = top; e >= 0; --e) {
    if (e == skip_exp) continue;
    std::vector<Matrix> row;
    row.reserve(static_cast<std::size_t>(ncols));
    for (int c = 0; c < ncols; ++c) row.push_back(pw[static_cast<std::size_t>(c)][static_cast<std::size_t>(e)]);
    grid.push_back(std::move(row));
  }
  return BlockMatrix::from_grid(std::move(grid));
}

}  // namespace detail

// The k x k Vandermonde power matrix: row r holds x_1^{k-r} .. x_k^{k-r},
// bottom row all identity.
inline BlockMatrix vandermonde_block(std::span<const Matrix> xs, int k) {
  if (k < 1 || k > static_cast<int>(xs.size()))
    throw std::invalid_argument("vandermonde_block: k out of range");
  auto pw = detail::power_table(xs.subspan(0, static_cast<std::size_t>(k)), k - 1);
  return detail::power_block(pw, k, k - 1);
}

// v_k: quasideterminant of the block above at position (1, k); v_1 = 1.
inline std::optional<Matrix> try_vandermonde_quasidet(std::span<const Matrix> xs, int k) {
  if (k < 1 || k > static_cast<int>(xs.size()))
    throw std::invalid_argument("vandermonde_quasidet: k out of range");
  if (k == 1) return Matrix::identity(xs[0].dim());
  QuasidetResult r = quasidet(vandermonde_block(xs, k), 1, k);
  if (!r.defined()) return std::nullopt;
  return std::move(r.value);
}

inline Matrix vandermonde_quasidet(std::span<const Matrix> xs, int k) {
  auto v = try_vandermonde_quasidet(xs, k);
  if (!v) detail::not_generic("v_" + std::to_string(k) + " undefined");
  return std::move(*v);
}

// A tuple together with its Vandermonde quasideterminants and conjugated
// solutions. v_1 is the identity; every v_k is invertible by construction
// and y_k = v_k x_k v_k^{-1} holds exactly.
struct VandermondeSystem {
  std::vector<Matrix> xs;
  std::vector<Matrix> vs;
  std::vector<Matrix> ys;
};

// nullopt as soon as some v_k is undefined or singular.
inline std::optional<VandermondeSystem> try_vandermonde_system(std::span<const Matrix> xs) {
  VandermondeSystem sys;
  sys.xs.assign(xs.begin(), xs.end());
  sys.vs.reserve(xs.size());
  sys.ys.reserve(xs.size());
  for (int k = 1; k <= static_cast<int>(xs.size()); ++k) {
    auto v = try_vandermonde_quasidet(xs, k);
    if (!v) return std::nullopt;
    auto vinv = v->try_inverse();
    if (!vinv) return std::nullopt;
    sys.ys.push_back(*v * xs[static_cast<std::size_t>(k - 1)] * *vinv);
    sys.vs.push_back(std::move(*v));
  }
  return sys;
}

inline VandermondeSystem vandermonde_system(std::span<const Matrix> xs) {
  auto sys = try_vandermonde_system(xs);
  if (!sys) detail::not_generic("some v_k undefined or not invertible");
  return std::move(*sys);
}

// y_k = v_k x_k v_k^{-1}; nullopt as soon as some v_k is undefined or singular.
inline std::optional<std::vector<Matrix>> try_conjugated_roots(std::span<const Matrix> xs) {
  auto sys = try_vandermonde_system(xs);
  if (!sys) return std::nullopt;
  return std::move(sys->ys);
}

inline std::vector<Matrix> conjugated_roots(std::span<const Matrix> xs) {
  auto ys = try_conjugated_roots(xs);
  if (!ys) detail::not_generic("some v_k undefined or not invertible");
  return std::move(*ys);
}

// a_k = (-1)^k sum over i_1 < ... < i_k of y_{i_k} ... y_{i_1}.
inline CoefficientVector coeffs_theorem2(std::span<const Matrix> ys) {
  const int n = static_cast<int>(ys.size());
  if (n == 0) throw std::invalid_argument("coeffs_theorem2: empty tuple");
  const int d = ys[0].dim();
  CoefficientVector out;
  out.method = CoeffMethod::theorem2;
  for (int k = 1; k <= n; ++k) {
    Matrix sum(d);
    for (const auto& tuple : increasing_tuples(n, k)) {
      Matrix prod = Matrix::identity(d);
      for (auto it = tuple.rbegin(); it != tuple.rend(); ++it)
        prod = prod * ys[static_cast<std::size_t>(*it - 1)];
      sum += prod;
    }
    out.as.push_back(k % 2 ? -sum : sum);
  }
  return out;
}

// Theorem 3: a_k = -|V'_k|_{1n} (|W|_{kn})^{-1}, where V'_k is the n x n
// matrix of powers n..0 with exponent n-k skipped and W is the full
// n x n Vandermonde block (powers n-1..0).
inline CoefficientVector coeffs_theorem3(std::span<const Matrix> xs) {
  const int n = static_cast<int>(xs.size());
  if (n == 0) throw std::invalid_argument("coeffs_theorem3: empty tuple");
  auto pw = detail::power_table(xs, n);

  const BlockMatrix w = detail::power_block(pw, n, n - 1);
  QuasidetEvaluator wev(w);

  CoefficientVector out;
  out.method = CoeffMethod::theorem3;
  for (int k = 1; k <= n; ++k) {
    const BlockMatrix vk = detail::power_block(pw, n, n, n - k);
    QuasidetResult num = quasidet(vk, 1, n);
    if (!num.defined())
      detail::not_generic("theorem3 numerator undefined for k=" + std::to_string(k) +
                          ": " + num.failure->describe());
    QuasidetResult den = wev.eval(k, n);
    if (!den.defined())
      detail::not_generic("theorem3 denominator |W|_(" + std::to_string(k) + "," +
                          std::to_string(n) + ") undefined: " + den.failure->describe());
    auto den_inv = den.value->try_inverse();
    if (!den_inv)
      detail::not_generic("theorem3 denominator |W|_(" + std::to_string(k) + "," +
                          std::to_string(n) + ") not invertible");
    out.as.push_back(-(*num.value * *den_inv));
  }
  return out;
}

namespace detail {

// The left equation rearranged: sum_j a_j x_i^{n-j} = -x_i^n is linear over
// the rationals in the entries of the a_j. For unknowns restricted to one row r
// of the a_j the coefficient matrix is the same for every r, so the full
// (n d^2)-square system splits into d identical (n d)-square solves with
// different right-hand sides.
struct OracleSystem {
  RationalGrid a;  // (n d) x (n d)
  RationalGrid b;  // (n d) x d, one column per row index r
};

inline OracleSystem oracle_system(std::span<const Matrix> xs) {
  const int n = static_cast<int>(xs.size());
  const int d = xs[0].dim();
  auto pw = power_table(xs, n);
  const std::size_t m = static_cast<std::size_t>(n) * d;
  OracleSystem sys;
  sys.a.assign(m, std::vector<Rational>(m));
  sys.b.assign(m, std::vector<Rational>(static_cast<std::size_t>(d)));
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < d; ++c) {
      const std::size_t row = static_cast<std::size_t>(i) * d + c;
      for (int j = 0; j < n; ++j)
        for (int s = 0; s < d; ++s)
          sys.a[row][static_cast<std::size_t>(j) * d + s] =
              pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(n - j - 1)].at(s, c);
      for (int r = 0; r < d; ++r)
        sys.b[row][static_cast<std::size_t>(r)] =
            -pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)].at(r, c);
    }
  return sys;
}

}  // namespace detail

// Independent oracle: exact fraction-free solve of the linear system
// equivalent to the left equation. By construction the left residual of the
// result vanishes at every x_i.
inline CoefficientVector coeffs_linear_oracle(std::span<const Matrix> xs) {
  const int n = static_cast<int>(xs.size());
  if (n == 0) throw std::invalid_argument("coeffs_linear_oracle: empty tuple");
  const int d = xs[0].dim();
  auto sys = detail::oracle_system(xs);
  auto sol = solve_square_exact(sys.a, sys.b);
  if (!sol) throw std::domain_error("coeffs_linear_oracle: solutions not independent");
  CoefficientVector out;
  out.method = CoeffMethod::linear_oracle;
  for (int j = 0; j < n; ++j) {
    Matrix a(d);
    for (int r = 0; r < d; ++r)
      for (int s = 0; s < d; ++s)
        a.at(r, s) = (*sol)[static_cast<std::size_t>(j) * d + s][static_cast<std::size_t>(r)];
    out.as.push_back(std::move(a));
  }
  return out;
}

// x_i^n + a_1 x_i^{n-1} + ... + a_n, coefficients on the left.
inline std::vector<Matrix> residual_left(std::span<const Matrix> xs,
                                         std::span<const Matrix> as) {
  const int n = static_cast<int>(as.size());
  std::vector<Matrix> out;
  out.reserve(xs.size());
  for (const Matrix& x : xs) {
    Matrix acc = x.pow(n);
    for (int j = 1; j <= n; ++j) acc += as[static_cast<std::size_t>(j - 1)] * x.pow(n - j);
    out.push_back(std::move(acc));
  }
  return out;
}

// x^n + x^{n-1} a_1 + x^{n-2} a_2 + ... + a_n, coefficients on the right.
inline Matrix residual_right(const Matrix& x, std::span<const Matrix> as) {
  const int n = static_cast<int>(as.size());
  Matrix acc = x.pow(n);
  for (int j = 1; j <= n; ++j) acc += x.pow(n - j) * as[static_cast<std::size_t>(j - 1)];
  return acc;
}

// Theorem 1 corollary: tr a_1 = -(tr x_1 + ... + tr x_n) and
// det a_n = det(-x_1) ... det(-x_n).
inline bool theorem1_check(std::span<const Matrix> xs) {
  const auto as = coeffs_theorem2(conjugated_roots(xs)).as;
  Rational tr_sum;
  for (const Matrix& x : xs) tr_sum += x.trace();
  if (as.front().trace() != -tr_sum) return false;
  Rational det_prod(1);
  for (const Matrix& x : xs) det_prod *= (-x).det();
  return as.back().det() == det_prod;
}

// Theorem 4: y_n solves the right equation built from the theorem-2
// coefficients of the left equation.
inline bool theorem4_check(std::span<const Matrix> xs) {
  const auto ys = conjugated_roots(xs);
  const auto as = coeffs_theorem2(ys);
  return residual_right(ys.back(), as.as).is_zero();
}

// Compares theorem-2 coefficients of the permuted tuple against the
// original. perm holds 0-based indices. nullopt = permuted tuple was not
// generic at the v-level (skip, with the comparison impossible).
inline std::optional<bool> symmetry_check(std::span<const Matrix> xs,
                                          std::span<const int> perm) {
  if (perm.size() != xs.size())
    throw std::invalid_argument("symmetry_check: permutation length mismatch");
  const auto base = coeffs_theorem2(conjugated_roots(xs)).as;
  std::vector<Matrix> permuted;
  permuted.reserve(xs.size());
  for (int idx : perm) permuted.push_back(xs[static_cast<std::size_t>(idx)]);
  auto ys = try_conjugated_roots(permuted);
  if (!ys) return std::nullopt;
  return coeffs_theorem2(*ys).as == base;
}

// The n=2 negative control: y_1 y_2 changes when the pair is swapped (and
// the y's recomputed), while y_2 y_1 = a_2 does not. Returns false for
// commuting inputs, where no witness can exist.
inline bool nonsymmetry_witness(const Matrix& x1, const Matrix& x2) {
  const std::vector<Matrix> fwd{x1, x2}, rev{x2, x1};
  auto ys_f = try_conjugated_roots(fwd);
  auto ys_r = try_conjugated_roots(rev);
  if (!ys_f || !ys_r) detail::not_generic("x_2 - x_1 not invertible");
  const Matrix y1y2_f = (*ys_f)[0] * (*ys_f)[1];
  const Matrix y1y2_r = (*ys_r)[0] * (*ys_r)[1];
  const Matrix y2y1_f = (*ys_f)[1] * (*ys_f)[0];
  const Matrix y2y1_r = (*ys_r)[1] * (*ys_r)[0];
  return y1y2_f != y1y2_r && y2y1_f == y2y1_r;
}

// Certifies everything downstream needs: v_2..v_n defined and invertible,
// Theorem-3 numerators defined and denominators invertible, and the
// linear-oracle system nonsingular. Failures come back as values.
inline Certification certify_generic(std::span<const Matrix> xs) {
  const int n = static_cast<int>(xs.size());
  if (n == 0) return {false, "empty tuple"};
  for (int k = 2; k <= n; ++k) {
    auto v = try_vandermonde_quasidet(xs, k);
    if (!v) return {false, "v_" + std::to_string(k) + " undefined"};
    if (!v->try_inverse()) return {false, "v_" + std::to_string(k) + " not invertible"};
  }
  auto pw = detail::power_table(xs, n);
  const BlockMatrix w = detail::power_block(pw, n, n - 1);
  QuasidetEvaluator wev(w);
  for (int k = 1; k <= n; ++k) {
    QuasidetResult den = wev.eval(k, n);
    if (!den.defined())
      return {false, "theorem3 denominator |W|_(" + std::to_string(k) + "," +
                         std::to_string(n) + ") undefined"};
    if (!den.value->try_inverse())
      return {false, "theorem3 denominator |W|_(" + std::to_string(k) + "," +
                         std::to_string(n) + ") not invertible"};
  }
  for (int k = 1; k <= n; ++k) {
    const BlockMatrix vk = detail::power_block(pw, n, n, n - k);
    QuasidetResult num = quasidet(vk, 1, n);
    if (!num.defined())
      return {false, "theorem3 numerator undefined for k=" + std::to_string(k)};
  }
  auto sys = detail::oracle_system(xs);
  if (!solve_square_exact(sys.a, sys.b))
    return {false, "linear oracle system singular"};
  return {};
}

// Seeded deterministic draw-and-certify loop. Matrices have integer
// entries uniform in [-entry_bound, entry_bound]; a draw that fails
// certification is rejected and redrawn, up to 100 draws.
inline GenericTuple random_tuple(int n, int dim, std::uint64_t seed, long entry_bound) {
  if (n < 1 || dim < 1) throw std::invalid_argument("random_tuple: n and dim must be positive");
  if (entry_bound < 1) throw std::invalid_argument("random_tuple: entry_bound must be positive");
  constexpr int kRetryCap = 100;
  SplitMix64 rng(seed);
  std::string first_failure;
  for (int draw = 0; draw < kRetryCap; ++draw) {
    std::vector<Matrix> elements;
    elements.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) elements.push_back(random_matrix(rng, dim, entry_bound));
    Certification cert = certify_generic(elements);
    if (cert.ok) return GenericTuple{n, dim, std::move(elements), seed, draw};
    if (first_failure.empty()) first_failure = cert.first_failure;
  }
  throw std::runtime_error("random_tuple: retry cap (100) exceeded; first failure: " +
                           first_failure);
}

}  // namespace qvieta
