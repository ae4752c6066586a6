#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qvieta/freealg.hpp"
#include "qvieta/vieta.hpp"

namespace qvieta {

// Decision of the Theorem-5 membership test at one degree bound.
// The certificate expands P as a rational combination of products
// Lambda_{i_1} ... Lambda_{i_r}.
struct MembershipResult {
  bool member = false;
  bool refused = false;  // degree above the configured bound
  std::string refusal;
  std::vector<std::pair<Composition, Rational>> certificate;

  // e.g. "L1.L1 - L2"
  std::string certificate_text() const {
    if (certificate.empty()) return member ? "0" : "";
    std::ostringstream os;
    bool first = true;
    for (const auto& [comp, c] : certificate) {
      const bool neg = c.sign() < 0;
      const Rational mag = neg ? -c : c;
      if (first) {
        if (neg) os << '-';
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      if (comp.empty()) {
        os << mag.str();
        continue;
      }
      if (mag != Rational(1)) os << mag.str() << '*';
      for (std::size_t t = 0; t < comp.size(); ++t) os << (t ? "." : "") << 'L' << comp[t];
    }
    return os.str();
  }
};

namespace detail {

inline FreePolynomial lambda_product(const Composition& comp, int alphabet) {
  FreePolynomial p = FreePolynomial::one(alphabet);
  for (int part : comp) p = p * elementary_lambda(part, alphabet);
  return p;
}

// Coefficient vectors of `polys` over the union of their supports plus
// `extra`'s support, in length-lex word order.
inline RationalGrid coefficient_columns(const std::vector<FreePolynomial>& polys,
                                        const FreePolynomial* extra,
                                        std::vector<Rational>* extra_column) {
  std::map<Word, std::size_t, LengthLex> index;
  auto index_words = [&](const FreePolynomial& p) {
    for (const auto& [w, c] : p.terms()) index.try_emplace(w, 0);
  };
  for (const auto& p : polys) index_words(p);
  if (extra) index_words(*extra);
  std::size_t next = 0;
  for (auto& [w, idx] : index) idx = next++;

  RationalGrid grid(index.size(), std::vector<Rational>(polys.size()));
  for (std::size_t col = 0; col < polys.size(); ++col)
    for (const auto& [w, c] : polys[col].terms()) grid[index.at(w)][col] = c;
  if (extra) {
    extra_column->assign(index.size(), Rational(0));
    for (const auto& [w, c] : extra->terms()) (*extra_column)[index.at(w)] = c;
  }
  return grid;
}

}  // namespace detail

// Decides whether P lies in the algebra generated by Lambda_1..Lambda_n,
// degree by degree: the homogeneous component of degree m is tested for
// membership in the exact span of all Lambda-products of weight m. The
// word space grows as n^m, so degrees above `degree_bound` and alphabets
// above `alphabet_bound` are refused rather than attempted.
inline MembershipResult symm_membership(const FreePolynomial& p, int degree_bound = 5,
                                        int alphabet_bound = 4) {
  MembershipResult out;
  out.member = true;
  const int n = p.alphabet();
  if (n > alphabet_bound) {
    out.member = false;
    out.refused = true;
    out.refusal = "alphabet " + std::to_string(n) + " above bound " +
                  std::to_string(alphabet_bound);
    return out;
  }
  for (const auto& [degree, component] : p.homogeneous_components()) {
    if (degree > degree_bound) {
      out.member = false;
      out.refused = true;
      out.refusal = "degree " + std::to_string(degree) + " above bound " +
                    std::to_string(degree_bound);
      out.certificate.clear();
      return out;
    }
    const auto comps = compositions(degree, n);
    std::vector<FreePolynomial> products;
    products.reserve(comps.size());
    for (const auto& comp : comps) products.push_back(detail::lambda_product(comp, n));
    std::vector<Rational> target;
    RationalGrid grid = detail::coefficient_columns(products, &component, &target);
    auto sol = solve_any_exact(std::move(grid), std::move(target));
    if (!sol) {
      out.member = false;
      out.certificate.clear();
      return out;
    }
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (!(*sol)[i].is_zero()) out.certificate.emplace_back(comps[i], (*sol)[i]);
  }
  return out;
}

// Theorem 5's "symmetric" side, evaluated numerically: P(y_1..y_n) with the
// y's recomputed from each reordering of a random generic tuple must give
// one value for all n! orderings, exactly, in every trial. A tuple whose
// reordering fails v-level genericity is redrawn.
inline bool is_symmetric_numeric(const FreePolynomial& p, int trials, std::uint64_t seed,
                                 int dim = 2, long entry_bound = 10) {
  const int n = p.alphabet();
  constexpr int kRedrawCap = 100;
  for (int trial = 0; trial < trials; ++trial) {
    SplitMix64 rng(SplitMix64::derive(seed, static_cast<std::uint64_t>(trial)));
    for (int attempt = 0;; ++attempt) {
      if (attempt == kRedrawCap)
        throw std::runtime_error("is_symmetric_numeric: redraw cap exceeded");
      std::vector<Matrix> xs;
      xs.reserve(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) xs.push_back(random_matrix(rng, dim, entry_bound));

      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      std::optional<Matrix> base;
      bool redraw = false;
      do {
        std::vector<Matrix> ordered;
        ordered.reserve(xs.size());
        for (int idx : perm) ordered.push_back(xs[static_cast<std::size_t>(idx)]);
        auto ys = try_conjugated_roots(ordered);
        if (!ys) {
          redraw = true;
          break;
        }
        Matrix value = evaluate(p, *ys);
        if (!base) {
          base = std::move(value);
        } else if (value != *base) {
          return false;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!redraw) break;
    }
  }
  return true;
}

// Ribbon basis desk check at degree d over alphabet n >= d:
//   (i)  the 2^{d-1} ribbon polynomials are linearly independent,
//   (ii) they span exactly the degree-d span of Lambda-products,
//   (iii) sum_J R_J = (y_1 + ... + y_n)^d.
inline bool ribbon_base_check(int d, int alphabet) {
  if (d < 1 || d > 5) throw std::invalid_argument("ribbon_base_check: degree must be in 1..5");
  if (alphabet < d) throw std::invalid_argument("ribbon_base_check: alphabet must be >= degree");

  const auto comps = compositions(d, d);
  const int expected_rank = static_cast<int>(comps.size());  // 2^{d-1}

  std::vector<FreePolynomial> ribbons;
  ribbons.reserve(comps.size());
  for (const auto& J : comps) ribbons.push_back(ribbon(J, alphabet));

  std::vector<FreePolynomial> lambda_prods;
  lambda_prods.reserve(comps.size());
  for (const auto& J : comps) lambda_prods.push_back(detail::lambda_product(J, alphabet));

  auto rank_of = [](const std::vector<FreePolynomial>& polys) {
    RationalGrid grid = detail::coefficient_columns(polys, nullptr, nullptr);
    return rank_exact(std::move(grid));
  };

  if (rank_of(ribbons) != expected_rank) return false;
  if (rank_of(lambda_prods) != expected_rank) return false;
  std::vector<FreePolynomial> both = ribbons;
  both.insert(both.end(), lambda_prods.begin(), lambda_prods.end());
  if (rank_of(both) != expected_rank) return false;  // equal spans

  FreePolynomial sum(alphabet);
  for (const auto& r : ribbons) sum = sum + r;
  FreePolynomial linear(alphabet);
  for (int letter = 1; letter <= alphabet; ++letter)
    linear.add_term({letter}, Rational(1));
  FreePolynomial power = FreePolynomial::one(alphabet);
  for (int i = 0; i < d; ++i) power = power * linear;
  return sum == power;
}

}  // namespace qvieta
