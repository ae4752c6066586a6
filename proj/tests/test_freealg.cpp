#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qvieta/freealg.hpp"
#include "qvieta/vieta.hpp"

using namespace qvieta;

namespace {

FreePolynomial word_poly(int alphabet, Word w) {
  return FreePolynomial::monomial(alphabet, std::move(w));
}

FreePolynomial random_poly(SplitMix64& rng, int alphabet, int max_len, int nterms) {
  FreePolynomial p(alphabet);
  for (int t = 0; t < nterms; ++t) {
    Word w(static_cast<std::size_t>(rng.next_in(0, max_len)));
    for (auto& letter : w) letter = static_cast<int>(rng.next_in(1, alphabet));
    p.add_term(w, Rational(rng.next_in(-5, 5), rng.next_in(1, 4)));
  }
  return p;
}

}  // namespace

TEST_CASE("descents come from strict drops only") {
  CHECK(descents({3, 1, 2}) == std::vector<int>{1});
  CHECK(descents({1, 2, 3}).empty());
  CHECK(descents({2, 2, 1}) == std::vector<int>{2});
  CHECK(descents({}).empty());
  CHECK(descents({5}).empty());
}

TEST_CASE("ribbon hand values over the 2-letter alphabet") {
  CHECK(ribbon({2}, 2) == complete_s(2, 2));
  CHECK(ribbon({2}, 2).str() == "y1.y1 + y1.y2 + y2.y2");
  CHECK(ribbon({1, 1}, 2).str() == "y2.y1");
  CHECK(ribbon({1, 1}, 1).is_zero());  // alphabet too small for a descent
  CHECK_THROWS_AS(ribbon({1, 0}, 2), std::invalid_argument);
}

TEST_CASE("single-part ribbons are the complete functions") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 4; ++k) CHECK(ribbon({k}, n) == complete_s(k, n));
}

TEST_CASE("complete functions: base cases and scalar evaluation") {
  CHECK(complete_s(0, 3) == FreePolynomial::one(3));
  CHECK(complete_s(1, 3).str() == "y1 + y2 + y3");
  CHECK(complete_s(2, 2).str() == "y1.y1 + y1.y2 + y2.y2");
  // h_2(1,2) = 1 + 2 + 4 = 7
  const std::vector<Matrix> sc{Matrix::scalar(1, Rational(1)), Matrix::scalar(1, Rational(2))};
  CHECK(evaluate(complete_s(2, 2), sc) == Matrix::scalar(1, Rational(7)));
  CHECK(oracles::complete_classical({Rational(1), Rational(2)}, 2) == Rational(7));
}

TEST_CASE("elementary lambda functions") {
  CHECK(elementary_lambda(1, 3).str() == "y1 + y2 + y3");
  CHECK(elementary_lambda(2, 3).str() == "y2.y1 + y3.y1 + y3.y2");
  CHECK(elementary_lambda(3, 3).str() == "y3.y2.y1");
  CHECK(elementary_lambda(4, 3).is_zero());
  CHECK(elementary_lambda(0, 3) == FreePolynomial::one(3));
  // strictly decreasing words are exactly the all-ones ribbons
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(elementary_lambda(k, n) == ribbon(Composition(static_cast<std::size_t>(k), 1), n));
}

TEST_CASE("free algebra arithmetic") {
  const auto y1 = word_poly(2, {1});
  const auto y2 = word_poly(2, {2});
  CHECK((y1 * y2).str() == "y1.y2");
  const auto l1 = elementary_lambda(1, 2);
  CHECK((l1 * l1).str() == "y1.y1 + y1.y2 + y2.y1 + y2.y2");
  CHECK(l1 * l1 - elementary_lambda(2, 2) == complete_s(2, 2));
  CHECK_THROWS_AS(word_poly(2, {1}) + word_poly(3, {1}), std::invalid_argument);
}

TEST_CASE("free algebra laws on random polynomials") {
  SplitMix64 rng(71);
  for (int trial = 0; trial < 15; ++trial) {
    const auto p = random_poly(rng, 2, 3, 4);
    const auto q = random_poly(rng, 2, 3, 4);
    const auto r = random_poly(rng, 2, 3, 4);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * FreePolynomial::one(2) == p);
    CHECK(FreePolynomial::one(2) * p == p);
  }
}

TEST_CASE("evaluation bridges to the vieta coefficients") {
  for (int n : {2, 3}) {
    const GenericTuple t = random_tuple(n, 2, 80 + static_cast<std::uint64_t>(n), 10);
    const auto ys = conjugated_roots(t.elements);
    const auto as = coeffs_theorem2(ys).as;
    for (int k = 1; k <= n; ++k) {
      const Matrix lhs = evaluate(elementary_lambda(k, n), ys);
      const Matrix expect = k % 2 ? -as[static_cast<std::size_t>(k - 1)]
                                  : as[static_cast<std::size_t>(k - 1)];
      CHECK(lhs == expect);
    }
  }
}

TEST_CASE("empty word evaluates to the identity") {
  const std::vector<Matrix> xs{Matrix::from_rows({{1, 2}, {3, 4}})};
  CHECK(evaluate(FreePolynomial::one(1), xs) == Matrix::identity(2));
  CHECK(evaluate(FreePolynomial::zero(1), xs).is_zero());
  CHECK_THROWS_AS(evaluate(FreePolynomial::one(2), xs), std::invalid_argument);
}

TEST_CASE("commuting scalar evaluation reproduces classical e_k and h_k") {
  const std::vector<Rational> vals{Rational(2), Rational(-1), Rational(3)};
  std::vector<Matrix> sc;
  for (const auto& v : vals) sc.push_back(Matrix::scalar(1, v));
  for (int k = 0; k <= 3; ++k) {
    CHECK(evaluate(elementary_lambda(k, 3), sc).at(0, 0) ==
          oracles::elementary_classical(vals, k));
    CHECK(evaluate(complete_s(k, 3), sc).at(0, 0) == oracles::complete_classical(vals, k));
  }
}

TEST_CASE("text form round-trips") {
  const std::string text = "3/2*y2.y1 + y1.y1";
  const auto p = FreePolynomial::parse(text, 2);
  CHECK(p.coefficient({2, 1}) == Rational(3, 2));
  CHECK(p.coefficient({1, 1}) == Rational(1));
  CHECK(p.str() == "y1.y1 + 3/2*y2.y1");  // canonical length-lex order
  CHECK(FreePolynomial::parse(p.str(), 2) == p);

  SplitMix64 rng(72);
  for (int trial = 0; trial < 25; ++trial) {
    const auto q = random_poly(rng, 3, 4, 5);
    CHECK(FreePolynomial::parse(q.str(), 3) == q);
  }
}

TEST_CASE("parser accepts constants and signs, rejects junk") {
  CHECK(FreePolynomial::parse("0", 2).is_zero());
  CHECK(FreePolynomial::parse("-y1 + 2", 2).coefficient({}) == Rational(2));
  CHECK(FreePolynomial::parse("-y1 + 2", 2).coefficient({1}) == Rational(-1));
  CHECK(FreePolynomial::parse("1/2*y1.y2 - 1/2*y1.y2", 2).is_zero());
  CHECK_THROWS_AS(FreePolynomial::parse("y5", 2), std::invalid_argument);
  CHECK_THROWS_AS(FreePolynomial::parse("z1", 2), std::invalid_argument);
  CHECK_THROWS_AS(FreePolynomial::parse("y1 y2", 2), std::invalid_argument);
  CHECK_THROWS_AS(FreePolynomial::parse("", 2), std::invalid_argument);
}

TEST_CASE("homogeneous components split by word length") {
  const auto p = FreePolynomial::parse("y1 + y1.y2 + 3", 2);
  const auto comps = p.homogeneous_components();
  REQUIRE(comps.size() == 3);
  CHECK(comps.at(0).coefficient({}) == Rational(3));
  CHECK(comps.at(1).coefficient({1}) == Rational(1));
  CHECK(comps.at(2).coefficient({1, 2}) == Rational(1));
}
