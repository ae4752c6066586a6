#pragma once

#include <cctype>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qvieta/combinatorics.hpp"
#include "qvieta/matrix.hpp"

namespace qvieta {

// Letters 1..n; the empty word is the unit of the free algebra.
using Word = std::vector<int>;
using Composition = std::vector<int>;

// Positions k (1-based) where letter k strictly exceeds letter k+1.
inline std::vector<int> descents(const Word& w) {
  std::vector<int> out;
  for (std::size_t k = 1; k < w.size(); ++k)
    if (w[k - 1] > w[k]) out.push_back(static_cast<int>(k));
  return out;
}

// Length-lexicographic word order; fixed so coefficient vectors, printed
// polynomials, and membership certificates are reproducible.
struct LengthLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Element of the free associative algebra over the rationals on y_1..y_n:
// a finitely supported map from words to coefficients. Zero coefficients
// are never stored.
class FreePolynomial {
 public:
  using TermMap = std::map<Word, Rational, LengthLex>;

  explicit FreePolynomial(int alphabet) : alphabet_(checked_alphabet(alphabet)) {}

  static FreePolynomial zero(int alphabet) { return FreePolynomial(alphabet); }
  static FreePolynomial one(int alphabet) { return monomial(alphabet, {}, Rational(1)); }
  static FreePolynomial monomial(int alphabet, Word w, Rational coeff = Rational(1)) {
    FreePolynomial p(alphabet);
    for (int letter : w)
      if (letter < 1 || letter > alphabet)
        throw std::invalid_argument("FreePolynomial: letter out of alphabet");
    if (!coeff.is_zero()) p.terms_.emplace(std::move(w), std::move(coeff));
    return p;
  }

  int alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Word& w, const Rational& c) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend FreePolynomial operator+(const FreePolynomial& a, const FreePolynomial& b) {
    a.require_same_alphabet(b);
    FreePolynomial r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
  }
  friend FreePolynomial operator-(const FreePolynomial& a, const FreePolynomial& b) {
    a.require_same_alphabet(b);
    FreePolynomial r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
    return r;
  }
  // Bilinear extension of word concatenation.
  friend FreePolynomial operator*(const FreePolynomial& a, const FreePolynomial& b) {
    a.require_same_alphabet(b);
    FreePolynomial r(a.alphabet_);
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.add_term(w, ca * cb);
      }
    return r;
  }
  friend FreePolynomial operator*(const Rational& c, const FreePolynomial& a) {
    FreePolynomial r(a.alphabet_);
    if (c.is_zero()) return r;
    for (const auto& [w, cw] : a.terms_) r.terms_.emplace(w, c * cw);
    return r;
  }
  FreePolynomial operator-() const { return Rational(-1) * *this; }

  friend bool operator==(const FreePolynomial& a, const FreePolynomial& b) {
    return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const FreePolynomial& a, const FreePolynomial& b) {
    return !(a == b);
  }

  // Split by word length. The algebra is graded; membership is decided
  // per component.
  std::map<int, FreePolynomial> homogeneous_components() const {
    std::map<int, FreePolynomial> out;
    for (const auto& [w, c] : terms_) {
      auto [it, inserted] = out.try_emplace(static_cast<int>(w.size()), alphabet_);
      it->second.terms_.emplace(w, c);
    }
    return out;
  }

  // Canonical text form, e.g. "3/2*y2.y1 + y1.y1"; degree-0 terms print as
  // bare rationals; the zero polynomial prints as "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      const bool neg = c.sign() < 0;
      const Rational mag = neg ? -c : c;
      if (first) {
        if (neg) os << '-';
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      const bool unit_coeff = mag == Rational(1);
      if (w.empty()) {
        os << mag.str();
      } else {
        if (!unit_coeff) os << mag.str() << '*';
        for (std::size_t t = 0; t < w.size(); ++t) os << (t ? "." : "") << 'y' << w[t];
      }
    }
    return os.str();
  }

  // Inverse of str(); accepts optional whitespace around tokens.
  static FreePolynomial parse(const std::string& text, int alphabet) {
    FreePolynomial p(alphabet);
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto fail = [&](const std::string& why) -> void {
      throw std::invalid_argument("FreePolynomial::parse: " + why + " at offset " +
                                  std::to_string(pos));
    };
    auto parse_uint = [&]() -> std::string {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) fail("expected digits");
      return text.substr(start, pos - start);
    };

    skip_ws();
    if (pos == text.size()) fail("empty input");
    // tolerate a bare "0"
    bool first = true;
    while (pos < text.size()) {
      skip_ws();
      if (pos == text.size()) break;
      int sign = 1;
      if (text[pos] == '+' || text[pos] == '-') {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Rational coeff(1);
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::string num = parse_uint();
        std::string den = "1";
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          den = parse_uint();
        }
        coeff = Rational::parse(num + "/" + den);
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
          skip_ws();
        } else {
          // constant term
          p.add_term({}, sign < 0 ? -coeff : coeff);
          first = false;
          continue;
        }
      }
      if (pos == text.size() || text[pos] != 'y') fail("expected word letter 'y<k>'");
      Word w;
      while (pos < text.size() && text[pos] == 'y') {
        ++pos;
        const int letter = std::stoi(parse_uint());
        if (letter < 1 || letter > alphabet) fail("letter y" + std::to_string(letter) + " outside alphabet");
        w.push_back(letter);
        if (pos < text.size() && text[pos] == '.') {
          ++pos;
          if (pos == text.size() || text[pos] != 'y') fail("expected letter after '.'");
        } else {
          break;
        }
      }
      p.add_term(w, sign < 0 ? -coeff : coeff);
      first = false;
    }
    return p;
  }

 private:
  static int checked_alphabet(int n) {
    if (n < 1) throw std::invalid_argument("FreePolynomial: alphabet must be positive");
    return n;
  }
  void require_same_alphabet(const FreePolynomial& o) const {
    if (alphabet_ != o.alphabet_)
      throw std::invalid_argument("FreePolynomial: alphabet mismatch");
  }

  int alphabet_;
  TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const FreePolynomial& p) {
  return os << p.str();
}

namespace detail {

// All n^m words of length m, lexicographic. Desk-scale guard keeps runaway
// enumerations out.
inline void for_each_word(int alphabet, int length, const auto& fn) {
  if (length < 0) throw std::invalid_argument("word length must be nonnegative");
  double count = 1;
  for (int i = 0; i < length; ++i) count *= alphabet;
  if (count > 5e6) throw std::invalid_argument("word enumeration too large");
  Word w(static_cast<std::size_t>(length), 1);
  if (length == 0) {
    fn(w);
    return;
  }
  while (true) {
    fn(w);
    int pos = length - 1;
    while (pos >= 0 && w[static_cast<std::size_t>(pos)] == alphabet) {
      w[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++w[static_cast<std::size_t>(pos)];
  }
}

}  // namespace detail

// Ribbon Schur function R_J: all words of length sum(J) whose descent set
// is exactly the partial sums j_1, j_1+j_2, ..., j_1+...+j_{k-1}. Direct
// enumeration of the n^m words. May be zero when the alphabet is too small.
inline FreePolynomial ribbon(const Composition& J, int alphabet) {
  int m = 0;
  for (int part : J) {
    if (part < 1) throw std::invalid_argument("ribbon: composition parts must be positive");
    m += part;
  }
  std::vector<int> target;
  int acc = 0;
  for (std::size_t t = 0; t + 1 < J.size(); ++t) {
    acc += J[t];
    target.push_back(acc);
  }
  FreePolynomial p(alphabet);
  detail::for_each_word(alphabet, m, [&](const Word& w) {
    if (descents(w) == target) p.add_term(w, Rational(1));
  });
  return p;
}

// S_k: sum over weakly increasing words of length k; S_0 = 1.
inline FreePolynomial complete_s(int k, int alphabet) {
  if (k < 0) throw std::invalid_argument("complete_s: negative degree");
  FreePolynomial p(alphabet);
  Word w;
  auto rec = [&](auto&& self, int start, int remaining) -> void {
    if (remaining == 0) {
      p.add_term(w, Rational(1));
      return;
    }
    for (int letter = start; letter <= alphabet; ++letter) {
      w.push_back(letter);
      self(self, letter, remaining - 1);
      w.pop_back();
    }
  };
  rec(rec, 1, k);
  return p;
}

// Lambda_k = (-1)^k a_k: sum over strictly decreasing words of length k,
// one per k-subset of the alphabet. Zero when k > n; Lambda_0 = 1.
inline FreePolynomial elementary_lambda(int k, int alphabet) {
  if (k < 0) throw std::invalid_argument("elementary_lambda: negative degree");
  FreePolynomial p(alphabet);
  for (const auto& tuple : increasing_tuples(alphabet, k)) {
    Word w(tuple.rbegin(), tuple.rend());
    p.add_term(w, Rational(1));
  }
  return p;
}

// Substitutes ring elements for the letters; the empty word maps to the
// identity matrix.
inline Matrix evaluate(const FreePolynomial& p, std::span<const Matrix> assignment) {
  if (static_cast<int>(assignment.size()) != p.alphabet())
    throw std::invalid_argument("evaluate: assignment length must equal alphabet");
  const int d = assignment[0].dim();
  Matrix acc(d);
  for (const auto& [w, c] : p.terms()) {
    Matrix prod = Matrix::identity(d);
    for (int letter : w) prod = prod * assignment[static_cast<std::size_t>(letter - 1)];
    acc += c * prod;
  }
  return acc;
}

}  // namespace qvieta
