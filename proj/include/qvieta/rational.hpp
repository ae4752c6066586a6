#pragma once

#include <gmpxx.h>

#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qvieta {

// Exact rational scalar over GMP. Values are kept canonical at all times:
// lowest terms, denominator > 0, zero stored as 0/1. Division by zero is
// reported by exception instead of trapping inside libgmp.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // implicit: lets {{1,2},{3,4}} build matrices
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(mpz_class num, mpz_class den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(std::move(num), std::move(den));
    v_.canonicalize();
  }

  // Accepts "p/q" or "p" with optional sign; q may not be zero.
  static Rational parse(const std::string& text) {
    mpq_class v;
    try {
      v = mpq_class(text, 10);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
    }
    if (v.get_den() == 0)
      throw std::domain_error("Rational: zero denominator in \"" + text + "\"");
    v.canonicalize();
    return Rational(raw_tag{}, std::move(v));
  }

  const mpz_class& numerator() const { return v_.get_num(); }
  const mpz_class& denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(raw_tag{}, mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(raw_tag{}, mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(raw_tag{}, mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(raw_tag{}, mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(raw_tag{}, mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_.get_str();
  }

 private:
  struct raw_tag {};
  // skips canonicalization: GMP arithmetic on canonical operands stays canonical
  Rational(raw_tag, mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace qvieta
