#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qvieta/rational.hpp"

namespace qvieta {

// Square matrix of exact rationals: the concrete stand-in for an element of
// a noncommutative ring. Dimension is fixed at construction; equality is
// entrywise exact equality. All operations are pure.
class Matrix {
 public:
  explicit Matrix(int dim) : dim_(checked_dim(dim)), e_(static_cast<std::size_t>(dim) * dim) {}

  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    Matrix m(static_cast<int>(rows.size()));
    for (int r = 0; r < m.dim_; ++r) {
      if (static_cast<int>(rows[r].size()) != m.dim_)
        throw std::invalid_argument("Matrix: rows must form a square grid");
      for (int c = 0; c < m.dim_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
  }
  static Matrix identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = Rational(1);
    return m;
  }
  static Matrix zero(int dim) { return Matrix(dim); }
  static Matrix scalar(int dim, const Rational& c) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = c;
    return m;
  }

  int dim() const { return dim_; }
  Rational& at(int r, int c) { return e_[index(r, c)]; }
  const Rational& at(int r, int c) const { return e_[index(r, c)]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_dim(b);
    Matrix r(a.dim_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_dim(b);
    Matrix r(a.dim_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.require_same_dim(b);
    Matrix r(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
      for (int k = 0; k < a.dim_; ++k) {
        const Rational& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < a.dim_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }
  friend Matrix operator*(const Rational& c, const Matrix& a) {
    Matrix r(a.dim_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = c * a.e_[i];
    return r;
  }
  Matrix operator-() const {
    Matrix r(dim_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
  }
  Matrix& operator+=(const Matrix& o) { return *this = *this + o; }
  Matrix& operator-=(const Matrix& o) { return *this = *this - o; }

  // x^0 = I; powers by iterated multiplication so intermediates are reproducible
  Matrix pow(int e) const {
    if (e < 0) throw std::invalid_argument("Matrix::pow: negative exponent");
    Matrix r = identity(dim_);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  Rational trace() const {
    Rational t;
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
  }

  // Exact Gaussian elimination, first nonzero pivot in column order;
  // the determinant is the signed product of pivots.
  Rational det() const {
    Matrix m = *this;
    bool negate = false;
    Rational result(1);
    for (int k = 0; k < dim_; ++k) {
      int pivot = -1;
      for (int r = k; r < dim_; ++r)
        if (!m.at(r, k).is_zero()) { pivot = r; break; }
      if (pivot < 0) return Rational(0);
      if (pivot != k) { m.swap_rows(pivot, k); negate = !negate; }
      const Rational pk = m.at(k, k);
      for (int i = k + 1; i < dim_; ++i) {
        if (m.at(i, k).is_zero()) continue;
        const Rational f = m.at(i, k) / pk;
        for (int j = k; j < dim_; ++j) m.at(i, j) -= f * m.at(k, j);
      }
      result *= pk;
    }
    return negate ? -result : result;
  }

  // Gauss-Jordan on [A | I]; nullopt when singular.
  std::optional<Matrix> try_inverse() const {
    Matrix m = *this;
    Matrix inv = identity(dim_);
    for (int k = 0; k < dim_; ++k) {
      int pivot = -1;
      for (int r = k; r < dim_; ++r)
        if (!m.at(r, k).is_zero()) { pivot = r; break; }
      if (pivot < 0) return std::nullopt;
      if (pivot != k) { m.swap_rows(pivot, k); inv.swap_rows(pivot, k); }
      const Rational pk = m.at(k, k);
      for (int j = 0; j < dim_; ++j) {
        m.at(k, j) /= pk;
        inv.at(k, j) /= pk;
      }
      for (int i = 0; i < dim_; ++i) {
        if (i == k || m.at(i, k).is_zero()) continue;
        const Rational f = m.at(i, k);
        for (int j = 0; j < dim_; ++j) {
          m.at(i, j) -= f * m.at(k, j);
          inv.at(i, j) -= f * inv.at(k, j);
        }
      }
    }
    return inv;
  }

  Matrix inverse() const {
    auto inv = try_inverse();
    if (!inv) throw std::domain_error("Matrix: not invertible");
    return std::move(*inv);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.dim_ == b.dim_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (int r = 0; r < m.dim_; ++r) {
      os << (r ? ",[" : "[");
      for (int c = 0; c < m.dim_; ++c) os << (c ? "," : "") << m.at(r, c);
      os << ']';
    }
    return os << ']';
  }

 private:
  static int checked_dim(int dim) {
    if (dim < 1) throw std::invalid_argument("Matrix: dimension must be positive");
    return dim;
  }
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * dim_ + c;
  }
  void require_same_dim(const Matrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("Matrix: dimension mismatch");
  }
  void swap_rows(int a, int b) {
    for (int j = 0; j < dim_; ++j) std::swap(at(a, j), at(b, j));
  }

  int dim_;
  std::vector<Rational> e_;  // row-major
};

inline bool commute(const Matrix& a, const Matrix& b) { return a * b == b * a; }

}  // namespace qvieta
