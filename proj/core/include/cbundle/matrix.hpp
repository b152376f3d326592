// Copyright 2026 The cbundle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cbundle/errors.hpp"
#include "cbundle/mpoly.hpp"
#include "cbundle/rational.hpp"

namespace cbundle {

// Dense row-major matrix over an exact commutative ring T (Rat or MPoly).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    a_.reserve(r_ * c_);
    for (const auto& row : rows) {
      if (row.size() != c_) throw InputError("ragged matrix literal");
      for (const auto& x : row) a_.push_back(x);
    }
  }

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }
  T& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const T& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (!square()) return false;
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = i + 1; j < c_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  bool is_zero_matrix() const {
    for (const auto& x : a_)
      if (!is_zero(x)) return false;
    return true;
  }

  Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    if (r0 + nr > r_ || c0 + nc > c_) throw InputError("block out of range");
    Matrix b(nr, nc);
    for (size_t i = 0; i < nr; ++i)
      for (size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(size_t r0, size_t c0, const Matrix& b) {
    if (r0 + b.r_ > r_ || c0 + b.c_ > c_) throw InputError("block out of range");
    for (size_t i = 0; i < b.r_; ++i)
      for (size_t j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  // Minor with row i and column j deleted.
  Matrix without(size_t i, size_t j) const {
    Matrix m(r_ - 1, c_ - 1);
    for (size_t a = 0, ra = 0; a < r_; ++a) {
      if (a == i) continue;
      for (size_t b = 0, cb = 0; b < c_; ++b) {
        if (b == j) continue;
        m(ra, cb++) = (*this)(a, b);
      }
      ++ra;
    }
    return m;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(r_, c_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.a_) x = -x;
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw InputError("matrix shape mismatch in product");
    Matrix m(a.r_, b.c_);
    for (size_t i = 0; i < a.r_; ++i)
      for (size_t k = 0; k < a.c_; ++k) {
        const T& x = a(i, k);
        if (is_zero(x)) continue;
        for (size_t j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
      }
    return m;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.a_) x = s * x;
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) return false;
    for (size_t k = 0; k < a.a_.size(); ++k)
      if (!(a.a_[k] == b.a_[k])) return false;
    return true;
  }

 private:
  void check_same(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw InputError("matrix shape mismatch");
  }
  size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using RatMatrix = Matrix<Rat>;
using PolyMatrix = Matrix<MPoly>;

// Fraction-free Bareiss elimination; every division is exact.
template <class T>
T det(Matrix<T> m) {
  if (!m.square()) throw InputError("determinant of a non-square matrix");
  size_t n = m.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      size_t p = k + 1;
      while (p < n && is_zero(m(p, k))) ++p;
      if (p == n) return T(0);
      for (size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        T num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_div(num, prev);
      }
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return negate ? T(-d) : d;
}

// Classical adjugate via cofactors; valid for singular matrices too.
template <class T>
Matrix<T> adjugate(const Matrix<T>& m) {
  if (!m.square()) throw InputError("adjugate of a non-square matrix");
  size_t n = m.rows();
  Matrix<T> adj(n, n);
  if (n == 1) {
    adj(0, 0) = T(1);
    return adj;
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      T c = det(m.without(i, j));
      adj(j, i) = ((i + j) % 2) ? T(-c) : c;
    }
  return adj;
}

// Gauss-Jordan inverse; throws RankDeficientError when singular.
RatMatrix inverse(const RatMatrix& m);
size_t rank(const RatMatrix& m);
// Basis of the right kernel {x : m x = 0}, as columns.
std::vector<std::vector<Rat>> kernel(const RatMatrix& m);

// Entry-wise conversion of a rational matrix to constant polynomials.
PolyMatrix to_poly(const RatMatrix& m);
// Matrix of the quadratic form x^T M x in the given variables.
MPoly quadratic_form(const RatMatrix& m, const Ring* ring, size_t first_var = 0);
MPoly quadratic_form(const PolyMatrix& m, const std::vector<MPoly>& x);
std::string to_string(const RatMatrix& m);

}  // namespace cbundle
