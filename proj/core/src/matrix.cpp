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

#include "cbundle/matrix.hpp"

#include <sstream>

namespace cbundle {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(RatMatrix& a) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    for (size_t j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(p, j));
    Rat inv = 1 / a(row, col);
    for (size_t j = 0; j < a.cols(); ++j) a(row, j) *= inv;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rat f = a(i, col);
      for (size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RatMatrix inverse(const RatMatrix& m) {
  if (!m.square()) throw InputError("inverse of a non-square matrix");
  size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, RatMatrix::identity(n));
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw RankDeficientError("matrix is singular");
  return aug.block(0, n, n, n);
}

size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return rref(a).size();
}

std::vector<std::vector<Rat>> kernel(const RatMatrix& m) {
  RatMatrix a = m;
  auto piv = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(m.cols(), 0);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

PolyMatrix to_poly(const RatMatrix& m) {
  return m.map([](const Rat& x) { return MPoly(x); });
}

MPoly quadratic_form(const RatMatrix& m, const Ring* ring, size_t first_var) {
  std::vector<MPoly> x;
  for (size_t i = 0; i < m.rows(); ++i) x.push_back(MPoly::variable(ring, first_var + i));
  return quadratic_form(to_poly(m), x);
}

MPoly quadratic_form(const PolyMatrix& m, const std::vector<MPoly>& x) {
  if (!m.square() || m.rows() != x.size()) throw InputError("quadratic form shape mismatch");
  MPoly q;
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) {
      if (m(i, j).is_zero()) continue;
      q += m(i, j) * x[i] * x[j];
    }
  return q;
}

std::string to_string(const RatMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace cbundle
