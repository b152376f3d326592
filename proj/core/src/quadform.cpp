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

#include "cbundle/quadform.hpp"

#include "cbundle/errors.hpp"

namespace cbundle {

TernaryForm::TernaryForm(const RatMatrix& m) : m_(m) {
  if (m.rows() != 3 || m.cols() != 3) throw InputError("ternary form needs a 3x3 matrix");
  if (!m.is_symmetric()) throw InputError("form matrix is not symmetric");
}

TernaryForm TernaryForm::from_poly(const MPoly& q) {
  if (q.is_zero()) return TernaryForm();
  MPoly p = q.with_ring(Ring::uvw());
  if (p.total_degree() != 2 || !p.is_homogeneous()) throw InputError("not a ternary quadratic form: " + q.to_string());
  RatMatrix m(3, 3);
  for (const auto& [mo, c] : p.terms()) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < 3; ++i)
      for (unsigned k = 0; k < mono::exp(mo, i); ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      m(idx[0], idx[0]) = c;
    } else {
      m(idx[0], idx[1]) = c / 2;
      m(idx[1], idx[0]) = c / 2;
    }
  }
  return TernaryForm(m);
}

TernaryForm TernaryForm::from_upper(const Rat& m11, const Rat& m12, const Rat& m13, const Rat& m22, const Rat& m23,
                                    const Rat& m33) {
  return TernaryForm(RatMatrix{{m11, m12, m13}, {m12, m22, m23}, {m13, m23, m33}});
}

MPoly TernaryForm::poly() const { return quadratic_form(m_, Ring::uvw()); }

Rat TernaryForm::eval(const std::vector<Rat>& p) const {
  Rat s = 0;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) s += m_(i, j) * p[i] * p[j];
  return s;
}

TernaryForm TernaryForm::transformed(const RatMatrix& g) const { return TernaryForm(g.transpose() * m_ * g); }

TernaryForm TernaryForm::scaled(const Rat& s) const { return TernaryForm(Rat(s) * m_); }

RankDisc rank_disc(const TernaryForm& q) {
  RankDisc r;
  r.rank = static_cast<int>(rank(q.matrix()));
  r.disc = -det(q.matrix());
  r.disc_is_square = is_square(r.disc);
  return r;
}

namespace {

// Congruence step on (A, G): column/row operation col_i += f * col_k.
void add_multiple(RatMatrix& a, RatMatrix& g, size_t i, size_t k, const Rat& f) {
  size_t n = a.rows();
  for (size_t r = 0; r < n; ++r) a(r, i) += f * a(r, k);
  for (size_t c = 0; c < n; ++c) a(i, c) += f * a(k, c);
  for (size_t r = 0; r < g.rows(); ++r) g(r, i) += f * g(r, k);
}

void swap_index(RatMatrix& a, RatMatrix& g, size_t i, size_t j) {
  size_t n = a.rows();
  for (size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  for (size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
  for (size_t r = 0; r < g.rows(); ++r) std::swap(g(r, i), g(r, j));
}

}  // namespace

Diagonalization diagonalize(const RatMatrix& m) {
  if (!m.is_symmetric()) throw InputError("diagonalize needs a symmetric matrix");
  size_t n = m.rows();
  RatMatrix a = m, g = RatMatrix::identity(n);
  for (size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      size_t j = k + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) {
        swap_index(a, g, k, j);
      } else {
        j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) continue;
        add_multiple(a, g, k, j, 1);
      }
    }
    for (size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      add_multiple(a, g, i, k, -a(i, k) / a(k, k));
    }
  }
  // Move zero entries to the end, keeping the order of the rest.
  std::vector<size_t> order;
  for (size_t i = 0; i < n; ++i)
    if (a(i, i) != 0) order.push_back(i);
  for (size_t i = 0; i < n; ++i)
    if (a(i, i) == 0) order.push_back(i);
  Diagonalization out;
  out.g = RatMatrix(n, n);
  for (size_t c = 0; c < n; ++c) {
    out.d.push_back(a(order[c], order[c]));
    for (size_t r = 0; r < n; ++r) out.g(r, c) = g(r, order[c]);
  }
  return out;
}

Signature signature(const RatMatrix& m) {
  Signature s;
  for (const auto& x : diagonalize(m).d) {
    if (x > 0) ++s.plus;
    else if (x < 0) ++s.minus;
    else ++s.zero;
  }
  return s;
}

Case1Normalization normalize_case1(const TernaryForm& q1) {
  auto rd = rank_disc(q1);
  if (rd.rank != 3) throw DispatchError("rank-3 normalization needs a nondegenerate form");
  if (!rd.disc_is_square) throw DispatchError("Case 1 hypothesis fails: disc(Q1) = " + to_string(rd.disc) + " is not a square");
  auto dg = diagonalize(q1.matrix());
  Case1Normalization out;
  out.a = dg.d[0];
  out.b = dg.d[1];
  auto t = sqrt_exact(-out.a * out.b / dg.d[2]);
  if (!t) throw InternalError("square discriminant without rational rescaling");
  RatMatrix scale = RatMatrix::diagonal({1, 1, *t});
  out.change.g = dg.g * scale;
  return out;
}

Case2Normalization normalize_case2(const TernaryForm& q1, const TernaryForm& q2, const TernaryForm& q3) {
  const RatMatrix& m1 = q1.matrix();
  if (rank(m1) != 2) throw DispatchError("rank-2 normalization needs rank(Q1) = 2");
  auto ker = kernel(m1);
  const auto& r = ker.at(0);
  // Two standard basis vectors completing the radical to a basis.
  size_t i = 0, j = 0;
  bool found = false;
  for (size_t x = 0; x < 3 && !found; ++x)
    for (size_t y = x + 1; y < 3 && !found; ++y) {
      size_t z = 3 - x - y;
      if (r[z] != 0) {
        i = x;
        j = y;
        found = true;
      }
    }
  RatMatrix c(3, 2);
  c(i, 0) = 1;
  c(j, 1) = 1;
  auto dg = diagonalize(c.transpose() * m1 * c);
  RatMatrix ch = c * dg.g;
  Case2Normalization out;
  out.change.g = RatMatrix(3, 3);
  for (size_t k = 0; k < 3; ++k) {
    out.change.g(k, 0) = r[k];
    out.change.g(k, 1) = ch(k, 0);
    out.change.g(k, 2) = ch(k, 1);
  }
  out.a = dg.d[0];
  out.b = dg.d[1];
  if (out.a == 0 || out.b == 0) throw InternalError("restricted form is degenerate");
  const RatMatrix& g = out.change.g;
  TernaryForm p2 = q2.transformed(g);
  out.lambda = p2.matrix()(0, 0);
  if (out.lambda == 0) throw DispatchError("Q2 vanishes at the vertex of Q1: quartic singular at [1:0:0] witness");
  Rat s = -out.a * out.b / out.lambda;
  out.change.scale2 = s;
  out.change.scale3 = s * s;
  out.q1 = q1.transformed(g);
  out.q2 = p2.scaled(s);
  out.q3 = q3.transformed(g).scaled(s * s);
  return out;
}

}  // namespace cbundle
