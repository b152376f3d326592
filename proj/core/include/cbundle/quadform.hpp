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

#include <vector>

#include "cbundle/matrix.hpp"
#include "cbundle/mpoly.hpp"
#include "cbundle/rational.hpp"

namespace cbundle {

// Ternary quadratic form, stored by its symmetric matrix with x M x^T = Q.
class TernaryForm {
 public:
  TernaryForm() : m_(3, 3) {}
  explicit TernaryForm(const RatMatrix& m);
  static TernaryForm from_poly(const MPoly& q);
  // Upper-triangle entries m11, m12, m13, m22, m23, m33.
  static TernaryForm from_upper(const Rat& m11, const Rat& m12, const Rat& m13, const Rat& m22,
                                const Rat& m23, const Rat& m33);

  const RatMatrix& matrix() const { return m_; }
  MPoly poly() const;
  Rat eval(const std::vector<Rat>& p) const;
  // The form x -> Q(g x), with matrix g^T M g.
  TernaryForm transformed(const RatMatrix& g) const;
  TernaryForm scaled(const Rat& s) const;
  bool is_zero() const { return m_.is_zero_matrix(); }

  friend bool operator==(const TernaryForm& a, const TernaryForm& b) { return a.m_ == b.m_; }

 private:
  RatMatrix m_;
};

// Normalizing change of coordinates. Applying it replaces Q1 by Q1(g x),
// Q2 by scale2 * Q2(g x) and Q3 by scale3 * Q3(g x).
struct CoordChange {
  RatMatrix g = RatMatrix::identity(3);
  Rat scale2 = 1;
  Rat scale3 = 1;
};

struct RankDisc {
  int rank = 0;
  Rat disc;  // -det(M)
  bool disc_is_square = false;
};

struct Diagonalization {
  std::vector<Rat> d;  // nonzero entries first
  RatMatrix g;         // g^T M g = diag(d)
};

struct Signature {
  int plus = 0;
  int zero = 0;
  int minus = 0;
  friend bool operator==(const Signature& a, const Signature& b) {
    return a.plus == b.plus && a.zero == b.zero && a.minus == b.minus;
  }
};

struct Case1Normalization {
  Rat a, b;
  CoordChange change;
};

struct Case2Normalization {
  Rat a, b;
  Rat lambda;  // Q2(g e1) before rescaling
  CoordChange change;
  TernaryForm q1, q2, q3;
};

RankDisc rank_disc(const TernaryForm& q);
Diagonalization diagonalize(const RatMatrix& m);
Signature signature(const RatMatrix& m);
inline Signature signature(const TernaryForm& q) { return signature(q.matrix()); }

// Requires rank 3 and square discriminant; throws DispatchError otherwise.
Case1Normalization normalize_case1(const TernaryForm& q1);
// Requires rank(q1) = 2; throws DispatchError on rank mismatch or lambda = 0.
Case2Normalization normalize_case2(const TernaryForm& q1, const TernaryForm& q2, const TernaryForm& q3);

}  // namespace cbundle
