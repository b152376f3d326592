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

#include <string>
#include <utility>
#include <vector>

#include "cbundle/mpoly.hpp"
#include "cbundle/rational.hpp"

namespace cbundle {

// Dense univariate polynomial over Q, coefficients stored low degree first.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);
  UPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  UPoly(long c) : UPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  UPoly(int c) : UPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static UPoly x();
  // p must involve at most one variable of its ring.
  static UPoly from_mpoly(const MPoly& p);
  MPoly to_mpoly(const Ring* ring, size_t var) const;

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const Rat& lead() const { return c_.back(); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return a.c_ != b.c_; }

  UPoly scaled(const Rat& s) const;
  UPoly monic() const;
  // Positive rational multiple with coprime integer coefficients.
  UPoly primitive() const;
  UPoly derivative() const;
  Rat eval(const Rat& t) const;
  UPoly compose(const UPoly& inner) const;
  UPoly pow(unsigned n) const;

  std::string to_string(const std::string& var = "T") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
inline UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
inline UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
// Extended gcd: s*a + t*b = g with g monic.
void xgcd(const UPoly& a, const UPoly& b, UPoly& g, UPoly& s, UPoly& t);
// p / gcd(p, p'), monic.
UPoly squarefree_part(const UPoly& p);
bool is_separable(const UPoly& p);
Rat resultant(const UPoly& a, const UPoly& b);
Rat discriminant(const UPoly& p);

// Binary forms in a two-variable ring. dehomogenize(f, k) sets variable k
// to 1 and keeps the other one as the univariate variable.
UPoly dehomogenize(const MPoly& f, size_t set_to_one);
// Squarefree as a binary form: squarefree on the chart where var 1 = 1 and
// the point at infinity [1:0] is at most a simple root.
bool binary_form_separable(const MPoly& f);

}  // namespace cbundle
