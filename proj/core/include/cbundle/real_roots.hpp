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

#include "cbundle/rational.hpp"
#include "cbundle/upoly.hpp"

namespace cbundle {

// Open interval (lo, hi) holding exactly one real root of its polynomial.
// Neither endpoint is a root.
struct IsolatingInterval {
  Rat lo;
  Rat hi;
};

// Sturm chain with sign-preserving integer normalization of each member.
class SturmSequence {
 public:
  explicit SturmSequence(const UPoly& p);

  int variations_at(const Rat& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;
  // Number of distinct real roots in (lo, hi].
  int count(const Rat& lo, const Rat& hi) const;
  int count_all() const;
  const UPoly& poly() const { return p_; }

 private:
  UPoly p_;
  std::vector<std::vector<Int>> chain_;
};

// Sign of p(x) using integer Horner evaluation.
int sign_at(const UPoly& p, const Rat& x);

// Cauchy bound: every real root lies in (-B, B).
Rat root_bound(const UPoly& p);

// Certified brackets for all real roots of a squarefree p, sorted.
// Throws InputError when p is zero or not squarefree.
std::vector<IsolatingInterval> isolate_real_roots(const UPoly& p);
std::vector<IsolatingInterval> isolate_real_roots(const UPoly& p, const Rat& lo, const Rat& hi);

// Shrink the bracket until hi - lo <= width.
void refine(const UPoly& p, IsolatingInterval& iv, const Rat& width);

// Sign of q at the root of p isolated by iv (p squarefree).
int sign_at_root(const UPoly& p, IsolatingInterval& iv, const UPoly& q);

// A rational strictly inside (lo, hi) with small height.
Rat simple_between(const Rat& lo, const Rat& hi);

}  // namespace cbundle
