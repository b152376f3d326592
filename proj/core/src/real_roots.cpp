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

#include "cbundle/real_roots.hpp"

#include <algorithm>

#include "cbundle/errors.hpp"

namespace cbundle {

namespace {

std::vector<Int> integer_coeffs(const UPoly& p) {
  UPoly q = p.primitive();
  std::vector<Int> out;
  for (const auto& c : q.coeffs()) out.push_back(c.get_num());
  return out;
}

int sign_int_poly(const std::vector<Int>& c, const Rat& x) {
  if (c.empty()) return 0;
  const Int& n = x.get_num();
  const Int& d = x.get_den();
  Int h = c.back();
  Int dp = 1;
  for (size_t i = c.size() - 1; i-- > 0;) {
    dp *= d;
    h = h * n + c[i] * dp;
  }
  return sgn(h);
}

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int sign_at(const UPoly& p, const Rat& x) { return sign_int_poly(integer_coeffs(p), x); }

SturmSequence::SturmSequence(const UPoly& p) : p_(p) {
  if (p.is_zero()) throw InputError("Sturm sequence of the zero polynomial");
  UPoly a = p.primitive(), b = p.derivative().primitive();
  chain_.push_back(integer_coeffs(a));
  while (!b.is_zero()) {
    chain_.push_back(integer_coeffs(b));
    UPoly r = -(a % b);
    a = std::move(b);
    b = r.primitive();
  }
}

int SturmSequence::variations_at(const Rat& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& c : chain_) s.push_back(sign_int_poly(c, x));
  return variations(s);
}

int SturmSequence::variations_at_pos_inf() const {
  std::vector<int> s;
  for (const auto& c : chain_) s.push_back(sgn(c.back()));
  return variations(s);
}

int SturmSequence::variations_at_neg_inf() const {
  std::vector<int> s;
  for (const auto& c : chain_) {
    int v = sgn(c.back());
    if ((c.size() - 1) % 2 == 1) v = -v;
    s.push_back(v);
  }
  return variations(s);
}

int SturmSequence::count(const Rat& lo, const Rat& hi) const { return variations_at(lo) - variations_at(hi); }

int SturmSequence::count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

Rat root_bound(const UPoly& p) {
  if (p.degree() < 1) return 1;
  Rat m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rat(abs(p.coeff(i) / p.lead())));
  // Round up to an integer to keep endpoints simple.
  Rat b = m + 1;
  Int c = b.get_num() / b.get_den() + 1;
  return Rat(c);
}

Rat simple_between(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw InputError("empty interval");
  if (lo < 0 && hi > 0) return 0;
  // Smallest denominator 2^k such that some k-dyadic lies strictly inside.
  Int den = 1;
  for (int iter = 0; iter < 4096; ++iter) {
    Rat scaled = lo * den;
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    Rat cand(Int(f + 1), den);
    cand.canonicalize();
    if (cand > lo && cand < hi) return cand;
    den *= 2;
  }
  return (lo + hi) / 2;
}

namespace {

// Pick a split point inside (lo, hi) that is not a root of p.
Rat nonroot_split(const UPoly& p, const Rat& lo, const Rat& hi) {
  Rat mid = (lo + hi) / 2;
  for (int k = 3; p.eval(mid) == 0; ++k) mid = lo + (hi - lo) / k;
  return mid;
}

void isolate_rec(const UPoly& p, const SturmSequence& s, const Rat& lo, const Rat& hi, int n,
                 std::vector<IsolatingInterval>& out) {
  if (n == 0) return;
  if (n == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rat mid = nonroot_split(p, lo, hi);
  int left = s.count(lo, mid);
  isolate_rec(p, s, lo, mid, left, out);
  isolate_rec(p, s, mid, hi, n - left, out);
}

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const UPoly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) throw InputError("root isolation of the zero polynomial");
  if (!is_separable(p)) throw InputError("root isolation needs a squarefree polynomial");
  if (p.eval(lo) == 0 || p.eval(hi) == 0) throw InputError("interval endpoint is a root");
  std::vector<IsolatingInterval> out;
  if (p.degree() < 1) return out;
  SturmSequence s(p);
  isolate_rec(p, s, lo, hi, s.count(lo, hi), out);
  return out;
}

std::vector<IsolatingInterval> isolate_real_roots(const UPoly& p) {
  if (p.is_zero()) throw InputError("root isolation of the zero polynomial");
  Rat b = root_bound(p);
  return isolate_real_roots(p, -b, b);
}

void refine(const UPoly& p, IsolatingInterval& iv, const Rat& width) {
  int slo = sign_at(p, iv.lo);
  while (iv.hi - iv.lo > width) {
    Rat mid = nonroot_split(p, iv.lo, iv.hi);
    int sm = sign_at(p, mid);
    if (sm == slo) iv.lo = mid;
    else iv.hi = mid;
  }
}

int sign_at_root(const UPoly& p, IsolatingInterval& iv, const UPoly& q) {
  if (q.is_zero()) return 0;
  UPoly g = gcd(p, q);
  if (g.degree() > 0 && sign_at(g, iv.lo) * sign_at(g, iv.hi) < 0) return 0;
  if (q.degree() < 1) return sgn(q.coeff(0));
  SturmSequence sq(q);
  int slo = sign_at(p, iv.lo);
  while (sign_at(q, iv.lo) == 0 || sign_at(q, iv.hi) == 0 || sq.count(iv.lo, iv.hi) > 0) {
    Rat mid = nonroot_split(p, iv.lo, iv.hi);
    if (sign_at(p, mid) == slo) iv.lo = mid;
    else iv.hi = mid;
  }
  return sign_at(q, iv.hi);
}

}  // namespace cbundle
