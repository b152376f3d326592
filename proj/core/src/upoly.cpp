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

#include "cbundle/upoly.hpp"

#include <sstream>

#include "cbundle/errors.hpp"

namespace cbundle {

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rat& c) {
  if (c != 0) c_.push_back(c);
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::x() { return UPoly(std::vector<Rat>{0, 1}); }

UPoly UPoly::from_mpoly(const MPoly& p) {
  if (p.is_constant()) return UPoly(p.constant_term());
  int var = -1;
  for (size_t i = 0; i < p.ring()->arity(); ++i) {
    if (p.degree(i) > 0) {
      if (var >= 0) throw InputError("polynomial is not univariate: " + p.to_string());
      var = static_cast<int>(i);
    }
  }
  std::vector<Rat> c(p.degree(var) + 1);
  for (const auto& [m, k] : p.terms()) c[mono::exp(m, var)] = k;
  return UPoly(std::move(c));
}

MPoly UPoly::to_mpoly(const Ring* ring, size_t var) const {
  std::vector<MPoly::Term> terms;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    std::vector<unsigned> e(ring->arity(), 0);
    e[var] = static_cast<unsigned>(i);
    terms.push_back({mono::make(e), c_[i]});
  }
  return MPoly::from_terms(ring, std::move(terms));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c));
}

UPoly UPoly::scaled(const Rat& s) const {
  if (s == 0) return {};
  UPoly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

UPoly UPoly::monic() const { return is_zero() ? *this : scaled(1 / lead()); }

UPoly UPoly::primitive() const {
  if (is_zero()) return *this;
  Int den = 1, num = 0;
  for (const auto& c : c_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    num = cbundle::gcd(num, c.get_num());
  }
  return scaled(frac(den, num));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(c));
}

Rat UPoly::eval(const Rat& t) const {
  Rat acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

UPoly UPoly::compose(const UPoly& inner) const {
  UPoly acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * inner + UPoly(c_[i]);
  return acc;
}

UPoly UPoly::pow(unsigned n) const {
  UPoly r(1), b = *this;
  while (n) {
    if (n & 1u) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

std::string UPoly::to_string(const std::string& var) const {
  return to_mpoly(Ring::get({var}), 0).to_string();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InputError("division by the zero polynomial");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rat> r = a.coeffs();
  std::vector<Rat> q(a.degree() - b.degree() + 1);
  const auto& bc = b.coeffs();
  Rat inv = 1 / b.lead();
  for (int i = a.degree(); i >= b.degree(); --i) {
    Rat f = r[i] * inv;
    if (f == 0) continue;
    q[i - b.degree()] = f;
    for (int j = 0; j <= b.degree(); ++j) r[i - b.degree() + j] -= f * bc[j];
  }
  r.resize(b.degree());
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.primitive(), y = b.primitive();
  while (!y.is_zero()) {
    UPoly r = (x % y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

void xgcd(const UPoly& a, const UPoly& b, UPoly& g, UPoly& s, UPoly& t) {
  UPoly r0 = a, r1 = b, s0 = 1, s1, t0, t1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    g = r0;
    s = s0;
    t = t0;
    return;
  }
  Rat inv = 1 / r0.lead();
  g = r0.scaled(inv);
  s = s0.scaled(inv);
  t = t0.scaled(inv);
}

UPoly squarefree_part(const UPoly& p) {
  if (p.is_zero()) throw InputError("squarefree part of the zero polynomial");
  return (p / gcd(p, p.derivative())).monic();
}

bool is_separable(const UPoly& p) {
  if (p.is_zero()) throw InputError("separability of the zero polynomial");
  return gcd(p, p.derivative()).degree() == 0;
}

Rat resultant(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  // Euclidean recurrence: Res(a,b) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r).
  UPoly f = a, g = b;
  Rat acc = 1;
  for (;;) {
    int m = f.degree(), n = g.degree();
    if (n == 0) {
      Rat p = 1;
      for (int i = 0; i < m; ++i) p *= g.lead();
      return acc * p;
    }
    UPoly r = f % g;
    if (r.is_zero()) return 0;
    if ((m % 2 == 1) && (n % 2 == 1)) acc = -acc;
    for (int i = 0; i < m - r.degree(); ++i) acc *= g.lead();
    f = std::move(g);
    g = std::move(r);
  }
}

Rat discriminant(const UPoly& p) {
  int n = p.degree();
  if (n < 1) throw InputError("discriminant needs positive degree");
  Rat r = resultant(p, p.derivative()) / p.lead();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

UPoly dehomogenize(const MPoly& f, size_t set_to_one) {
  if (f.is_constant()) return UPoly(f.constant_term());
  if (f.ring()->arity() != 2) throw InputError("binary form expected");
  size_t keep = 1 - set_to_one;
  std::vector<Rat> c(f.degree(keep) + 1);
  for (const auto& [m, k] : f.terms()) c[mono::exp(m, keep)] += k;
  return UPoly(std::move(c));
}

bool binary_form_separable(const MPoly& f) {
  if (f.is_zero()) throw InputError("binary form is identically zero");
  if (!f.is_homogeneous()) throw InputError("binary form is not homogeneous");
  int d = f.total_degree();
  if (d == 0) return true;
  UPoly p = dehomogenize(f, 1);
  // Roots at [1:0] show up as a degree drop on this chart.
  if (p.degree() < d - 1) return false;
  return p.degree() == 0 || is_separable(p);
}

}  // namespace cbundle
