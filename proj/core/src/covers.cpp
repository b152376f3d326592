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

#include "cbundle/covers.hpp"

#include "cbundle/elimination.hpp"
#include "cbundle/errors.hpp"
#include "cbundle/random.hpp"
#include "cbundle/real_roots.hpp"

namespace cbundle {

MPoly pencil_sextic(const RatMatrix& m1, const RatMatrix& m2, const RatMatrix& m3) {
  const Ring* r = Ring::t0t1();
  MPoly t0 = MPoly::variable(r, 0), t1 = MPoly::variable(r, 1);
  MPoly c1 = t0 * t0, c2 = t0 * t1 * 2, c3 = t1 * t1;
  PolyMatrix m(3, 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) m(i, j) = c1.scaled(m1(i, j)) + c2.scaled(m2(i, j)) + c3.scaled(m3(i, j));
  return det(m).with_ring(r);
}

CoverSpec make_cover(const TernaryForm& q1, const TernaryForm& q2, const TernaryForm& q3) {
  CoverSpec s;
  s.q1 = q1;
  s.q2 = q2;
  s.q3 = q3;
  MPoly p1 = q1.poly(), p2 = q2.poly(), p3 = q3.poly();
  s.delta = (p2 * p2 - p1 * p3).with_ring(Ring::uvw());
  s.W = pencil_sextic(q1.matrix(), q2.matrix(), q3.matrix());
  return s;
}

CoverSpec build_cover(const TernaryForm& q1, const TernaryForm& q2, const TernaryForm& q3, std::uint64_t seed) {
  CoverSpec s = make_cover(q1, q2, q3);
  if (!s.delta.is_zero()) {
    s.smooth = check_quartic_smooth(s.delta, seed);
    s.smooth_certified = s.smooth.verdict == SmoothVerdict::smooth;
  } else {
    s.smooth.method = "quartic is identically zero";
  }
  s.separable_certified = !s.W.is_zero() && check_sextic_separable(s.W);
  return s;
}

UPoly eval_mod(const MPoly& f, const std::vector<UPoly>& coords, const UPoly& m) {
  if (f.is_constant()) return UPoly(f.constant_term()) % m;
  size_t n = f.ring()->arity();
  std::vector<std::vector<UPoly>> pw(n);
  UPoly acc;
  for (const auto& [mo, c] : f.terms()) {
    UPoly t(c);
    for (size_t i = 0; i < n; ++i) {
      unsigned e = mono::exp(mo, i);
      if (!e) continue;
      auto& p = pw[i];
      if (p.empty()) p.push_back(UPoly(1));
      while (p.size() <= e) p.push_back((p.back() * coords[i]) % m);
      t = (t * p[e]) % m;
    }
    acc = acc + t;
  }
  return acc % m;
}

bool verify_witness(const MPoly& f, const SingularWitness& w) {
  if (w.minpoly.degree() < 1) return false;
  std::vector<UPoly> c(w.coords.begin(), w.coords.end());
  bool all_zero = true;
  for (const auto& x : c) all_zero = all_zero && (x % w.minpoly).is_zero();
  if (all_zero) return false;
  if (!eval_mod(f, c, w.minpoly).is_zero()) return false;
  for (size_t i = 0; i < 3; ++i)
    if (!eval_mod(f.partial(i), c, w.minpoly).is_zero()) return false;
  return true;
}

namespace {

RatMatrix random_invertible(Rng& rng) {
  for (;;) {
    RatMatrix g(3, 3);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) g(i, j) = rng.uniform(-3, 3);
    if (det(g) != 0) return g;
  }
}

std::vector<MPoly> linear_images(const RatMatrix& g, const Ring* r) {
  std::vector<MPoly> out;
  for (size_t i = 0; i < 3; ++i) {
    MPoly x;
    for (size_t j = 0; j < 3; ++j) x += MPoly::variable(r, j).scaled(g(i, j));
    out.push_back(x);
  }
  return out;
}

// Point g * (s, 1, w(s)) or g * (A + s B) as residues.
std::array<UPoly, 3> apply_change(const RatMatrix& g, const std::array<UPoly, 3>& x, const UPoly& m) {
  std::array<UPoly, 3> out;
  for (size_t i = 0; i < 3; ++i) {
    UPoly acc;
    for (size_t j = 0; j < 3; ++j) acc = acc + x[j].scaled(g(i, j));
    out[i] = acc % m;
  }
  return out;
}

UPoly restrict_to_line(const MPoly& f, const std::array<UPoly, 3>& line) {
  std::vector<MPoly> img;
  const Ring* r = Ring::T();
  for (const auto& c : line) img.push_back(c.to_mpoly(r, 0));
  return UPoly::from_mpoly(f.substitute(img));
}

}  // namespace

SmoothnessCertificate check_quartic_smooth(const MPoly& delta_in, std::uint64_t seed, int max_attempts) {
  if (delta_in.is_zero()) throw InputError("smoothness check of the zero polynomial");
  const Ring* r = Ring::uvw();
  MPoly delta = delta_in.with_ring(r);
  if (!delta.is_homogeneous()) throw InputError("quartic is not homogeneous");
  SmoothnessCertificate cert;
  cert.seed = seed;
  Rng rng(seed);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    cert.attempts = attempt;
    RatMatrix g = attempt == 1 ? RatMatrix::identity(3) : random_invertible(rng);
    cert.random_change = g;
    MPoly f = delta.substitute(linear_images(g, r));
    int d = f.total_degree();
    if (f.degree(2) != d) continue;  // need a constant leading coefficient in w
    MPoly p1 = f.partial(0), p2 = f.partial(1), p3 = f.partial(2);

    MPoly sq = resultant(f, p3, 2);
    if (sq.is_zero()) {
      // Repeated component: every line meets the singular curve.
      for (int tries = 0; tries < 8; ++tries) {
        std::array<UPoly, 3> line;
        for (size_t i = 0; i < 3; ++i) line[i] = UPoly(std::vector<Rat>{Rat(rng.uniform(-9, 9)), Rat(rng.uniform(-9, 9))});
        UPoly h = restrict_to_line(f, line);
        if (h.is_zero() || h.degree() < d) continue;
        for (const auto& p : {p1, p2, p3}) h = gcd(h, restrict_to_line(p, line));
        if (h.degree() < 1) continue;
        SingularWitness w{h, apply_change(g, line, h)};
        if (verify_witness(delta, w)) {
          cert.verdict = SmoothVerdict::singular;
          cert.witness = w;
          cert.method = "Res_w(F, F_w) vanishes identically; gcd of F and its gradient along a random line";
          return cert;
        }
      }
      continue;
    }

    MPoly r1 = resultant(p1, p3, 2), r2 = resultant(p2, p3, 2);
    if (r1.is_zero() || r2.is_zero()) continue;
    // r1, r2 are binary forms in (u, v). Reject projections through [1:0].
    auto at_inf = [](const MPoly& x) { return x.evaluate({1, 0, 0}) == 0; };
    if (at_inf(r1) && at_inf(r2)) continue;
    auto chart = [&](const MPoly& x) {
      MPoly s = x.substitute({MPoly::variable(Ring::T(), 0), MPoly(1), MPoly(0)});
      return UPoly::from_mpoly(s);
    };
    UPoly gg = gcd(chart(r1), chart(r2));
    if (gg.degree() < 1) {
      cert.verdict = SmoothVerdict::smooth;
      cert.method = "gcd of Res_w(F_u, F_w) and Res_w(F_v, F_w) is constant";
      return cert;
    }
    UPoly gs = squarefree_part(gg);
    if (p1.degree(2) < 2 || p3.degree(2) < 2) continue;
    MPoly s1 = subresultant(p1, p3, 2, 1);
    auto sc = s1.coefficients(2);
    if (sc.size() < 2) continue;
    UPoly a = chart(sc[0]), b = chart(sc[1]);
    UPoly gcd_b, inv, unused;
    xgcd(b % gs, gs, gcd_b, inv, unused);
    if (gcd_b.degree() != 0) continue;  // subresultant degenerates at a root: inconclusive here
    UPoly w = (-(a * inv)) % gs;
    std::vector<UPoly> pt{UPoly::x(), UPoly(1), w};
    UPoly m = gs;
    for (const auto& p : {p1, p2, p3}) m = gcd(m, eval_mod(p, pt, gs));
    if (m.degree() < 1) {
      cert.verdict = SmoothVerdict::smooth;
      cert.method = "common roots of the eliminants lift to no common zero of the gradient";
      return cert;
    }
    SingularWitness wit{m, apply_change(g, {UPoly::x(), UPoly(1), w % m}, m)};
    if (!verify_witness(delta, wit)) continue;
    cert.verdict = SmoothVerdict::singular;
    cert.witness = wit;
    cert.method = "common root of Res_w(F_u, F_w) and Res_w(F_v, F_w) lifted through the first subresultant";
    return cert;
  }
  cert.verdict = SmoothVerdict::inconclusive_retry;
  cert.method = "degenerate coordinates on every attempt";
  return cert;
}

bool check_sextic_separable(const MPoly& W) {
  if (W.is_zero()) throw InputError("pencil sextic is identically zero");
  return binary_form_separable(W.with_ring(Ring::t0t1()));
}

bool gamma_real_nonempty(const MPoly& W) {
  if (W.is_zero()) return true;
  MPoly w = W.with_ring(Ring::t0t1());
  if (w.evaluate({1, 0}) >= 0) return true;
  UPoly p = dehomogenize(w, 1);
  SturmSequence s(squarefree_part(p));
  if (s.count_all() > 0) return true;
  return sign_at(p, 0) > 0;
}

bool deltatilde_real_over_values(const Rat& q1, const Rat& q2, const Rat& q3) {
  if (q1 > 0) return true;
  return q1 == 0 && q2 == 0 && q3 >= 0;
}

bool deltatilde_real_over(const CoverSpec& spec, const std::vector<Rat>& p) {
  if (spec.delta.evaluate(p) != 0) throw InputError("point is not on the quartic");
  return deltatilde_real_over_values(spec.q1.eval(p), spec.q2.eval(p), spec.q3.eval(p));
}

std::string to_string(SmoothVerdict v) {
  switch (v) {
    case SmoothVerdict::smooth: return "smooth";
    case SmoothVerdict::singular: return "singular";
    case SmoothVerdict::inconclusive_retry: return "inconclusive_retry";
  }
  return "?";
}

}  // namespace cbundle
