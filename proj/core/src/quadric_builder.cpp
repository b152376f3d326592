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

#include "cbundle/quadric_builder.hpp"

#include "cbundle/errors.hpp"
#include "cbundle/upoly.hpp"

namespace cbundle {

bool VerificationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string to_string(PencilCase c) { return c == PencilCase::rank3 ? "rank3" : "rank2"; }

QuadricPencil pencil_from_matrices(PencilCase kase, const Rat& a, const Rat& b, const RatMatrix& M1,
                                   const RatMatrix& M2, const RatMatrix& M3) {
  if (a == 0 || b == 0) throw InputError("pencil parameters a, b must be nonzero");
  QuadricPencil p;
  p.kase = kase;
  p.a = a;
  p.b = b;
  p.M1 = M1;
  p.M2 = M2;
  p.M3 = M3;
  Rat ab = a * b;
  p.A0 = RatMatrix(6, 6);
  p.Ainf = RatMatrix(6, 6);
  if (kase == PencilCase::rank3) {
    RatMatrix inv = inverse(M1);
    p.A0.set_block(0, 0, ab * inv);
    p.A0.set_block(0, 3, -(inv * M2));
    p.A0.set_block(3, 0, -(M2 * inv));
    p.A0.set_block(3, 3, Rat(-1 / ab) * (M3 - M2 * inv * M2));
    p.Ainf.set_block(0, 3, RatMatrix::identity(3));
    p.Ainf.set_block(3, 0, RatMatrix::identity(3));
  } else {
    p.T2 = RatMatrix(3, 3);
    for (size_t i = 0; i < 3; ++i) {
      p.T2(i, i) = M2(i, i);
      for (size_t j = i + 1; j < 3; ++j) p.T2(i, j) = 2 * M2(i, j);
    }
    p.N1 = RatMatrix::diagonal({a, b});
    RatMatrix k = RatMatrix::diagonal({0, 1 / a, 1 / b});  // 0 (+) N1^{-1}
    p.A0.set_block(0, 0, RatMatrix::diagonal({1, -b, -a}));
    p.A0.set_block(0, 3, -(k * p.T2.transpose()));
    p.A0.set_block(3, 0, -(p.T2 * k));
    p.A0.set_block(3, 3, Rat(1 / ab) * (M3 - p.T2 * k * p.T2.transpose()));
    RatMatrix e = RatMatrix::diagonal({0, 1, 1});
    p.Ainf.set_block(0, 3, e);
    p.Ainf.set_block(3, 0, e);
    p.Ainf(3, 3) = 2;
  }
  p.q0 = quadratic_form(p.A0, Ring::x6());
  p.qinf = quadratic_form(p.Ainf, Ring::x6());
  return p;
}

QuadricPencil build_pencil(const CoverSpec& spec) {
  auto rd = rank_disc(spec.q1);
  if (rd.rank <= 1) throw DispatchError("rank(Q1) <= 1: no pencil construction applies");
  if (rd.rank == 3) {
    auto n = normalize_case1(spec.q1);
    const RatMatrix& g = n.change.g;
    auto p = pencil_from_matrices(PencilCase::rank3, n.a, n.b, spec.q1.transformed(g).matrix(),
                                  spec.q2.transformed(g).matrix(), spec.q3.transformed(g).matrix());
    p.change = n.change;
    return p;
  }
  auto n = normalize_case2(spec.q1, spec.q2, spec.q3);
  auto p = pencil_from_matrices(PencilCase::rank2, n.a, n.b, n.q1.matrix(), n.q2.matrix(), n.q3.matrix());
  p.change = n.change;
  return p;
}

namespace {

CheckResult make_check(const std::string& name, const MPoly& residual, const std::string& detail = {}) {
  return {name, residual.is_zero(), residual.to_string(), detail};
}

PolyMatrix pencil_in_T(const QuadricPencil& p) {
  MPoly T = MPoly::variable(Ring::T(), 0);
  PolyMatrix m(6, 6);
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 6; ++j) m(i, j) = MPoly(p.A0(i, j)) - T.scaled(p.Ainf(i, j));
  return m;
}

MPoly homogenize_T(const MPoly& f, unsigned degree) {
  UPoly u = UPoly::from_mpoly(f);
  const Ring* r = Ring::t0t1();
  std::vector<MPoly::Term> terms;
  for (int i = 0; i <= u.degree(); ++i) {
    if (u.coeff(i) == 0) continue;
    terms.push_back({mono::make({static_cast<unsigned>(i), degree - static_cast<unsigned>(i)}), u.coeff(i)});
  }
  return MPoly::from_terms(r, std::move(terms));
}

}  // namespace

VerificationReport verify_pencil(const QuadricPencil& p, const CoverSpec& spec) {
  VerificationReport rep;
  const Ring* rt = Ring::T();
  MPoly T = MPoly::variable(rt, 0);

  // (i) discriminant identity, scalar solved from leading coefficients.
  MPoly lhs = det(pencil_in_T(p)).with_ring(rt);
  PolyMatrix m(3, 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      m(i, j) = MPoly(p.M3(i, j)) + T.scaled(2 * p.M2(i, j)) + (T * T).scaled(p.M1(i, j));
  MPoly rhs = det(m).with_ring(rt);
  if (lhs.is_zero() || rhs.is_zero() || lhs.total_degree() != rhs.total_degree()) {
    rep.checks.push_back({"discriminant_identity", false, (lhs - rhs).to_string(), "degree mismatch or zero side"});
  } else {
    Rat c = lhs.leading_coeff() / rhs.leading_coeff();
    rep.checks.push_back(make_check("discriminant_identity", lhs - rhs.scaled(c), "c = " + to_string(c)));
  }

  // (ii) separability of the pencil determinant as a binary sextic.
  bool sep = !lhs.is_zero() && lhs.total_degree() <= 6 && binary_form_separable(homogenize_T(lhs, 6));
  bool spec_sep = !spec.W.is_zero() && check_sextic_separable(spec.W);
  rep.checks.push_back({"pencil_separable", sep, sep ? "0" : lhs.to_string(),
                        std::string("sextic check agrees: ") + (sep == spec_sep ? "yes" : "no")});

  // (iii) q_inf vanishes on the plane x3 = x4 = x5 = 0.
  const Ring* rx = Ring::x6();
  std::vector<MPoly> plane;
  for (size_t i = 0; i < 6; ++i) plane.push_back(i < 3 ? MPoly::variable(rx, i) : MPoly(0));
  rep.checks.push_back(make_check("qinf_vanishes_on_plane", p.qinf.substitute(plane)));

  // (iv) q0 restricted to the plane is a smooth conic.
  RatMatrix c = p.A0.block(0, 0, 3, 3);
  size_t rk = rank(c);
  if (p.kase == PencilCase::rank3) {
    RatMatrix expect = Rat(p.a * p.b) * inverse(p.M1);
    RatMatrix diff = c - expect;
    rep.checks.push_back({"conic_rank3", rk == 3 && diff.is_zero_matrix(), to_string(diff),
                          "rank " + std::to_string(rk) + ", compared with ab*M1^-1"});
  } else {
    rep.checks.push_back({"conic_rank3", rk == 3, rk == 3 ? "0" : to_string(c), "rank " + std::to_string(rk)});
  }
  return rep;
}

FiberForm fiber_form(const QuadricPencil& p) {
  const Ring* r = Ring::uvw();
  MPoly u = MPoly::variable(r, 0), v = MPoly::variable(r, 1), w = MPoly::variable(r, 2);
  FiberForm f;
  if (p.kase == PencilCase::rank3) {
    f.Bp = PolyMatrix{{-v, -w, 0, 0}, {u, 0, -w, 0}, {0, u, v, 0}, {0, 0, 0, u}, {0, 0, 0, v}, {0, 0, 0, w}};
  } else {
    MPoly u2 = u * u;
    f.Bp = PolyMatrix{{1, 0, 0, 0},  {0, -w, -u2, 0}, {0, v, 0, -u2},
                      {0, 0, u * v, u * w}, {0, 0, v * v, v * w}, {0, 0, w * v, w * w}};
  }
  f.gram = f.Bp.transpose() * to_poly(p.A0) * f.Bp;
  if (p.kase == PencilCase::rank3) {
    f.bM = f.gram.block(1, 1, 3, 3);
  } else {
    f.bM = -f.gram.block(1, 1, 2, 2);
  }
  return f;
}

FiberForm fiber_form_at(const QuadricPencil& p, const std::vector<Rat>& point) {
  FiberForm f = fiber_form(p);
  auto ev = [&](const MPoly& x) { return MPoly(x.evaluate(point)); };
  return {f.Bp.map(ev), f.gram.map(ev), f.bM.map(ev)};
}

VerificationReport verify_minors(const FiberForm& f, const QuadricPencil& p) {
  VerificationReport rep;
  const Ring* r = Ring::uvw();
  MPoly u = MPoly::variable(r, 0), v = MPoly::variable(r, 1), w = MPoly::variable(r, 2);
  MPoly q1 = quadratic_form(p.M1, r), q2 = quadratic_form(p.M2, r), q3 = quadratic_form(p.M3, r);
  MPoly delta = q2 * q2 - q1 * q3;
  Rat ab = p.a * p.b;
  rep.checks.push_back({"gram_symmetric", f.gram.is_symmetric(), f.gram.is_symmetric() ? "0" : "asymmetric", ""});
  if (p.kase == PencilCase::rank3) {
    std::vector<MPoly> expect{-(u * u - (w * w).scaled(p.b)), -(w * w * q1), (w * w * delta).scaled(-1 / ab)};
    for (size_t i = 1; i <= 3; ++i) {
      MPoly minor = det(f.bM.block(0, 0, i, i));
      rep.checks.push_back(make_check("minor_" + std::to_string(i), minor - expect[i - 1]));
    }
  } else {
    rep.checks.push_back(make_check("bM_top_left", f.bM(0, 0) - q1));
    MPoly lhs = -det(f.bM);
    rep.checks.push_back(make_check("bM_det", lhs - (v * v * delta).scaled(-1 / ab)));
    bool block = true;
    for (size_t j = 1; j < 4; ++j) block = block && f.gram(0, j).is_zero() && f.gram(j, 0).is_zero();
    bool one = f.gram(0, 0) == MPoly(1);
    rep.checks.push_back({"gram_block_diagonal", block && one, block && one ? "0" : f.gram(0, 0).to_string(),
                          "top-left entry 1, first row/column otherwise zero"});
  }
  return rep;
}

GenericFiberSymbols generic_fiber_symbol(const QuadricPencil& p) {
  const Ring* r = Ring::uvw();
  MPoly u = MPoly::variable(r, 0), w = MPoly::variable(r, 2), v = MPoly::variable(r, 1);
  GenericFiberSymbols s;
  s.q1 = quadratic_form(p.M1, r);
  MPoly q2 = quadratic_form(p.M2, r), q3 = quadratic_form(p.M3, r);
  s.delta = q2 * q2 - s.q1 * q3;
  Rat ab = p.a * p.b;
  if (p.kase == PencilCase::rank3) {
    MPoly first = ((u * u - (w * w).scaled(p.b)) * s.q1 * s.delta).scaled(ab);
    s.raw = FunctionSymbol(first, s.q1);
  } else {
    s.raw = FunctionSymbol((v * v * s.delta).scaled(-1 / ab), s.q1);
  }
  s.y_symbol = FunctionSymbol(s.q1, s.delta);
  s.simplified = s.y_symbol + FunctionSymbol(MPoly(p.a), MPoly(p.b));
  return s;
}

}  // namespace cbundle
