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

#include "doctest.h"

#include "cbundle/elimination.hpp"
#include "cbundle/errors.hpp"
#include "cbundle/matrix.hpp"
#include "cbundle/mpoly.hpp"
#include "cbundle/random.hpp"
#include "cbundle/real_roots.hpp"
#include "cbundle/upoly.hpp"
#include "oracles.hpp"

using namespace cbundle;

namespace {

MPoly P(const char* s) { return MPoly::parse(Ring::uvw(), s); }
MPoly PT(const char* s) { return MPoly::parse(Ring::T(), s); }

MPoly random_poly(Rng& rng, const Ring* r, int max_deg, int terms) {
  MPoly p;
  for (int k = 0; k < terms; ++k) {
    std::vector<unsigned> e(r->arity());
    int budget = static_cast<int>(rng.uniform(0, max_deg));
    for (auto& x : e) {
      x = static_cast<unsigned>(rng.uniform(0, budget));
      budget -= static_cast<int>(x);
    }
    p += MPoly::monomial(r, e, frac(rng.uniform(-9, 9), rng.uniform(1, 4)));
  }
  return p;
}

}  // namespace

TEST_CASE("rationals stay canonical and print as p/q") {
  Rat r = parse_rat("6/-4");
  CHECK(to_string(r) == "-3/2");
  CHECK(to_string(parse_rat(" 10/5 ")) == "2");
  CHECK(to_string(Rat(0)) == "0");
  CHECK_THROWS_AS(parse_rat("1/0"), InputError);
  CHECK_THROWS_AS(parse_rat("x"), InputError);
  CHECK(is_square(frac(9, 4)));
  CHECK_FALSE(is_square(Rat(-9, 4)));
  CHECK(*sqrt_exact(frac(49, 36)) == frac(7, 6));
  CHECK(squarefree_part(Rat(-12, 5)) == -15);
  CHECK(valuation(frac(50, 3), 5) == 2);
}

TEST_CASE("poly arithmetic examples") {
  MPoly u = MPoly::variable(Ring::uvw(), 0), v = MPoly::variable(Ring::uvw(), 1);
  CHECK((u + v) * (u - v) == P("u^2 - v^2"));
  const Ring* t = Ring::t0t1();
  MPoly s = P("u^2 + 3*v*w").substitute({MPoly::variable(t, 0), MPoly::variable(t, 1), MPoly(0)});
  CHECK(s == MPoly::parse(t, "t0^2"));
  CHECK(P("2*u^2 + 3*v^2 - 6*w^2").evaluate({1, 1, 1}) == -1);
}

TEST_CASE("variable-set mismatch is an input error") {
  MPoly u = MPoly::variable(Ring::uvw(), 0);
  MPoly t = MPoly::variable(Ring::T(), 0);
  CHECK_THROWS_AS(u + t, InputError);
  CHECK_THROWS_AS(u * t, InputError);
  // Constants combine with any ring.
  CHECK_NOTHROW(u + MPoly(3));
}

TEST_CASE("grlex order puts higher degree first, then lex") {
  MPoly p = P("w + u*w + v^2 + u^2 + 1");
  CHECK(p.to_string() == "u^2 + u*w + v^2 + w + 1");
}

TEST_CASE("parse and print round trip on random polynomials") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    MPoly p = random_poly(rng, Ring::uvw(), 5, 6);
    CHECK(MPoly::parse(Ring::uvw(), p.to_string()) == p);
  }
}

TEST_CASE("division: exact quotient and canonical remainder") {
  MPoly f = P("(u+v)^3*(u-w)");
  auto q = f.divide_exact(P("u+v"));
  REQUIRE(q);
  CHECK(*q == P("(u+v)^2*(u-w)"));
  CHECK_FALSE(P("u^2+v^2").divide_exact(P("u+v")));
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    MPoly a = random_poly(rng, Ring::uvw(), 4, 5), d = random_poly(rng, Ring::uvw(), 2, 3);
    if (d.is_zero()) continue;
    auto [qq, r] = a.divmod(d);
    CHECK(qq * d + r == a);
  }
}

TEST_CASE("determinant examples") {
  CHECK(det(RatMatrix::identity(6)) == 1);
  RatMatrix ainf(6, 6);
  ainf.set_block(0, 3, RatMatrix::identity(3));
  ainf.set_block(3, 0, RatMatrix::identity(3));
  CHECK(det(ainf) == -1);
  MPoly T = MPoly::variable(Ring::T(), 0);
  PolyMatrix m(3, 3);
  for (size_t i = 0; i < 3; ++i) m(i, i) = T * T + T * 2 + 1;
  CHECK(det(m) == PT("(T+1)^6"));
}

TEST_CASE("det is multiplicative on random 4x4 rational matrices") {
  Rng rng(3);
  for (int k = 0; k < 40; ++k) {
    RatMatrix a(4, 4), b(4, 4);
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) {
        a(i, j) = frac(rng.uniform(-5, 5), rng.uniform(1, 3));
        b(i, j) = frac(rng.uniform(-5, 5), rng.uniform(1, 3));
      }
    CHECK(det(RatMatrix(a * b)) == det(a) * det(b));
  }
}

TEST_CASE("adjugate law holds for regular and singular matrices") {
  Rng rng(4);
  for (int k = 0; k < 30; ++k) {
    RatMatrix a(4, 4);
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) a(i, j) = rng.uniform(-3, 3);
    if (k % 3 == 0)
      for (size_t j = 0; j < 4; ++j) a(3, j) = a(0, j) + a(1, j);
    CHECK(a * adjugate(a) == Rat(det(a)) * RatMatrix::identity(4));
  }
  // Polynomial entries too.
  PolyMatrix p{{P("u"), P("v")}, {P("w"), P("u+v")}};
  CHECK(p * adjugate(p) == det(p) * PolyMatrix::identity(2));
}

TEST_CASE("inverse examples and rank deficiency") {
  RatMatrix d = RatMatrix::diagonal({2, 3, -6});
  CHECK(inverse(d) == RatMatrix::diagonal({frac(1, 2), frac(1, 3), Rat(-1, 6)}));
  CHECK(inverse(RatMatrix::identity(3)) == RatMatrix::identity(3));
  CHECK(d * inverse(d) == RatMatrix::identity(3));
  RatMatrix s{{1, 2}, {2, 4}};
  CHECK_THROWS_AS(inverse(s), RankDeficientError);
  CHECK(rank(s) == 1);
  auto k = kernel(s);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] + 2 * k[0][1] == 0);
}

TEST_CASE("univariate tools on the documented examples") {
  UPoly T = UPoly::x();
  CHECK_FALSE(is_separable((T + 1).pow(6)));
  CHECK(is_separable(T * T - 2));
  CHECK(gcd(T.pow(3) - T, T * T - 1) == T * T - 1);
  CHECK_THROWS_AS(is_separable(UPoly()), InputError);
  CHECK(discriminant(T * T - 2) == 8);
  CHECK(resultant(T * T - 2, T - 1) == -1);
}

TEST_CASE("binary form separability looks at both charts") {
  const Ring* r = Ring::t0t1();
  CHECK(binary_form_separable(MPoly::parse(r, "t0^6 - t1^6")));
  CHECK_FALSE(binary_form_separable(MPoly::parse(r, "(t0+t1)^2*t0^4")));
  // Double root at [1:0] is invisible on the t1 = 1 chart alone.
  CHECK_FALSE(binary_form_separable(MPoly::parse(r, "t1^2*(t0^4 - t1^4)")));
  CHECK(binary_form_separable(MPoly::parse(r, "t1*(t0^5 - 2*t1^5)")));
  CHECK_THROWS_AS(binary_form_separable(MPoly()), InputError);
}

TEST_CASE("resultant commutes with specialization") {
  const Ring* r = Ring::xy();
  Rng rng(8);
  for (int k = 0; k < 25; ++k) {
    MPoly f = random_poly(rng, r, 4, 5), g = random_poly(rng, r, 3, 4);
    if (f.degree(1) < 1 || g.degree(1) < 1) continue;
    MPoly res = resultant(f, g, 1);
    for (int s = 0; s < 3; ++s) {
      Rat x0 = frac(rng.uniform(-4, 4), rng.uniform(1, 3));
      auto spec = [&](const MPoly& p) {
        return UPoly::from_mpoly(p.substitute({MPoly(x0), MPoly::variable(Ring::T(), 0)}));
      };
      UPoly fs = spec(f), gs = spec(g);
      if (fs.degree() != f.degree(1) || gs.degree() != g.degree(1)) continue;
      CHECK(res.evaluate({x0, 0}) == resultant(fs, gs));
    }
  }
}

TEST_CASE("subresultant S_1 recovers a common linear factor") {
  const Ring* r = Ring::xy();
  MPoly f = MPoly::parse(r, "(y - x)*(y^2 + 1)");
  MPoly g = MPoly::parse(r, "(y - x)*(y + 3)");
  CHECK(resultant(f, g, 1).is_zero());
  MPoly s1 = subresultant(f, g, 1, 1);
  CHECK(s1.rem(MPoly::parse(r, "y - x")).is_zero());
  CHECK(!principal_subresultant_coeff(f, g, 1, 1).is_zero());
}

TEST_CASE("Sturm isolation examples") {
  UPoly T = UPoly::x();
  auto iv = isolate_real_roots(T.pow(3) - T);
  REQUIRE(iv.size() == 3);
  CHECK(iv[0].hi < 0);
  CHECK(iv[1].lo < 0);
  CHECK(iv[1].hi > 0);
  CHECK(iv[2].lo > 0);
  CHECK(isolate_real_roots(T * T + 1).empty());
  UPoly p = T.pow(6) - T * T * 3 + 1;
  SturmSequence s(p);
  CHECK(s.count_all() == testing::grid_sign_changes(p, -3, 3, 6000));
  CHECK_THROWS_AS(isolate_real_roots((T - 1) * (T - 1)), InputError);
}

TEST_CASE("Sturm counts match dense-grid sign changes on random polynomials") {
  Rng rng(21);
  int checked = 0;
  while (checked < 300) {
    int deg = static_cast<int>(rng.uniform(1, 8));
    std::vector<Rat> c(deg + 1);
    for (auto& x : c) x = rng.uniform(-20, 20);
    UPoly p(c);
    if (p.degree() < 1 || !is_separable(p)) continue;
    // Well separated roots keep the grid oracle honest: require a
    // discriminant bounded away from zero.
    if (abs(discriminant(p)) < 1) continue;
    Rat b = root_bound(p);
    int grid = testing::grid_sign_changes(p, -b, b, 4000);
    auto roots = isolate_real_roots(p);
    if (grid != static_cast<int>(roots.size())) {
      // A close pair can hide between grid points; refine the grid once.
      grid = testing::grid_sign_changes(p, -b, b, 40000);
    }
    CHECK(grid == static_cast<int>(roots.size()));
    ++checked;
  }
}

TEST_CASE("sign of another polynomial at an isolated root") {
  UPoly T = UPoly::x();
  UPoly p = T * T - 2;
  auto iv = isolate_real_roots(p);
  REQUIRE(iv.size() == 2);
  CHECK(sign_at_root(p, iv[1], T - frac(141, 100)) == 1);
  CHECK(sign_at_root(p, iv[1], T - frac(142, 100)) == -1);
  CHECK(sign_at_root(p, iv[0], T * T - 2) == 0);
  CHECK(sign_at_root(p, iv[0], T) == -1);
}
