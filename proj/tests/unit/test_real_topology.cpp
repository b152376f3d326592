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

#include "cbundle/errors.hpp"
#include "cbundle/real_topology.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cbundle;

namespace {

MPoly P(const char* s) { return MPoly::parse(Ring::uvw(), s); }
TernaryForm F(const char* s) { return TernaryForm::from_poly(P(s)); }

int expected_ovals(Configuration c) {
  switch (c) {
    case Configuration::empty: return 0;
    case Configuration::one_oval: return 1;
    case Configuration::two_nested:
    case Configuration::two_non_nested: return 2;
    case Configuration::three_ovals: return 3;
    case Configuration::four_ovals: return 4;
  }
  return -1;
}

}  // namespace

TEST_CASE("isolation examples") {
  const Ring* t = Ring::T();
  auto r = sturm_isolate(MPoly::parse(t, "T^3 - T"));
  REQUIRE(r.size() == 3);
  CHECK(r[0].hi < 0);
  CHECK(r[1].lo < 0);
  CHECK(r[1].hi > 0);
  CHECK(r[2].lo > 0);
  CHECK(sturm_isolate(MPoly::parse(t, "T^2 + 1")).empty());
  UPoly p = UPoly::from_mpoly(MPoly::parse(t, "T^6 - 3*T^2 + 1"));
  CHECK(static_cast<int>(isolate_real_roots(p).size()) == testing::grid_sign_changes(p, -3, 3, 6000));
  CHECK_THROWS_AS(sturm_isolate(MPoly::parse(t, "(T - 1)^2")), InputError);
}

TEST_CASE("signature profile examples") {
  CoverSpec pd = make_cover(F("u^2 + v^2 + w^2"), TernaryForm(), F("u^2 + v^2 + w^2"));
  auto a = signature_profile(pd);
  CHECK(a.weierstrass_roots.empty());
  REQUIRE(a.intervals.size() == 1);
  CHECK(a.intervals[0].sig == Signature{3, 0, 0});
  CHECK(pi1_section_exists(a));

  CoverSpec ind = make_cover(F("u^2 + v^2 - w^2"), TernaryForm(), F("u^2 + v^2 - w^2"));
  auto b = signature_profile(ind);
  for (const auto& iv : b.intervals) CHECK(iv.sig == Signature{2, 0, 1});
  CHECK(pi1_section_exists(b));

  // M(t) = t0^2 I - t1^2 I: definite of both signs.
  CoverSpec mix = make_cover(F("u^2 + v^2 + w^2"), TernaryForm(), F("-u^2 - v^2 - w^2"));
  auto c = signature_profile(mix);
  CHECK(c.intervals.size() == 2);
  CHECK_FALSE(pi1_section_exists(c));
}

TEST_CASE("signature profiles on admissible instances") {
  for (auto kase : {PencilCase::rank3, PencilCase::rank2})
    for (std::uint64_t s = 0; s < 10; ++s) {
      CoverSpec c = testing::random_admissible(kase, 5000 + s);
      auto prof = signature_profile(c);
      size_t k = prof.weierstrass_roots.size();
      CHECK(k % 2 == 0);
      CHECK(prof.intervals.size() == std::max<size_t>(k, 1));
      for (const auto& iv : prof.intervals) {
        CHECK(iv.sig.zero == 0);
        CHECK(iv.sig.plus + iv.sig.minus == 3);
      }
      // Adjacent intervals differ by one eigenvalue crossing zero.
      for (size_t i = 0; i + 1 < prof.intervals.size(); ++i)
        CHECK(std::abs(prof.intervals[i].sig.plus - prof.intervals[i + 1].sig.plus) == 1);
      UPoly w = dehomogenize(c.W, 1);
      int finite = 0;
      for (const auto& r : prof.weierstrass_roots) finite += !r.at_infinity;
      Rat b = root_bound(w);
      CHECK(finite == testing::grid_sign_changes(w, -b, b, 4000));
    }
}

TEST_CASE("topology of standard quartics") {
  CHECK(quartic_topology(P("u^4 + v^4 - w^4"), 1).configuration == Configuration::one_oval);
  CHECK(quartic_topology(P("u^4 + v^4 + w^4"), 1).configuration == Configuration::empty);
  // Two nested conics, perturbed off their complex intersections. (Two
  // circles would not do: they share the circular points, which stay nodes.)
  MPoly n2 = P("(u^2 + v^2 - w^2)*(2*u^2 + v^2 - 8*w^2) + 1/10*w^4");
  REQUIRE(check_quartic_smooth(n2, 1).verdict == SmoothVerdict::smooth);
  auto nest = quartic_topology(n2, 2);
  CHECK(nest.configuration == Configuration::two_nested);
  MPoly a2 = P("((u-2*w)^2 + v^2 - w^2)*((u+2*w)^2 + 2*v^2 - w^2) + 1/10*w^4");
  REQUIRE(check_quartic_smooth(a2, 1).verdict == SmoothVerdict::smooth);
  auto apart = quartic_topology(a2, 3);
  CHECK(apart.configuration == Configuration::two_non_nested);
  // Four ovals from two ellipses crossing in four points.
  auto four = quartic_topology(P("(u^2 + 4*v^2 - 4*w^2)*(4*u^2 + v^2 - 4*w^2) + 1/2*w^4"), 4);
  CHECK(four.configuration == Configuration::four_ovals);
  CHECK(four.cells[four.outside].depth == 0);
  auto three = quartic_topology(P("(u^2 + 4*v^2 - 4*w^2)*(4*u^2 + v^2 - 4*w^2) + 1/2*w^3*(u + 3*w)"), 5);
  CHECK(three.oval_count == testing::flood_fill_topology(three.chart_delta, 240).ovals);
  MPoly circles = P("(u^2 + v^2 - w^2)*(u^2 + v^2 - 4*w^2) + 1/10*w^4");
  CHECK(check_quartic_smooth(circles, 1).verdict == SmoothVerdict::singular);
  CHECK_THROWS_AS(quartic_topology(circles, 1, 4), NonGenericError);
}

TEST_CASE("topology agrees with the flood-fill oracle") {
  int checked = 0;
  for (auto kase : {PencilCase::rank3, PencilCase::rank2})
    for (std::uint64_t s = 0; s < 12; ++s) {
      CAPTURE(s);
      CoverSpec c = testing::random_admissible(kase, 6000 + s);
      auto topo = quartic_topology(c, s);
      auto ff = testing::flood_fill_topology(c.delta, 240);
      CHECK(expected_ovals(topo.configuration) == topo.oval_count);
      CHECK(topo.cells.size() == static_cast<size_t>(topo.oval_count + 1));
      if (!ff.ok) continue;
      ++checked;
      CHECK(topo.oval_count == ff.ovals);
      if (topo.oval_count == 2) CHECK((topo.configuration == Configuration::two_nested) == ff.nested);
      int outside_deg = 0;
      for (int p : topo.oval_parent) outside_deg += p < 0;
      CHECK(outside_deg == ff.outside_degree);
      // A different random chart gives the same answer.
      auto again = quartic_topology(c, s + 1000);
      CHECK(again.configuration == topo.configuration);
    }
  CHECK(checked > 15);
}

TEST_CASE("image region boundary law and one-sign crossings") {
  for (auto kase : {PencilCase::rank3, PencilCase::rank2})
    for (std::uint64_t s = 0; s < 8; ++s) {
      CAPTURE(s);
      CoverSpec c = testing::random_admissible(kase, 7000 + s);
      auto topo = quartic_topology(c, s);
      auto rep = region_report(c, topo);
      for (const auto& p : rep.problems) FAIL_CHECK(p);
      CHECK(rep.consistent);
      for (int oc : rep.oval_covered) CHECK(oc != -1);
      CHECK(rep.outside_contained == outside_contained(rep, topo));
      for (const auto& cp : crossing_pairs(topo)) {
        Signature a = fiber_signature(c, cp.below), b = fiber_signature(c, cp.above);
        CHECK(a.zero == 0);
        CHECK(b.zero == 0);
        CHECK(std::abs(a.plus - b.plus) == 1);
      }
    }
}

TEST_CASE("region report examples") {
  // Q1 positive definite: everything is in the image.
  TernaryForm q1 = F("u^2 + v^2 + w^2");
  CoverSpec c = build_cover(q1, F("u*v + 2*w^2"), F("3*u^2 - v^2 + u*w"), 1);
  REQUIRE(c.smooth_certified);
  auto topo = quartic_topology(c, 1);
  auto rep = region_report(c, topo);
  CHECK(rep.consistent);
  CHECK(rep.image_cells.size() == topo.cells.size());
  for (const auto& a : rep.arcs) CHECK(a.covered);
  CHECK(outside_contained(rep, topo));
}

TEST_CASE("verdict rules") {
  CoverSpec c = testing::random_admissible(PencilCase::rank3, 8000);
  auto prof = signature_profile(c);
  auto topo = quartic_topology(c, 3);
  auto rep = region_report(c, topo);
  auto v = rationality_verdict(c, prof, topo, rep);
  CHECK(v.section_exists == pi1_section_exists(prof));
  if (topo.configuration == Configuration::one_oval) {
    CHECK(v.verdict == Verdict::undetermined_single_oval);
  } else {
    CHECK(v.verdict == (v.section_exists ? Verdict::rational : Verdict::irrational));
  }
  RealCurveTopology fake = topo;
  fake.configuration = Configuration::one_oval;
  CHECK(rationality_verdict(c, prof, fake, rep).verdict == Verdict::undetermined_single_oval);
  fake.configuration = Configuration::four_ovals;
  SignatureProfile defin = prof;
  defin.intervals.push_back({{1, 1}, Signature{0, 0, 3}});
  CHECK(rationality_verdict(c, defin, fake, rep).verdict == Verdict::irrational);
  CoverSpec raw = c;
  raw.separable_certified = false;
  CHECK(rationality_verdict(raw, prof, fake, rep).verdict == Verdict::undetermined_empty_hypothesis);
}
