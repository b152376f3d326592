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

#include "cbundle/real_topology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>

#include "cbundle/elimination.hpp"
#include "cbundle/errors.hpp"
#include "cbundle/random.hpp"

namespace cbundle {

std::vector<IsolatingInterval> sturm_isolate(const MPoly& p) { return isolate_real_roots(UPoly::from_mpoly(p)); }

namespace {

RatMatrix pencil_at(const CoverSpec& spec, const Rat& t0, const Rat& t1) {
  return RatMatrix((t0 * t0) * spec.q1.matrix() + (2 * t0 * t1) * spec.q2.matrix() +
                   (t1 * t1) * spec.q3.matrix());
}

Rat gap_point(const IsolatingInterval& below, const IsolatingInterval& above) {
  if (below.hi == above.lo) return below.hi;
  return simple_between(below.hi, above.lo);
}

}  // namespace

SignatureProfile signature_profile(const CoverSpec& spec) {
  SignatureProfile prof;
  const MPoly& W = spec.W;
  bool inf_root = W.evaluate({1, 0}) == 0;
  UPoly chart = dehomogenize(W, 1);
  std::vector<IsolatingInterval> finite;
  if (chart.degree() > 0) finite = isolate_real_roots(squarefree_part(chart));
  for (const auto& iv : finite) prof.weierstrass_roots.push_back({false, iv});
  if (inf_root) prof.weierstrass_roots.push_back({true, {}});

  auto add = [&](const Rat& t0, const Rat& t1) {
    prof.intervals.push_back({{t0, t1}, signature(pencil_at(spec, t0, t1))});
  };
  size_t k = finite.size();
  if (k == 0) {
    add(0, 1);
    return prof;
  }
  if (inf_root) add(finite.front().lo - 1, 1);
  for (size_t i = 0; i + 1 < k; ++i) add(gap_point(finite[i], finite[i + 1]), 1);
  if (inf_root) {
    add(finite.back().hi + 1, 1);
  } else {
    add(1, 0);
  }
  return prof;
}

bool pi1_section_exists(const SignatureProfile& profile) {
  for (const auto& iv : profile.intervals)
    if (iv.sig.minus == 3) return false;
  return true;
}

std::string to_string(Configuration c) {
  switch (c) {
    case Configuration::empty: return "empty";
    case Configuration::one_oval: return "one_oval";
    case Configuration::two_nested: return "two_nested";
    case Configuration::two_non_nested: return "two_non_nested";
    case Configuration::three_ovals: return "three_ovals";
    case Configuration::four_ovals: return "four_ovals";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::rational: return "rational";
    case Verdict::irrational: return "irrational";
    case Verdict::undetermined_single_oval: return "undetermined_single_oval";
    case Verdict::undetermined_empty_hypothesis: return "undetermined_empty_hypothesis";
  }
  return "?";
}

std::vector<Rat> RealCurveTopology::to_original(const std::vector<Rat>& xy) const {
  std::vector<Rat> out(3);
  for (size_t i = 0; i < 3; ++i) out[i] = chart(i, 0) * xy[0] + chart(i, 1) * xy[1] + chart(i, 2);
  return out;
}

namespace {

// Union-find carrying the parity of a path to the root; a component is odd
// once an edge closes a cycle of odd total parity.
class ParityDsu {
 public:
  explicit ParityDsu(size_t n) : parent_(n), par_(n, 0), odd_(n, false) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::pair<size_t, int> find(size_t a) {
    int p = 0;
    size_t r = a;
    while (parent_[r] != r) {
      p ^= par_[r];
      r = parent_[r];
    }
    // Path compression with parity bookkeeping.
    size_t x = a;
    int px = p;
    while (parent_[x] != x) {
      size_t next = parent_[x];
      int pn = px ^ par_[x];
      parent_[x] = r;
      par_[x] = px;
      x = next;
      px = pn;
    }
    return {r, p};
  }
  void unite(size_t a, size_t b, int parity) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      if ((pa ^ pb) != parity) odd_[ra] = true;
      return;
    }
    parent_[rb] = ra;
    par_[rb] = pa ^ pb ^ parity;
    odd_[ra] = odd_[ra] || odd_[rb];
  }
  bool odd(size_t a) { return odd_[find(a).first]; }

 private:
  std::vector<size_t> parent_;
  std::vector<int> par_;
  std::vector<bool> odd_;
};

UPoly fiber_at(const MPoly& f, const Rat& x) {
  const Ring* r = f.ring();
  return UPoly::from_mpoly(f.substitute({MPoly(x), MPoly::variable(r, 1), MPoly(1)}));
}

UPoly in_x(const MPoly& p) { return UPoly::from_mpoly(p); }

struct Chart {
  RatMatrix g;
  MPoly F;  // delta(g X)
  MPoly f;  // F(u, v, 1)
};

Chart make_chart(const MPoly& delta, const RatMatrix& g) {
  const Ring* r = Ring::uvw();
  std::vector<MPoly> img(3);
  for (size_t i = 0; i < 3; ++i)
    img[i] = MPoly::variable(r, 0).scaled(g(i, 0)) + MPoly::variable(r, 1).scaled(g(i, 1)) +
             MPoly::variable(r, 2).scaled(g(i, 2));
  Chart c{g, delta.with_ring(r).substitute(img), {}};
  c.f = c.F.substitute({MPoly::variable(r, 0), MPoly::variable(r, 1), MPoly(1)});
  return c;
}

// Number of non-fold branches below the fold over the critical value
// isolated by iv. `side` is +1 when the fold branches live left of the
// critical value (so the count is read just to its right), -1 otherwise.
int fold_index(const MPoly& f, const UPoly& D, IsolatingInterval iv, int side) {
  MPoly s1 = subresultant(f, f.partial(1), 1, 1);
  auto sc = s1.coefficients(1);
  sc.resize(2);
  UPoly s10 = in_x(sc[0]), s11 = in_x(sc[1]);
  if (s11.is_zero()) throw NonGenericError("first subresultant degenerates");
  // y = phi(x) = -s10 / s11 traces the fold; N(x) = 0 where some branch meets it.
  auto a = f.coefficients(1);
  UPoly N;
  UPoly minus_s10 = -s10;
  int n = static_cast<int>(a.size()) - 1;
  for (int k = 0; k <= n; ++k) N = N + in_x(a[k]) * minus_s10.pow(k) * s11.pow(n - k);
  if (N.is_zero()) throw NonGenericError("fold curve lies on the quartic");
  SturmSequence sn(squarefree_part(N));
  std::optional<SturmSequence> ss;
  if (s11.degree() > 0) ss.emplace(squarefree_part(s11));
  for (;;) {
    const Rat& x = side > 0 ? iv.hi : iv.lo;
    bool clean = sn.count(iv.lo, iv.hi) == 1 && N.eval(x) != 0 && s11.eval(x) != 0 &&
                 (!ss || (ss->count(iv.lo, iv.hi) == 0 && s11.eval(iv.lo) != 0));
    if (clean) {
      Rat phi = -s10.eval(x) / s11.eval(x);
      UPoly p = fiber_at(f, x);
      SturmSequence sp(p);
      Rat b = root_bound(p);
      if (phi <= -b) return 0;
      return sp.count(-b, phi);
    }
    refine(D, iv, (iv.hi - iv.lo) / 2);
  }
}

RealCurveTopology sweep(const MPoly& delta, const RatMatrix& g) {
  Chart ch = make_chart(delta, g);
  const Ring* r = Ring::uvw();
  RealCurveTopology t;
  t.chart = g;
  t.chart_delta = ch.F;
  if (ch.F.degree(1) != 4 || ch.F.evaluate({0, 1, 0}) == 0) throw NonGenericError("[0:1:0] lies on the curve");
  UPoly at_inf = UPoly::from_mpoly(ch.F.substitute({MPoly(1), MPoly::variable(r, 1), MPoly(0)}));
  if (at_inf.degree() != 4 || !is_separable(at_inf)) throw NonGenericError("curve tangent to the line at infinity");
  int n_inf = static_cast<int>(isolate_real_roots(at_inf).size());

  UPoly D = in_x(discriminant(ch.f, 1));
  if (D.degree() != 12 || !is_separable(D)) throw NonGenericError("projection not generic");
  t.critical = isolate_real_roots(D);
  size_t k = t.critical.size();

  if (k == 0) {
    t.slab_samples.push_back(0);
  } else {
    t.slab_samples.push_back(t.critical.front().lo - 1);
    for (size_t i = 0; i + 1 < k; ++i) t.slab_samples.push_back(gap_point(t.critical[i], t.critical[i + 1]));
    t.slab_samples.push_back(t.critical.back().hi + 1);
  }

  std::vector<int> sector_off, arc_off;
  for (size_t j = 0; j < t.slab_samples.size(); ++j) {
    const Rat& x = t.slab_samples[j];
    UPoly p = fiber_at(ch.f, x);
    auto roots = isolate_real_roots(p);
    int n = static_cast<int>(roots.size());
    t.branch_counts.push_back(n);
    sector_off.push_back(static_cast<int>(t.sectors.size()));
    arc_off.push_back(static_cast<int>(t.arcs.size()));
    for (int s = 0; s <= n; ++s) {
      Rat y;
      if (n == 0) y = 0;
      else if (s == 0) y = roots.front().lo - 1;
      else if (s == n) y = roots.back().hi + 1;
      else y = gap_point(roots[s - 1], roots[s]);
      t.sectors.push_back({static_cast<int>(j), s, {x, y}, -1});
    }
    for (int b = 0; b < n; ++b) {
      ArcPiece a;
      a.slab = static_cast<int>(j);
      a.branch = b;
      a.x = x;
      a.y = roots[b];
      a.below = sector_off[j] + b;
      a.above = sector_off[j] + b + 1;
      t.arcs.push_back(a);
    }
  }
  if (t.branch_counts.front() != n_inf || t.branch_counts.back() != n_inf)
    throw InternalError("branch count at the ends of the sweep disagrees with the points at infinity");

  ParityDsu sec(t.sectors.size());
  ParityDsu arc(t.arcs.size());
  for (size_t i = 0; i < k; ++i) {
    int nl = t.branch_counts[i], nr = t.branch_counts[i + 1];
    if (std::abs(nl - nr) != 2) throw NonGenericError("critical fiber is not a simple fold");
    int side = nl > nr ? 1 : -1;
    int c = fold_index(ch.f, D, t.critical[i], side);
    t.fold_below.push_back(c);
    // Index maps from the side holding the fold to the other side.
    size_t jf = side > 0 ? i : i + 1, jo = side > 0 ? i + 1 : i;
    int nf = std::max(nl, nr);
    if (c > nf - 2) throw InternalError("fold index out of range");
    for (int s = 0; s <= nf; ++s) {
      if (s == c + 1) continue;
      int o = s <= c ? s : s - 2;
      sec.unite(sector_off[jf] + s, sector_off[jo] + o, 0);
    }
    for (int b = 0; b < nf; ++b) {
      if (b == c) {
        arc.unite(arc_off[jf] + b, arc_off[jf] + b + 1, 0);
        continue;
      }
      if (b == c + 1) continue;
      int o = b < c ? b : b - 2;
      arc.unite(arc_off[jf] + b, arc_off[jo] + o, 0);
    }
  }
  // Through [0:1:0]: top and bottom of each slab.
  for (size_t j = 0; j < t.slab_samples.size(); ++j)
    sec.unite(sector_off[j], sector_off[j] + t.branch_counts[j], 1);
  // Through the rest of the line at infinity: slopes reverse order.
  size_t last = t.slab_samples.size() - 1;
  for (int s = 1; s < n_inf; ++s) sec.unite(sector_off[last] + s, sector_off[0] + n_inf - s, 1);
  for (int b = 0; b < n_inf; ++b) arc.unite(arc_off[last] + b, arc_off[0] + n_inf - 1 - b, 0);

  // Components.
  std::map<size_t, int> cell_id, oval_id;
  for (size_t s = 0; s < t.sectors.size(); ++s) {
    size_t root = sec.find(s).first;
    auto it = cell_id.emplace(root, static_cast<int>(cell_id.size())).first;
    t.sectors[s].cell = it->second;
  }
  for (size_t a = 0; a < t.arcs.size(); ++a) {
    size_t root = arc.find(a).first;
    auto it = oval_id.emplace(root, static_cast<int>(oval_id.size())).first;
    t.arcs[a].oval = it->second;
  }
  t.oval_count = static_cast<int>(oval_id.size());
  t.cells.resize(cell_id.size());
  if (static_cast<int>(t.cells.size()) != t.oval_count + 1)
    throw InternalError("complement components do not match the oval count");
  for (size_t s = 0; s < t.sectors.size(); ++s) {
    Cell& c = t.cells[t.sectors[s].cell];
    if (c.sectors.empty()) {
      c.sample = t.to_original(t.sectors[s].sample);
      c.delta_sign = sign(ch.f.evaluate({t.sectors[s].sample[0], t.sectors[s].sample[1], 1}));
    }
    c.sectors.push_back(static_cast<int>(s));
    if (sec.odd(s)) {
      if (t.outside >= 0 && t.outside != t.sectors[s].cell) throw InternalError("two one-sided regions");
      t.outside = t.sectors[s].cell;
    }
  }
  if (t.outside < 0) throw InternalError("no one-sided region");

  // Region/oval adjacency is a tree; walk it from the outside.
  std::vector<std::set<int>> oval_cells(t.oval_count);
  for (const auto& a : t.arcs) {
    oval_cells[a.oval].insert(t.sectors[a.below].cell);
    oval_cells[a.oval].insert(t.sectors[a.above].cell);
  }
  std::vector<std::vector<int>> cell_ovals(t.cells.size());
  for (int o = 0; o < t.oval_count; ++o) {
    if (oval_cells[o].size() != 2) throw InternalError("oval does not separate two regions");
    for (int c : oval_cells[o]) cell_ovals[c].push_back(o);
  }
  t.oval_parent.assign(t.oval_count, -2);
  std::vector<bool> seen(t.cells.size(), false);
  std::queue<int> q;
  q.push(t.outside);
  seen[t.outside] = true;
  while (!q.empty()) {
    int c = q.front();
    q.pop();
    for (int o : cell_ovals[c]) {
      if (t.oval_parent[o] != -2) continue;
      t.oval_parent[o] = t.cells[c].parent_oval;
      for (int d : oval_cells[o]) {
        if (d == c) continue;
        if (seen[d]) throw InternalError("region adjacency is not a tree");
        seen[d] = true;
        t.cells[d].depth = t.cells[c].depth + 1;
        t.cells[d].parent_oval = o;
        q.push(d);
      }
    }
  }

  bool nested = false;
  for (int p : t.oval_parent) nested = nested || p >= 0;
  switch (t.oval_count) {
    case 0: t.configuration = Configuration::empty; break;
    case 1: t.configuration = Configuration::one_oval; break;
    case 2: t.configuration = nested ? Configuration::two_nested : Configuration::two_non_nested; break;
    case 3:
    case 4:
      if (nested) throw InternalError("nested ovals alongside a third oval violate Bezout");
      t.configuration = t.oval_count == 3 ? Configuration::three_ovals : Configuration::four_ovals;
      break;
    default: throw InternalError("more than four ovals on a quartic");
  }
  return t;
}

}  // namespace

RealCurveTopology quartic_topology(const MPoly& delta, std::uint64_t seed, int max_attempts) {
  if (delta.total_degree() != 4 || !delta.is_homogeneous()) throw InputError("expected a ternary quartic form");
  Rng rng(seed);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    RatMatrix g(3, 3);
    do {
      for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) g(i, j) = rng.uniform(-3, 3);
    } while (det(g) == 0);
    try {
      RealCurveTopology t = sweep(delta, g);
      t.seed = seed;
      t.attempts = attempt;
      return t;
    } catch (const NonGenericError&) {
    }
  }
  throw NonGenericError("no generic chart found for the quartic");
}

RealCurveTopology quartic_topology(const CoverSpec& spec, std::uint64_t seed) {
  if (!spec.smooth_certified) throw InputError("topology needs a smooth-certified quartic");
  return quartic_topology(spec.delta, seed);
}

bool in_image(const Rat& q1, const Rat& delta) { return q1 >= 0 || delta > 0; }

RegionReport region_report(const CoverSpec& spec, const RealCurveTopology& topo) {
  RegionReport rep;
  const Ring* r = Ring::uvw();
  MPoly q1 = spec.q1.transformed(topo.chart).poly();
  MPoly q3 = spec.q3.transformed(topo.chart).poly();
  MPoly F = topo.chart_delta;
  auto at = [](const MPoly& p, const Rat& x, const Rat& y) { return p.evaluate({x, y, 1}); };

  std::vector<int> sector_in(topo.sectors.size());
  rep.cell_in.assign(topo.cells.size(), false);
  std::vector<int> cell_label(topo.cells.size(), -1);
  for (size_t s = 0; s < topo.sectors.size(); ++s) {
    const auto& sec = topo.sectors[s];
    bool in = in_image(at(q1, sec.sample[0], sec.sample[1]), at(F, sec.sample[0], sec.sample[1]));
    sector_in[s] = in;
    int& lab = cell_label[sec.cell];
    if (lab < 0) lab = in;
    else if (lab != static_cast<int>(in))
      rep.problems.push_back("cell " + std::to_string(sec.cell) + " has mixed image labels");
  }
  for (size_t c = 0; c < topo.cells.size(); ++c) {
    rep.cell_in[c] = cell_label[c] == 1;
    if (rep.cell_in[c]) rep.image_cells.push_back(static_cast<int>(c));
  }

  rep.oval_covered.assign(topo.oval_count, -2);
  for (size_t a = 0; a < topo.arcs.size(); ++a) {
    const auto& arc = topo.arcs[a];
    UPoly p = fiber_at(F, arc.x);
    auto restrict = [&](const MPoly& q) {
      return UPoly::from_mpoly(q.substitute({MPoly(arc.x), MPoly::variable(r, 1), MPoly(1)}));
    };
    IsolatingInterval iv = arc.y;
    int s1 = sign_at_root(p, iv, restrict(q1));
    bool covered = s1 > 0;
    if (s1 == 0) covered = sign_at_root(p, iv, restrict(q3)) > 0;
    bool boundary = sector_in[arc.below] != sector_in[arc.above];
    rep.arcs.push_back({static_cast<int>(a), covered, boundary});
    if (covered == boundary)
      rep.problems.push_back("arc " + std::to_string(a) + (covered ? " is covered but bounds the image"
                                                                   : " is uncovered but interior to a label"));
    int& oc = rep.oval_covered[arc.oval];
    if (oc == -2) oc = covered;
    else if (oc != static_cast<int>(covered)) oc = -1;
  }
  for (auto& oc : rep.oval_covered)
    if (oc == -2) oc = -1;
  rep.outside_contained = topo.outside >= 0 && rep.cell_in[topo.outside];
  rep.consistent = rep.problems.empty();
  return rep;
}

bool outside_contained(const RegionReport& report, const RealCurveTopology& topo) {
  return topo.outside >= 0 && report.cell_in.at(topo.outside);
}

Signature fiber_signature(const CoverSpec& spec, const std::vector<Rat>& point) {
  Rat a = spec.q1.eval(point), b = spec.q2.eval(point), c = spec.q3.eval(point);
  return signature(RatMatrix{{a, b, 0}, {b, c, 0}, {0, 0, -1}});
}

std::vector<CrossingPair> crossing_pairs(const RealCurveTopology& topo) {
  std::vector<CrossingPair> out;
  for (size_t a = 0; a < topo.arcs.size(); ++a) {
    const auto& arc = topo.arcs[a];
    out.push_back({static_cast<int>(a), topo.to_original(topo.sectors[arc.below].sample),
                   topo.to_original(topo.sectors[arc.above].sample)});
  }
  return out;
}

RationalityVerdict rationality_verdict(const CoverSpec& spec, const SignatureProfile& profile,
                                       const RealCurveTopology& topo, const RegionReport& report) {
  RationalityVerdict v;
  v.section_exists = pi1_section_exists(profile);
  v.configuration = topo.configuration;
  v.gamma_real = gamma_real_nonempty(spec.W);
  v.profile = profile;
  v.region = report;
  if (topo.configuration == Configuration::one_oval) {
    v.verdict = Verdict::undetermined_single_oval;
  } else if (!spec.smooth_certified || !spec.separable_certified) {
    v.verdict = Verdict::undetermined_empty_hypothesis;
  } else {
    v.verdict = v.section_exists ? Verdict::rational : Verdict::irrational;
  }
  return v;
}

}  // namespace cbundle
