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

#include <cstdint>
#include <string>
#include <vector>

#include "cbundle/covers.hpp"
#include "cbundle/matrix.hpp"
#include "cbundle/quadform.hpp"
#include "cbundle/real_roots.hpp"

namespace cbundle {

// Isolation for a squarefree polynomial in a single variable of its ring.
std::vector<IsolatingInterval> sturm_isolate(const MPoly& p);

// Signatures of M(t) = t0^2 M1 + 2 t0 t1 M2 + t1^2 M3 between the real
// roots of W on P^1(R). Roots are kept in the chart T = t0 / t1; a root at
// [1:0] is flagged and sorts last.
struct SignatureProfile {
  struct Root {
    bool at_infinity = false;
    IsolatingInterval iv;
  };
  struct Interval {
    std::vector<Rat> sample;  // [t0, t1]
    Signature sig;
  };
  std::vector<Root> weierstrass_roots;
  // Interval i starts at root i - 1 and ends at root i (cyclically). With
  // no root at [1:0] the last interval wraps through it.
  std::vector<Interval> intervals;
};

SignatureProfile signature_profile(const CoverSpec& spec);
// False iff some interval has a negative definite form.
bool pi1_section_exists(const SignatureProfile& profile);

enum class Configuration { empty, one_oval, two_nested, two_non_nested, three_ovals, four_ovals };
std::string to_string(Configuration c);

// Sweep data lives in a chart: the point (x, y) stands for g (x, y, 1)^T in
// the original coordinates u, v, w.
struct Sector {
  int slab = 0;
  int index = 0;              // 0 is below every branch
  std::vector<Rat> sample;    // chart (x, y)
  int cell = -1;
};

struct ArcPiece {
  int slab = 0;
  int branch = 0;             // 0-based from the bottom
  Rat x;
  IsolatingInterval y;        // root of delta(x, ., 1) in the chart
  int below = -1, above = -1; // sector ids
  int oval = -1;
};

struct Cell {
  std::vector<Rat> sample;    // u, v, w
  int depth = 0;              // number of ovals enclosing the cell
  int delta_sign = 0;
  int parent_oval = -1;       // the oval this cell lies directly inside of
  std::vector<int> sectors;
};

struct RealCurveTopology {
  int oval_count = 0;
  std::vector<int> oval_parent;  // enclosing oval, -1 at top level
  Configuration configuration = Configuration::empty;
  std::vector<Cell> cells;
  int outside = -1;

  RatMatrix chart = RatMatrix::identity(3);
  MPoly chart_delta;             // delta(g X), in u, v, w
  std::vector<IsolatingInterval> critical;
  std::vector<Rat> slab_samples;
  std::vector<int> branch_counts;
  std::vector<int> fold_below;   // per critical value: branches below the fold
  std::vector<Sector> sectors;
  std::vector<ArcPiece> arcs;
  std::uint64_t seed = 0;
  int attempts = 0;

  std::vector<Rat> to_original(const std::vector<Rat>& chart_xy) const;
};

// Throws NonGenericError when no generic chart turns up in max_attempts.
RealCurveTopology quartic_topology(const MPoly& delta, std::uint64_t seed, int max_attempts = 16);
// Requires a smooth-certified quartic.
RealCurveTopology quartic_topology(const CoverSpec& spec, std::uint64_t seed);

struct ArcLabel {
  int arc = 0;
  bool covered = false;   // the cover has real points over the arc
  bool boundary = false;  // the arc separates an image cell from a non-image cell
};

struct RegionReport {
  std::vector<bool> cell_in;
  std::vector<int> image_cells;
  std::vector<ArcLabel> arcs;
  std::vector<int> oval_covered;  // 1 covered, 0 uncovered, -1 mixed
  bool outside_contained = false;
  bool consistent = false;        // uncovered arcs are exactly the boundary
  std::vector<std::string> problems;
};

// Image membership: Q1 >= 0 or Q2^2 - Q1 Q3 > 0.
bool in_image(const Rat& q1, const Rat& delta);
RegionReport region_report(const CoverSpec& spec, const RealCurveTopology& topo);
bool outside_contained(const RegionReport& report, const RealCurveTopology& topo);

// Signature of the conic t0^2 Q1 + 2 t0 t1 Q2 + t1^2 Q3 - z^2 over a point.
Signature fiber_signature(const CoverSpec& spec, const std::vector<Rat>& point);

struct CrossingPair {
  int arc = 0;
  std::vector<Rat> below, above;  // u, v, w
};
std::vector<CrossingPair> crossing_pairs(const RealCurveTopology& topo);

enum class Verdict { rational, irrational, undetermined_single_oval, undetermined_empty_hypothesis };
std::string to_string(Verdict v);

struct RationalityVerdict {
  Verdict verdict = Verdict::undetermined_empty_hypothesis;
  bool section_exists = false;
  Configuration configuration = Configuration::empty;
  bool gamma_real = false;
  SignatureProfile profile;
  RegionReport region;
};

RationalityVerdict rationality_verdict(const CoverSpec& spec, const SignatureProfile& profile,
                                       const RealCurveTopology& topo, const RegionReport& report);

}  // namespace cbundle
