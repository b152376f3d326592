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
#include <vector>

#include "cbundle/mpoly.hpp"
#include "cbundle/rational.hpp"
#include "cbundle/upoly.hpp"

namespace cbundle::testing {

// +1 iff z^2 = a x^2 + b y^2 has a primitive solution modulo p^k, where
// k = 3 for odd p and k = 5 for p = 2, after stripping p^2 factors.
int hilbert_bruteforce(long a, long b, long p);

// Distinct real roots of p in (lo, hi) counted by sign changes on a grid of
// n + 1 equally spaced rational points (exact evaluation).
int grid_sign_changes(const UPoly& p, const Rat& lo, const Rat& hi, int n);

// F_p-rational points where f and its three partials all vanish mod p.
int count_singular_points_mod_p(const MPoly& f, long p);

struct FloodFillTopology {
  int components = 0;       // of the complement on the sphere
  int ovals = 0;            // (components - 1) / 2
  int outside_degree = 0;   // number of ovals bounding the outside region
  bool nested = false;      // meaningful for two ovals
  bool ok = false;          // grid resolved every feature
};

// Dense-grid flood fill of {delta != 0} on a cube-map of the sphere S^2,
// which double covers P^2(R).
FloodFillTopology flood_fill_topology(const MPoly& delta, int n);

}  // namespace cbundle::testing
