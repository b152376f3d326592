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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cbundle/matrix.hpp"
#include "cbundle/mpoly.hpp"
#include "cbundle/quadform.hpp"
#include "cbundle/upoly.hpp"

namespace cbundle {

// A point of P^2 over Q[s]/(minpoly): coordinates are residues mod minpoly.
struct SingularWitness {
  UPoly minpoly;
  std::array<UPoly, 3> coords;
};

enum class SmoothVerdict { smooth, singular, inconclusive_retry };

struct SmoothnessCertificate {
  SmoothVerdict verdict = SmoothVerdict::inconclusive_retry;
  std::optional<SingularWitness> witness;
  std::string method;
  RatMatrix random_change = RatMatrix::identity(3);
  std::uint64_t seed = 0;
  int attempts = 0;
};

struct CoverSpec {
  TernaryForm q1, q2, q3;
  MPoly delta;  // Q2^2 - Q1 Q3 in u, v, w
  MPoly W;      // det(t0^2 M1 + 2 t0 t1 M2 + t1^2 M3) in t0, t1
  SmoothnessCertificate smooth;
  bool smooth_certified = false;
  bool separable_certified = false;
};

// delta and W only, no certification.
CoverSpec make_cover(const TernaryForm& q1, const TernaryForm& q2, const TernaryForm& q3);
// make_cover followed by both certification checks.
CoverSpec build_cover(const TernaryForm& q1, const TernaryForm& q2, const TernaryForm& q3, std::uint64_t seed);

MPoly pencil_sextic(const RatMatrix& m1, const RatMatrix& m2, const RatMatrix& m3);

SmoothnessCertificate check_quartic_smooth(const MPoly& delta, std::uint64_t seed, int max_attempts = 24);
inline SmoothnessCertificate check_quartic_smooth(const CoverSpec& spec, std::uint64_t seed) {
  return check_quartic_smooth(spec.delta, seed);
}
// f and all three partials vanish at the witness in Q[s]/(minpoly).
bool verify_witness(const MPoly& f, const SingularWitness& w);
// f evaluated at a point with coordinates in Q[s]/(m).
UPoly eval_mod(const MPoly& f, const std::vector<UPoly>& coords, const UPoly& m);

bool check_sextic_separable(const MPoly& W);
inline bool check_sextic_separable(const CoverSpec& spec) { return check_sextic_separable(spec.W); }

// True iff the binary form takes a nonnegative value somewhere on P^1(R).
bool gamma_real_nonempty(const MPoly& W);
inline bool gamma_real_nonempty(const CoverSpec& spec) { return gamma_real_nonempty(spec.W); }

// Real solvability of r^2 = Q1(p), s^2 = Q3(p), rs = Q2(p) at p on Delta.
bool deltatilde_real_over(const CoverSpec& spec, const std::vector<Rat>& p);
bool deltatilde_real_over_values(const Rat& q1, const Rat& q2, const Rat& q3);

std::string to_string(SmoothVerdict v);

}  // namespace cbundle
