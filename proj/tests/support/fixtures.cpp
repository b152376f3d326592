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

#include "fixtures.hpp"

#include "cbundle/errors.hpp"

namespace cbundle::testing {

RatMatrix random_sym(Rng& rng, int bound) {
  RatMatrix m(3, 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i; j < 3; ++j) {
      Rat x = rng.uniform(-bound, bound);
      if (i != j) x /= 2;
      m(i, j) = x;
      m(j, i) = x;
    }
  return m;
}

RatMatrix random_invertible(Rng& rng, int bound) {
  for (;;) {
    RatMatrix g(3, 3);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) g(i, j) = rng.uniform(-bound, bound);
    if (det(g) != 0) return g;
  }
}

void random_triple(PencilCase kase, Rng& rng, TernaryForm& q1, TernaryForm& q2, TernaryForm& q3) {
  Rat a, b;
  do {
    a = rng.uniform(-5, 5);
    b = rng.uniform(-5, 5);
  } while (a == 0 || b == 0);
  RatMatrix g = random_invertible(rng, 2);
  RatMatrix d = kase == PencilCase::rank3 ? RatMatrix::diagonal({a, b, -a * b}) : RatMatrix::diagonal({0, a, b});
  q1 = TernaryForm(g.transpose() * d * g);
  q2 = TernaryForm(random_sym(rng, 4));
  q3 = TernaryForm(random_sym(rng, 4));
}

CoverSpec random_admissible(PencilCase kase, std::uint64_t seed) {
  Rng rng(seed);
  for (int tries = 0; tries < 200; ++tries) {
    TernaryForm q1, q2, q3;
    random_triple(kase, rng, q1, q2, q3);
    if (kase == PencilCase::rank2) {
      try {
        normalize_case2(q1, q2, q3);
      } catch (const DispatchError&) {
        continue;
      }
    }
    CoverSpec spec = build_cover(q1, q2, q3, derive_seed(seed, tries));
    if (spec.smooth_certified && spec.separable_certified) return spec;
  }
  throw SamplingError("no admissible triple found");
}

}  // namespace cbundle::testing
