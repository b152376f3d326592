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
#include <optional>

#include "cbundle/covers.hpp"
#include "cbundle/quadric_builder.hpp"
#include "cbundle/random.hpp"

namespace cbundle::testing {

RatMatrix random_sym(Rng& rng, int bound);
RatMatrix random_invertible(Rng& rng, int bound);

// A smooth, separable triple whose Q1 has rank 3 with square
// discriminant (rank3) or rank 2 with Q2 nonzero at its vertex (rank2).
CoverSpec random_admissible(PencilCase kase, std::uint64_t seed);

// Random integer form with Q1 of the given kind but no admissibility filter.
void random_triple(PencilCase kase, Rng& rng, TernaryForm& q1, TernaryForm& q2, TernaryForm& q3);

}  // namespace cbundle::testing
