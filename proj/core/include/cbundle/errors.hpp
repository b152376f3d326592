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

#include <stdexcept>
#include <string>

namespace cbundle {

// Malformed or out-of-contract input (variable-set mismatch, zero polynomial
// where a nonzero one is required, unparsable text, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction was asked to run on data outside its case split, e.g. a
// rank-3 form with nonsquare discriminant handed to the rank-3 normalizer.
class DispatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Singular matrix where an inverse was requested.
class RankDeficientError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Random sampling could not find admissible points within its retry budget.
class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A randomized coordinate choice turned out to be degenerate too often.
class NonGenericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An invariant that must hold for every input failed; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cbundle
