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
#include <string>
#include <vector>

#include "cbundle/json_io.hpp"
#include "cbundle/real_topology.hpp"

namespace cbundle {

struct Pgl2Move {
  std::vector<Rat> matrix;  // a b c d: (t0, t1) -> (a s0 + b s1, c s0 + d s1)
  std::vector<Rat> point;   // [t0:t1] moved to [1:0]
};

// Substituted triple: the pencil form in s0, s1.
void apply_pgl2(const std::vector<Rat>& m, TernaryForm& q1, TernaryForm& q2, TernaryForm& q3);

// Searches [t0:t1] with coprime integer coordinates of height <= bound for
// a member of the pencil with rank 3 and square discriminant. A miss is not
// a proof that none exists.
std::optional<Pgl2Move> pgl2_search(const TernaryForm& q1, const TernaryForm& q2, const TernaryForm& q3, int bound);
inline std::optional<Pgl2Move> pgl2_search(const CoverSpec& spec, int bound) {
  return pgl2_search(spec.q1, spec.q2, spec.q3, bound);
}

struct AnalyzeOptions {
  std::uint64_t seed = 0;
  int samples = 25;
  int height_bound = 0;  // 0 disables the automatic PGL2 search
  bool pencil = true;
  bool verify = true;
  bool brauer = true;
  bool real = true;
  bool svg = false;
  bool timings = false;
};

enum class Status { ok, verification_failed, rejected };
std::string to_string(Status s);
int exit_code(Status s);

struct AnalysisReport {
  Status status = Status::ok;
  std::string stage;    // where it stopped, when not ok
  std::string message;
  int checks_passed = 0;
  int checks_total = 0;
  std::optional<RationalityVerdict> verdict;
  std::optional<BrauerClass2> constant_difference;
  Json doc;
  std::string svg;
};

AnalysisReport analyze(const InstanceInput& in, const AnalyzeOptions& opt);

}  // namespace cbundle
