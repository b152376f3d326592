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

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "cbundle/brauer.hpp"
#include "cbundle/covers.hpp"
#include "cbundle/quadric_builder.hpp"
#include "cbundle/real_topology.hpp"

namespace cbundle {

using Json = nlohmann::json;

// Accepts "p/q" strings and JSON integers.
Rat rat_from_json(const Json& j);
Json to_json(const Rat& r);
// Coefficient map keyed by exponent tuples, e.g. {"(2,0,0)": "2"}.
Json to_json(const MPoly& p);
MPoly poly_from_json(const Json& j, const Ring* ring);
Json to_json(const RatMatrix& m);
// Upper triangle, keys m11 .. m33.
Json to_json(const TernaryForm& q);
TernaryForm form_from_json(const Json& j);
Json to_json(const Signature& s);
Json to_json(const BrauerClass2& c);
Json to_json(const IsolatingInterval& iv);
Json to_json(const SmoothnessCertificate& c);
Json to_json(const VerificationReport& r);
Json to_json(const FunctionSymbol& s);
Json to_json(const ComparisonResult& r, bool with_witnesses = true);
Json to_json(const SignatureProfile& p);
Json to_json(const RealCurveTopology& t);
Json to_json(const RegionReport& r);

// One instance document: three forms plus optional extras.
struct InstanceInput {
  std::string name;
  TernaryForm q1, q2, q3;
  // Substitution (t0, t1) -> (a s0 + b s1, c s0 + d s1), row-major a b c d.
  std::optional<std::vector<Rat>> pgl2;
  std::optional<MPoly> line;  // a linear form in u, v, w
};

InstanceInput instance_from_json(const Json& j);
Json to_json(const InstanceInput& in);

}  // namespace cbundle
