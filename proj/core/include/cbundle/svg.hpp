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

#include <string>

#include "cbundle/covers.hpp"
#include "cbundle/real_topology.hpp"

namespace cbundle {

// Disk model of P^2(R): the upper hemisphere of S^2 projected to the unit
// disk. Shades the image region, draws delta = 0 (covered arcs solid,
// uncovered arcs dashed) and marks each cell sample. Display only: the
// picture is built in double precision.
std::string render_svg(const CoverSpec& spec, const RealCurveTopology& topo, const RegionReport& report,
                       int grid = 160);

}  // namespace cbundle
