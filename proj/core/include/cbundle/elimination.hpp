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

#include "cbundle/matrix.hpp"
#include "cbundle/mpoly.hpp"

namespace cbundle {

// Sylvester matrix of f and g viewed as polynomials in variable `var`
// with coefficients in the remaining variables.
PolyMatrix sylvester(const MPoly& f, const MPoly& g, size_t var);

// Res_var(f, g), computed as a fraction-free determinant.
MPoly resultant(const MPoly& f, const MPoly& g, size_t var);
// Res_var(f, df/dvar) divided by the leading coefficient, with the
// usual sign (-1)^{n(n-1)/2}.
MPoly discriminant(const MPoly& f, size_t var);

// j-th subresultant polynomial S_j(f, g) w.r.t. var, 0 <= j < min(deg f, deg g).
// Its coefficient of var^j is the j-th principal subresultant coefficient.
MPoly subresultant(const MPoly& f, const MPoly& g, size_t var, int j);
MPoly principal_subresultant_coeff(const MPoly& f, const MPoly& g, size_t var, int j);

}  // namespace cbundle
