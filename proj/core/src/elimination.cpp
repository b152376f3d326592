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

#include "cbundle/elimination.hpp"

#include "cbundle/errors.hpp"

namespace cbundle {

namespace {

MPoly var_power(const Ring* ring, size_t var, unsigned e) {
  std::vector<unsigned> ex(ring->arity(), 0);
  ex[var] = e;
  return MPoly::monomial(ring, ex, 1);
}

// Rows x^{k-1} f, ..., f then x^{l-1} g, ..., g; columns are the powers
// x^{width-1} down to x^0.
PolyMatrix shifted_rows(const std::vector<MPoly>& fc, const std::vector<MPoly>& gc, int k, int l, int width) {
  int m = static_cast<int>(fc.size()) - 1, n = static_cast<int>(gc.size()) - 1;
  PolyMatrix s(k + l, width);
  for (int r = 0; r < k; ++r) {
    int top = m + (k - 1 - r);
    for (int e = 0; e <= m; ++e) s(r, width - 1 - (top - m + e)) = fc[e];
  }
  for (int r = 0; r < l; ++r) {
    int top = n + (l - 1 - r);
    for (int e = 0; e <= n; ++e) s(k + r, width - 1 - (top - n + e)) = gc[e];
  }
  return s;
}

}  // namespace

PolyMatrix sylvester(const MPoly& f, const MPoly& g, size_t var) {
  auto fc = f.coefficients(var), gc = g.coefficients(var);
  int m = static_cast<int>(fc.size()) - 1, n = static_cast<int>(gc.size()) - 1;
  return shifted_rows(fc, gc, n, m, m + n);
}

MPoly resultant(const MPoly& f, const MPoly& g, size_t var) {
  if (f.is_zero() || g.is_zero()) return MPoly();
  int m = f.degree(var), n = g.degree(var);
  if (m == 0) return f.pow(n);
  if (n == 0) return g.pow(m);
  return det(sylvester(f, g, var));
}

MPoly discriminant(const MPoly& f, size_t var) {
  int n = f.degree(var);
  if (n < 1) throw InputError("discriminant needs positive degree in the variable");
  MPoly r = resultant(f, f.partial(var), var);
  MPoly d = exact_div(r, f.coefficients(var).back());
  return ((n * (n - 1) / 2) % 2) ? -d : d;
}

MPoly subresultant(const MPoly& f, const MPoly& g, size_t var, int j) {
  auto fc = f.coefficients(var), gc = g.coefficients(var);
  int m = static_cast<int>(fc.size()) - 1, n = static_cast<int>(gc.size()) - 1;
  if (j < 0 || j >= std::min(m, n)) throw InputError("subresultant index out of range");
  int width = m + n - j;
  PolyMatrix s = shifted_rows(fc, gc, n - j, m - j, width);
  int lead_cols = m + n - 2 * j - 1;
  const Ring* ring = f.ring() ? f.ring() : g.ring();
  MPoly out;
  for (int i = 0; i <= j; ++i) {
    PolyMatrix sq(lead_cols + 1, lead_cols + 1);
    for (int r = 0; r <= lead_cols; ++r) {
      for (int c = 0; c < lead_cols; ++c) sq(r, c) = s(r, c);
      sq(r, lead_cols) = s(r, width - 1 - i);
    }
    MPoly d = det(sq);
    if (!d.is_zero()) out += d * var_power(ring, var, static_cast<unsigned>(i));
  }
  return out;
}

MPoly principal_subresultant_coeff(const MPoly& f, const MPoly& g, size_t var, int j) {
  auto s = subresultant(f, g, var, j);
  auto c = s.coefficients(var);
  return static_cast<int>(c.size()) > j ? c[j] : MPoly();
}

}  // namespace cbundle
