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

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace cbundle {

// Exact rationals and integers. mpq_class keeps values canonical
// (gcd(num, den) = 1, den > 0) after every arithmetic operation.
using Int = mpz_class;
using Rat = mpq_class;

// n/d in canonical form (mpq_class(n, d) alone does not reduce).
inline Rat frac(const Int& n, const Int& d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

// "p/q", with "/q" omitted when q = 1.
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
Rat parse_rat(std::string_view text);

int sign(const Rat& r);
int sign(const Int& z);

bool is_square(const Int& z);
bool is_square(const Rat& r);

// Exact square root when r is a square in Q (nonnegative root).
std::optional<Rat> sqrt_exact(const Rat& r);

// Squarefree integer s with r = s * (rational square); sqf(0) = 0.
Int squarefree_part(const Rat& r);

// p-adic valuation of a nonzero rational.
long valuation(const Rat& r, const Int& p);

Int gcd(const Int& a, const Int& b);

}  // namespace cbundle
