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
#include <string_view>
#include <utility>
#include <vector>

#include "cbundle/rational.hpp"

namespace cbundle {

// An ordered set of variable names. Rings are interned, so two MPoly values
// live in the same ring iff their Ring pointers are equal.
class Ring {
 public:
  static constexpr size_t kMaxArity = 7;

  static const Ring* get(const std::vector<std::string>& names);

  // The rings used throughout the library.
  static const Ring* uvw();
  static const Ring* t0t1();
  static const Ring* T();
  static const Ring* x6();
  static const Ring* xy();

  const std::vector<std::string>& names() const { return names_; }
  size_t arity() const { return names_.size(); }
  int index_of(std::string_view name) const;

  explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {}

 private:
  std::vector<std::string> names_;
};

// Packed exponent vector: top byte holds the total degree, then one byte
// per variable with variable 0 most significant. Integer comparison of two
// packed monomials is exactly graded lexicographic comparison.
using Mono = std::uint64_t;

namespace mono {
inline unsigned total(Mono m) { return static_cast<unsigned>(m >> 56); }
inline unsigned exp(Mono m, size_t var) { return static_cast<unsigned>((m >> (8 * (6 - var))) & 0xffu); }
Mono make(const std::vector<unsigned>& exps);
bool divides(Mono d, Mono m, size_t arity);
}  // namespace mono

class MPoly {
 public:
  using Term = std::pair<Mono, Rat>;

  MPoly() = default;
  MPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  MPoly(long c) : MPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  MPoly(int c) : MPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static MPoly variable(const Ring* ring, size_t index);
  static MPoly variable(const Ring* ring, std::string_view name);
  static MPoly monomial(const Ring* ring, const std::vector<unsigned>& exps, const Rat& c);
  static MPoly from_terms(const Ring* ring, std::vector<Term> terms);

  // Text form: "2*u^2 + 3*v*w - 1/2". Division only by numeric literals.
  static MPoly parse(const Ring* ring, std::string_view text);

  const Ring* ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  Rat constant_term() const;
  int total_degree() const { return terms_.empty() ? -1 : static_cast<int>(mono::total(terms_[0].first)); }
  int degree(size_t var) const;
  bool is_homogeneous() const;
  Mono leading_mono() const { return terms_.front().first; }
  const Rat& leading_coeff() const { return terms_.front().second; }
  Rat coeff(Mono m) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly scaled(const Rat& c) const;
  MPoly pow(unsigned n) const;

  Rat evaluate(const std::vector<Rat>& point) const;
  // images[i] replaces variable i; all images must share a ring.
  MPoly substitute(const std::vector<MPoly>& images) const;
  MPoly partial(size_t var) const;
  // coefficients(var)[k] is the coefficient of var^k, still in this ring.
  std::vector<MPoly> coefficients(size_t var) const;
  // Rename into a ring that contains every variable this one uses.
  MPoly with_ring(const Ring* target) const;

  // Division by a single divisor in grlex order. The remainder is zero iff
  // d divides this polynomial, so rem() doubles as reduction modulo d.
  std::pair<MPoly, MPoly> divmod(const MPoly& d) const;
  std::optional<MPoly> divide_exact(const MPoly& d) const;
  MPoly rem(const MPoly& d) const { return divmod(d).second; }

  std::string to_string() const;

 private:
  MPoly(const Ring* ring, std::vector<Term> terms) : ring_(ring), terms_(std::move(terms)) {}
  static const Ring* unify(const MPoly& a, const MPoly& b);
  static MPoly merge(const MPoly& a, const MPoly& b, bool subtract);

  const Ring* ring_ = nullptr;
  std::vector<Term> terms_;  // strictly decreasing monomials, nonzero coefficients
};

MPoly exact_div(const MPoly& a, const MPoly& b);
inline Rat exact_div(const Rat& a, const Rat& b) { return a / b; }
inline bool is_zero(const MPoly& p) { return p.is_zero(); }
inline bool is_zero(const Rat& r) { return r == 0; }

}  // namespace cbundle
