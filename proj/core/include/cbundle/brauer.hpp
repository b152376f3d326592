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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cbundle/mpoly.hpp"
#include "cbundle/quadform.hpp"
#include "cbundle/rational.hpp"

namespace cbundle {

// A place of Q: a prime p, or the real place (p = 0).
struct Place {
  Int p;  // 0 for infinity
  bool infinite() const { return p == 0; }
  static Place infinity() { return Place{Int(0)}; }
  static Place prime(const Int& q) { return Place{q}; }
  std::string to_string() const { return infinite() ? "inf" : p.get_str(); }
  // Primes in increasing order, infinity last.
  friend bool operator<(const Place& a, const Place& b) {
    if (a.infinite() != b.infinite()) return b.infinite();
    return a.p < b.p;
  }
  friend bool operator==(const Place& a, const Place& b) { return a.p == b.p; }
};

// 2-torsion Brauer class of Q, held by its ramification set.
class BrauerClass2 {
 public:
  BrauerClass2() = default;
  explicit BrauerClass2(std::set<Place> ram) : ram_(std::move(ram)) {}

  const std::set<Place>& ram() const { return ram_; }
  bool is_trivial() const { return ram_.empty(); }
  std::vector<std::string> to_strings() const;
  std::string to_string() const;

  BrauerClass2& operator+=(const BrauerClass2& o);
  friend BrauerClass2 operator+(BrauerClass2 a, const BrauerClass2& b) { return a += b; }
  friend bool operator==(const BrauerClass2& a, const BrauerClass2& b) { return a.ram_ == b.ram_; }
  friend bool operator!=(const BrauerClass2& a, const BrauerClass2& b) { return !(a == b); }

 private:
  std::set<Place> ram_;
};

// Prime factorization of |n| > 0: trial division then Pollard rho.
std::vector<std::pair<Int, unsigned>> factor(const Int& n);

int hilbert(const Rat& a, const Rat& b, const Place& v);
BrauerClass2 class_of(const Rat& a, const Rat& b);
BrauerClass2 hamilton();
// Class of the conic Q = 0 for a form of rank >= 2 (rank 2 needs a
// diagonalization with two nonzero entries).
BrauerClass2 class_of_form(const TernaryForm& q);

struct FunctionSymbol {
  std::vector<std::pair<MPoly, MPoly>> terms;

  FunctionSymbol() = default;
  FunctionSymbol(const MPoly& f, const MPoly& g) { terms.push_back({f, g}); }
  FunctionSymbol& operator+=(const FunctionSymbol& o) {
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    return *this;
  }
  friend FunctionSymbol operator+(FunctionSymbol a, const FunctionSymbol& b) { return a += b; }
};

// Throws SamplingError when an entry vanishes at the point.
BrauerClass2 specialize(const FunctionSymbol& sym, const std::vector<Rat>& point);

struct ComparisonResult {
  bool constant = false;
  BrauerClass2 diff;                          // meaningful when constant
  std::vector<std::vector<Rat>> witnesses;   // every sampled point
  std::vector<BrauerClass2> values;          // class at each witness
  // Two points with different values when not constant.
  std::optional<std::pair<size_t, size_t>> refutation;
  std::string summary() const;
};

// Samples n points of P^2(Q) off delta = 0 and off all symbol entries.
ComparisonResult compare_by_specialization(const FunctionSymbol& s1, const FunctionSymbol& s2, const MPoly& delta,
                                           int n, std::uint64_t seed);

struct ResidueClass {
  MPoly divisor;
  MPoly rep;
};

ResidueClass tame_residue(const FunctionSymbol& sym, const MPoly& divisor);
// Largest m with divisor^m | f (f nonzero).
unsigned multiplicity(const MPoly& f, const MPoly& divisor);

// Samples points on the line {L = 0} off delta = 0.
ComparisonResult constant_class_along_line(const FunctionSymbol& sym, const MPoly& line, const MPoly& delta, int n,
                                           std::uint64_t seed);

}  // namespace cbundle
