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
#include <vector>

#include "cbundle/brauer.hpp"
#include "cbundle/covers.hpp"
#include "cbundle/matrix.hpp"
#include "cbundle/quadform.hpp"

namespace cbundle {

enum class PencilCase { rank3, rank2 };

struct QuadricPencil {
  PencilCase kase = PencilCase::rank3;
  Rat a, b;
  RatMatrix A0, Ainf;  // 6x6 symmetric
  MPoly q0, qinf;      // in x0..x5
  CoordChange change;
  // The normalized triple the blocks were assembled from.
  RatMatrix M1, M2, M3;
  // Rank-2 case only: T2 + T2^T = 2 M2 (upper triangular) and N1 = diag(a, b).
  RatMatrix T2, N1;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string residual;  // "0" on success
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  const CheckResult* find(const std::string& name) const;
};

struct FiberForm {
  PolyMatrix Bp;    // 6x4
  PolyMatrix gram;  // 4x4, Bp^T A0 Bp
  PolyMatrix bM;    // 3x3 (rank 3) or 2x2 (rank 2)
};

struct GenericFiberSymbols {
  FunctionSymbol raw;         // read off the fiber diagonalization
  FunctionSymbol simplified;  // (Q1, Q2^2 - Q1 Q3) + (a, b)
  FunctionSymbol y_symbol;    // (Q1, Q2^2 - Q1 Q3)
  MPoly q1, delta;            // normalized Q1 and quartic
};

// Dispatches on rank/discriminant of Q1 and normalizes first.
QuadricPencil build_pencil(const CoverSpec& spec);
// Assembles the blocks directly from already-normalized data; no checks.
QuadricPencil pencil_from_matrices(PencilCase kase, const Rat& a, const Rat& b, const RatMatrix& M1,
                                   const RatMatrix& M2, const RatMatrix& M3);

VerificationReport verify_pencil(const QuadricPencil& p, const CoverSpec& spec);
FiberForm fiber_form(const QuadricPencil& p);
FiberForm fiber_form_at(const QuadricPencil& p, const std::vector<Rat>& point);
VerificationReport verify_minors(const FiberForm& f, const QuadricPencil& p);
GenericFiberSymbols generic_fiber_symbol(const QuadricPencil& p);

std::string to_string(PencilCase c);

}  // namespace cbundle
