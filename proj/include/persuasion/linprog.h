// Copyright 2026 The Persuasion Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PERSUASION_LINPROG_H_
#define PERSUASION_LINPROG_H_

#include <optional>
#include <string_view>
#include <vector>

#include "persuasion/model.h"

namespace persuasion {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  Vector coefficients;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// Missing lower/upper means unbounded on that side.
struct VariableBound {
  std::optional<Rational> lower = Rational(0);
  std::optional<Rational> upper;
};

// maximize objective . x  subject to rows and per-variable bounds.
// An empty `bounds` vector means x >= 0 for every variable.
struct LinearProgram {
  Vector objective;
  std::vector<LinearConstraint> rows;
  std::vector<VariableBound> bounds;

  std::size_t num_variables() const { return objective.size(); }
  // Throws ValidationError on width mismatches or inverted bounds.
  void Validate() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };
std::string_view ToString(LpStatus status);

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Vector point;    // set when optimal
  Rational value;  // objective value at `point` when optimal
};

// Exact two-phase primal simplex with Bland's rule. The returned point is a
// basic feasible solution (a vertex of the feasible region).
LpResult SolveLp(const LinearProgram& lp);

// Lexicographic optimum: among the maximizers of lp.objective, maximize
// `secondary`. The returned value is the secondary objective value.
LpResult SolveLex(const LinearProgram& lp, const Vector& secondary);

// True when `x` satisfies every row and bound of `lp` exactly.
bool IsFeasiblePoint(const LinearProgram& lp, const Vector& x);

Rational Dot(const Vector& a, const Vector& b);

}  // namespace persuasion

#endif  // PERSUASION_LINPROG_H_
