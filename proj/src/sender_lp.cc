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

#include "persuasion/sender_lp.h"

namespace persuasion {

LinearProgram BuildExpostLp(const Instance& inst, const ConstraintProfile& c,
                            Vector* receiver_objective) {
  if (c.num_actions() != inst.num_actions()) {
    throw ValidationError("constraint profile width does not match action count");
  }
  const std::size_t n = inst.num_states();
  const std::size_t m = inst.num_actions();
  const auto var = [m](std::size_t i, std::size_t j) { return i * m + j; };
  const Vector& prior = inst.prior();
  const Matrix& us = inst.sender_utility();
  const Matrix& ur = inst.receiver_utility();

  LinearProgram lp;
  lp.objective.assign(n * m, Rational(0));
  Vector receiver(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      lp.objective[var(i, j)] = prior[i] * us(i, j);
      receiver[var(i, j)] = prior[i] * ur(i, j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    LinearConstraint row{Vector(n * m), Relation::kEqual, Rational(1)};
    for (std::size_t j = 0; j < m; ++j) row.coefficients[var(i, j)] = 1;
    lp.rows.push_back(std::move(row));
  }
  // Obedience: following recommendation j beats switching to k.
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      if (j == k) continue;
      LinearConstraint row{Vector(n * m), Relation::kGreaterEqual, Rational(0)};
      bool trivial = true;
      for (std::size_t i = 0; i < n; ++i) {
        row.coefficients[var(i, j)] = prior[i] * (ur(i, j) - ur(i, k));
        if (!row.coefficients[var(i, j)].is_zero()) trivial = false;
      }
      if (!trivial) lp.rows.push_back(std::move(row));
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    Vector coeffs(n * m);
    for (std::size_t i = 0; i < n; ++i) coeffs[var(i, j)] = prior[i];
    if (c.lower()[j].sign() > 0) lp.rows.push_back({coeffs, Relation::kGreaterEqual, c.lower()[j]});
    if (c.upper()[j] < 1) lp.rows.push_back({std::move(coeffs), Relation::kLessEqual, c.upper()[j]});
  }
  if (receiver_objective) *receiver_objective = std::move(receiver);
  return lp;
}

ExpostResult SolveExpost(const Instance& inst, const ConstraintProfile& c) {
  Vector receiver;
  LinearProgram lp = BuildExpostLp(inst, c, &receiver);
  LpResult r = SolveLex(lp, receiver);
  if (r.status != LpStatus::kOptimal) return ExpostResult{r.status, std::nullopt};

  const std::size_t n = inst.num_states();
  const std::size_t m = inst.num_actions();
  Matrix phi(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) phi(i, j) = r.point[i * m + j];
  }
  return ExpostResult{LpStatus::kOptimal,
                      MakeSolution(inst, SignalingScheme(std::move(phi)),
                                   ResponsePolicy::Identity(m), SolveMethod::kExpostLp)};
}

}  // namespace persuasion
