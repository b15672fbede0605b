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

#include "persuasion/binary_solver.h"

#include <optional>
#include <stdexcept>

namespace persuasion {
namespace {

// min over the finite candidates; nullopt stands for +infinity.
Rational MinWithCap(Rational a, const Rational& b, const std::optional<Rational>& cap) {
  a = min(a, b);
  if (cap) a = min(a, *cap);
  return a;
}

}  // namespace

Solution SolveBinary(const Instance& inst, const ConstraintProfile& c) {
  if (inst.num_states() != 2 || inst.num_actions() != 2) {
    throw NotBinaryError("closed form needs exactly two states and two actions");
  }
  if (c.num_actions() != 2) throw NotBinaryError("constraint profile must cover two actions");
  const Classification cls = ClassifyInstance(inst);
  if (!cls.state_matching || !cls.action_matching) {
    throw NotPartiallyAlignedError(
        "closed form needs a state-matching receiver and an action-matching sender");
  }
  const Rational& p = inst.prior()[0];
  const BinaryBounds bounds = EffectiveBinaryBounds(c);
  if (p < bounds.lower || p > bounds.upper) {
    throw InfeasibleConstraintsError("prior " + p.ToString() + " outside effective bounds [" +
                                     bounds.lower.ToString() + ", " +
                                     bounds.upper.ToString() + "]");
  }

  const Matrix& us = inst.sender_utility();
  const Matrix& ur = inst.receiver_utility();
  const Rational d1 = ur(0, 0) - ur(0, 1);
  const Rational d2 = ur(1, 1) - ur(1, 0);

  Matrix scheme(2, 2);
  scheme(0, 0) = 1;
  scheme(1, 1) = 1;
  const bool degenerate = p.is_zero() || p == 1;
  if (!degenerate && cls.sender_case == SenderCase::kPrefersA1) {
    Rational pool;
    if ((1 - p) * (us(1, 0) - us(1, 1)) != 0) {
      std::optional<Rational> rho;
      if (!d2.is_zero()) rho = p * d1 / ((1 - p) * d2);
      pool = MinWithCap(Rational(1), (bounds.upper - p) / (1 - p), rho);
    }
    scheme(1, 0) = pool;
    scheme(1, 1) = 1 - pool;
  } else if (!degenerate && cls.sender_case == SenderCase::kPrefersA2) {
    Rational pool;
    if (p * (us(0, 1) - us(0, 0)) != 0) {
      std::optional<Rational> rho;
      if (!d1.is_zero()) rho = (1 - p) * d2 / (p * d1);
      pool = MinWithCap(Rational(1), (p - bounds.lower) / p, rho);
    }
    scheme(0, 1) = pool;
    scheme(0, 0) = 1 - pool;
  }

  Solution sol = MakeSolution(inst, SignalingScheme(std::move(scheme)),
                              ResponsePolicy::Identity(2), SolveMethod::kBinaryClosedForm);
  // Pooling only moves Pr[a1] away from p toward the bound it is capped by,
  // so the opposite bound cannot be crossed.
  if (sol.action_probs[0] < bounds.lower || sol.action_probs[0] > bounds.upper) {
    throw std::logic_error("closed-form scheme violates the effective quota on a1");
  }
  return sol;
}

}  // namespace persuasion
