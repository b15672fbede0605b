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

#ifndef PERSUASION_SENDER_LP_H_
#define PERSUASION_SENDER_LP_H_

#include <optional>

#include "persuasion/linprog.h"
#include "persuasion/model.h"

namespace persuasion {

struct ExpostResult {
  LpStatus status = LpStatus::kInfeasible;
  std::optional<Solution> solution;  // set when status is optimal
};

// Builds the sender's LP over direct schemes phi(i, j): stochastic rows,
// per-signal obedience against every alternative action, and quotas on the
// recommended-action marginals. Primary objective is sender utility, the
// secondary objective is receiver utility.
LinearProgram BuildExpostLp(const Instance& inst, const ConstraintProfile& c,
                            Vector* receiver_objective);

// Sender-optimal, receiver-best ex post obedient direct scheme.
ExpostResult SolveExpost(const Instance& inst, const ConstraintProfile& c);

}  // namespace persuasion

#endif  // PERSUASION_SENDER_LP_H_
