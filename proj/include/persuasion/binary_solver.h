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

#ifndef PERSUASION_BINARY_SOLVER_H_
#define PERSUASION_BINARY_SOLVER_H_

#include "persuasion/model.h"

namespace persuasion {

class NotBinaryError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotPartiallyAlignedError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InfeasibleConstraintsError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Closed-form sender-optimal, receiver-best direct scheme for a 2x2 instance
// with a state-matching receiver and an action-matching sender.
//
// When the sender prefers a1 in both states, state 1 always recommends a1 and
// state 2 is pooled into a1 with probability
//     min(1, (UB - p) / (1 - p), p * d1 / ((1 - p) * d2)),
// where d1 = uR(1,a1) - uR(1,a2) and d2 = uR(2,a2) - uR(2,a1); the last term
// is the receiver's obedience limit and is dropped when d2 = 0. The a2 case is
// the mirror image against LB. Aligned and indifferent senders reveal the
// state. A zero marginal gain from pooling selects no pooling, which is the
// receiver-best choice among sender optima.
//
// Throws NotBinaryError, NotPartiallyAlignedError or
// InfeasibleConstraintsError when the preconditions fail.
Solution SolveBinary(const Instance& inst, const ConstraintProfile& c);

}  // namespace persuasion

#endif  // PERSUASION_BINARY_SOLVER_H_
