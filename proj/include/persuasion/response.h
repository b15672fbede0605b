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

#ifndef PERSUASION_RESPONSE_H_
#define PERSUASION_RESPONSE_H_

#include <optional>

#include "persuasion/model.h"

namespace persuasion {

// The receiver's constrained best response to a scheme: maximize receiver
// utility over quota-feasible response policies, then maximize the sender's
// utility among receiver-optimal policies. `policy` is empty when no response
// policy satisfies the quotas.
struct ConstrainedResponse {
  std::optional<ResponsePolicy> policy;
  Rational receiver_eu;
  Rational sender_eu;
  Vector action_probs;

  bool feasible() const { return policy.has_value(); }
};

struct ResponseOptions {
  // Return the per-signal argmax directly when it already meets the quotas.
  // Disabling it forces the lexicographic LP on every call.
  bool argmax_shortcut = true;
};

// Signals with zero probability get a uniform row; they carry no mass.
ConstrainedResponse BestResponseLex(const Instance& inst, const SignalingScheme& scheme,
                                    const ConstraintProfile& c,
                                    const ResponseOptions& options = {});

struct ExAnteCheck {
  bool ic = false;
  Rational best_deviation_value;  // receiver optimum over quota-feasible policies
  Rational obedient_value;        // receiver value of following recommendations
  bool obedience_infeasible = false;  // obedient policy breaks a quota
  bool response_infeasible = false;   // no policy satisfies the quotas at all
};

// Ex ante incentive compatibility of a direct scheme (signal j recommends
// action j) under quota constraints.
ExAnteCheck CheckExAnteIc(const Instance& inst, const SignalingScheme& direct_scheme,
                          const ConstraintProfile& c);

struct Derandomized {
  SignalingScheme direct_scheme;
  Matrix joint_distribution;  // [state][action]
};

// Pushes the receiver's randomization into the scheme and merges signals by
// recommended action: direct(i, j) = sum_s scheme(i, s) * response(s, j).
Derandomized Derandomize(const Instance& inst, const SignalingScheme& scheme,
                         const ResponsePolicy& response);

}  // namespace persuasion

#endif  // PERSUASION_RESPONSE_H_
