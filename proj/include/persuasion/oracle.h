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

#ifndef PERSUASION_ORACLE_H_
#define PERSUASION_ORACLE_H_

#include <cstddef>
#include <optional>

#include "persuasion/model.h"

namespace persuasion {

struct GridOptions {
  // Grid step 1/resolution for every scheme entry; 0 picks DefaultResolution.
  int resolution = 0;
  // Sender-optimality band; unset means sender_upper_gap.
  std::optional<Rational> band;
  // Re-grid a +-1/K box around the coarse incumbent at step 1/K^2.
  bool refine = false;
  // Evaluate responses with scaled integers (argmax, then min-cost flow)
  // where that is exact; false forces the rational LP for every scheme.
  bool integer_fast_path = true;
};

int DefaultResolution(std::size_t num_states, std::size_t num_actions);

// Largest minus smallest entry.
Rational Spread(const Matrix& m);

struct GridResult {
  std::optional<Solution> best;  // empty when no grid scheme admits a response
  // A priori resolution bounds L * (m * n) / K for sender and receiver spreads L.
  Rational sender_upper_gap;
  Rational receiver_gap;
  Rational band;
  std::optional<Rational> grid_max_sender;
  int resolution = 0;
  std::size_t schemes_evaluated = 0;
  // Schemes skipped because even their best sender value fell below the band.
  std::size_t schemes_pruned = 0;
  std::size_t infeasible_responses = 0;
};

// Brute-force ex ante solver. Enumerates every m-signal scheme whose rows are
// compositions of K, computes the receiver's constrained lexicographic
// response to each, keeps the schemes whose sender value is within `band` of
// the grid maximum and returns the one best for the receiver. Remaining ties
// go to the lexicographically smallest scheme matrix.
//
// Signal labels are interchangeable, so only schemes whose columns are in
// nondecreasing lexicographic order are evaluated; the lexicographically
// smallest member of each relabeling class is exactly that one.
GridResult SolveExanteGrid(const Instance& inst, const ConstraintProfile& c,
                           const GridOptions& options = {});

}  // namespace persuasion

#endif  // PERSUASION_ORACLE_H_
