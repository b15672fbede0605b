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

#include "doctest.h"
#include "persuasion/lab.h"
#include "persuasion/sender_lp.h"

namespace persuasion {
namespace {

const Rational kHalf(1, 2);

Instance Matching(std::vector<Vector> sender) {
  return Instance({kHalf, kHalf}, Matrix::FromRows(sender), Matrix::FromRows({{1, 0}, {0, 1}}));
}

ConstraintProfile UpperOnA1(Rational ub) { return ConstraintProfile({0, 0}, {ub, 1}); }

TEST_SUITE("binary_solver") {

TEST_CASE("sender prefers a1: quota, obedience and full revelation") {
  const Instance inst = Matching({{2, 0}, {1, 0}});
  Solution s = SolveBinary(inst, UpperOnA1(Rational(3, 4)));
  CHECK(s.scheme(1, 0) == kHalf);
  CHECK(s.receiver_eu == Rational(3, 4));
  CHECK(s.method == SolveMethod::kBinaryClosedForm);

  s = SolveBinary(inst, UpperOnA1(1));
  CHECK(s.scheme(1, 0) == 1);
  CHECK(s.receiver_eu == kHalf);

  s = SolveBinary(inst, UpperOnA1(kHalf));
  CHECK(s.scheme(1, 0) == 0);
  CHECK(s.receiver_eu == 1);
}

TEST_CASE("sender prefers a2 mirrors against the lower bound") {
  const Instance inst = Matching({{0, 1}, {0, 2}});
  Solution s = SolveBinary(inst, ConstraintProfile::Vacuous(2));
  CHECK(s.scheme(0, 1) == 1);
  CHECK(s.receiver_eu == kHalf);
  s = SolveBinary(inst, ConstraintProfile({Rational(1, 4), 0}, {1, 1}));
  CHECK(s.scheme(0, 1) == kHalf);
  CHECK(s.action_probs[0] == Rational(1, 4));
  CHECK(s.receiver_eu == Rational(3, 4));
}

TEST_CASE("aligned and indifferent senders reveal the state") {
  for (const Instance& inst : {Matching({{1, 0}, {0, 1}}), Matching({{3, 3}, {3, 3}})}) {
    const Solution s = SolveBinary(inst, ConstraintProfile::Vacuous(2));
    CHECK(s.scheme == SignalingScheme::FullRevelation(2));
    CHECK(s.receiver_eu == 1);
  }
}

TEST_CASE("receiver obedience limit") {
  // d1 = 1, d2 = 3, p = 1/4: rho = (1/4) / (3/4 * 3) = 1/9.
  const Instance inst({Rational(1, 4), Rational(3, 4)}, Matrix::FromRows({{2, 0}, {1, 0}}),
                      Matrix::FromRows({{1, 0}, {0, 3}}));
  const Solution s = SolveBinary(inst, ConstraintProfile::Vacuous(2));
  CHECK(s.scheme(1, 0) == Rational(1, 9));
}

TEST_CASE("degenerate priors") {
  const Instance inst({1, 0}, Matrix::FromRows({{2, 0}, {1, 0}}), Matrix::FromRows({{1, 0}, {0, 1}}));
  const Solution s = SolveBinary(inst, ConstraintProfile::Vacuous(2));
  CHECK(s.receiver_eu == 1);
}

TEST_CASE("precondition errors") {
  CHECK_THROWS_AS(SolveBinary(TernaryCounterexample(), ConstraintProfile::Vacuous(3)),
                  NotBinaryError);
  CHECK_THROWS_AS(SolveBinary(NonAlignedInstance(Rational(1, 100)), ConstraintProfile::Vacuous(2)),
                  NotPartiallyAlignedError);
  CHECK_THROWS_AS(SolveBinary(Matching({{2, 0}, {1, 0}}),
                              ConstraintProfile({Rational(3, 4), Rational(3, 4)}, {1, 1})),
                  InfeasibleConstraintsError);
}

TEST_CASE("agrees with the ex post LP on random aligned instances") {
  for (int t = 0; t < 300; ++t) {
    const std::uint64_t seed = TrialSeed(41, t);
    const Instance inst = GenInstance(2, seed, {.state_matching = true, .action_matching = true});
    const auto [tight, loose] = GenNestedConstraints(inst, seed);
    for (const ConstraintProfile& c : {tight, loose}) {
      const Solution closed = SolveBinary(inst, c);
      const ExpostResult lp = SolveExpost(inst, c);
      REQUIRE(lp.solution);
      CHECK(closed.sender_eu == lp.solution->sender_eu);
      CHECK(closed.receiver_eu == lp.solution->receiver_eu);
      CHECK(SatisfiesQuotas(closed.action_probs, c));
    }
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace persuasion
