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

#include "persuasion/model.h"

#include "doctest.h"
#include "persuasion/lab.h"
#include "support/oracles.h"

namespace persuasion {
namespace {

const Rational kHalf(1, 2);
const Rational kThird(1, 3);

Matrix Table2Scheme() { return TernaryConstrainedScheme(); }

TEST_SUITE("model") {

TEST_CASE("instance validation") {
  const Matrix u = Matrix::FromRows({{1, 0}, {0, 1}});
  CHECK_THROWS_AS(Instance({kHalf, kThird}, u, u), ValidationError);
  CHECK_THROWS_AS(Instance({kHalf, kHalf}, u, Matrix(3, 2)), ValidationError);
  CHECK_THROWS_AS(Instance({Rational(3, 2), -kHalf}, u, u), ValidationError);
  CHECK_THROWS_AS(Instance({Rational(1)}, Matrix(1, 2), Matrix(1, 2)), ValidationError);
  CHECK_NOTHROW(Instance({0, 1}, u, u));
}

TEST_CASE("profile validation") {
  CHECK_THROWS_AS(ConstraintProfile({kHalf}, {kThird}), ValidationError);
  CHECK_THROWS_AS(ConstraintProfile({0, 0}, {1, Rational(2)}), ValidationError);
  CHECK_THROWS_AS(ConstraintProfile({0}, {1, 1}), ValidationError);
  CHECK(ConstraintProfile::Vacuous(2) == ConstraintProfile({0, 0}, {1, 1}));
}

TEST_CASE("scheme and response validation") {
  CHECK_THROWS_AS(SignalingScheme(Matrix::FromRows({{kHalf, kThird}})), ValidationError);
  CHECK_THROWS_AS(ResponsePolicy(Matrix::FromRows({{Rational(-1), 2}})), ValidationError);
  CHECK(SignalingScheme::Uninformative(3).num_signals() == 1);
  CHECK(SignalingScheme::FullRevelation(3).probs() == ResponsePolicy::Identity(3).probs());
}

TEST_CASE("classification") {
  const Instance nonaligned = NonAlignedInstance(Rational(1, 100));
  Classification c = ClassifyInstance(nonaligned);
  CHECK(c.state_matching);
  CHECK_FALSE(c.action_matching);

  c = ClassifyInstance(TernaryCounterexample());
  CHECK(c.state_matching);
  CHECK(c.action_matching);
  CHECK(c.sender_case == SenderCase::kNone);

  const Matrix constant(2, 2, Rational(5));
  const Instance flat({kHalf, kHalf}, constant, Matrix::FromRows({{1, 0}, {0, 1}}));
  c = ClassifyInstance(flat);
  CHECK(c.action_matching);
  CHECK(c.sender_case == SenderCase::kIndifferent);

  auto sender_case = [](std::vector<Vector> s) {
    return ClassifyInstance(Instance({kHalf, kHalf}, Matrix::FromRows(s),
                                     Matrix::FromRows({{1, 0}, {0, 1}})))
        .sender_case;
  };
  CHECK(sender_case({{2, 0}, {0, 1}}) == SenderCase::kAligned);
  CHECK(sender_case({{2, 0}, {1, 0}}) == SenderCase::kPrefersA1);
  CHECK(sender_case({{0, 1}, {0, 2}}) == SenderCase::kPrefersA2);
  CHECK(sender_case({{1, 1}, {1, 0}}) == SenderCase::kPrefersA1);
}

TEST_CASE("state matching needs unimodal rows") {
  CHECK(IsStateMatching(Matrix::FromRows({{4, 0, 0}, {2, 3, 1}, {0, 1, 3}})));
  CHECK_FALSE(IsStateMatching(Matrix::FromRows({{4, 0, 1}, {2, 3, 1}, {0, 1, 3}})));
  CHECK_FALSE(IsStateMatching(Matrix::FromRows({{0, 1}, {0, 1}})));
}

TEST_CASE("constraint checks") {
  const Instance inst = NonAlignedInstance(Rational(1, 100));
  ConstraintCheck k = CheckConstraints(ConstraintProfile({0, 0}, {Rational(1, 4), 1}), inst);
  CHECK(k.feasible);
  CHECK(k.implementable);
  k = CheckConstraints(ConstraintProfile({kHalf, 0}, {Rational(3, 4), 1}), inst);
  CHECK_FALSE(k.feasible);
  CHECK(k.implementable);
  k = CheckConstraints(ConstraintProfile({kHalf, kHalf}, {kHalf, kHalf}), inst);
  CHECK(k.implementable);
  k = CheckConstraints(ConstraintProfile({Rational(3, 4), kHalf}, {1, 1}), inst);
  CHECK_FALSE(k.implementable);
  k = CheckConstraints(ConstraintProfile({0, 0, 0}, {kHalf, 1, 1}), TernaryCounterexample());
  CHECK(k.feasible);
  CHECK_THROWS_AS(CheckConstraints(ConstraintProfile::Vacuous(3), inst), ValidationError);

  const Instance wide({kHalf, kHalf}, Matrix(2, 3), Matrix(2, 3));
  k = CheckConstraints(ConstraintProfile::Vacuous(3), wide);
  CHECK(k.dimension_mismatch);
  CHECK_FALSE(k.feasible);
}

TEST_CASE("binding order") {
  const ConstraintProfile tight({0, 0}, {Rational(1, 4), 1});
  const ConstraintProfile open = ConstraintProfile::Vacuous(2);
  CHECK(CompareBinding(tight, open) == BindingOrder::kFirstMoreBinding);
  CHECK(CompareBinding(open, tight) == BindingOrder::kSecondMoreBinding);
  CHECK(CompareBinding(tight, tight) == BindingOrder::kEqual);
  CHECK(CompareBinding(ConstraintProfile({0, 0}, {kHalf, 1}),
                       ConstraintProfile({Rational(1, 4), 0}, {1, 1})) ==
        BindingOrder::kIncomparable);
}

TEST_CASE("effective binary bounds") {
  const BinaryBounds b =
      EffectiveBinaryBounds(ConstraintProfile({Rational(1, 10), kHalf}, {1, Rational(7, 10)}));
  CHECK(b.lower == Rational(3, 10));
  CHECK(b.upper == kHalf);
}

TEST_CASE("posteriors") {
  const Instance inst = NonAlignedInstance(Rational(1, 100));
  const SignalingScheme open(Matrix::FromRows({{1, 0}, {kThird, 2 * kThird}}));
  CHECK(Posterior(inst, open, 0) == Vector{kHalf, kHalf});
  CHECK(Posterior(inst, SignalingScheme::Uninformative(2), 0) == inst.prior());
  const Instance t2 = TernaryCounterexample();
  CHECK(Posterior(t2, SignalingScheme(Table2Scheme()), 1) == Vector{0, kHalf, kHalf});
  const SignalingScheme silent_second(Matrix::FromRows({{1, 0}, {1, 0}}));
  CHECK_THROWS_AS(Posterior(inst, silent_second, 1), UnreachableSignalError);
}

TEST_CASE("evaluation of the worked schemes") {
  const Instance inst = NonAlignedInstance(Rational(1, 100));
  const ResponsePolicy obey = ResponsePolicy::Identity(2);
  Evaluation e = Evaluate(inst, SignalingScheme(Matrix::FromRows({{1, 0}, {kThird, 2 * kThird}})), obey);
  CHECK(e.receiver_eu == Rational(301, 400));
  e = Evaluate(inst, SignalingScheme(Matrix::FromRows({{kHalf, kHalf}, {Rational(1, 6), Rational(5, 6)}})), obey);
  CHECK(e.receiver_eu == Rational(601, 800));
  CHECK(e.action_probs[0] == Rational(1, 4));

  const Instance t2 = TernaryCounterexample();
  e = Evaluate(t2, SignalingScheme(Table2Scheme()), ResponsePolicy::Identity(3));
  CHECK(e.receiver_eu == Rational(17, 6));
  CHECK(e.action_probs[0] == kHalf);
  CHECK(e.sender_eu == Rational(35, 6));

  e = Evaluate(t2, SignalingScheme::FullRevelation(3), ResponsePolicy::Identity(3));
  CHECK(e.receiver_eu == kThird * (4 + 3 + 3));
}

TEST_CASE("joint distribution agrees with a direct recomputation") {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const Instance inst = GenInstance(3, TrialSeed(5, t), {});
    const Matrix scheme = testing::RandomStochastic(3, 4, 12, rng);
    const Matrix response = testing::RandomStochastic(4, 3, 6, rng);
    const Matrix joint = JointDistribution(inst, SignalingScheme(scheme), ResponsePolicy(response));
    CHECK(joint == testing::JointByHand(inst, scheme, response));
    const Evaluation e = Evaluate(inst, SignalingScheme(scheme), ResponsePolicy(response));
    CHECK(e.receiver_eu == testing::Expect(joint, inst.receiver_utility()));
    CHECK(e.sender_eu == testing::Expect(joint, inst.sender_utility()));
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace persuasion
