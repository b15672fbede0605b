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

#include "persuasion/oracle.h"

#include "doctest.h"
#include "persuasion/binary_solver.h"
#include "persuasion/lab.h"

namespace persuasion {
namespace {

GridOptions Exact(int k) {
  GridOptions o;
  o.resolution = k;
  o.band = Rational(0);
  return o;
}

TEST_SUITE("oracle") {

TEST_CASE("resolution bounds") {
  const GridResult g = SolveExanteGrid(TernaryCounterexample(), ConstraintProfile::Vacuous(3),
                                       Exact(6));
  CHECK(g.sender_upper_gap == Rational(10 * 9, 6));
  CHECK(g.receiver_gap == Rational(4 * 9, 6));
  CHECK(DefaultResolution(2, 2) == 200);
  CHECK(DefaultResolution(3, 3) == 12);
  CHECK(DefaultResolution(4, 4) == 6);
  CHECK(Spread(Matrix::FromRows({{-1, 3}, {2, 0}})) == 4);
}

TEST_CASE("aligned instance finds full revelation") {
  const Matrix u = Matrix::FromRows({{1, 0}, {0, 1}});
  const Instance inst({Rational(1, 3), Rational(2, 3)}, u, u);
  const GridResult g = SolveExanteGrid(inst, ConstraintProfile({0, 0}, {Rational(1, 2), 1}),
                                       Exact(10));
  REQUIRE(g.best);
  CHECK(g.best->sender_eu == 1);
  CHECK(g.best->receiver_eu == 1);
  // Canonical representative: columns in ascending order.
  CHECK(g.best->scheme.probs() == Matrix::FromRows({{0, 1}, {1, 0}}));
}

TEST_CASE("non-aligned example at resolution 300") {
  const Instance inst = NonAlignedInstance(Rational(1, 100));
  const GridResult g = SolveExanteGrid(inst, ConstraintProfile::Vacuous(2), Exact(300));
  REQUIRE(g.best);
  // 101/300 is still below the exact obedience cap 100/297; 102/300 is not.
  CHECK(EqualUpToColumnRelabeling(
      g.best->scheme.probs(), Matrix::FromRows({{1, 0}, {Rational(101, 300), Rational(199, 300)}})));
  CHECK(g.best->receiver_eu == Rational(30001, 40000));
  CHECK(*g.grid_max_sender == Rational(503, 400));
}

TEST_CASE("ternary example matches the ex post values") {
  const Instance inst = TernaryCounterexample();
  GridResult g = SolveExanteGrid(inst, ConstraintProfile::Vacuous(3), Exact(12));
  REQUIRE(g.best);
  CHECK(g.best->sender_eu == 7);
  CHECK(g.best->receiver_eu == 3);
  g = SolveExanteGrid(inst, ConstraintProfile({0, 0, 0}, {Rational(1, 2), 1, 1}), Exact(12));
  REQUIRE(g.best);
  CHECK(g.best->sender_eu == Rational(35, 6));
  CHECK(g.best->receiver_eu == Rational(17, 6));
}

TEST_CASE("integer fast path matches the rational LP path") {
  for (int t = 0; t < 8; ++t) {
    const std::uint64_t seed = TrialSeed(61, t);
    const Instance inst = GenInstance(3, seed, {.state_matching = true});
    const auto [tight, loose] = GenNestedConstraints(inst, seed);
    for (const ConstraintProfile& c : {tight, loose}) {
      GridOptions fast = Exact(5);
      fast.band = Rational(1, 3);
      GridOptions slow = fast;
      slow.integer_fast_path = false;
      const GridResult a = SolveExanteGrid(inst, c, fast);
      const GridResult b = SolveExanteGrid(inst, c, slow);
      CHECK(a.grid_max_sender == b.grid_max_sender);
      REQUIRE(a.best.has_value() == b.best.has_value());
      if (!a.best) continue;
      CHECK(a.best->scheme == b.best->scheme);
      CHECK(a.best->receiver_eu == b.best->receiver_eu);
      CHECK(a.best->sender_eu == b.best->sender_eu);
    }
  }
}

TEST_CASE("schemes are canonical up to signal relabeling") {
  const GridResult g = SolveExanteGrid(CoinInstance(), ConstraintProfile::Vacuous(2), Exact(4));
  // Rows (a, 4 - a) and (b, 4 - b): column order needs a < 2, or a = 2 and
  // b <= 2, which leaves 2 * 5 + 3 of the 25 grid schemes.
  CHECK(g.schemes_evaluated == 13);
}

TEST_CASE("band keeps the receiver-best scheme among near-optimal ones") {
  const Instance inst = NonAlignedInstance(Rational(1, 100));
  GridOptions wide;
  wide.resolution = 30;
  const GridResult g = SolveExanteGrid(inst, ConstraintProfile::Vacuous(2), wide);
  REQUIRE(g.best);
  CHECK(g.band == g.sender_upper_gap);
  CHECK(g.best->sender_eu >= *g.grid_max_sender - g.band);
  const GridResult tight = SolveExanteGrid(inst, ConstraintProfile::Vacuous(2), Exact(30));
  CHECK(g.best->receiver_eu >= tight.best->receiver_eu);
}

TEST_CASE("refinement") {
  const Instance inst = NonAlignedInstance(Rational(1, 100));
  GridOptions o = Exact(10);
  o.refine = true;
  const GridResult g = SolveExanteGrid(inst, ConstraintProfile::Vacuous(2), o);
  REQUIRE(g.best);
  // Step 1/100 around the coarse optimum reaches 33/100 < 100/297. The pooling
  // signal is the second column of the canonical scheme.
  CHECK(g.best->scheme.probs() ==
        Matrix::FromRows({{0, 1}, {Rational(67, 100), Rational(33, 100)}}));
}

TEST_CASE("infeasible quotas yield no scheme") {
  const GridResult g = SolveExanteGrid(
      CoinInstance(), ConstraintProfile({Rational(3, 4), Rational(3, 4)}, {1, 1}), Exact(4));
  CHECK_FALSE(g.best);
  CHECK(g.infeasible_responses == g.schemes_evaluated);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(SolveExanteGrid(CoinInstance(), ConstraintProfile::Vacuous(3)), ValidationError);
  GridOptions o;
  o.resolution = 1;
  CHECK_THROWS_AS(SolveExanteGrid(CoinInstance(), ConstraintProfile::Vacuous(2), o),
                  ValidationError);
  o.resolution = 4;
  o.band = Rational(-1);
  CHECK_THROWS_AS(SolveExanteGrid(CoinInstance(), ConstraintProfile::Vacuous(2), o),
                  ValidationError);
}

}  // TEST_SUITE

}  // namespace
}  // namespace persuasion
