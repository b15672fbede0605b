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

#ifndef PERSUASION_LAB_H_
#define PERSUASION_LAB_H_

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "persuasion/model.h"

namespace persuasion {

// mt19937_64 with a portable bounded draw, so sequences do not depend on the
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform integer in [lo, hi].
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

// Independent per-trial seed derived from (seed, trial).
std::uint64_t TrialSeed(std::uint64_t seed, std::uint64_t trial);

struct InstanceFilter {
  bool state_matching = false;
  bool action_matching = false;
  // Sender utility weakly decreasing in the action index in every state, and
  // u_R(i, j) <= u_R(i, k) whenever j < i < k.
  bool monotone_structure = false;
  // Adds sender sensitivity and receiver single-peaked convexity.
  bool convex_structure = false;
};

class GeneratorExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kUtilityMax = 10;
inline constexpr std::int64_t kPriorGrid = 24;
inline constexpr int kRejectionBudget = 100'000;

// n x n instance with integer utilities in [0, 10] and a strictly positive
// prior on the 1/24 simplex grid. Sender and receiver matrices are each
// rejection-sampled against the filters that concern them; the draws share
// one budget of kRejectionBudget.
Instance GenInstance(std::size_t n, std::uint64_t seed, const InstanceFilter& filter);

// (more binding, less binding) pair, both feasible for the prior. Each bound
// is placed at a quarter step between the prior and the trivial bound.
std::pair<ConstraintProfile, ConstraintProfile> GenNestedConstraints(const Instance& inst,
                                                                     std::uint64_t seed);

struct StructuralConditions {
  bool prop3_sender_monotone = true;
  bool prop3_receiver_low_vs_high = true;
  bool generaln_sensitivity = true;
  bool generaln_convexity = true;
};

// All flags are vacuously true for two states.
StructuralConditions CheckStructuralConditions(const Instance& inst);

bool PassesFilter(const Instance& inst, const InstanceFilter& filter);

// ---------------------------------------------------------------------------
// Monotonicity fuzzing.

enum class FuzzMode { kBinary, kTernary };
std::string_view ToString(FuzzMode mode);

struct FuzzConfig {
  FuzzMode mode = FuzzMode::kBinary;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  int resolution = 0;  // ternary grid K; 0 means 12
  // Ternary only: false drops the ternary structural predicates from the generator.
  bool structural_filter = true;
  // Ternary only: trial 0 runs the known ternary counterexample.
  bool inject_counterexample = false;
  // Sender band handed to the grid oracle.
  Rational band = 0;
};

enum class Verdict { kOk, kBorderline, kViolation };
std::string_view ToString(Verdict v);

struct TrialRecord {
  std::size_t trial = 0;
  std::string source;  // "closed-form", "grid-oracle" or "expost-lp"
  Instance instance;
  ConstraintProfile more_binding;
  ConstraintProfile less_binding;
  Rational receiver_more;
  Rational receiver_less;
  Rational slack;
  Verdict verdict = Verdict::kOk;
};

struct FuzzReport {
  FuzzConfig config;
  std::size_t trials_run = 0;
  std::size_t generator_failures = 0;
  std::size_t solver_failures = 0;
  std::vector<TrialRecord> violations;
  std::vector<TrialRecord> borderline;
};

// Binary mode compares the closed form exactly. Ternary mode compares the
// grid oracle with slack 2 * receiver_gap, and also compares the exact ex post
// LP optima with zero slack; either comparison can report a violation.
FuzzReport FuzzMonotonicity(const FuzzConfig& config);

// ---------------------------------------------------------------------------
// Worked examples.

// 2x2 example without partial alignment, prior 1/4.
Instance NonAlignedInstance(const Rational& eps);
// Uniform ternary counterexample with a state-matching receiver and an
// action-matching sender.
Instance TernaryCounterexample();
Matrix TernaryConstrainedScheme();
// Fair coin, receiver gets 1 for matching state 1 and 2 for matching state 2.
Instance CoinInstance();
// Fair coin, both players get 1 from a1 and 0 from a2.
Instance AlwaysA1Instance();
// lower = upper = 1/2 on a1, a2 unconstrained.
ConstraintProfile HalfOnA1();

enum class ReproCase { kNonAlignedSchemes, kTernaryExample, kCoin, kNonAlignedExact };
std::string_view ToString(ReproCase c);
std::optional<ReproCase> ParseReproCase(std::string_view text);

struct ReproValue {
  std::string name;
  Rational value;
  std::optional<Rational> expected;  // asserted exactly when present

  bool ok() const { return !expected || *expected == value; }
};

struct ReproReport {
  ReproCase which = ReproCase::kNonAlignedSchemes;
  std::vector<ReproValue> values;
  std::vector<std::string> failures;  // non-value checks that failed
  std::vector<std::string> notes;

  bool passed() const;
};

ReproReport ReproExamples(ReproCase which, const Rational& eps = Rational(1, 100));

// True if some column permutation of `a` equals `b`.
bool EqualUpToColumnRelabeling(const Matrix& a, const Matrix& b);

}  // namespace persuasion

#endif  // PERSUASION_LAB_H_
