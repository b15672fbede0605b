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

#ifndef PERSUASION_MODEL_H_
#define PERSUASION_MODEL_H_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "persuasion/rational.h"

namespace persuasion {

using Vector = std::vector<Rational>;

// Thrown for malformed inputs: wrong dimensions, non-stochastic rows,
// out-of-range bounds.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A signal with zero total probability has no posterior.
class UnreachableSignalError : public std::domain_error {
 public:
  explicit UnreachableSignalError(std::size_t signal);
  std::size_t signal() const { return signal_; }

 private:
  std::size_t signal_;
};

// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Rational& fill = Rational(0));
  // Throws ValidationError unless every row has the same width.
  static Matrix FromRows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// True when every entry is >= 0 and each row sums to exactly one.
bool IsRowStochastic(const Matrix& m);

// Finite persuasion game: a prior over n states and sender/receiver utility
// matrices indexed [state][action].
class Instance {
 public:
  Instance(Vector prior, Matrix sender_utility, Matrix receiver_utility);

  std::size_t num_states() const { return prior_.size(); }
  std::size_t num_actions() const { return sender_.cols(); }
  const Vector& prior() const { return prior_; }
  const Matrix& sender_utility() const { return sender_; }
  const Matrix& receiver_utility() const { return receiver_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Vector prior_;
  Matrix sender_;
  Matrix receiver_;
};

// Per-action quotas on the overall probability of each action.
class ConstraintProfile {
 public:
  ConstraintProfile(Vector lower, Vector upper);
  // lower = 0, upper = 1 for every action.
  static ConstraintProfile Vacuous(std::size_t num_actions);

  std::size_t num_actions() const { return lower_.size(); }
  const Vector& lower() const { return lower_; }
  const Vector& upper() const { return upper_; }

  friend bool operator==(const ConstraintProfile&, const ConstraintProfile&) = default;

 private:
  Vector lower_;
  Vector upper_;
};

// probs(i, s) = Pr[signal s | state i].
class SignalingScheme {
 public:
  explicit SignalingScheme(Matrix probs);
  static SignalingScheme FullRevelation(std::size_t num_states);
  static SignalingScheme Uninformative(std::size_t num_states);

  std::size_t num_states() const { return probs_.rows(); }
  std::size_t num_signals() const { return probs_.cols(); }
  const Matrix& probs() const { return probs_; }
  const Rational& operator()(std::size_t state, std::size_t signal) const {
    return probs_(state, signal);
  }

  friend bool operator==(const SignalingScheme&, const SignalingScheme&) = default;

 private:
  Matrix probs_;
};

// probs(s, j) = Pr[action j | signal s].
class ResponsePolicy {
 public:
  explicit ResponsePolicy(Matrix probs);
  // Obedient response to a direct scheme.
  static ResponsePolicy Identity(std::size_t num_actions);

  std::size_t num_signals() const { return probs_.rows(); }
  std::size_t num_actions() const { return probs_.cols(); }
  const Matrix& probs() const { return probs_; }
  const Rational& operator()(std::size_t signal, std::size_t action) const {
    return probs_(signal, action);
  }

  friend bool operator==(const ResponsePolicy&, const ResponsePolicy&) = default;

 private:
  Matrix probs_;
};

enum class SolveMethod { kBinaryClosedForm, kExpostLp, kGridOracle, kManual };
std::string_view ToString(SolveMethod method);

struct Evaluation {
  Rational sender_eu;
  Rational receiver_eu;
  Vector action_probs;
};

struct Solution {
  SignalingScheme scheme;
  ResponsePolicy response;
  Rational sender_eu;
  Rational receiver_eu;
  Vector action_probs;
  SolveMethod method;
};

// Builds a Solution by evaluating (scheme, response) exactly.
Solution MakeSolution(const Instance& inst, SignalingScheme scheme, ResponsePolicy response,
                      SolveMethod method);

// Case tags for binary instances, following the sign pattern of the sender's
// action preference in each state.
enum class SenderCase { kAligned, kPrefersA1, kPrefersA2, kIndifferent, kNone };
std::string_view ToString(SenderCase c);

struct Classification {
  bool state_matching = false;
  bool action_matching = false;
  SenderCase sender_case = SenderCase::kNone;
};

bool IsStateMatching(const Matrix& receiver_utility);
bool IsActionMatching(const Matrix& sender_utility);
Classification ClassifyInstance(const Instance& inst);

struct ConstraintCheck {
  bool implementable = false;
  bool feasible = false;
  // Set when feasibility was not evaluated because states and actions cannot
  // be identified (n != m).
  bool dimension_mismatch = false;
};

ConstraintCheck CheckConstraints(const ConstraintProfile& c, const Instance& inst);

enum class BindingOrder { kFirstMoreBinding, kSecondMoreBinding, kEqual, kIncomparable };
std::string_view ToString(BindingOrder order);

// Partial order "more binding": pointwise tighter lower and upper bounds.
BindingOrder CompareBinding(const ConstraintProfile& c, const ConstraintProfile& c2);

// Effective bounds on Pr[a1] for a two-action profile.
struct BinaryBounds {
  Rational lower;
  Rational upper;
};
BinaryBounds EffectiveBinaryBounds(const ConstraintProfile& c);

// Pr[signal s] for every signal.
Vector SignalProbabilities(const Instance& inst, const SignalingScheme& scheme);

// Exact Bayes posterior over states given `signal`.
Vector Posterior(const Instance& inst, const SignalingScheme& scheme, std::size_t signal);

// Joint (state, action) distribution under (scheme, response).
Matrix JointDistribution(const Instance& inst, const SignalingScheme& scheme,
                         const ResponsePolicy& response);

Evaluation Evaluate(const Instance& inst, const SignalingScheme& scheme,
                    const ResponsePolicy& response);

// lower[j] <= action_probs[j] <= upper[j] for all j.
bool SatisfiesQuotas(const Vector& action_probs, const ConstraintProfile& c);

}  // namespace persuasion

#endif  // PERSUASION_MODEL_H_
