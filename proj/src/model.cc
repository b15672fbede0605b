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

#include <functional>

namespace persuasion {
namespace {

Rational Sum(std::span<const Rational> values) {
  Rational total;
  for (const auto& v : values) total += v;
  return total;
}

// f(peak) >= f(j) >= f(k) whenever j lies between peak and k.
bool UnimodalAt(std::size_t length, std::size_t peak,
                const std::function<const Rational&(std::size_t)>& f) {
  std::size_t top = std::min(peak, length - 1);
  for (std::size_t j = 1; j <= top; ++j) {
    if (f(j) < f(j - 1)) return false;
  }
  for (std::size_t j = top; j + 1 < length; ++j) {
    if (f(j) < f(j + 1)) return false;
  }
  return true;
}

void RequireSameStates(const Instance& inst, const SignalingScheme& scheme) {
  if (scheme.num_states() != inst.num_states()) {
    throw ValidationError("scheme has " + std::to_string(scheme.num_states()) +
                          " state rows, instance has " + std::to_string(inst.num_states()));
  }
}

}  // namespace

UnreachableSignalError::UnreachableSignalError(std::size_t signal)
    : std::domain_error("unreachable signal " + std::to_string(signal) +
                        ": zero probability, posterior undefined"),
      signal_(signal) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, const Rational& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::FromRows(const std::vector<Vector>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw ValidationError("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

bool IsRowStochastic(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& v : m.row(r)) {
      if (v.sign() < 0) return false;
    }
    if (Sum(m.row(r)) != 1) return false;
  }
  return true;
}

Instance::Instance(Vector prior, Matrix sender_utility, Matrix receiver_utility)
    : prior_(std::move(prior)),
      sender_(std::move(sender_utility)),
      receiver_(std::move(receiver_utility)) {
  const std::size_t n = prior_.size();
  if (n < 2) throw ValidationError("instance needs at least two states");
  for (const auto& p : prior_) {
    if (p.sign() < 0) throw ValidationError("negative prior entry " + p.ToString());
  }
  if (Sum(prior_) != 1) throw ValidationError("prior sums to " + Sum(prior_).ToString());
  if (sender_.rows() != n || receiver_.rows() != n) {
    throw ValidationError("utility matrices must have one row per state");
  }
  if (sender_.cols() < 2) throw ValidationError("instance needs at least two actions");
  if (receiver_.cols() != sender_.cols()) {
    throw ValidationError("sender and receiver utilities disagree on action count");
  }
}

ConstraintProfile::ConstraintProfile(Vector lower, Vector upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != upper_.size()) throw ValidationError("lower/upper length mismatch");
  for (std::size_t j = 0; j < lower_.size(); ++j) {
    if (lower_[j].sign() < 0 || upper_[j] < lower_[j] || upper_[j] > 1) {
      throw ValidationError("bounds for action " + std::to_string(j) +
                            " violate 0 <= lower <= upper <= 1: [" + lower_[j].ToString() +
                            ", " + upper_[j].ToString() + "]");
    }
  }
}

ConstraintProfile ConstraintProfile::Vacuous(std::size_t num_actions) {
  return ConstraintProfile(Vector(num_actions, Rational(0)), Vector(num_actions, Rational(1)));
}

SignalingScheme::SignalingScheme(Matrix probs) : probs_(std::move(probs)) {
  if (probs_.rows() == 0 || probs_.cols() == 0) throw ValidationError("empty signaling scheme");
  if (!IsRowStochastic(probs_)) throw ValidationError("signaling scheme rows must be stochastic");
}

SignalingScheme SignalingScheme::FullRevelation(std::size_t num_states) {
  Matrix m(num_states, num_states);
  for (std::size_t i = 0; i < num_states; ++i) m(i, i) = 1;
  return SignalingScheme(std::move(m));
}

SignalingScheme SignalingScheme::Uninformative(std::size_t num_states) {
  return SignalingScheme(Matrix(num_states, 1, Rational(1)));
}

ResponsePolicy::ResponsePolicy(Matrix probs) : probs_(std::move(probs)) {
  if (probs_.rows() == 0 || probs_.cols() == 0) throw ValidationError("empty response policy");
  if (!IsRowStochastic(probs_)) throw ValidationError("response policy rows must be stochastic");
}

ResponsePolicy ResponsePolicy::Identity(std::size_t num_actions) {
  Matrix m(num_actions, num_actions);
  for (std::size_t j = 0; j < num_actions; ++j) m(j, j) = 1;
  return ResponsePolicy(std::move(m));
}

std::string_view ToString(SolveMethod method) {
  switch (method) {
    case SolveMethod::kBinaryClosedForm: return "binary-closed-form";
    case SolveMethod::kExpostLp: return "expost-lp";
    case SolveMethod::kGridOracle: return "grid-oracle";
    case SolveMethod::kManual: return "manual";
  }
  return "unknown";
}

std::string_view ToString(SenderCase c) {
  switch (c) {
    case SenderCase::kAligned: return "aligned";
    case SenderCase::kPrefersA1: return "prefers-a1";
    case SenderCase::kPrefersA2: return "prefers-a2";
    case SenderCase::kIndifferent: return "indifferent";
    case SenderCase::kNone: return "none";
  }
  return "unknown";
}

std::string_view ToString(BindingOrder order) {
  switch (order) {
    case BindingOrder::kFirstMoreBinding: return "c-more-binding";
    case BindingOrder::kSecondMoreBinding: return "c2-more-binding";
    case BindingOrder::kEqual: return "equal";
    case BindingOrder::kIncomparable: return "incomparable";
  }
  return "unknown";
}

Solution MakeSolution(const Instance& inst, SignalingScheme scheme, ResponsePolicy response,
                      SolveMethod method) {
  Evaluation e = Evaluate(inst, scheme, response);
  return Solution{std::move(scheme), std::move(response), std::move(e.sender_eu),
                  std::move(e.receiver_eu), std::move(e.action_probs), method};
}

bool IsStateMatching(const Matrix& u) {
  for (std::size_t i = 0; i < u.rows(); ++i) {
    if (!UnimodalAt(u.cols(), i, [&](std::size_t j) -> const Rational& { return u(i, j); })) {
      return false;
    }
  }
  return true;
}

bool IsActionMatching(const Matrix& u) {
  for (std::size_t a = 0; a < u.cols(); ++a) {
    if (!UnimodalAt(u.rows(), a, [&](std::size_t s) -> const Rational& { return u(s, a); })) {
      return false;
    }
  }
  return true;
}

Classification ClassifyInstance(const Instance& inst) {
  Classification out;
  out.state_matching = IsStateMatching(inst.receiver_utility());
  out.action_matching = IsActionMatching(inst.sender_utility());
  if (inst.num_states() != 2 || inst.num_actions() != 2) return out;

  const Matrix& s = inst.sender_utility();
  const Rational& s11 = s(0, 0);
  const Rational& s12 = s(0, 1);
  const Rational& s21 = s(1, 0);
  const Rational& s22 = s(1, 1);
  if (s11 == s12 && s21 == s22) {
    // No action preference in either state.
    out.sender_case = SenderCase::kIndifferent;
  } else if (s11 >= s12 && s22 >= s21) {
    out.sender_case = SenderCase::kAligned;
  } else if (s11 >= s12 && s22 <= s21) {
    out.sender_case = SenderCase::kPrefersA1;
  } else if (s11 <= s12 && s22 >= s21) {
    out.sender_case = SenderCase::kPrefersA2;
  } else {
    out.sender_case = SenderCase::kIndifferent;
  }
  return out;
}

ConstraintCheck CheckConstraints(const ConstraintProfile& c, const Instance& inst) {
  if (c.num_actions() != inst.num_actions()) {
    throw ValidationError("constraint profile covers " + std::to_string(c.num_actions()) +
                          " actions, instance has " + std::to_string(inst.num_actions()));
  }
  ConstraintCheck out;
  out.implementable = Sum(c.lower()) <= 1 && Sum(c.upper()) >= 1;
  if (inst.num_states() != inst.num_actions()) {
    out.dimension_mismatch = true;
    return out;
  }
  out.feasible = true;
  for (std::size_t j = 0; j < c.num_actions(); ++j) {
    if (inst.prior()[j] < c.lower()[j] || inst.prior()[j] > c.upper()[j]) out.feasible = false;
  }
  return out;
}

BindingOrder CompareBinding(const ConstraintProfile& c, const ConstraintProfile& c2) {
  if (c.num_actions() != c2.num_actions()) {
    throw ValidationError("cannot compare constraint profiles of different widths");
  }
  if (c == c2) return BindingOrder::kEqual;
  bool first = true;
  bool second = true;
  for (std::size_t j = 0; j < c.num_actions(); ++j) {
    if (!(c2.lower()[j] <= c.lower()[j] && c.upper()[j] <= c2.upper()[j])) first = false;
    if (!(c.lower()[j] <= c2.lower()[j] && c2.upper()[j] <= c.upper()[j])) second = false;
  }
  if (first) return BindingOrder::kFirstMoreBinding;
  if (second) return BindingOrder::kSecondMoreBinding;
  return BindingOrder::kIncomparable;
}

BinaryBounds EffectiveBinaryBounds(const ConstraintProfile& c) {
  if (c.num_actions() != 2) throw ValidationError("effective bounds need exactly two actions");
  return BinaryBounds{max(c.lower()[0], 1 - c.upper()[1]), min(c.upper()[0], 1 - c.lower()[1])};
}

Vector SignalProbabilities(const Instance& inst, const SignalingScheme& scheme) {
  RequireSameStates(inst, scheme);
  Vector out(scheme.num_signals());
  for (std::size_t i = 0; i < inst.num_states(); ++i) {
    if (inst.prior()[i].is_zero()) continue;
    for (std::size_t s = 0; s < scheme.num_signals(); ++s) {
      if (!scheme(i, s).is_zero()) out[s] += inst.prior()[i] * scheme(i, s);
    }
  }
  return out;
}

Vector Posterior(const Instance& inst, const SignalingScheme& scheme, std::size_t signal) {
  RequireSameStates(inst, scheme);
  if (signal >= scheme.num_signals()) {
    throw ValidationError("signal index " + std::to_string(signal) + " out of range");
  }
  Rational total;
  Vector out(inst.num_states());
  for (std::size_t i = 0; i < inst.num_states(); ++i) {
    out[i] = inst.prior()[i] * scheme(i, signal);
    total += out[i];
  }
  if (total.is_zero()) throw UnreachableSignalError(signal);
  for (auto& v : out) v /= total;
  return out;
}

Matrix JointDistribution(const Instance& inst, const SignalingScheme& scheme,
                         const ResponsePolicy& response) {
  RequireSameStates(inst, scheme);
  if (response.num_signals() != scheme.num_signals() ||
      response.num_actions() != inst.num_actions()) {
    throw ValidationError("response policy shape does not match scheme and instance");
  }
  Matrix joint(inst.num_states(), inst.num_actions());
  for (std::size_t i = 0; i < inst.num_states(); ++i) {
    if (inst.prior()[i].is_zero()) continue;
    for (std::size_t s = 0; s < scheme.num_signals(); ++s) {
      if (scheme(i, s).is_zero()) continue;
      Rational mass = inst.prior()[i] * scheme(i, s);
      for (std::size_t j = 0; j < inst.num_actions(); ++j) {
        if (!response(s, j).is_zero()) joint(i, j) += mass * response(s, j);
      }
    }
  }
  return joint;
}

Evaluation Evaluate(const Instance& inst, const SignalingScheme& scheme,
                    const ResponsePolicy& response) {
  Matrix joint = JointDistribution(inst, scheme, response);
  Evaluation e;
  e.action_probs.assign(inst.num_actions(), Rational(0));
  for (std::size_t i = 0; i < inst.num_states(); ++i) {
    for (std::size_t j = 0; j < inst.num_actions(); ++j) {
      const Rational& p = joint(i, j);
      if (p.is_zero()) continue;
      e.sender_eu += p * inst.sender_utility()(i, j);
      e.receiver_eu += p * inst.receiver_utility()(i, j);
      e.action_probs[j] += p;
    }
  }
  return e;
}

bool SatisfiesQuotas(const Vector& action_probs, const ConstraintProfile& c) {
  if (action_probs.size() != c.num_actions()) {
    throw ValidationError("action probability vector does not match constraint width");
  }
  for (std::size_t j = 0; j < action_probs.size(); ++j) {
    if (action_probs[j] < c.lower()[j] || action_probs[j] > c.upper()[j]) return false;
  }
  return true;
}

}  // namespace persuasion
