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

#include "persuasion/response.h"

#include <string>

#include "persuasion/linprog.h"

namespace persuasion {
namespace {

// Mass-weighted utilities W(s, j) = sum_i prior_i * scheme(i, s) * u(i, j).
Matrix SignalUtilities(const Instance& inst, const SignalingScheme& scheme, const Matrix& u) {
  Matrix w(scheme.num_signals(), inst.num_actions());
  for (std::size_t i = 0; i < inst.num_states(); ++i) {
    if (inst.prior()[i].is_zero()) continue;
    for (std::size_t s = 0; s < scheme.num_signals(); ++s) {
      if (scheme(i, s).is_zero()) continue;
      Rational mass = inst.prior()[i] * scheme(i, s);
      for (std::size_t j = 0; j < inst.num_actions(); ++j) {
        if (!u(i, j).is_zero()) w(s, j) += mass * u(i, j);
      }
    }
  }
  return w;
}

ConstrainedResponse Finish(const Instance& inst, const SignalingScheme& scheme, Matrix policy) {
  ConstrainedResponse out;
  out.policy.emplace(std::move(policy));
  Evaluation e = Evaluate(inst, scheme, *out.policy);
  out.receiver_eu = std::move(e.receiver_eu);
  out.sender_eu = std::move(e.sender_eu);
  out.action_probs = std::move(e.action_probs);
  return out;
}

}  // namespace

ConstrainedResponse BestResponseLex(const Instance& inst, const SignalingScheme& scheme,
                                    const ConstraintProfile& c, const ResponseOptions& options) {
  if (c.num_actions() != inst.num_actions()) {
    throw ValidationError("constraint profile width does not match action count");
  }
  const std::size_t m = inst.num_actions();
  const std::size_t signals = scheme.num_signals();
  const Vector lambda = SignalProbabilities(inst, scheme);
  const Matrix wr = SignalUtilities(inst, scheme, inst.receiver_utility());
  const Matrix ws = SignalUtilities(inst, scheme, inst.sender_utility());

  std::vector<std::size_t> reachable;
  for (std::size_t s = 0; s < signals; ++s) {
    if (!lambda[s].is_zero()) reachable.push_back(s);
  }

  Matrix policy(signals, m, Rational(1, static_cast<std::int64_t>(m)));

  if (options.argmax_shortcut) {
    Vector mass(m);
    std::vector<std::size_t> choice(signals, 0);
    for (std::size_t s : reachable) {
      std::size_t best = 0;
      for (std::size_t j = 1; j < m; ++j) {
        if (wr(s, j) > wr(s, best) || (wr(s, j) == wr(s, best) && ws(s, j) > ws(s, best))) {
          best = j;
        }
      }
      choice[s] = best;
      mass[best] += lambda[s];
    }
    if (SatisfiesQuotas(mass, c)) {
      for (std::size_t s : reachable) {
        for (std::size_t j = 0; j < m; ++j) policy(s, j) = j == choice[s] ? 1 : 0;
      }
      return Finish(inst, scheme, std::move(policy));
    }
  }

  // sigma(s, j) for reachable s, flattened as k * m + j.
  const std::size_t k_count = reachable.size();
  LinearProgram lp;
  lp.objective.assign(k_count * m, Rational(0));
  Vector secondary(k_count * m);
  for (std::size_t k = 0; k < k_count; ++k) {
    for (std::size_t j = 0; j < m; ++j) {
      lp.objective[k * m + j] = wr(reachable[k], j);
      secondary[k * m + j] = ws(reachable[k], j);
    }
    LinearConstraint row{Vector(k_count * m), Relation::kEqual, Rational(1)};
    for (std::size_t j = 0; j < m; ++j) row.coefficients[k * m + j] = 1;
    lp.rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < m; ++j) {
    Vector coeffs(k_count * m);
    for (std::size_t k = 0; k < k_count; ++k) coeffs[k * m + j] = lambda[reachable[k]];
    if (c.lower()[j].sign() > 0) {
      lp.rows.push_back({coeffs, Relation::kGreaterEqual, c.lower()[j]});
    }
    if (c.upper()[j] < 1) lp.rows.push_back({std::move(coeffs), Relation::kLessEqual, c.upper()[j]});
  }
  LpResult r = SolveLex(lp, secondary);
  if (r.status != LpStatus::kOptimal) return ConstrainedResponse{};
  for (std::size_t k = 0; k < k_count; ++k) {
    for (std::size_t j = 0; j < m; ++j) policy(reachable[k], j) = r.point[k * m + j];
  }
  return Finish(inst, scheme, std::move(policy));
}

ExAnteCheck CheckExAnteIc(const Instance& inst, const SignalingScheme& direct_scheme,
                          const ConstraintProfile& c) {
  if (direct_scheme.num_signals() != inst.num_actions()) {
    throw ValidationError("direct scheme needs one signal per action, got " +
                          std::to_string(direct_scheme.num_signals()));
  }
  ExAnteCheck out;
  Evaluation obedient = Evaluate(inst, direct_scheme, ResponsePolicy::Identity(inst.num_actions()));
  out.obedient_value = obedient.receiver_eu;
  out.obedience_infeasible = !SatisfiesQuotas(obedient.action_probs, c);

  ConstrainedResponse best = BestResponseLex(inst, direct_scheme, c);
  if (!best.feasible()) {
    out.response_infeasible = true;
    return out;
  }
  out.best_deviation_value = best.receiver_eu;
  out.ic = !out.obedience_infeasible && out.obedient_value >= out.best_deviation_value;
  return out;
}

Derandomized Derandomize(const Instance& inst, const SignalingScheme& scheme,
                         const ResponsePolicy& response) {
  Matrix joint = JointDistribution(inst, scheme, response);
  const std::size_t m = inst.num_actions();
  Matrix direct(inst.num_states(), m);
  for (std::size_t i = 0; i < inst.num_states(); ++i) {
    for (std::size_t s = 0; s < scheme.num_signals(); ++s) {
      if (scheme(i, s).is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (!response(s, j).is_zero()) direct(i, j) += scheme(i, s) * response(s, j);
      }
    }
  }
  return Derandomized{SignalingScheme(std::move(direct)), std::move(joint)};
}

}  // namespace persuasion
