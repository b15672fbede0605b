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

#include "persuasion/lab.h"

#include <algorithm>
#include <numeric>

#include "persuasion/binary_solver.h"
#include "persuasion/oracle.h"
#include "persuasion/response.h"
#include "persuasion/sender_lp.h"

namespace persuasion {
namespace {

std::uint64_t SplitMix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Matrix RandomUtilities(std::size_t n, Rng& rng) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.Uniform(0, kUtilityMax);
  }
  return m;
}

// Strictly positive composition of kPriorGrid into n parts, uniformly.
Vector RandomPrior(std::size_t n, Rng& rng) {
  std::vector<std::int64_t> cuts;
  while (cuts.size() + 1 < n) {
    std::int64_t c = rng.Uniform(1, kPriorGrid - 1);
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(kPriorGrid);
  Vector prior;
  std::int64_t prev = 0;
  for (std::int64_t c : cuts) {
    prior.emplace_back(c - prev, kPriorGrid);
    prev = c;
  }
  return prior;
}

bool SenderMonotone(const Matrix& s) {
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = 0; j + 1 < s.cols(); ++j) {
      if (s(i, j) < s(i, j + 1)) return false;
    }
  }
  return true;
}

bool ReceiverLowVsHigh(const Matrix& r) {
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (std::size_t k = i + 1; k < r.cols(); ++k) {
        if (r(i, j) > r(i, k)) return false;
      }
    }
  }
  return true;
}

bool SenderSensitivity(const Matrix& s) {
  const std::size_t n = s.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t i2 = i + 1; i2 < n; ++i2) {
      for (std::size_t j2 = 1; j2 <= i && j2 < s.cols(); ++j2) {
        for (std::size_t j = 0; j < j2; ++j) {
          if (s(i, j) - s(i, j2) < s(i2, j) - s(i2, j2)) return false;
        }
      }
    }
  }
  return true;
}

bool ReceiverConvexity(const Matrix& r) {
  const std::size_t m = r.cols();
  for (std::size_t i = 0; i < r.rows(); ++i) {
    auto f = [&](std::size_t j) -> const Rational& { return r(i, j); };
    const std::size_t peak = std::min(i, m - 1);
    for (std::size_t j = 1; j <= peak; ++j) {
      if (f(j) < f(j - 1)) return false;
      if (j + 1 <= peak && f(j + 1) - 2 * f(j) + f(j - 1) < 0) return false;
    }
    for (std::size_t j = peak; j + 1 < m; ++j) {
      if (f(j + 1) > f(j)) return false;
      if (j > peak && f(j + 1) - 2 * f(j) + f(j - 1) < 0) return false;
    }
  }
  return true;
}

bool SenderPasses(const Matrix& s, const InstanceFilter& f) {
  if (f.action_matching && !IsActionMatching(s)) return false;
  if (s.rows() < 3) return true;
  if ((f.monotone_structure || f.convex_structure) && !SenderMonotone(s)) return false;
  if (f.convex_structure && !SenderSensitivity(s)) return false;
  return true;
}

bool ReceiverPasses(const Matrix& r, const InstanceFilter& f) {
  if (f.state_matching && !IsStateMatching(r)) return false;
  if (r.rows() < 3) return true;
  if ((f.monotone_structure || f.convex_structure) && !ReceiverLowVsHigh(r)) return false;
  if (f.convex_structure && !ReceiverConvexity(r)) return false;
  return true;
}

Rational Quarter(const Rational& from, const Rational& to, std::int64_t steps) {
  return from + (to - from) * Rational(steps, 4);
}

}  // namespace

std::int64_t Rng::Uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % range);
}

std::uint64_t TrialSeed(std::uint64_t seed, std::uint64_t trial) {
  return SplitMix(SplitMix(seed) ^ (trial * 0xd1b54a32d192ed03ULL));
}

Instance GenInstance(std::size_t n, std::uint64_t seed, const InstanceFilter& filter) {
  if (n < 2) throw ValidationError("generated instances need at least two states");
  Rng rng(seed);
  Vector prior = RandomPrior(n, rng);
  int draws = 0;
  auto sample = [&](auto&& passes) {
    for (;;) {
      if (++draws > kRejectionBudget) {
        throw GeneratorExhaustedError("rejection budget exhausted for seed " +
                                      std::to_string(seed));
      }
      Matrix m = RandomUtilities(n, rng);
      if (passes(m)) return m;
    }
  };
  Matrix sender = sample([&](const Matrix& m) { return SenderPasses(m, filter); });
  Matrix receiver = sample([&](const Matrix& m) { return ReceiverPasses(m, filter); });
  return Instance(std::move(prior), std::move(sender), std::move(receiver));
}

std::pair<ConstraintProfile, ConstraintProfile> GenNestedConstraints(const Instance& inst,
                                                                     std::uint64_t seed) {
  const std::size_t m = inst.num_actions();
  if (inst.num_states() != m) throw ValidationError("nested constraints need n = m");
  Rng rng(SplitMix(seed ^ 0x5bd1e995ULL));
  Vector lo(m), hi(m), lo2(m), hi2(m);
  const bool vacuous_outer = rng.Uniform(0, 3) == 0;
  for (std::size_t j = 0; j < m; ++j) {
    const Rational& p = inst.prior()[j];
    lo2[j] = vacuous_outer ? Rational(0) : Quarter(Rational(0), p, rng.Uniform(0, 4));
    hi2[j] = vacuous_outer ? Rational(1) : Quarter(Rational(1), p, rng.Uniform(0, 4));
    lo[j] = Quarter(lo2[j], p, rng.Uniform(0, 4));
    hi[j] = Quarter(hi2[j], p, rng.Uniform(0, 4));
  }
  if (lo == lo2 && hi == hi2) {
    if (std::any_of(lo2.begin(), lo2.end(), [](const Rational& v) { return v.sign() > 0; }) ||
        std::any_of(hi2.begin(), hi2.end(), [](const Rational& v) { return v < 1; })) {
      std::fill(lo2.begin(), lo2.end(), Rational(0));
      std::fill(hi2.begin(), hi2.end(), Rational(1));
    } else if (inst.prior()[0] < 1) {
      hi[0] = inst.prior()[0];
    } else {
      lo[0] = inst.prior()[0];
    }
  }
  return {ConstraintProfile(std::move(lo), std::move(hi)),
          ConstraintProfile(std::move(lo2), std::move(hi2))};
}

StructuralConditions CheckStructuralConditions(const Instance& inst) {
  if (inst.num_states() != inst.num_actions()) {
    throw ValidationError("structural conditions need n = m");
  }
  StructuralConditions out;
  if (inst.num_states() < 3) return out;
  out.prop3_sender_monotone = SenderMonotone(inst.sender_utility());
  out.prop3_receiver_low_vs_high = ReceiverLowVsHigh(inst.receiver_utility());
  out.generaln_sensitivity = SenderSensitivity(inst.sender_utility());
  out.generaln_convexity = ReceiverConvexity(inst.receiver_utility());
  return out;
}

bool PassesFilter(const Instance& inst, const InstanceFilter& filter) {
  return SenderPasses(inst.sender_utility(), filter) &&
         ReceiverPasses(inst.receiver_utility(), filter);
}

std::string_view ToString(FuzzMode mode) {
  switch (mode) {
    case FuzzMode::kBinary: return "theorem2-binary";
    case FuzzMode::kTernary: return "prop3-ternary";
  }
  return "unknown";
}

std::string_view ToString(Verdict v) {
  switch (v) {
    case Verdict::kOk: return "ok";
    case Verdict::kBorderline: return "borderline";
    case Verdict::kViolation: return "violation";
  }
  return "unknown";
}

FuzzReport FuzzMonotonicity(const FuzzConfig& config) {
  if (config.trials < 1) throw ValidationError("fuzzing needs at least one trial");
  FuzzReport report;
  report.config = config;
  const bool binary = config.mode == FuzzMode::kBinary;
  const std::size_t n = binary ? 2 : 3;
  InstanceFilter filter{.state_matching = true, .action_matching = true};
  if (!binary) filter.monotone_structure = config.structural_filter;
  const int resolution = config.resolution > 0 ? config.resolution : 12;

  for (std::size_t t = 0; t < config.trials; ++t) {
    const std::uint64_t seed = TrialSeed(config.seed, t);
    const bool injected = !binary && config.inject_counterexample && t == 0;
    std::optional<Instance> inst;
    try {
      inst = injected ? TernaryCounterexample() : GenInstance(n, seed, filter);
    } catch (const GeneratorExhaustedError&) {
      ++report.generator_failures;
      continue;
    }
    auto [more, less] = injected ? std::pair{ConstraintProfile({0, 0, 0}, {Rational(1, 2), 1, 1}),
                                             ConstraintProfile::Vacuous(3)}
                                 : GenNestedConstraints(*inst, seed);
    ++report.trials_run;

    TrialRecord rec{t, binary ? "closed-form" : "grid-oracle", *inst, more, less, {}, {}, {},
                    Verdict::kOk};
    if (binary) {
      rec.receiver_more = SolveBinary(*inst, more).receiver_eu;
      rec.receiver_less = SolveBinary(*inst, less).receiver_eu;
    } else {
      GridOptions opts{.resolution = resolution, .band = config.band};
      GridResult a = SolveExanteGrid(*inst, more, opts);
      GridResult b = SolveExanteGrid(*inst, less, opts);
      if (!a.best || !b.best) {
        ++report.solver_failures;
        continue;
      }
      rec.receiver_more = a.best->receiver_eu;
      rec.receiver_less = b.best->receiver_eu;
      rec.slack = 2 * a.receiver_gap;

      ExpostResult ea = SolveExpost(*inst, more);
      ExpostResult eb = SolveExpost(*inst, less);
      if (ea.solution && eb.solution && ea.solution->receiver_eu < eb.solution->receiver_eu) {
        TrialRecord exact = rec;
        exact.source = "expost-lp";
        exact.receiver_more = ea.solution->receiver_eu;
        exact.receiver_less = eb.solution->receiver_eu;
        exact.slack = 0;
        exact.verdict = Verdict::kViolation;
        report.violations.push_back(std::move(exact));
      }
    }
    const Rational drop = rec.receiver_less - rec.receiver_more;
    if (drop > rec.slack) {
      rec.verdict = Verdict::kViolation;
      report.violations.push_back(std::move(rec));
    } else if (drop.sign() > 0) {
      rec.verdict = Verdict::kBorderline;
      report.borderline.push_back(std::move(rec));
    }
  }
  return report;
}

Instance NonAlignedInstance(const Rational& eps) {
  return Instance({Rational(1, 4), Rational(3, 4)}, Matrix::FromRows({{2, 1}, {3, 0}}),
                  Matrix::FromRows({{1, 0}, {eps, 1}}));
}

Instance TernaryCounterexample() {
  const Rational third(1, 3);
  return Instance({third, third, third}, Matrix::FromRows({{10, 0, 0}, {10, 2, 0}, {0, 2, 1}}),
                  Matrix::FromRows({{4, 0, 0}, {2, 3, 1}, {0, 1, 3}}));
}

Matrix TernaryConstrainedScheme() {
  const Rational half(1, 2);
  return Matrix::FromRows({{1, 0, 0}, {half, half, 0}, {0, half, half}});
}

Instance CoinInstance() {
  Matrix u = Matrix::FromRows({{1, 0}, {0, 2}});
  return Instance({Rational(1, 2), Rational(1, 2)}, u, u);
}

Instance AlwaysA1Instance() {
  Matrix u = Matrix::FromRows({{1, 0}, {1, 0}});
  return Instance({Rational(1, 2), Rational(1, 2)}, u, u);
}

ConstraintProfile HalfOnA1() {
  return ConstraintProfile({Rational(1, 2), 0}, {Rational(1, 2), 1});
}

std::string_view ToString(ReproCase c) {
  switch (c) {
    case ReproCase::kNonAlignedSchemes: return "sec31";
    case ReproCase::kTernaryExample: return "sec4";
    case ReproCase::kCoin: return "coin";
    case ReproCase::kNonAlignedExact: return "nonalign-exact";
  }
  return "unknown";
}

std::optional<ReproCase> ParseReproCase(std::string_view text) {
  for (ReproCase c : {ReproCase::kNonAlignedSchemes, ReproCase::kTernaryExample, ReproCase::kCoin,
                      ReproCase::kNonAlignedExact}) {
    if (ToString(c) == text) return c;
  }
  return std::nullopt;
}

bool ReproReport::passed() const {
  return failures.empty() &&
         std::all_of(values.begin(), values.end(), [](const ReproValue& v) { return v.ok(); });
}

bool EqualUpToColumnRelabeling(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  std::vector<std::size_t> perm(a.cols());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (std::size_t r = 0; r < a.rows() && same; ++r) {
      for (std::size_t c = 0; c < a.cols() && same; ++c) same = a(r, perm[c]) == b(r, c);
    }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

ReproReport ReproExamples(ReproCase which, const Rational& eps) {
  ReproReport report;
  report.which = which;
  auto add = [&](std::string name, Rational value, std::optional<Rational> expected = {}) {
    report.values.push_back({std::move(name), std::move(value), std::move(expected)});
  };
  const ConstraintProfile open2 = ConstraintProfile::Vacuous(2);
  const ConstraintProfile capped2({0, 0}, {Rational(1, 4), 1});

  switch (which) {
    case ReproCase::kNonAlignedSchemes: {
      if (eps.sign() <= 0 || eps >= 1) throw ValidationError("eps must lie in (0, 1)");
      const Instance inst = NonAlignedInstance(eps);
      const SignalingScheme open_scheme(Matrix::FromRows({{1, 0}, {Rational(1, 3), Rational(2, 3)}}));
      const SignalingScheme capped_scheme(
          Matrix::FromRows({{Rational(1, 2), Rational(1, 2)}, {Rational(1, 6), Rational(5, 6)}}));
      const ResponsePolicy obey = ResponsePolicy::Identity(2);
      const Evaluation e1 = Evaluate(inst, open_scheme, obey);
      const Evaluation e2 = Evaluate(inst, capped_scheme, obey);
      add("receiver_eu_unconstrained", e1.receiver_eu, (3 + eps) / 4);
      add("receiver_eu_constrained", e2.receiver_eu, (6 + eps) / 8);
      add("receiver_gap", e1.receiver_eu - e2.receiver_eu, eps / 8);
      add("pr_a1_constrained", e2.action_probs[0]);
      if (CompareBinding(capped2, open2) != BindingOrder::kFirstMoreBinding) {
        report.failures.push_back("setting 2 is not more binding than setting 1");
      }
      if (!SatisfiesQuotas(e2.action_probs, capped2)) {
        report.failures.push_back("constrained scheme breaks the a1 quota");
      }
      if (!CheckExAnteIc(inst, open_scheme, open2).ic ||
          !CheckExAnteIc(inst, capped_scheme, capped2).ic) {
        report.failures.push_back("a displayed scheme is not obeyed");
      }
      report.notes.push_back(
          "displayed schemes use the eps = 0 obedience cap; see nonalign-exact for exact optima");
      break;
    }
    case ReproCase::kTernaryExample: {
      const Instance inst = TernaryCounterexample();
      const ConstraintProfile capped({0, 0, 0}, {Rational(1, 2), 1, 1});
      const ExpostResult open = SolveExpost(inst, ConstraintProfile::Vacuous(3));
      const ExpostResult tight = SolveExpost(inst, capped);
      if (!open.solution || !tight.solution) {
        report.failures.push_back("ex post LP infeasible on the ternary example");
        break;
      }
      add("receiver_eu_unconstrained", open.solution->receiver_eu, Rational(3));
      add("receiver_eu_constrained", tight.solution->receiver_eu, Rational(17, 6));
      add("sender_eu_unconstrained", open.solution->sender_eu, Rational(7));
      add("sender_eu_constrained", tight.solution->sender_eu, Rational(35, 6));
      if (!EqualUpToColumnRelabeling(tight.solution->scheme.probs(), TernaryConstrainedScheme())) {
        report.failures.push_back("constrained scheme differs from the published table");
      }
      if (!CheckExAnteIc(inst, SignalingScheme(TernaryConstrainedScheme()), capped).ic) {
        report.failures.push_back("published constrained scheme is not ex ante IC");
      }
      break;
    }
    case ReproCase::kCoin: {
      const Instance inst = CoinInstance();
      const SignalingScheme silent = SignalingScheme::Uninformative(2);
      const ConstrainedResponse forced = BestResponseLex(inst, silent, HalfOnA1());
      const ConstrainedResponse free = BestResponseLex(inst, silent, open2);
      if (!forced.feasible() || !free.feasible()) {
        report.failures.push_back("coin response LP infeasible");
        break;
      }
      add("receiver_eu_constrained", forced.receiver_eu, Rational(3, 4));
      add("pr_a1_constrained", forced.action_probs[0], Rational(1, 2));
      add("receiver_eu_unconstrained", free.receiver_eu, Rational(1));
      add("pr_a1_unconstrained", free.action_probs[0], Rational(0));
      break;
    }
    case ReproCase::kNonAlignedExact: {
      if (eps.sign() <= 0 || eps >= 1) throw ValidationError("eps must lie in (0, 1)");
      const Instance inst = NonAlignedInstance(eps);
      const GridOptions opts{.resolution = 300, .band = Rational(0)};
      const GridResult g1 = SolveExanteGrid(inst, open2, opts);
      const GridResult g2 = SolveExanteGrid(inst, capped2, opts);
      if (g1.best) {
        add("grid_receiver_eu_unconstrained", g1.best->receiver_eu);
        add("grid_sender_eu_unconstrained", g1.best->sender_eu);
        add("grid_pool_unconstrained", g1.best->scheme.probs()(1, 0));
      }
      if (g2.best) {
        add("grid_receiver_eu_constrained", g2.best->receiver_eu);
        add("grid_sender_eu_constrained", g2.best->sender_eu);
      }
      add("grid_sender_upper_gap", g1.sender_upper_gap);
      add("grid_receiver_gap", g1.receiver_gap);
      const ExpostResult x1 = SolveExpost(inst, open2);
      const ExpostResult x2 = SolveExpost(inst, capped2);
      if (x1.solution) {
        add("expost_receiver_eu_unconstrained", x1.solution->receiver_eu);
        add("expost_sender_eu_unconstrained", x1.solution->sender_eu);
      }
      if (x2.solution) {
        add("expost_receiver_eu_constrained", x2.solution->receiver_eu);
        add("expost_sender_eu_constrained", x2.solution->sender_eu);
      }
      add("obedience_cap_unconstrained", Rational(1, 3) / (1 - eps));
      report.notes.push_back("values are reported, not asserted");
      break;
    }
  }
  return report;
}

}  // namespace persuasion
