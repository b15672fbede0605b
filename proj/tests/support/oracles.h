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

// Independent reference computations for the test suites. Nothing here calls
// the solvers it is used to check.

#ifndef PERSUASION_TESTS_SUPPORT_ORACLES_H_
#define PERSUASION_TESTS_SUPPORT_ORACLES_H_

#include <optional>
#include <vector>

#include "persuasion/lab.h"
#include "persuasion/linprog.h"
#include "persuasion/model.h"

namespace persuasion::testing {

// Solves A x = b exactly by Gauss-Jordan elimination; nullopt if singular.
inline std::optional<Vector> SolveSquare(std::vector<Vector> a, Vector b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

struct Halfspace {
  Vector a;
  Rational b;
  bool equality = false;  // a.x == b, otherwise a.x <= b
};

inline std::vector<Halfspace> Halfspaces(const LinearProgram& lp) {
  const std::size_t n = lp.num_variables();
  std::vector<Halfspace> out;
  auto dot_neg = [](Vector v) {
    for (auto& x : v) x = -x;
    return v;
  };
  for (const auto& row : lp.rows) {
    switch (row.relation) {
      case Relation::kLessEqual: out.push_back({row.coefficients, row.rhs}); break;
      case Relation::kGreaterEqual: out.push_back({dot_neg(row.coefficients), -row.rhs}); break;
      case Relation::kEqual: out.push_back({row.coefficients, row.rhs, true}); break;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const VariableBound b = lp.bounds.empty() ? VariableBound{} : lp.bounds[i];
    Vector e(n);
    e[i] = 1;
    if (b.lower) out.push_back({dot_neg(e), -*b.lower});
    if (b.upper) out.push_back({e, *b.upper});
  }
  return out;
}

struct VertexOptimum {
  bool feasible = false;
  Rational value;
};

// Maximum of the objective over all vertices of a bounded feasible region,
// by trying every choice of n tight constraints (equalities always tight).
inline VertexOptimum EnumerateVertices(const LinearProgram& lp) {
  const std::size_t n = lp.num_variables();
  const std::vector<Halfspace> hs = Halfspaces(lp);
  std::vector<std::size_t> eq, ineq;
  for (std::size_t k = 0; k < hs.size(); ++k) (hs[k].equality ? eq : ineq).push_back(k);
  VertexOptimum best;
  if (eq.size() > n) return best;
  const std::size_t pick = n - eq.size();
  std::vector<std::size_t> idx(pick);
  for (std::size_t k = 0; k < pick; ++k) idx[k] = k;
  auto feasible = [&](const Vector& x) {
    for (const auto& h : hs) {
      Rational v = 0;
      for (std::size_t i = 0; i < n; ++i) v += h.a[i] * x[i];
      if (h.equality ? v != h.b : v > h.b) return false;
    }
    return true;
  };
  for (;;) {
    if (pick <= ineq.size()) {
      std::vector<Vector> a;
      Vector b;
      for (std::size_t k : eq) {
        a.push_back(hs[k].a);
        b.push_back(hs[k].b);
      }
      for (std::size_t k : idx) {
        a.push_back(hs[ineq[k]].a);
        b.push_back(hs[ineq[k]].b);
      }
      if (auto x = SolveSquare(a, b); x && feasible(*x)) {
        Rational v = 0;
        for (std::size_t i = 0; i < n; ++i) v += lp.objective[i] * (*x)[i];
        if (!best.feasible || v > best.value) best = {true, v};
      }
    } else {
      break;
    }
    // Next combination of `pick` out of ineq.size().
    std::size_t k = pick;
    while (k > 0 && idx[k - 1] == ineq.size() - pick + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

// Fixed corpus of small bounded LPs: 2..6 variables, up to 3 random rows of
// mixed relations, a budget row keeping the region bounded, and some
// variables with shifted or capped bounds.
inline std::vector<LinearProgram> LpCorpus(std::size_t count, std::uint64_t seed) {
  std::vector<LinearProgram> out;
  Rng rng(seed);
  for (std::size_t t = 0; t < count; ++t) {
    LinearProgram lp;
    const std::size_t n = static_cast<std::size_t>(rng.Uniform(2, 6));
    for (std::size_t i = 0; i < n; ++i) lp.objective.push_back(Rational(rng.Uniform(-6, 9), rng.Uniform(1, 3)));
    const int rows = static_cast<int>(rng.Uniform(1, 3));
    for (int r = 0; r < rows; ++r) {
      LinearConstraint row;
      for (std::size_t i = 0; i < n; ++i) row.coefficients.push_back(rng.Uniform(-3, 5));
      row.relation = static_cast<Relation>(rng.Uniform(0, 2));
      row.rhs = Rational(rng.Uniform(-2, 12), rng.Uniform(1, 2));
      lp.rows.push_back(std::move(row));
    }
    lp.rows.push_back({Vector(n, Rational(1)), Relation::kLessEqual, Rational(rng.Uniform(3, 10))});
    lp.bounds.assign(n, VariableBound{});
    for (std::size_t i = 0; i < n; ++i) {
      switch (rng.Uniform(0, 3)) {
        case 0: lp.bounds[i].lower = Rational(-rng.Uniform(1, 4)); break;
        case 1: lp.bounds[i].upper = Rational(rng.Uniform(1, 5), 2); break;
        default: break;
      }
    }
    out.push_back(std::move(lp));
  }
  return out;
}

// Joint (state, action) distribution computed entry by entry.
inline Matrix JointByHand(const Instance& inst, const Matrix& scheme, const Matrix& response) {
  Matrix joint(inst.num_states(), inst.num_actions());
  for (std::size_t i = 0; i < scheme.rows(); ++i) {
    for (std::size_t s = 0; s < scheme.cols(); ++s) {
      for (std::size_t j = 0; j < response.cols(); ++j) {
        joint(i, j) += inst.prior()[i] * scheme(i, s) * response(s, j);
      }
    }
  }
  return joint;
}

inline Rational Expect(const Matrix& joint, const Matrix& utility) {
  Rational v = 0;
  for (std::size_t i = 0; i < joint.rows(); ++i) {
    for (std::size_t j = 0; j < joint.cols(); ++j) v += joint(i, j) * utility(i, j);
  }
  return v;
}

// Random row-stochastic matrix with entries on the 1/den grid.
inline Matrix RandomStochastic(std::size_t rows, std::size_t cols, std::int64_t den, Rng& rng) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::int64_t left = den;
    for (std::size_t c = 0; c + 1 < cols; ++c) {
      const std::int64_t v = rng.Uniform(0, left);
      m(r, c) = Rational(v, den);
      left -= v;
    }
    m(r, cols - 1) = Rational(left, den);
  }
  return m;
}

}  // namespace persuasion::testing

#endif  // PERSUASION_TESTS_SUPPORT_ORACLES_H_
