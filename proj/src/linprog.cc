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

#include "persuasion/linprog.h"

#include <cstddef>
#include <utility>

namespace persuasion {
namespace {

// Original variable x = offset + sum(sign * y[col]) over its standard-form
// columns y >= 0.
struct VariableMap {
  Rational offset;
  std::vector<std::pair<std::size_t, int>> columns;
};

struct StandardForm {
  std::vector<VariableMap> vars;
  std::size_t num_columns = 0;
  std::vector<LinearConstraint> rows;  // over standard-form columns
};

StandardForm ToStandardForm(const LinearProgram& lp) {
  StandardForm sf;
  const std::size_t n = lp.num_variables();
  sf.vars.resize(n);
  std::vector<std::pair<std::size_t, Rational>> upper_rows;  // y[col] <= width
  for (std::size_t v = 0; v < n; ++v) {
    VariableBound b = lp.bounds.empty() ? VariableBound{} : lp.bounds[v];
    VariableMap& m = sf.vars[v];
    if (b.lower) {
      m.offset = *b.lower;
      m.columns.push_back({sf.num_columns++, +1});
      if (b.upper) upper_rows.push_back({m.columns.back().first, *b.upper - *b.lower});
    } else if (b.upper) {
      m.offset = *b.upper;
      m.columns.push_back({sf.num_columns++, -1});
    } else {
      m.columns.push_back({sf.num_columns++, +1});
      m.columns.push_back({sf.num_columns++, -1});
    }
  }
  for (const auto& row : lp.rows) {
    LinearConstraint out{Vector(sf.num_columns), row.relation, row.rhs};
    for (std::size_t v = 0; v < n; ++v) {
      const Rational& a = row.coefficients[v];
      if (a.is_zero()) continue;
      out.rhs -= a * sf.vars[v].offset;
      for (auto [col, sign] : sf.vars[v].columns) out.coefficients[col] += sign > 0 ? a : -a;
    }
    sf.rows.push_back(std::move(out));
  }
  for (auto& [col, width] : upper_rows) {
    LinearConstraint out{Vector(sf.num_columns), Relation::kLessEqual, width};
    out.coefficients[col] = 1;
    sf.rows.push_back(std::move(out));
  }
  return sf;
}

// Dense simplex tableau. `cost` holds reduced costs c_j - z_j followed by
// -(current objective) in the last slot; we maximize.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cols_(cols), a_(rows, Vector(cols + 1)), cost_(cols + 1), basis_(rows), allowed_(cols, true) {}

  Rational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  Rational& rhs(std::size_t r) { return a_[r][cols_]; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  std::size_t num_rows() const { return a_.size(); }
  void forbid(std::size_t c) { allowed_[c] = false; }
  bool allowed(std::size_t c) const { return allowed_[c]; }
  const Rational& reduced_cost(std::size_t c) const { return cost_[c]; }
  Rational objective_value() const { return -cost_[cols_]; }

  // Installs objective `c` (one entry per column) relative to the current basis.
  void SetObjective(const Vector& c) {
    for (std::size_t j = 0; j < cols_; ++j) cost_[j] = c[j];
    cost_[cols_] = 0;
    for (std::size_t r = 0; r < a_.size(); ++r) {
      const Rational& cb = c[basis_[r]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (!a_[r][j].is_zero()) cost_[j] -= cb * a_[r][j];
      }
    }
  }

  void Pivot(std::size_t pr, std::size_t pc) {
    Vector& prow = a_[pr];
    if (prow[pc] != 1) {
      Rational inv = 1 / prow[pc];
      for (auto& v : prow) {
        if (!v.is_zero()) v *= inv;
      }
    }
    auto eliminate = [&](Vector& row) {
      if (row[pc].is_zero()) return;
      Rational f = row[pc];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (!prow[j].is_zero()) row[j] -= f * prow[j];
      }
    };
    for (std::size_t r = 0; r < a_.size(); ++r) {
      if (r != pr) eliminate(a_[r]);
    }
    eliminate(cost_);
    basis_[pr] = pc;
  }

  // Runs Bland's-rule pivoting to optimality. Returns false if unbounded.
  bool Optimize() {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed_[j] && cost_[j].sign() > 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return true;
      std::size_t leave = a_.size();
      Rational best_ratio;
      for (std::size_t r = 0; r < a_.size(); ++r) {
        if (a_[r][enter].sign() <= 0) continue;
        Rational ratio = a_[r][cols_] / a_[r][enter];
        if (leave == a_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == a_.size()) return false;
      Pivot(leave, enter);
    }
  }

  void RemoveRow(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  Vector BasicSolution() const {
    Vector y(cols_);
    for (std::size_t r = 0; r < a_.size(); ++r) y[basis_[r]] = a_[r][cols_];
    return y;
  }

 private:
  std::size_t cols_;
  std::vector<Vector> a_;
  Vector cost_;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
};

LpResult Solve(const LinearProgram& lp, const std::vector<const Vector*>& objectives) {
  lp.Validate();
  StandardForm sf = ToStandardForm(lp);
  const std::size_t m = sf.rows.size();
  const std::size_t structural = sf.num_columns;

  // Normalize to nonnegative right-hand sides and count auxiliary columns.
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (auto& row : sf.rows) {
    if (row.rhs.sign() < 0) {
      for (auto& c : row.coefficients) c = -c;
      row.rhs = -row.rhs;
      if (row.relation == Relation::kLessEqual) {
        row.relation = Relation::kGreaterEqual;
      } else if (row.relation == Relation::kGreaterEqual) {
        row.relation = Relation::kLessEqual;
      }
    }
    if (row.relation != Relation::kEqual) ++slack_count;
    if (row.relation != Relation::kLessEqual) ++artificial_count;
  }
  const std::size_t first_artificial = structural + slack_count;
  const std::size_t cols = first_artificial + artificial_count;

  Tableau t(m, cols);
  std::size_t next_slack = structural;
  std::size_t next_artificial = first_artificial;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& row = sf.rows[r];
    for (std::size_t j = 0; j < structural; ++j) t.at(r, j) = row.coefficients[j];
    t.rhs(r) = row.rhs;
    if (row.relation == Relation::kLessEqual) {
      t.at(r, next_slack) = 1;
      t.basis(r) = next_slack++;
    } else {
      if (row.relation == Relation::kGreaterEqual) t.at(r, next_slack++) = -1;
      t.at(r, next_artificial) = 1;
      t.basis(r) = next_artificial++;
    }
  }

  if (artificial_count > 0) {
    Vector phase1(cols);
    for (std::size_t j = first_artificial; j < cols; ++j) phase1[j] = -1;
    t.SetObjective(phase1);
    t.Optimize();  // bounded by zero
    if (t.objective_value().sign() < 0) return LpResult{LpStatus::kInfeasible, {}, {}};
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t r = t.num_rows(); r-- > 0;) {
      if (t.basis(r) < first_artificial) continue;
      std::size_t pc = first_artificial;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (!t.at(r, j).is_zero()) {
          pc = j;
          break;
        }
      }
      if (pc == first_artificial) {
        t.RemoveRow(r);
      } else {
        t.Pivot(r, pc);
      }
    }
    for (std::size_t j = first_artificial; j < cols; ++j) t.forbid(j);
  }

  // Objectives expressed over standard-form columns (constants dropped).
  auto lift = [&](const Vector& c) {
    Vector out(cols);
    for (std::size_t v = 0; v < sf.vars.size(); ++v) {
      for (auto [col, sign] : sf.vars[v].columns) out[col] += sign > 0 ? c[v] : -c[v];
    }
    return out;
  };

  for (std::size_t k = 0; k < objectives.size(); ++k) {
    if (k > 0) {
      // Restrict to the optimal face of the previous stage: nonbasic columns
      // with strictly negative reduced cost must stay at zero.
      for (std::size_t j = 0; j < cols; ++j) {
        if (t.allowed(j) && t.reduced_cost(j).sign() < 0) t.forbid(j);
      }
    }
    t.SetObjective(lift(*objectives[k]));
    if (!t.Optimize()) return LpResult{LpStatus::kUnbounded, {}, {}};
  }

  Vector y = t.BasicSolution();
  Vector x(lp.num_variables());
  for (std::size_t v = 0; v < sf.vars.size(); ++v) {
    x[v] = sf.vars[v].offset;
    for (auto [col, sign] : sf.vars[v].columns) {
      if (sign > 0) {
        x[v] += y[col];
      } else {
        x[v] -= y[col];
      }
    }
  }
  Rational value = Dot(*objectives.back(), x);
  return LpResult{LpStatus::kOptimal, std::move(x), std::move(value)};
}

}  // namespace

void LinearProgram::Validate() const {
  const std::size_t n = num_variables();
  if (n == 0) throw ValidationError("linear program has no variables");
  for (const auto& row : rows) {
    if (row.coefficients.size() != n) throw ValidationError("constraint row width mismatch");
  }
  if (!bounds.empty()) {
    if (bounds.size() != n) throw ValidationError("bounds vector width mismatch");
    for (const auto& b : bounds) {
      if (b.lower && b.upper && *b.upper < *b.lower) {
        throw ValidationError("variable bound lower > upper");
      }
    }
  }
}

std::string_view ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

Rational Dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ValidationError("dot product width mismatch");
  Rational out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) out += a[i] * b[i];
  }
  return out;
}

LpResult SolveLp(const LinearProgram& lp) { return Solve(lp, {&lp.objective}); }

LpResult SolveLex(const LinearProgram& lp, const Vector& secondary) {
  if (secondary.size() != lp.num_variables()) {
    throw ValidationError("secondary objective width mismatch");
  }
  return Solve(lp, {&lp.objective, &secondary});
}

bool IsFeasiblePoint(const LinearProgram& lp, const Vector& x) {
  if (x.size() != lp.num_variables()) return false;
  for (const auto& row : lp.rows) {
    Rational lhs = Dot(row.coefficients, x);
    switch (row.relation) {
      case Relation::kLessEqual:
        if (lhs > row.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != row.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < row.rhs) return false;
        break;
    }
  }
  for (std::size_t v = 0; v < x.size(); ++v) {
    VariableBound b = lp.bounds.empty() ? VariableBound{} : lp.bounds[v];
    if (b.lower && x[v] < *b.lower) return false;
    if (b.upper && x[v] > *b.upper) return false;
  }
  return true;
}

}  // namespace persuasion
