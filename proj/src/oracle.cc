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

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "persuasion/response.h"

namespace persuasion {
namespace {

using Composition = std::vector<std::int64_t>;

// All m-part compositions of `total`, lexicographically ascending.
std::vector<Composition> Compositions(std::size_t parts, std::int64_t total) {
  std::vector<Composition> out;
  Composition cur(parts, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::int64_t left) -> void {
    if (pos + 1 == parts) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

struct Candidate {
  Rational sender;
  Rational receiver;
  Matrix scheme;
};

// Receiver-best within the band; ties go to the row-major smallest matrix.
bool Better(const Candidate& a, const Candidate& b) {
  if (a.receiver != b.receiver) return a.receiver > b.receiver;
  const std::size_t size = a.scheme.rows() * a.scheme.cols();
  for (std::size_t k = 0; k < size; ++k) {
    const std::size_t r = k / a.scheme.cols();
    const std::size_t c = k % a.scheme.cols();
    if (a.scheme(r, c) != b.scheme(r, c)) return a.scheme(r, c) < b.scheme(r, c);
  }
  return false;
}

class Search {
 public:
  Search(const Instance& inst, const ConstraintProfile& c, const Rational& band)
      : inst_(inst), c_(c), band_(band) {}

  void Consider(Matrix scheme_probs) {
    ConstrainedResponse r = BestResponseLex(inst_, SignalingScheme(scheme_probs), c_);
    if (!r.feasible()) {
      ++evaluated_;
      ++infeasible_;
      return;
    }
    Offer(std::move(r.sender_eu), std::move(r.receiver_eu),
          [&] { return std::move(scheme_probs); });
  }

  // Records an evaluated scheme; `make_scheme` is only called if the scheme
  // can still end up inside the band.
  template <typename MakeScheme>
  void Offer(Rational sender, Rational receiver, MakeScheme&& make_scheme) {
    ++evaluated_;
    if (!max_sender_ || sender > *max_sender_) {
      max_sender_ = sender;
    } else if (sender < *max_sender_ - band_) {
      return;
    }
    candidates_.push_back({std::move(sender), std::move(receiver), make_scheme()});
    if (candidates_.size() > 8192) Prune();
  }

  // Drops candidates that can no longer reach the band.
  void Prune() {
    if (!max_sender_) return;
    const Rational floor = *max_sender_ - band_;
    std::erase_if(candidates_, [&](const Candidate& k) { return k.sender < floor; });
  }

  const Candidate* Select() {
    Prune();
    const Candidate* best = nullptr;
    for (const auto& k : candidates_) {
      if (!best || Better(k, *best)) best = &k;
    }
    return best;
  }

  void NoteInfeasible() {
    ++evaluated_;
    ++infeasible_;
  }

  const std::optional<Rational>& max_sender() const { return max_sender_; }
  std::size_t evaluated() const { return evaluated_; }
  std::size_t infeasible() const { return infeasible_; }

 private:
  const Instance& inst_;
  const ConstraintProfile& c_;
  Rational band_;
  std::vector<Candidate> candidates_;
  std::optional<Rational> max_sender_;
  std::size_t evaluated_ = 0;
  std::size_t infeasible_ = 0;
};

using Wide = __int128;

Wide Gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// num / den as a Rational, or nullopt when the reduced form leaves int64.
std::optional<Rational> WideRatio(Wide num, Wide den) {
  const Wide g = Gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr Wide kLimit = std::numeric_limits<std::int64_t>::max();
  if (num > kLimit || num < -kLimit || den > kLimit) return std::nullopt;
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

// Lexicographic edge cost: quota tier, then receiver, then sender.
struct LexCost {
  Wide tier = 0;
  Wide receiver = 0;
  Wide sender = 0;

  LexCost operator+(const LexCost& o) const {
    return {tier + o.tier, receiver + o.receiver, sender + o.sender};
  }
  LexCost operator-() const { return {-tier, -receiver, -sender}; }
  auto operator<=>(const LexCost&) const = default;
};

// Successive-shortest-path min-cost max-flow with lexicographic costs.
// Graphs here have at most 2m + 2 nodes, so Bellman-Ford is plenty.
class FlowGraph {
 public:
  explicit FlowGraph(std::size_t nodes) : adjacent_(nodes) {}

  std::size_t AddEdge(std::size_t from, std::size_t to, std::int64_t cap, LexCost cost) {
    const std::size_t id = edges_.size();
    edges_.push_back({to, cap, cost});
    edges_.push_back({from, 0, -cost});
    adjacent_[from].push_back(id);
    adjacent_[to].push_back(id + 1);
    caps_.push_back(cap);
    return id;
  }

  void Run(std::size_t source, std::size_t sink) {
    const std::size_t nodes = adjacent_.size();
    for (;;) {
      std::vector<std::optional<LexCost>> dist(nodes);
      std::vector<std::size_t> via(nodes, SIZE_MAX);
      dist[source] = LexCost{};
      for (std::size_t round = 0; round + 1 < nodes; ++round) {
        bool changed = false;
        for (std::size_t u = 0; u < nodes; ++u) {
          if (!dist[u]) continue;
          for (std::size_t id : adjacent_[u]) {
            const Edge& e = edges_[id];
            if (e.cap == 0) continue;
            LexCost d = *dist[u] + e.cost;
            if (!dist[e.to] || d < *dist[e.to]) {
              dist[e.to] = d;
              via[e.to] = id;
              changed = true;
            }
          }
        }
        if (!changed) break;
      }
      if (!dist[sink]) return;
      std::int64_t push = std::numeric_limits<std::int64_t>::max();
      for (std::size_t v = sink; v != source; v = edges_[via[v] ^ 1].to) {
        push = std::min(push, edges_[via[v]].cap);
      }
      for (std::size_t v = sink; v != source; v = edges_[via[v] ^ 1].to) {
        edges_[via[v]].cap -= push;
        edges_[via[v] ^ 1].cap += push;
      }
    }
  }

  std::int64_t flow(std::size_t id) const { return caps_[id / 2] - edges_[id].cap; }

 private:
  struct Edge {
    std::size_t to;
    std::int64_t cap;
    LexCost cost;
  };
  std::vector<Edge> edges_;
  std::vector<std::int64_t> caps_;
  std::vector<std::vector<std::size_t>> adjacent_;
};

// Grid schemes scaled to integers: prior by its common denominator, each
// utility matrix by its own, scheme entries by K. Evaluates the receiver's
// lexicographic constrained response exactly, with the same values as
// BestResponseLex: the argmax response when it meets the quotas, otherwise a
// min-cost flow from signals to actions. Reports kUnknown when a value would
// leave the overflow guards, and callers then fall back to the LP.
class IntegerModel {
 public:
  // kNeedsFlow: the argmax breaks a quota and the flow was not requested.
  enum class Outcome { kSolved, kInfeasible, kUnknown, kNeedsFlow };

  static std::optional<IntegerModel> Build(const Instance& inst, const ConstraintProfile& c,
                                           std::int64_t k) {
    IntegerModel out;
    out.n_ = inst.num_states();
    out.m_ = inst.num_actions();
    std::int64_t prior_den = 1;
    if (!CommonDenominator(inst.prior(), &prior_den)) return std::nullopt;
    Vector flat_s, flat_r;
    for (std::size_t i = 0; i < out.n_; ++i) {
      for (std::size_t j = 0; j < out.m_; ++j) {
        flat_s.push_back(inst.sender_utility()(i, j));
        flat_r.push_back(inst.receiver_utility()(i, j));
      }
    }
    std::int64_t s_den = 1, r_den = 1;
    if (!CommonDenominator(flat_s, &s_den) || !CommonDenominator(flat_r, &r_den)) {
      return std::nullopt;
    }
    const Wide mass = static_cast<Wide>(prior_den) * k;
    if (mass > (Wide{1} << 24)) return std::nullopt;
    out.a_ = Scale(inst.prior(), prior_den);
    out.s_ = Scale(flat_s, s_den);
    out.r_ = Scale(flat_r, r_den);
    Wide umax = 1;
    for (std::int64_t v : out.s_) umax = std::max<Wide>(umax, v < 0 ? -v : v);
    for (std::int64_t v : out.r_) umax = std::max<Wide>(umax, v < 0 ? -v : v);
    if (umax > (Wide{1} << 30)) return std::nullopt;
    out.mass_ = static_cast<std::int64_t>(mass);
    out.sender_den_ = static_cast<std::int64_t>(mass) * s_den;
    out.receiver_den_ = static_cast<std::int64_t>(mass) * r_den;

    // Flow unit: quotas times mass must be integral.
    std::int64_t q = 1;
    Vector scaled;
    for (std::size_t j = 0; j < out.m_; ++j) {
      out.lower_.push_back(c.lower()[j] * out.mass_);
      out.upper_.push_back(c.upper()[j] * out.mass_);
      scaled.push_back(out.lower_.back());
      scaled.push_back(out.upper_.back());
    }
    if (!CommonDenominator(scaled, &q) || static_cast<Wide>(q) * mass > (Wide{1} << 40)) {
      return std::nullopt;
    }
    out.unit_ = q;
    for (std::size_t j = 0; j < out.m_; ++j) {
      out.lower_units_.push_back((out.lower_[j] * q).small_numerator());
      out.upper_units_.push_back((out.upper_[j] * q).small_numerator());
    }
    return out;
  }

  // counts[i * m + s] = K * scheme(i, s). `sender_bound` receives
  // sum_s max_j of the sender's signal utility, an upper bound on the sender
  // value of any response.
  Outcome Evaluate(std::span<const std::int64_t> counts, bool run_flow, Rational* sender,
                   Rational* receiver, Rational* sender_bound) const {
    std::int64_t total_s = 0, total_r = 0, bound = 0;
    std::int64_t action_mass[kMaxActions] = {};
    std::int64_t lambda[kMaxActions] = {};
    std::int64_t ws[kMaxActions][kMaxActions] = {};
    std::int64_t wr[kMaxActions][kMaxActions] = {};
    for (std::size_t sig = 0; sig < m_; ++sig) {
      for (std::size_t i = 0; i < n_; ++i) {
        const std::int64_t w = a_[i] * counts[i * m_ + sig];
        if (w == 0) continue;
        lambda[sig] += w;
        for (std::size_t j = 0; j < m_; ++j) {
          ws[sig][j] += w * s_[i * m_ + j];
          wr[sig][j] += w * r_[i * m_ + j];
        }
      }
      if (lambda[sig] == 0) continue;
      std::size_t best = 0;
      for (std::size_t j = 1; j < m_; ++j) {
        if (wr[sig][j] > wr[sig][best] ||
            (wr[sig][j] == wr[sig][best] && ws[sig][j] > ws[sig][best])) {
          best = j;
        }
      }
      action_mass[best] += lambda[sig];
      bound += *std::max_element(ws[sig], ws[sig] + m_);
      total_s += ws[sig][best];
      total_r += wr[sig][best];
    }
    *sender_bound = Rational(bound, sender_den_);
    bool argmax_ok = true;
    for (std::size_t j = 0; j < m_ && argmax_ok; ++j) {
      const Rational am(action_mass[j]);
      argmax_ok = !(am < lower_[j] || am > upper_[j]);
    }
    if (argmax_ok) {
      *sender = Rational(total_s, sender_den_);
      *receiver = Rational(total_r, receiver_den_);
      return Outcome::kSolved;
    }
    if (!run_flow) return Outcome::kNeedsFlow;
    return Flow(lambda, ws, wr, sender, receiver);
  }

  static constexpr std::size_t kMaxActions = 16;

 private:
  // x(s, j) = Pr[signal s, action j] in units of 1 / (mass * unit). Per unit
  // of x the receiver earns wr(s, j) / lambda(s), scaled here by lcm(lambda).
  Outcome Flow(const std::int64_t* lambda, const std::int64_t (*ws)[kMaxActions],
               const std::int64_t (*wr)[kMaxActions], Rational* sender,
               Rational* receiver) const {
    Wide l = 1;
    for (std::size_t sig = 0; sig < m_; ++sig) {
      if (lambda[sig] == 0) continue;
      l = l / Gcd(l, lambda[sig]) * lambda[sig];
      if (l > (Wide{1} << 40)) return Outcome::kUnknown;
    }
    const std::size_t source = 0, sink = 2 * m_ + 1;
    FlowGraph g(2 * m_ + 2);
    std::int64_t total = 0;
    std::vector<std::pair<std::size_t, std::size_t>> links;  // (edge, sig * m + j)
    for (std::size_t sig = 0; sig < m_; ++sig) {
      if (lambda[sig] == 0) continue;
      g.AddEdge(source, 1 + sig, lambda[sig] * unit_, {});
      total += lambda[sig] * unit_;
      const Wide per_unit = l / lambda[sig];
      for (std::size_t j = 0; j < m_; ++j) {
        LexCost cost{0, -wr[sig][j] * per_unit, -ws[sig][j] * per_unit};
        links.emplace_back(g.AddEdge(1 + sig, 1 + m_ + j, lambda[sig] * unit_, cost),
                           sig * m_ + j);
      }
    }
    std::vector<std::size_t> floors;
    for (std::size_t j = 0; j < m_; ++j) {
      floors.push_back(g.AddEdge(1 + m_ + j, sink, lower_units_[j], {-1, 0, 0}));
      g.AddEdge(1 + m_ + j, sink, upper_units_[j] - lower_units_[j], {});
    }
    g.Run(source, sink);
    std::int64_t routed = 0;
    Wide num_r = 0, num_s = 0;
    for (auto [id, cell] : links) {
      const std::int64_t x = g.flow(id);
      routed += x;
      const std::size_t sig = cell / m_, j = cell % m_;
      const Wide per_unit = l / lambda[sig];
      num_r += x * (wr[sig][j] * per_unit);
      num_s += x * (ws[sig][j] * per_unit);
    }
    if (routed != total) return Outcome::kInfeasible;
    for (std::size_t j = 0; j < m_; ++j) {
      if (g.flow(floors[j]) != lower_units_[j]) return Outcome::kInfeasible;
    }
    const Wide scale = l * unit_;
    auto r = WideRatio(num_r, scale * receiver_den_);
    auto s = WideRatio(num_s, scale * sender_den_);
    if (!r || !s) return Outcome::kUnknown;
    *receiver = std::move(*r);
    *sender = std::move(*s);
    return Outcome::kSolved;
  }

  static bool CommonDenominator(const Vector& v, std::int64_t* den) {
    std::int64_t d = 1;
    for (const Rational& x : v) {
      if (x.is_big()) return false;
      const std::int64_t g = std::gcd(d, x.small_denominator());
      const Wide l = static_cast<Wide>(d / g) * x.small_denominator();
      if (l > (std::int64_t{1} << 30)) return false;
      d = static_cast<std::int64_t>(l);
    }
    *den = d;
    return true;
  }

  static std::vector<std::int64_t> Scale(const Vector& v, std::int64_t den) {
    std::vector<std::int64_t> out;
    for (const Rational& x : v) {
      out.push_back(x.small_numerator() * (den / x.small_denominator()));
    }
    return out;
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::int64_t> a_, s_, r_;
  std::int64_t mass_ = 1;
  std::int64_t sender_den_ = 1;
  std::int64_t receiver_den_ = 1;
  std::int64_t unit_ = 1;
  Vector lower_, upper_;
  std::vector<std::int64_t> lower_units_, upper_units_;
};

bool ColumnsSorted(const std::vector<const Composition*>& rows, std::size_t m) {
  for (std::size_t c = 0; c + 1 < m; ++c) {
    for (const Composition* row : rows) {
      if ((*row)[c] < (*row)[c + 1]) break;
      if ((*row)[c] > (*row)[c + 1]) return false;
    }
  }
  return true;
}

// Row-wise +-radius/fine boxes around `center` that stay on the simplex.
void Refine(const Matrix& center, std::int64_t fine, std::int64_t radius, Search& search) {
  const std::size_t n = center.rows();
  const std::size_t m = center.cols();
  std::vector<std::vector<Vector>> row_options(n);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> offset(m - 1, -radius);
    for (;;) {
      Vector row(m);
      Rational last = 1;
      bool ok = true;
      for (std::size_t j = 0; j + 1 < m && ok; ++j) {
        row[j] = center(i, j) + Rational(offset[j], fine);
        ok = row[j].sign() >= 0 && row[j] <= 1;
        last -= row[j];
      }
      if (ok && last.sign() >= 0) {
        row[m - 1] = last;
        row_options[i].push_back(std::move(row));
      }
      std::size_t k = 0;
      while (k < offset.size() && ++offset[k] > radius) offset[k++] = -radius;
      if (k == offset.size()) break;
    }
    total *= row_options[i].size();
    if (total > 4'000'000) throw ValidationError("refinement box too large for this instance");
  }
  std::vector<std::size_t> pick(n, 0);
  for (std::size_t count = 0; count < total; ++count) {
    Matrix probs(n, m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) probs(i, j) = row_options[i][pick[i]][j];
    }
    search.Consider(std::move(probs));
    for (std::size_t i = 0; i < n && ++pick[i] == row_options[i].size(); ++i) pick[i] = 0;
  }
}

}  // namespace

int DefaultResolution(std::size_t num_states, std::size_t num_actions) {
  const std::size_t size = std::max(num_states, num_actions);
  if (size <= 2) return 200;
  if (size == 3) return 12;
  return 6;
}

Rational Spread(const Matrix& m) {
  Rational lo = m(0, 0);
  Rational hi = m(0, 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& v : m.row(r)) {
      lo = min(lo, v);
      hi = max(hi, v);
    }
  }
  return hi - lo;
}

GridResult SolveExanteGrid(const Instance& inst, const ConstraintProfile& c,
                           const GridOptions& options) {
  if (c.num_actions() != inst.num_actions()) {
    throw ValidationError("constraint profile width does not match action count");
  }
  const std::size_t n = inst.num_states();
  const std::size_t m = inst.num_actions();
  GridResult out;
  out.resolution = options.resolution > 0 ? options.resolution : DefaultResolution(n, m);
  if (out.resolution < 2) throw ValidationError("grid resolution must be at least 2");
  const std::int64_t k = out.resolution;
  const Rational cells(static_cast<std::int64_t>(m * n), k);
  out.sender_upper_gap = Spread(inst.sender_utility()) * cells;
  out.receiver_gap = Spread(inst.receiver_utility()) * cells;
  out.band = options.band.value_or(out.sender_upper_gap);
  if (out.band.sign() < 0) throw ValidationError("sender-optimality band must be nonnegative");

  const std::vector<Composition> comps = Compositions(m, k);
  Search search(inst, c, out.band);
  std::optional<IntegerModel> model;
  if (options.integer_fast_path && m <= IntegerModel::kMaxActions) model = IntegerModel::Build(inst, c, k);
  std::vector<std::size_t> pick(n, 0);
  std::vector<const Composition*> rows(n);
  // Schemes whose argmax response breaks a quota need the LP. They are
  // deferred until the argmax pass has raised the sender maximum, so that
  // most of them can be discarded by their sender upper bound.
  std::vector<std::int64_t> deferred;
  std::vector<Rational> deferred_bounds;
  auto matrix_from = [&](std::span<const std::int64_t> counts) {
    Matrix probs(n, m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) probs(i, j) = Rational(counts[i * m + j], k);
    }
    return probs;
  };
  std::vector<std::int64_t> counts(n * m);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) rows[i] = &comps[pick[i]];
    if (ColumnsSorted(rows, m)) {
      for (std::size_t i = 0; i < n; ++i) {
        std::copy(rows[i]->begin(), rows[i]->end(), counts.begin() + i * m);
      }
      Rational sender, receiver, bound;
      if (!model) {
        search.Consider(matrix_from(counts));
      } else {
        switch (model->Evaluate(counts, false, &sender, &receiver, &bound)) {
          case IntegerModel::Outcome::kSolved:
            search.Offer(std::move(sender), std::move(receiver),
                         [&] { return matrix_from(counts); });
            break;
          case IntegerModel::Outcome::kNeedsFlow:
            deferred.insert(deferred.end(), counts.begin(), counts.end());
            deferred_bounds.push_back(std::move(bound));
            break;
          default:
            search.Consider(matrix_from(counts));
        }
      }
    }
    // Odometer with the last row fastest, so schemes arrive row-major ascending.
    std::size_t i = n;
    while (i > 0 && ++pick[i - 1] == comps.size()) pick[--i] = 0;
    if (i == 0) break;
  }
  // Most promising first; once one bound misses the band, all later ones do.
  std::vector<std::size_t> order(deferred_bounds.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return deferred_bounds[x] > deferred_bounds[y];
  });
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const std::size_t d = order[rank];
    const auto& max_sender = search.max_sender();
    if (max_sender && deferred_bounds[d] < *max_sender - out.band) {
      out.schemes_pruned += order.size() - rank;
      break;
    }
    const auto scheme_counts = std::span(deferred).subspan(d * n * m, n * m);
    Rational sender, receiver, bound;
    switch (model->Evaluate(scheme_counts, true, &sender, &receiver, &bound)) {
      case IntegerModel::Outcome::kSolved:
        search.Offer(std::move(sender), std::move(receiver),
                     [&] { return matrix_from(scheme_counts); });
        break;
      case IntegerModel::Outcome::kInfeasible:
        search.NoteInfeasible();
        break;
      default:
        search.Consider(matrix_from(scheme_counts));
    }
  }

  if (options.refine) {
    if (const Candidate* coarse = search.Select()) {
      Matrix center = coarse->scheme;
      Refine(center, k * k, k, search);
    }
  }

  out.schemes_evaluated = search.evaluated() + out.schemes_pruned;
  out.infeasible_responses = search.infeasible();
  out.grid_max_sender = search.max_sender();
  if (const Candidate* best = search.Select()) {
    SignalingScheme scheme(best->scheme);
    ConstrainedResponse r = BestResponseLex(inst, scheme, c);
    out.best = MakeSolution(inst, std::move(scheme), std::move(*r.policy), SolveMethod::kGridOracle);
  }
  return out;
}

}  // namespace persuasion
