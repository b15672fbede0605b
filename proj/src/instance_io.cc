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

#include "persuasion/instance_io.h"

#include <fstream>
#include <sstream>

namespace persuasion {
namespace {

using nlohmann::json;

const json& Field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw ValidationError(std::string("missing field '") + name + "'");
  return *it;
}

Vector VectorFromJson(const json& value, const char* what) {
  if (!value.is_array()) throw ValidationError(std::string(what) + " must be an array");
  Vector out;
  for (const json& x : value) out.push_back(RationalFromJson(x));
  return out;
}

Matrix MatrixFromJson(const json& value, const char* what) {
  if (!value.is_array()) throw ValidationError(std::string(what) + " must be an array of rows");
  std::vector<Vector> rows;
  for (const json& row : value) rows.push_back(VectorFromJson(row, what));
  if (rows.empty()) throw ValidationError(std::string(what) + " has no rows");
  for (const Vector& r : rows) {
    if (r.size() != rows.front().size()) throw ValidationError(std::string(what) + " is ragged");
  }
  return Matrix::FromRows(rows);
}

// Count or list of labels; labels default to "<prefix><index from 1>".
std::vector<std::string> Labels(const json& value, const char* prefix) {
  std::vector<std::string> names;
  if (value.is_number_integer()) {
    const auto n = value.get<std::int64_t>();
    if (n < 1) throw ValidationError(std::string(prefix) + " count must be positive");
    for (std::int64_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  } else if (value.is_array()) {
    for (const json& x : value) {
      if (!x.is_string()) throw ValidationError(std::string(prefix) + " labels must be strings");
      names.push_back(x.get<std::string>());
    }
  } else {
    throw ValidationError(std::string(prefix) + " must be a count or a list of labels");
  }
  return names;
}

json Rows(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).ToString());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Rational RationalFromJson(const json& value) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (!value.is_string()) throw ValidationError("rational must be a \"p/q\" string or an integer");
  try {
    return Rational::Parse(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
}

InstanceDocument ParseInstanceDocument(const json& doc) {
  if (!doc.is_object()) throw ValidationError("instance document must be an object");
  std::vector<std::string> states = Labels(Field(doc, "states"), "w");
  std::vector<std::string> actions = Labels(Field(doc, "actions"), "a");
  Vector prior = VectorFromJson(Field(doc, "prior"), "prior");
  Matrix sender = MatrixFromJson(Field(doc, "sender_utility"), "sender_utility");
  Matrix receiver = MatrixFromJson(Field(doc, "receiver_utility"), "receiver_utility");
  if (prior.size() != states.size()) throw ValidationError("prior length differs from states");
  if (sender.rows() != states.size() || sender.cols() != actions.size()) {
    throw ValidationError("sender_utility must be states x actions");
  }
  if (receiver.rows() != states.size() || receiver.cols() != actions.size()) {
    throw ValidationError("receiver_utility must be states x actions");
  }
  InstanceDocument out{Instance(std::move(prior), std::move(sender), std::move(receiver)),
                       std::nullopt, std::move(states), std::move(actions)};
  if (auto it = doc.find("constraints"); it != doc.end() && !it->is_null()) {
    if (!it->is_object()) throw ValidationError("constraints must be an object");
    const std::size_t m = out.action_names.size();
    Vector lb = it->contains("lb") ? VectorFromJson(it->at("lb"), "lb") : Vector(m, Rational(0));
    Vector ub = it->contains("ub") ? VectorFromJson(it->at("ub"), "ub") : Vector(m, Rational(1));
    if (lb.size() != m || ub.size() != m) throw ValidationError("lb/ub need one entry per action");
    out.constraints.emplace(std::move(lb), std::move(ub));
  }
  return out;
}

InstanceDocument LoadInstanceDocument(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return ParseInstanceDocument(doc);
}

json ToJson(const Rational& r) { return r.ToString(); }

json ToJson(const Vector& v) {
  json out = json::array();
  for (const Rational& x : v) out.push_back(x.ToString());
  return out;
}

json ToJson(const Matrix& m) { return Rows(m); }

json ToJson(const Instance& inst) {
  return {{"states", inst.num_states()},
          {"actions", inst.num_actions()},
          {"prior", ToJson(inst.prior())},
          {"sender_utility", Rows(inst.sender_utility())},
          {"receiver_utility", Rows(inst.receiver_utility())}};
}

json ToJson(const ConstraintProfile& c) {
  return {{"lb", ToJson(c.lower())}, {"ub", ToJson(c.upper())}};
}

json ToJson(const Solution& s) {
  return {{"method", ToString(s.method)},
          {"scheme", Rows(s.scheme.probs())},
          {"response", Rows(s.response.probs())},
          {"sender_eu", ToJson(s.sender_eu)},
          {"receiver_eu", ToJson(s.receiver_eu)},
          {"action_probs", ToJson(s.action_probs)}};
}

json ToJson(const GridResult& g) {
  json out = {{"resolution", g.resolution},
              {"band", ToJson(g.band)},
              {"sender_upper_gap", ToJson(g.sender_upper_gap)},
              {"receiver_gap", ToJson(g.receiver_gap)},
              {"schemes_evaluated", g.schemes_evaluated},
              {"schemes_pruned", g.schemes_pruned},
              {"infeasible_responses", g.infeasible_responses}};
  out["grid_max_sender"] = g.grid_max_sender ? ToJson(*g.grid_max_sender) : json(nullptr);
  out["best"] = g.best ? ToJson(*g.best) : json(nullptr);
  return out;
}

json ToJson(const Classification& c) {
  return {{"state_matching", c.state_matching},
          {"action_matching", c.action_matching},
          {"sender_case", ToString(c.sender_case)}};
}

json ToJson(const ConstraintCheck& c) {
  return {{"implementable", c.implementable},
          {"feasible", c.feasible},
          {"dimension_mismatch", c.dimension_mismatch}};
}

json ToJson(const StructuralConditions& s) {
  return {{"prop3_sender_monotone", s.prop3_sender_monotone},
          {"prop3_receiver_low_vs_high", s.prop3_receiver_low_vs_high},
          {"generaln_sensitivity", s.generaln_sensitivity},
          {"generaln_convexity", s.generaln_convexity}};
}

json ToJson(const ExAnteCheck& e) {
  return {{"ic", e.ic},
          {"best_deviation_value", ToJson(e.best_deviation_value)},
          {"obedient_value", ToJson(e.obedient_value)},
          {"obedience_infeasible", e.obedience_infeasible},
          {"response_infeasible", e.response_infeasible}};
}

json ToJson(const TrialRecord& t) {
  return {{"trial", t.trial},
          {"source", t.source},
          {"verdict", ToString(t.verdict)},
          {"instance", ToJson(t.instance)},
          {"more_binding", ToJson(t.more_binding)},
          {"less_binding", ToJson(t.less_binding)},
          {"receiver_eu_more_binding", ToJson(t.receiver_more)},
          {"receiver_eu_less_binding", ToJson(t.receiver_less)},
          {"slack", ToJson(t.slack)}};
}

json ToJson(const FuzzReport& r) {
  auto list = [](const std::vector<TrialRecord>& v) {
    json out = json::array();
    for (const TrialRecord& t : v) out.push_back(ToJson(t));
    return out;
  };
  return {{"mode", ToString(r.config.mode)},
          {"trials", r.config.trials},
          {"seed", r.config.seed},
          {"resolution", r.config.resolution},
          {"structural_filter", r.config.structural_filter},
          {"trials_run", r.trials_run},
          {"generator_failures", r.generator_failures},
          {"solver_failures", r.solver_failures},
          {"violation_count", r.violations.size()},
          {"borderline_count", r.borderline.size()},
          {"violations", list(r.violations)},
          {"borderline", list(r.borderline)}};
}

json ToJson(const ReproReport& r) {
  json values = json::array();
  for (const ReproValue& v : r.values) {
    json item = {{"name", v.name}, {"value", ToJson(v.value)}, {"ok", v.ok()}};
    item["expected"] = v.expected ? ToJson(*v.expected) : json(nullptr);
    values.push_back(std::move(item));
  }
  return {{"case", ToString(r.which)},
          {"passed", r.passed()},
          {"values", std::move(values)},
          {"failures", r.failures},
          {"notes", r.notes}};
}

}  // namespace persuasion
