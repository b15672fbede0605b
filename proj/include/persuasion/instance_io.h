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

#ifndef PERSUASION_INSTANCE_IO_H_
#define PERSUASION_INSTANCE_IO_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "persuasion/lab.h"
#include "persuasion/model.h"
#include "persuasion/oracle.h"
#include "persuasion/response.h"

namespace persuasion {

// Instance file: {"states", "actions", "prior", "sender_utility",
// "receiver_utility", optional "constraints": {"lb", "ub"}}. `states` and
// `actions` are either counts or arrays of names. Rationals are "p/q"
// strings; plain JSON integers are accepted too.
struct InstanceDocument {
  Instance instance;
  std::optional<ConstraintProfile> constraints;
  std::vector<std::string> state_names;
  std::vector<std::string> action_names;
};

// Throws ValidationError on any malformed or inconsistent field.
InstanceDocument ParseInstanceDocument(const nlohmann::json& doc);
InstanceDocument LoadInstanceDocument(const std::string& path);

Rational RationalFromJson(const nlohmann::json& value);

nlohmann::json ToJson(const Rational& r);
nlohmann::json ToJson(const Vector& v);
nlohmann::json ToJson(const Matrix& m);
nlohmann::json ToJson(const Instance& inst);
nlohmann::json ToJson(const ConstraintProfile& c);
nlohmann::json ToJson(const Solution& s);
nlohmann::json ToJson(const GridResult& g);
nlohmann::json ToJson(const Classification& c);
nlohmann::json ToJson(const ConstraintCheck& c);
nlohmann::json ToJson(const StructuralConditions& s);
nlohmann::json ToJson(const ExAnteCheck& e);
nlohmann::json ToJson(const TrialRecord& t);
nlohmann::json ToJson(const FuzzReport& r);
nlohmann::json ToJson(const ReproReport& r);

}  // namespace persuasion

#endif  // PERSUASION_INSTANCE_IO_H_
