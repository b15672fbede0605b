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

#include "doctest.h"
#include "persuasion/sender_lp.h"

namespace persuasion {
namespace {

using nlohmann::json;

json Table2Doc() {
  return json::parse(R"({
    "states": ["w1", "w2", "w3"],
    "actions": 3,
    "prior": ["1/3", "1/3", "1/3"],
    "sender_utility": [["10", "0", "0"], ["10", "2", "0"], ["0", "2", "1"]],
    "receiver_utility": [[4, 0, 0], [2, 3, 1], [0, 1, 3]],
    "constraints": {"lb": ["0", "0", "0"], "ub": ["1/2", "1", "1"]}
  })");
}

TEST_SUITE("instance_io") {

TEST_CASE("parses an instance document") {
  const InstanceDocument d = ParseInstanceDocument(Table2Doc());
  CHECK(d.instance == TernaryCounterexample());
  REQUIRE(d.constraints);
  CHECK(d.constraints->upper()[0] == Rational(1, 2));
  CHECK(d.state_names == std::vector<std::string>{"w1", "w2", "w3"});
  CHECK(d.action_names == std::vector<std::string>{"a1", "a2", "a3"});
}

TEST_CASE("round trip through JSON") {
  const Instance inst = TernaryCounterexample();
  const InstanceDocument d = ParseInstanceDocument(ToJson(inst));
  CHECK(d.instance == inst);
  CHECK_FALSE(d.constraints);
}

TEST_CASE("rejects malformed documents") {
  json doc = Table2Doc();
  doc.erase("prior");
  CHECK_THROWS_AS(ParseInstanceDocument(doc), ValidationError);

  doc = Table2Doc();
  doc["prior"][0] = "1/2";
  CHECK_THROWS_AS(ParseInstanceDocument(doc), ValidationError);

  doc = Table2Doc();
  doc["prior"][0] = 0.5;
  CHECK_THROWS_AS(ParseInstanceDocument(doc), ValidationError);

  doc = Table2Doc();
  doc["sender_utility"][1] = json::array({"1", "2"});
  CHECK_THROWS_AS(ParseInstanceDocument(doc), ValidationError);

  doc = Table2Doc();
  doc["states"] = 2;
  CHECK_THROWS_AS(ParseInstanceDocument(doc), ValidationError);

  doc = Table2Doc();
  doc["constraints"]["ub"] = json::array({"1/2", "1"});
  CHECK_THROWS_AS(ParseInstanceDocument(doc), ValidationError);

  doc = Table2Doc();
  doc["constraints"]["lb"][0] = "3/4";
  CHECK_THROWS_AS(ParseInstanceDocument(doc), ValidationError);

  CHECK_THROWS_AS(LoadInstanceDocument("/nonexistent/instance.json"), ValidationError);
}

TEST_CASE("reports serialize rationals as canonical strings") {
  const ExpostResult r = SolveExpost(TernaryCounterexample(),
                                     ConstraintProfile({0, 0, 0}, {Rational(1, 2), 1, 1}));
  REQUIRE(r.solution);
  const json j = ToJson(*r.solution);
  CHECK(j["receiver_eu"] == "17/6");
  CHECK(j["sender_eu"] == "35/6");
  CHECK(j["method"] == "expost-lp");
  CHECK(ToJson(Rational(-4, 2)) == "-2");
}

}  // TEST_SUITE

}  // namespace
}  // namespace persuasion
