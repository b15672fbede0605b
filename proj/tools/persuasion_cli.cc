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

// Command-line front end: check, solve, repro and fuzz.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "persuasion/binary_solver.h"
#include "persuasion/instance_io.h"
#include "persuasion/lab.h"
#include "persuasion/oracle.h"
#include "persuasion/sender_lp.h"

namespace {

using nlohmann::json;
using namespace persuasion;

enum ExitCode { kOk = 0, kInvalidInput = 1, kInfeasible = 2, kViolations = 3 };

// Flattens a document into (path, scalar) pairs for the text and csv views.
void Flatten(const json& doc, const std::string& path,
             std::vector<std::pair<std::string, std::string>>* out) {
  if (doc.is_object()) {
    for (const auto& [key, value] : doc.items()) {
      Flatten(value, path.empty() ? key : path + "." + key, out);
    }
  } else if (doc.is_array()) {
    if (doc.empty()) out->emplace_back(path, "[]");
    for (std::size_t i = 0; i < doc.size(); ++i) {
      Flatten(doc[i], path + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out->emplace_back(path, doc.is_string() ? doc.get<std::string>() : doc.dump());
  }
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

void Emit(const json& doc, const std::string& format) {
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  Flatten(doc, "", &rows);
  if (format == "csv") {
    std::cout << "field,value\n";
    for (const auto& [k, v] : rows) std::cout << CsvField(k) << "," << CsvField(v) << "\n";
  } else {
    for (const auto& [k, v] : rows) std::cout << k << ": " << v << "\n";
  }
}

int RunCheck(const std::string& path, const std::string& format) {
  const InstanceDocument doc = LoadInstanceDocument(path);
  const Instance& inst = doc.instance;
  json out = {{"instance", ToJson(inst)}, {"classification", ToJson(ClassifyInstance(inst))}};
  if (inst.num_states() == inst.num_actions()) {
    out["structural_conditions"] = ToJson(CheckStructuralConditions(inst));
  }
  int code = kOk;
  if (doc.constraints) {
    const ConstraintCheck check = CheckConstraints(*doc.constraints, inst);
    out["constraints"] = ToJson(*doc.constraints);
    out["constraint_check"] = ToJson(check);
    if (!check.implementable) code = kInfeasible;
  }
  Emit(out, format);
  return code;
}

int RunSolve(const std::string& path, const std::string& method, int grid,
             const std::optional<std::string>& band, bool refine, const std::string& format) {
  const InstanceDocument doc = LoadInstanceDocument(path);
  const ConstraintProfile c =
      doc.constraints.value_or(ConstraintProfile::Vacuous(doc.instance.num_actions()));
  json out = {{"method", method}, {"constraints", ToJson(c)}};
  int code = kOk;
  if (method == "binary") {
    try {
      out["solution"] = ToJson(SolveBinary(doc.instance, c));
    } catch (const InfeasibleConstraintsError& e) {
      out["error"] = e.what();
      code = kInfeasible;
    }
  } else if (method == "expost") {
    ExpostResult r = SolveExpost(doc.instance, c);
    out["status"] = ToString(r.status);
    if (r.solution) out["solution"] = ToJson(*r.solution);
    if (r.status != LpStatus::kOptimal) code = kInfeasible;
  } else {
    GridOptions options;
    options.resolution = grid;
    options.refine = refine;
    if (band) options.band = Rational::Parse(*band);
    GridResult r = SolveExanteGrid(doc.instance, c, options);
    out["grid"] = ToJson(r);
    if (!r.best) code = kInfeasible;
  }
  Emit(out, format);
  return code;
}

int RunRepro(const std::string& which, const std::string& eps, const std::string& format) {
  const std::optional<ReproCase> c = ParseReproCase(which);
  if (!c) throw ValidationError("unknown repro case '" + which + "'");
  const ReproReport report = ReproExamples(*c, Rational::Parse(eps));
  json out = ToJson(report);
  out["eps"] = eps;
  Emit(out, format);
  return report.passed() ? kOk : kViolations;
}

int RunFuzz(const std::string& mode, std::size_t trials, std::uint64_t seed, int grid, bool plain,
            const std::string& format) {
  FuzzConfig config;
  config.mode = mode == "theorem2-binary" ? FuzzMode::kBinary : FuzzMode::kTernary;
  config.trials = trials;
  config.seed = seed;
  config.resolution = grid;
  if (plain) {
    if (config.mode != FuzzMode::kTernary) {
      throw ValidationError("--plain only applies to prop3-ternary");
    }
    config.structural_filter = false;
    config.inject_counterexample = true;
  }
  const FuzzReport report = FuzzMonotonicity(config);
  Emit(ToJson(report), format);
  return report.violations.empty() ? kOk : kViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayesian persuasion with action quotas: exact solvers and checks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  std::string instance_path;
  auto* check = app.add_subcommand("check", "Classify an instance and check its constraints");
  check->add_option("instance", instance_path, "Instance file")->required();

  auto* solve = app.add_subcommand("solve", "Compute a sender-optimal scheme");
  solve->add_option("instance", instance_path, "Instance file")->required();
  std::string method = "expost";
  solve->add_option("--method", method, "binary, expost or grid")
      ->check(CLI::IsMember({"binary", "expost", "grid"}));
  int grid = 0;
  solve->add_option("--grid", grid, "Grid resolution K (0 picks a default)");
  std::optional<std::string> band;
  solve->add_option("--band", band, "Sender-optimality band, as p/q");
  bool refine = false;
  solve->add_flag("--refine", refine, "Re-grid around the coarse incumbent at step 1/K^2");

  auto* repro = app.add_subcommand("repro", "Recompute a worked example");
  std::string which;
  repro->add_option("case", which, "sec31, sec4, coin or nonalign-exact")
      ->required()
      ->check(CLI::IsMember({"sec31", "sec4", "coin", "nonalign-exact"}));
  std::string eps = "1/100";
  repro->add_option("--eps", eps, "Receiver payoff perturbation, as p/q");

  auto* fuzz = app.add_subcommand("fuzz", "Search for receiver-monotonicity violations");
  std::string mode;
  fuzz->add_option("--mode", mode, "theorem2-binary or prop3-ternary")
      ->required()
      ->check(CLI::IsMember({"theorem2-binary", "prop3-ternary"}));
  std::size_t trials = 1;
  fuzz->add_option("--trials", trials, "Number of trials")->required();
  std::uint64_t seed = 0;
  fuzz->add_option("--seed", seed, "Base seed")->required();
  fuzz->add_option("--grid", grid, "Grid resolution K for ternary mode (default 12)");
  bool plain = false;
  fuzz->add_flag("--plain", plain,
                 "Ternary: skip the structural filter and run the known counterexample first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*check) return RunCheck(instance_path, format);
    if (*solve) return RunSolve(instance_path, method, grid, band, refine, format);
    if (*repro) return RunRepro(which, eps, format);
    return RunFuzz(mode, trials, seed, grid, plain, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}
