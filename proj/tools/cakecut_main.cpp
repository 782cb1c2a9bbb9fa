/*
 * Copyright 2026 The cakecut authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cakecut/cakecut.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cakecut::ScenarioError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void apply_overrides(cakecut::Scenario& scenario, const std::string& procedure,
                     const std::vector<std::string>& checks) {
  if (!procedure.empty()) {
    // Re-parse through the scenario layer so the same validation applies.
    if (procedure == "cut-and-choose") {
      scenario.procedure = cakecut::ScenarioProcedure::CutAndChoose;
    } else if (procedure == "sp") {
      scenario.procedure = cakecut::ScenarioProcedure::Surplus;
    } else if (procedure == "ep") {
      scenario.procedure = cakecut::ScenarioProcedure::Equitability;
    } else if (procedure == "ep-best-order") {
      scenario.procedure = cakecut::ScenarioProcedure::BestOrder;
    } else {
      throw cakecut::ScenarioError("unknown procedure \"" + procedure + "\"");
    }
    if ((scenario.procedure == cakecut::ScenarioProcedure::CutAndChoose ||
         scenario.procedure == cakecut::ScenarioProcedure::Surplus) &&
        scenario.players.size() != 2) {
      throw cakecut::ScenarioError(procedure + " needs exactly 2 players");
    }
    if (scenario.procedure != cakecut::ScenarioProcedure::Equitability) {
      scenario.ep_order.clear();
    }
  }
  if (!checks.empty()) {
    scenario.checks.clear();
    for (const auto& name : checks) {
      bool known = false;
      for (const auto& k : {"pareto", "pareto-contiguous", "fairness", "strategy-floor"}) {
        if (name == k) known = true;
      }
      if (!known) throw cakecut::ScenarioError("unknown check \"" + name + "\"");
      if (std::find(scenario.checks.begin(), scenario.checks.end(), name) ==
          scenario.checks.end()) {
        scenario.checks.push_back(name);
      }
    }
  }
}

int emit_report(const cakecut::Scenario& scenario, const std::string& format) {
  const cakecut::Report report = cakecut::run_scenario(scenario);
  if (format == "json") {
    std::cout << cakecut::render_json(report);
  } else {
    std::cout << cakecut::render_text(report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact fair cake-division procedures and efficiency checks"};
  app.require_subcommand(1);

  std::string run_file, run_procedure, run_format = "text";
  std::vector<std::string> run_checks;
  CLI::App* run = app.add_subcommand("run", "run a scenario file and print its report");
  run->add_option("file", run_file, "scenario file (JSON)")->required();
  run->add_option("--procedure", run_procedure,
                  "override the scenario's procedure "
                  "(cut-and-choose | sp | ep | ep-best-order)");
  run->add_option("--check", run_checks, "override the scenario's checks (comma separated)")
      ->delimiter(',');
  run->add_option("--format", run_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  int ce_id = 0;
  std::string ce_format = "text";
  CLI::App* ce = app.add_subcommand("counterexample", "run a built-in counterexample scenario");
  ce->add_option("id", ce_id, "counterexample id (1, 2 or 3)")->required();
  ce->add_option("--format", ce_format, "text | json")->check(CLI::IsMember({"text", "json"}));

  std::string validate_file;
  CLI::App* validate = app.add_subcommand("validate", "parse and validate a scenario file");
  validate->add_option("file", validate_file, "scenario file (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      cakecut::Scenario scenario = cakecut::parse_scenario(read_file(run_file));
      apply_overrides(scenario, run_procedure, run_checks);
      if (scenario.procedure == cakecut::ScenarioProcedure::None && !scenario.baseline) {
        throw cakecut::ScenarioError("scenario needs a procedure or a baseline_allocation");
      }
      return emit_report(scenario, run_format);
    }
    if (ce->parsed()) {
      return emit_report(cakecut::builtin_counterexample(ce_id), ce_format);
    }
    if (validate->parsed()) {
      const cakecut::Scenario scenario = cakecut::parse_scenario(read_file(validate_file));
      std::cout << "valid scenario: " << scenario.players.size() << " players, "
                << (scenario.is_2d() ? "unit square" : "unit interval") << "\n";
      return 0;
    }
  } catch (const cakecut::ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
