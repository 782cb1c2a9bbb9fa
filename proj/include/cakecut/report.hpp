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
#ifndef CAKECUT_REPORT_HPP
#define CAKECUT_REPORT_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cakecut/efficiency.hpp"
#include "cakecut/measure.hpp"
#include "cakecut/procedures.hpp"
#include "cakecut/properties.hpp"
#include "cakecut/scenario.hpp"

namespace cakecut {

struct FloorLine {
  ProcedureKind procedure;
  int player_count;
  int measure_player;  // whose measure everyone reports (0-based)
  ProcResult<FloorResult> outcome;
};

struct CheckOutcome {
  std::string check;
  std::optional<std::string> note;  // set when the check was skipped
  bool dominated = false;
  std::optional<Axis> witness_axis;  // 2-D: projection holding the witness
  std::optional<DominanceCertificate> certificate;
  std::optional<FairnessReport> fairness;
  std::vector<FloorLine> floors;
};

struct ProcedureRun {
  std::optional<Axis> axis;
  ScenarioProcedure procedure;
  std::variant<CutAndChooseResult, SurplusResult, EquitabilityResult, ProcedureError> outcome;
  std::vector<CheckOutcome> checks;
};

struct BaselineAudit {
  std::optional<Axis> axis;
  Allocation allocation;
  std::vector<Rational> utilities;
  std::vector<CheckOutcome> checks;
};

/// Everything a run produced, in deterministic order. Degeneracies and
/// dominated allocations are findings inside the report, not failures.
struct Report {
  Scenario scenario;
  std::vector<ProcedureRun> runs;
  std::optional<BaselineAudit> baseline;
};

namespace detail {

struct RunContext {
  std::optional<Axis> axis;
  std::vector<ValueMeasure> measures;
};

inline std::vector<RunContext> scenario_contexts(const Scenario& s) {
  std::vector<RunContext> out;
  if (s.is_2d()) {
    for (const Axis axis : s.axes) out.push_back({axis, s.projected_measures(axis)});
  } else {
    out.push_back({std::nullopt, s.interval_measures()});
  }
  return out;
}

inline std::vector<CheckOutcome> run_checks(const Scenario& s,
                                            const std::vector<RunContext>& all_contexts,
                                            const RunContext& ctx,
                                            const std::optional<Allocation>& alloc) {
  std::vector<CheckOutcome> out;
  for (const std::string& name : s.checks) {
    CheckOutcome check;
    check.check = name;
    if (name == "pareto" || name == "pareto-contiguous") {
      if (!alloc) {
        check.note = "skipped: the procedure did not produce an allocation";
      } else {
        const std::vector<Rational> u0 = utilities(*alloc, ctx.measures);
        for (const RunContext& search : all_contexts) {
          auto cert = name == "pareto"
                          ? find_dominating(search.measures, u0)
                          : find_dominating_contiguous(search.measures, u0);
          if (cert) {
            check.dominated = true;
            check.witness_axis = search.axis;
            check.certificate = std::move(cert);
            break;
          }
        }
      }
    } else if (name == "fairness") {
      if (!alloc) {
        check.note = "skipped: the procedure did not produce an allocation";
      } else {
        check.fairness = check_fairness(*alloc, ctx.measures);
      }
    } else if (name == "strategy-floor") {
      const int n = static_cast<int>(ctx.measures.size());
      std::vector<int> distinct;
      for (int i = 0; i < n; ++i) {
        bool seen = false;
        for (int j : distinct) {
          if (ctx.measures[j] == ctx.measures[i]) seen = true;
        }
        if (!seen) distinct.push_back(i);
      }
      std::vector<ProcedureKind> kinds;
      if (n == 2) kinds = {ProcedureKind::CutAndChoose, ProcedureKind::Surplus};
      kinds.push_back(ProcedureKind::Equitability);
      for (int player : distinct) {
        for (ProcedureKind kind : kinds) {
          check.floors.push_back(FloorLine{
              kind, n, player, identical_reports_floor(kind, ctx.measures[player], n)});
        }
      }
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace detail

inline Report run_scenario(const Scenario& s) {
  Report report;
  report.scenario = s;
  const std::vector<detail::RunContext> contexts = detail::scenario_contexts(s);

  if (s.procedure != ScenarioProcedure::None) {
    for (const auto& ctx : contexts) {
      ProcedureRun run;
      run.axis = ctx.axis;
      run.procedure = s.procedure;
      std::optional<Allocation> alloc;
      switch (s.procedure) {
        case ScenarioProcedure::CutAndChoose: {
          CutAndChooseResult r = cut_and_choose(ctx.measures[0], ctx.measures[1]);
          alloc = r.allocation;
          run.outcome = std::move(r);
          break;
        }
        case ScenarioProcedure::Surplus: {
          auto r = surplus_procedure(ctx.measures[0], ctx.measures[1]);
          if (ok(r)) {
            alloc = result(r).allocation;
            run.outcome = result(r);
          } else {
            run.outcome = error(r);
          }
          break;
        }
        case ScenarioProcedure::Equitability: {
          std::vector<int> order = s.ep_order;
          if (order.empty()) {
            order.resize(ctx.measures.size());
            std::iota(order.begin(), order.end(), 0);
          }
          auto r = equitability_procedure(ctx.measures, order);
          if (ok(r)) {
            alloc = result(r).allocation;
            run.outcome = result(r);
          } else {
            run.outcome = error(r);
          }
          break;
        }
        case ScenarioProcedure::BestOrder: {
          auto r = ep_best_order(ctx.measures);
          if (ok(r)) {
            alloc = result(r).allocation;
            run.outcome = result(r);
          } else {
            run.outcome = error(r);
          }
          break;
        }
        case ScenarioProcedure::None:
          break;
      }
      run.checks = detail::run_checks(s, contexts, ctx, alloc);
      report.runs.push_back(std::move(run));
    }
  }

  if (s.baseline) {
    BaselineAudit audit;
    audit.axis = s.baseline->axis;
    audit.allocation = s.baseline->allocation;
    const detail::RunContext ctx{
        audit.axis,
        s.is_2d() ? s.projected_measures(*audit.axis) : s.interval_measures()};
    audit.utilities = utilities(audit.allocation, ctx.measures);
    audit.checks = detail::run_checks(s, contexts, ctx, audit.allocation);
    report.baseline = std::move(audit);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Rendering. Both renderers are deterministic: reports for the same scenario
// are byte-identical across runs and platforms.

namespace detail {

inline std::string interval_text(const Interval& piece) {
  return "[" + to_string(piece.lo) + ", " + to_string(piece.hi) +
         (piece.hi == 1 ? "]" : ")");
}

inline std::string portion_text(const IntervalSet& s) {
  std::string out;
  for (const auto& piece : s.pieces()) {
    if (!out.empty()) out += " + ";
    out += interval_text(piece);
  }
  if (s.has_explicit_atoms()) {
    for (const auto& loc : s.explicit_atoms()) {
      if (!out.empty()) out += " + ";
      out += "atom at " + to_string(loc);
    }
  }
  return out.empty() ? "(nothing)" : out;
}

inline std::string measure_text(const ValueMeasure& m) {
  std::string out = "density ";
  for (std::size_t i = 0; i < m.density.values.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(m.density.values[i]) + " on [" + to_string(m.density.breakpoints[i]) +
           ", " + to_string(m.density.breakpoints[i + 1]) + ")";
  }
  for (const auto& [loc, mass] : m.atoms.atoms) {
    out += "; atom of mass " + to_string(mass) + " at " + to_string(loc);
  }
  return out;
}

inline std::string measure2d_text(const Rect2DMeasure& m) {
  auto list = [](const std::vector<Rational>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i > 0) out += ", ";
      out += to_string(xs[i]);
    }
    return out;
  };
  std::string out = "square density, x breakpoints [" + list(m.x_breakpoints) +
                    "], y breakpoints [" + list(m.y_breakpoints) + "], cells [";
  for (std::size_t i = 0; i < m.cell_values.size(); ++i) {
    if (i > 0) out += ", ";
    out += "[" + list(m.cell_values[i]) + "]";
  }
  return out + "]";
}

inline std::string rational_list_text(const std::vector<Rational>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(xs[i]);
  }
  return out;
}

inline std::string player_values_text(const Scenario& s, const std::vector<Rational>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ", ";
    out += s.players[i].name + ": " + to_string(xs[i]);
  }
  return out;
}

inline std::string median_text(const QuantileResult& q) {
  switch (q.kind) {
    case QuantileResult::Kind::UniquePoint:
      return "unique point at " + to_string(q.point);
    case QuantileResult::Kind::FlatInterval:
      return "flat interval [" + to_string(q.point) + ", " + to_string(q.hi) +
             "], cut at its midpoint";
    case QuantileResult::Kind::AtJump:
      return "atom jump at " + to_string(q.point);
  }
  return "";
}

inline void render_allocation_text(std::string& out, const Scenario& s, const Allocation& a,
                                   const std::string& indent) {
  for (std::size_t i = 0; i < a.portions.size(); ++i) {
    out += indent + s.players[i].name + ": " + portion_text(a.portions[i]) + "\n";
  }
}

inline void render_check_text(std::string& out, const Scenario& s, const CheckOutcome& check) {
  if (check.note) {
    out += "  check " + check.check + ": " + *check.note + "\n";
    return;
  }
  if (check.check == "pareto" || check.check == "pareto-contiguous") {
    out += "  check " + check.check + ": ";
    if (!check.dominated) {
      out += "EFFICIENT\n";
      return;
    }
    out += "DOMINATED";
    if (check.witness_axis) out += " (witness via axis " + to_string(*check.witness_axis) + ")";
    out += "\n";
    const DominanceCertificate& cert = *check.certificate;
    if (cert.contiguous_cuts) {
      out += "    cuts: " + rational_list_text(*cert.contiguous_cuts) + "\n";
      out += "    piece order:";
      for (std::size_t k = 0; k < cert.contiguous_order->size(); ++k) {
        out += (k == 0 ? " " : ", ") + s.players[(*cert.contiguous_order)[k]].name;
      }
      out += "\n";
    }
    out += "    alternative:\n";
    render_allocation_text(out, s, cert.alternative, "      ");
    out += "    utilities before: " + rational_list_text(cert.utilities_before) + "\n";
    out += "    utilities after:  " + rational_list_text(cert.utilities_after) + "\n";
    out += "    improvements:     " + rational_list_text(cert.improvements) + "\n";
    return;
  }
  if (check.check == "fairness") {
    const FairnessReport& fr = *check.fairness;
    auto yesno = [](bool b) { return b ? std::string("yes") : std::string("no"); };
    out += "  check fairness: proportional: " + yesno(fr.proportional) +
           ", envy-free: " + yesno(fr.envy_free) + ", equitable: " + yesno(fr.equitable) + "\n";
    out += "    valuations (each row: that player's value of every portion):\n";
    for (std::size_t i = 0; i < fr.valuations.size(); ++i) {
      out += "      " + s.players[i].name + ": " + rational_list_text(fr.valuations[i]) + "\n";
    }
    if (fr.proportional_witness) {
      const int i = *fr.proportional_witness;
      out += "    proportionality witness: " + s.players[i].name + " holds " +
             to_string(fr.valuations[i][i]) + " < 1/" + std::to_string(fr.valuations.size()) +
             "\n";
    }
    if (fr.envy_witness) {
      const auto [i, j] = *fr.envy_witness;
      out += "    envy witness: " + s.players[i].name + " values " + s.players[j].name +
             "'s portion at " + to_string(fr.valuations[i][j]) + " > own " +
             to_string(fr.valuations[i][i]) + "\n";
    }
    if (fr.equity_witness) {
      const auto [i, j] = *fr.equity_witness;
      out += "    equitability witness: " + s.players[i].name + " at " +
             to_string(fr.valuations[i][i]) + " vs " + s.players[j].name + " at " +
             to_string(fr.valuations[j][j]) + "\n";
    }
    return;
  }
  if (check.check == "strategy-floor") {
    out += "  check strategy-floor (identical reports):\n";
    for (const FloorLine& line : check.floors) {
      out += "    " + to_string(line.procedure) + ", n = " + std::to_string(line.player_count) +
             ", all report " + s.players[line.measure_player].name + "'s measure: ";
      if (ok(line.outcome)) {
        const FloorResult& fr = result(line.outcome);
        out += "payoffs " + rational_list_text(fr.payoffs) + "; min payoff " +
               to_string(fr.min_payoff) + (fr.holds ? " <= " : " > ") + to_string(fr.floor) +
               ": floor " + (fr.holds ? "holds" : "violated") + "\n";
      } else {
        out += "error: " + error(line.outcome).describe() + "\n";
      }
    }
  }
}

}  // namespace detail

inline std::string render_text(const Report& report) {
  const Scenario& s = report.scenario;
  std::string out = "cakecut report\n";
  out += "scenario: " + (s.name.empty() ? std::string("(unnamed)") : s.name) + "\n";
  out += "players:\n";
  for (std::size_t i = 0; i < s.players.size(); ++i) {
    const auto& p = s.players[i];
    out += "  " + std::to_string(i + 1) + ". " + p.name + ": ";
    out += p.is_2d() ? detail::measure2d_text(std::get<Rect2DMeasure>(p.measure))
                     : detail::measure_text(std::get<ValueMeasure>(p.measure));
    out += "\n";
  }

  for (const ProcedureRun& run : report.runs) {
    out += "\nprocedure " + to_string(run.procedure);
    if (run.axis) out += " (axis " + to_string(*run.axis) + ")";
    out += "\n";
    if (std::holds_alternative<ProcedureError>(run.outcome)) {
      out += "  error: " + std::get<ProcedureError>(run.outcome).describe() + "\n";
    } else if (std::holds_alternative<CutAndChooseResult>(run.outcome)) {
      const auto& r = std::get<CutAndChooseResult>(run.outcome);
      out += "  cutter: " + s.players[r.cutter_index].name +
             " (median: " + detail::median_text(r.cutter_median) + ")\n";
      out += "  cut point: " + to_string(r.cut_point) + "\n";
      out += "  chooser: " + s.players[r.chooser_index].name + " takes the " +
             (r.chooser_took_left ? "left" : "right") + " piece\n";
      if (r.degeneracy) out += "  note: " + r.degeneracy->diagnostic + "\n";
      out += "  allocation:\n";
      detail::render_allocation_text(out, s, r.allocation, "    ");
      out += "  payoffs: " + detail::player_values_text(s, r.payoffs) + "\n";
    } else if (std::holds_alternative<SurplusResult>(run.outcome)) {
      const auto& r = std::get<SurplusResult>(run.outcome);
      out += "  medians: " + s.players[0].name + ": " + to_string(r.medians[0]) + ", " +
             s.players[1].name + ": " + to_string(r.medians[1]) + "\n";
      out += "  surplus: [" + to_string(r.surplus_lo) + ", " + to_string(r.surplus_hi) + "]\n";
      out += "  surplus cut: e = " + to_string(r.cut) + "\n";
      out += "  allocation:\n";
      detail::render_allocation_text(out, s, r.allocation, "    ");
      out += "  payoffs: " + detail::player_values_text(s, r.payoffs) + "\n";
      out += "  surplus proportions: " + s.players[0].name + ": " +
             to_string(r.surplus_proportions[0]) + ", " + s.players[1].name + ": " +
             to_string(r.surplus_proportions[1]) + "\n";
    } else {
      const auto& r = std::get<EquitabilityResult>(run.outcome);
      out += "  order:";
      for (std::size_t k = 0; k < r.order.size(); ++k) {
        out += (k == 0 ? " " : ", ") + s.players[r.order[k]].name;
      }
      out += "\n";
      out += "  cuts: " + detail::rational_list_text(r.cuts) + "\n";
      out += "  common value: " + to_string(r.common_value) + "\n";
      out += "  allocation:\n";
      detail::render_allocation_text(out, s, r.allocation, "    ");
      out += "  payoffs: " + detail::player_values_text(s, r.payoffs) + "\n";
    }
    for (const CheckOutcome& check : run.checks) {
      detail::render_check_text(out, s, check);
    }
  }

  if (report.baseline) {
    const BaselineAudit& audit = *report.baseline;
    out += "\nbaseline audit";
    if (audit.axis) out += " (axis " + to_string(*audit.axis) + ")";
    out += "\n";
    out += "  allocation:\n";
    detail::render_allocation_text(out, s, audit.allocation, "    ");
    out += "  utilities: " + detail::player_values_text(s, audit.utilities) + "\n";
    for (const CheckOutcome& check : audit.checks) {
      detail::render_check_text(out, s, check);
    }
  }
  return out;
}

namespace detail {

inline Json rational_list_json(const std::vector<Rational>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(to_string(x));
  return arr;
}

inline Json median_json(const QuantileResult& q) {
  switch (q.kind) {
    case QuantileResult::Kind::UniquePoint:
      return Json{{"kind", "unique-point"}, {"point", to_string(q.point)}};
    case QuantileResult::Kind::FlatInterval:
      return Json{{"kind", "flat-interval"}, {"lo", to_string(q.point)}, {"hi", to_string(q.hi)}};
    case QuantileResult::Kind::AtJump:
      return Json{{"kind", "atom-jump"}, {"point", to_string(q.point)}};
  }
  return Json();
}

inline Json error_json(const ProcedureError& e) {
  Json j;
  switch (e.kind) {
    case ProcedureError::Kind::NonUniqueMedian:
      j["kind"] = "non-unique-median";
      j["player"] = e.player + 1;
      j["flat_interval"] = Json::array({to_string(e.flat_interval->lo),
                                        to_string(e.flat_interval->hi)});
      break;
    case ProcedureError::Kind::NoSolution:
      j["kind"] = "no-solution";
      break;
    case ProcedureError::Kind::DegenerateSurplus:
      j["kind"] = "degenerate-surplus";
      break;
  }
  j["message"] = e.describe();
  return j;
}

inline Json check_json(const CheckOutcome& check) {
  Json j;
  j["check"] = check.check;
  if (check.note) {
    j["note"] = *check.note;
    return j;
  }
  if (check.check == "pareto" || check.check == "pareto-contiguous") {
    j["dominated"] = check.dominated;
    if (check.dominated) {
      if (check.witness_axis) j["witness_axis"] = to_string(*check.witness_axis);
      const DominanceCertificate& cert = *check.certificate;
      Json cj;
      if (cert.contiguous_cuts) {
        cj["cuts"] = rational_list_json(*cert.contiguous_cuts);
        Json order = Json::array();
        for (int p : *cert.contiguous_order) order.push_back(p + 1);
        cj["piece_order"] = order;
      }
      cj["allocation"] = allocation_to_json(cert.alternative);
      cj["utilities_before"] = rational_list_json(cert.utilities_before);
      cj["utilities_after"] = rational_list_json(cert.utilities_after);
      cj["improvements"] = rational_list_json(cert.improvements);
      j["certificate"] = cj;
    }
  } else if (check.check == "fairness") {
    const FairnessReport& fr = *check.fairness;
    j["proportional"] = fr.proportional;
    j["envy_free"] = fr.envy_free;
    j["equitable"] = fr.equitable;
    Json rows = Json::array();
    for (const auto& row : fr.valuations) rows.push_back(rational_list_json(row));
    j["valuations"] = rows;
    if (fr.proportional_witness) j["proportional_witness"] = *fr.proportional_witness + 1;
    if (fr.envy_witness) {
      j["envy_witness"] = Json::array({fr.envy_witness->first + 1, fr.envy_witness->second + 1});
    }
    if (fr.equity_witness) {
      j["equity_witness"] =
          Json::array({fr.equity_witness->first + 1, fr.equity_witness->second + 1});
    }
  } else if (check.check == "strategy-floor") {
    Json floors = Json::array();
    for (const FloorLine& line : check.floors) {
      Json fj;
      fj["procedure"] = to_string(line.procedure);
      fj["players"] = line.player_count;
      fj["measure_of"] = line.measure_player + 1;
      if (ok(line.outcome)) {
        const FloorResult& fr = result(line.outcome);
        fj["payoffs"] = rational_list_json(fr.payoffs);
        fj["min_payoff"] = to_string(fr.min_payoff);
        fj["floor"] = to_string(fr.floor);
        fj["holds"] = fr.holds;
      } else {
        fj["error"] = error_json(error(line.outcome));
      }
      floors.push_back(fj);
    }
    j["floors"] = floors;
  }
  return j;
}

}  // namespace detail

inline std::string render_json(const Report& report) {
  using detail::Json;
  const Scenario& s = report.scenario;
  Json doc;
  doc["scenario"] = s.name.empty() ? Json() : Json(s.name);
  Json players = Json::array();
  for (const auto& p : s.players) {
    Json pj;
    pj["name"] = p.name;
    if (p.is_2d()) {
      pj["measure_2d"] = detail::measure2d_to_json(std::get<Rect2DMeasure>(p.measure));
    } else {
      pj["measure"] = detail::measure_to_json(std::get<ValueMeasure>(p.measure));
    }
    players.push_back(pj);
  }
  doc["players"] = players;

  Json runs = Json::array();
  for (const ProcedureRun& run : report.runs) {
    Json rj;
    rj["procedure"] = to_string(run.procedure);
    if (run.axis) rj["axis"] = to_string(*run.axis);
    if (std::holds_alternative<ProcedureError>(run.outcome)) {
      rj["error"] = detail::error_json(std::get<ProcedureError>(run.outcome));
    } else if (std::holds_alternative<CutAndChooseResult>(run.outcome)) {
      const auto& r = std::get<CutAndChooseResult>(run.outcome);
      Json res;
      res["cut_point"] = to_string(r.cut_point);
      res["cutter"] = r.cutter_index + 1;
      res["chooser"] = r.chooser_index + 1;
      res["chooser_takes"] = r.chooser_took_left ? "left" : "right";
      res["cutter_median"] = detail::median_json(r.cutter_median);
      if (r.degeneracy) res["note"] = r.degeneracy->diagnostic;
      res["allocation"] = detail::allocation_to_json(r.allocation);
      res["payoffs"] = detail::rational_list_json(r.payoffs);
      rj["result"] = res;
    } else if (std::holds_alternative<SurplusResult>(run.outcome)) {
      const auto& r = std::get<SurplusResult>(run.outcome);
      Json res;
      res["medians"] = Json::array({to_string(r.medians[0]), to_string(r.medians[1])});
      res["surplus"] = Json::array({to_string(r.surplus_lo), to_string(r.surplus_hi)});
      res["cut"] = to_string(r.cut);
      res["left_player"] = r.left_player + 1;
      res["right_player"] = r.right_player + 1;
      res["allocation"] = detail::allocation_to_json(r.allocation);
      res["payoffs"] = detail::rational_list_json(r.payoffs);
      res["surplus_proportions"] = Json::array(
          {to_string(r.surplus_proportions[0]), to_string(r.surplus_proportions[1])});
      rj["result"] = res;
    } else {
      const auto& r = std::get<EquitabilityResult>(run.outcome);
      Json res;
      Json order = Json::array();
      for (int p : r.order) order.push_back(p + 1);
      res["order"] = order;
      res["cuts"] = detail::rational_list_json(r.cuts);
      res["common_value"] = to_string(r.common_value);
      res["allocation"] = detail::allocation_to_json(r.allocation);
      res["payoffs"] = detail::rational_list_json(r.payoffs);
      rj["result"] = res;
    }
    Json checks = Json::array();
    for (const CheckOutcome& check : run.checks) checks.push_back(detail::check_json(check));
    rj["checks"] = checks;
    runs.push_back(rj);
  }
  doc["runs"] = runs;

  if (report.baseline) {
    const BaselineAudit& audit = *report.baseline;
    Json bj;
    if (audit.axis) bj["axis"] = to_string(*audit.axis);
    bj["allocation"] = detail::allocation_to_json(audit.allocation);
    bj["utilities"] = detail::rational_list_json(audit.utilities);
    Json checks = Json::array();
    for (const CheckOutcome& check : audit.checks) checks.push_back(detail::check_json(check));
    bj["checks"] = checks;
    doc["baseline_audit"] = bj;
  }
  return doc.dump(2) + "\n";
}

}  // namespace cakecut

#endif  // CAKECUT_REPORT_HPP
