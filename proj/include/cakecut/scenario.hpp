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
#ifndef CAKECUT_SCENARIO_HPP
#define CAKECUT_SCENARIO_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cakecut/measure.hpp"
#include "cakecut/procedures.hpp"
#include "cakecut/rational.hpp"

namespace cakecut {

/// Input problems: JSON syntax errors (with position, via the json parser's
/// message) and semantic validation failures. The CLI maps these to a
/// nonzero exit code; everything a procedure *finds* (degeneracies,
/// dominated allocations) is an ordinary report instead.
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ScenarioProcedure { None, CutAndChoose, Surplus, Equitability, BestOrder };

inline std::string to_string(ScenarioProcedure p) {
  switch (p) {
    case ScenarioProcedure::None: return "";
    case ScenarioProcedure::CutAndChoose: return "cut-and-choose";
    case ScenarioProcedure::Surplus: return "sp";
    case ScenarioProcedure::Equitability: return "ep";
    case ScenarioProcedure::BestOrder: return "ep-best-order";
  }
  return "";
}

struct ScenarioPlayer {
  std::string name;
  std::variant<ValueMeasure, Rect2DMeasure> measure;

  bool is_2d() const { return std::holds_alternative<Rect2DMeasure>(measure); }
  bool operator==(const ScenarioPlayer& other) const = default;
};

struct BaselineAllocation {
  std::optional<Axis> axis;  // required in 2-D scenarios
  Allocation allocation;
  bool operator==(const BaselineAllocation& other) const = default;
};

/// Declarative description of one run: players and their measures, a
/// procedure (or a baseline allocation to audit, or both), and the checks.
struct Scenario {
  std::string name;
  std::vector<ScenarioPlayer> players;
  std::vector<Axis> axes;  // 2-D scenarios: projections to run, in order
  ScenarioProcedure procedure = ScenarioProcedure::None;
  std::vector<int> ep_order;  // 0-based; empty = identity
  std::vector<std::string> checks;
  std::optional<BaselineAllocation> baseline;

  bool is_2d() const { return !players.empty() && players.front().is_2d(); }

  /// Player measures in the scenario's own coordinates (1-D scenarios).
  std::vector<ValueMeasure> interval_measures() const {
    std::vector<ValueMeasure> out;
    for (const auto& p : players) out.push_back(std::get<ValueMeasure>(p.measure));
    return out;
  }

  /// Player measures projected along an axis (2-D scenarios).
  std::vector<ValueMeasure> projected_measures(Axis axis) const {
    std::vector<ValueMeasure> out;
    for (const auto& p : players) {
      out.push_back(project_2d(std::get<Rect2DMeasure>(p.measure), axis));
    }
    return out;
  }

  bool operator==(const Scenario& other) const = default;
};

namespace detail {

using Json = nlohmann::ordered_json;

inline const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{"pareto", "pareto-contiguous", "fairness",
                                              "strategy-floor"};
  return names;
}

inline Rational rational_field(const Json& j, const std::string& where) {
  if (!j.is_string()) {
    throw ScenarioError(where + ": rationals must be strings like \"p/q\"");
  }
  const auto parsed = try_parse_rational(j.get<std::string>());
  if (!parsed) {
    throw ScenarioError(where + ": malformed rational \"" + j.get<std::string>() + "\"");
  }
  return *parsed;
}

inline Json rational_json(const Rational& q) { return Json(to_string(q)); }

inline std::vector<Rational> rational_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ScenarioError(where + ": expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(rational_field(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

inline ValueMeasure measure_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("density")) {
    throw ScenarioError(where + ": measure needs a \"density\" object");
  }
  const Json& d = j.at("density");
  if (!d.contains("breakpoints") || !d.contains("values")) {
    throw ScenarioError(where + ": density needs \"breakpoints\" and \"values\"");
  }
  ValueMeasure m;
  m.density.breakpoints = rational_array(d.at("breakpoints"), where + ".density.breakpoints");
  m.density.values = rational_array(d.at("values"), where + ".density.values");
  if (j.contains("atoms")) {
    const Json& atoms = j.at("atoms");
    if (!atoms.is_array()) throw ScenarioError(where + ".atoms: expected an array");
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      const std::string at = where + ".atoms[" + std::to_string(i) + "]";
      if (!atoms[i].is_object() || !atoms[i].contains("location") || !atoms[i].contains("mass")) {
        throw ScenarioError(at + ": atom needs \"location\" and \"mass\"");
      }
      const Rational loc = rational_field(atoms[i].at("location"), at + ".location");
      if (m.atoms.atoms.count(loc)) throw ScenarioError(at + ": duplicate atom location");
      m.atoms.atoms[loc] = rational_field(atoms[i].at("mass"), at + ".mass");
    }
  }
  try {
    m.validate();
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(where + ": " + e.what());
  }
  return m;
}

inline Json measure_to_json(const ValueMeasure& m) {
  Json j;
  Json breaks = Json::array();
  for (const auto& b : m.density.breakpoints) breaks.push_back(rational_json(b));
  Json values = Json::array();
  for (const auto& v : m.density.values) values.push_back(rational_json(v));
  j["density"] = Json{{"breakpoints", breaks}, {"values", values}};
  if (!m.atoms.atoms.empty()) {
    Json atoms = Json::array();
    for (const auto& [loc, mass] : m.atoms.atoms) {
      atoms.push_back(Json{{"location", rational_json(loc)}, {"mass", rational_json(mass)}});
    }
    j["atoms"] = atoms;
  }
  return j;
}

inline Rect2DMeasure measure2d_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("x_breakpoints") || !j.contains("y_breakpoints") ||
      !j.contains("cell_values")) {
    throw ScenarioError(where +
                        ": 2-D measure needs \"x_breakpoints\", \"y_breakpoints\" and "
                        "\"cell_values\"");
  }
  Rect2DMeasure m;
  m.x_breakpoints = rational_array(j.at("x_breakpoints"), where + ".x_breakpoints");
  m.y_breakpoints = rational_array(j.at("y_breakpoints"), where + ".y_breakpoints");
  const Json& rows = j.at("cell_values");
  if (!rows.is_array()) throw ScenarioError(where + ".cell_values: expected an array of rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m.cell_values.push_back(
        rational_array(rows[i], where + ".cell_values[" + std::to_string(i) + "]"));
  }
  try {
    m.validate();
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(where + ": " + e.what());
  }
  return m;
}

inline Json measure2d_to_json(const Rect2DMeasure& m) {
  Json j;
  Json xs = Json::array();
  for (const auto& b : m.x_breakpoints) xs.push_back(rational_json(b));
  Json ys = Json::array();
  for (const auto& b : m.y_breakpoints) ys.push_back(rational_json(b));
  Json rows = Json::array();
  for (const auto& row : m.cell_values) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(rational_json(v));
    rows.push_back(r);
  }
  j["x_breakpoints"] = xs;
  j["y_breakpoints"] = ys;
  j["cell_values"] = rows;
  return j;
}

inline Axis axis_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() == "X") return Axis::X;
    if (j.get<std::string>() == "Y") return Axis::Y;
  }
  throw ScenarioError(where + ": axis must be \"X\" or \"Y\"");
}

inline IntervalSet portion_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ScenarioError(where + ": portion must be an object");
  std::vector<Interval> pieces;
  if (j.contains("pieces")) {
    const Json& arr = j.at("pieces");
    if (!arr.is_array()) throw ScenarioError(where + ".pieces: expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string at = where + ".pieces[" + std::to_string(i) + "]";
      if (!arr[i].is_array() || arr[i].size() != 2) {
        throw ScenarioError(at + ": piece must be a [lo, hi] pair");
      }
      pieces.push_back(Interval{rational_field(arr[i][0], at + "[0]"),
                                rational_field(arr[i][1], at + "[1]")});
    }
  }
  try {
    if (j.contains("atoms")) {
      std::set<Rational> atoms;
      for (const auto& loc : rational_array(j.at("atoms"), where + ".atoms")) {
        atoms.insert(loc);
      }
      return IntervalSet::of(std::move(pieces), std::move(atoms));
    }
    return IntervalSet::of(std::move(pieces));
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(where + ": " + e.what());
  }
}

inline Json portion_to_json(const IntervalSet& s) {
  Json j;
  Json pieces = Json::array();
  for (const auto& piece : s.pieces()) {
    pieces.push_back(Json::array({rational_json(piece.lo), rational_json(piece.hi)}));
  }
  j["pieces"] = pieces;
  if (s.has_explicit_atoms()) {
    Json atoms = Json::array();
    for (const auto& loc : s.explicit_atoms()) atoms.push_back(rational_json(loc));
    j["atoms"] = atoms;
  }
  return j;
}

inline Json allocation_to_json(const Allocation& a) {
  Json arr = Json::array();
  for (const auto& portion : a.portions) arr.push_back(portion_to_json(portion));
  return arr;
}

}  // namespace detail

/// Parses and validates a scenario document. Throws ScenarioError with the
/// position (syntax) or the offending field (validation).
inline Scenario parse_scenario(const std::string& text) {
  detail::Json doc;
  try {
    doc = detail::Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ScenarioError(std::string("syntax error: ") + e.what());
  }
  if (!doc.is_object()) throw ScenarioError("scenario must be a JSON object");

  Scenario s;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw ScenarioError("name: expected a string");
    s.name = doc.at("name").get<std::string>();
  }

  if (!doc.contains("players") || !doc.at("players").is_array()) {
    throw ScenarioError("scenario needs a \"players\" array");
  }
  const detail::Json& players = doc.at("players");
  if (players.size() < 2) throw ScenarioError("scenario needs at least 2 players");
  for (std::size_t i = 0; i < players.size(); ++i) {
    const std::string where = "players[" + std::to_string(i) + "]";
    const detail::Json& pj = players[i];
    if (!pj.is_object()) throw ScenarioError(where + ": expected an object");
    ScenarioPlayer player;
    player.name = pj.contains("name") ? pj.at("name").get<std::string>()
                                      : "player " + std::to_string(i + 1);
    const std::string label = where + " (" + player.name + ")";
    if (pj.contains("measure") == pj.contains("measure_2d")) {
      throw ScenarioError(label + ": give exactly one of \"measure\" or \"measure_2d\"");
    }
    if (pj.contains("measure")) {
      player.measure = detail::measure_from_json(pj.at("measure"), label + ".measure");
    } else {
      player.measure = detail::measure2d_from_json(pj.at("measure_2d"), label + ".measure_2d");
    }
    s.players.push_back(std::move(player));
  }
  const bool two_d = s.players.front().is_2d();
  for (std::size_t i = 1; i < s.players.size(); ++i) {
    if (s.players[i].is_2d() != two_d) {
      throw ScenarioError("players must all be 1-D or all 2-D");
    }
  }

  if (doc.contains("axes")) {
    if (!two_d) throw ScenarioError("axes: only 2-D scenarios declare projection axes");
    const detail::Json& axes = doc.at("axes");
    if (!axes.is_array() || axes.empty()) throw ScenarioError("axes: expected a nonempty array");
    for (std::size_t i = 0; i < axes.size(); ++i) {
      const Axis axis = detail::axis_from_json(axes[i], "axes[" + std::to_string(i) + "]");
      if (std::find(s.axes.begin(), s.axes.end(), axis) != s.axes.end()) {
        throw ScenarioError("axes: duplicate axis " + to_string(axis));
      }
      s.axes.push_back(axis);
    }
  } else if (two_d) {
    throw ScenarioError("2-D scenarios must declare \"axes\"");
  }

  if (doc.contains("procedure")) {
    const detail::Json& pj = doc.at("procedure");
    if (!pj.is_string()) throw ScenarioError("procedure: expected a string");
    const std::string name = pj.get<std::string>();
    if (name == "cut-and-choose") {
      s.procedure = ScenarioProcedure::CutAndChoose;
    } else if (name == "sp") {
      s.procedure = ScenarioProcedure::Surplus;
    } else if (name == "ep") {
      s.procedure = ScenarioProcedure::Equitability;
    } else if (name == "ep-best-order") {
      s.procedure = ScenarioProcedure::BestOrder;
    } else {
      throw ScenarioError("procedure: unknown procedure \"" + name + "\"");
    }
  }
  if ((s.procedure == ScenarioProcedure::CutAndChoose ||
       s.procedure == ScenarioProcedure::Surplus) &&
      s.players.size() != 2) {
    throw ScenarioError(to_string(s.procedure) + " needs exactly 2 players");
  }

  if (doc.contains("ep_order")) {
    if (s.procedure != ScenarioProcedure::Equitability) {
      throw ScenarioError("ep_order: only valid with procedure \"ep\"");
    }
    const detail::Json& oj = doc.at("ep_order");
    if (!oj.is_array() || oj.size() != s.players.size()) {
      throw ScenarioError("ep_order: expected one (1-based) player index per player");
    }
    for (const auto& e : oj) {
      if (!e.is_number_integer()) throw ScenarioError("ep_order: indices must be integers");
      s.ep_order.push_back(e.get<int>() - 1);
    }
    std::vector<int> sorted = s.ep_order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != static_cast<int>(i)) {
        throw ScenarioError("ep_order: must be a permutation of 1.." +
                            std::to_string(s.players.size()));
      }
    }
  }

  if (doc.contains("checks")) {
    const detail::Json& cj = doc.at("checks");
    if (!cj.is_array()) throw ScenarioError("checks: expected an array");
    for (const auto& c : cj) {
      if (!c.is_string()) throw ScenarioError("checks: entries must be strings");
      const std::string name = c.get<std::string>();
      const auto& known = detail::known_checks();
      if (std::find(known.begin(), known.end(), name) == known.end()) {
        throw ScenarioError("checks: unknown check \"" + name + "\"");
      }
      if (std::find(s.checks.begin(), s.checks.end(), name) == s.checks.end()) {
        s.checks.push_back(name);
      }
    }
    // Fixed report order, independent of the order in the file.
    std::sort(s.checks.begin(), s.checks.end(), [](const auto& a, const auto& b) {
      const auto& known = detail::known_checks();
      return std::find(known.begin(), known.end(), a) < std::find(known.begin(), known.end(), b);
    });
  }

  if (doc.contains("baseline_allocation")) {
    const detail::Json& bj = doc.at("baseline_allocation");
    if (!bj.is_object() || !bj.contains("portions") || !bj.at("portions").is_array()) {
      throw ScenarioError("baseline_allocation: needs a \"portions\" array");
    }
    BaselineAllocation baseline;
    if (two_d) {
      if (!bj.contains("axis")) {
        throw ScenarioError("baseline_allocation: 2-D scenarios must declare its axis");
      }
      baseline.axis = detail::axis_from_json(bj.at("axis"), "baseline_allocation.axis");
    } else if (bj.contains("axis")) {
      throw ScenarioError("baseline_allocation: axis is only for 2-D scenarios");
    }
    const detail::Json& portions = bj.at("portions");
    if (portions.size() != s.players.size()) {
      throw ScenarioError("baseline_allocation: needs one portion per player");
    }
    for (std::size_t i = 0; i < portions.size(); ++i) {
      baseline.allocation.portions.push_back(detail::portion_from_json(
          portions[i], "baseline_allocation.portions[" + std::to_string(i) + "]"));
    }
    const std::vector<ValueMeasure> ms =
        two_d ? s.projected_measures(*baseline.axis) : s.interval_measures();
    if (!allocation_is_partition(baseline.allocation, ms)) {
      throw ScenarioError("baseline_allocation: portions do not partition the cake "
                          "(pieces must tile [0,1] and own each atom exactly once)");
    }
    s.baseline = std::move(baseline);
  }

  if (s.procedure == ScenarioProcedure::None && !s.baseline) {
    throw ScenarioError("scenario needs a \"procedure\" or a \"baseline_allocation\"");
  }
  return s;
}

inline std::string serialize_scenario(const Scenario& s) {
  detail::Json doc;
  if (!s.name.empty()) doc["name"] = s.name;
  detail::Json players = detail::Json::array();
  for (const auto& p : s.players) {
    detail::Json pj;
    pj["name"] = p.name;
    if (p.is_2d()) {
      pj["measure_2d"] = detail::measure2d_to_json(std::get<Rect2DMeasure>(p.measure));
    } else {
      pj["measure"] = detail::measure_to_json(std::get<ValueMeasure>(p.measure));
    }
    players.push_back(pj);
  }
  doc["players"] = players;
  if (!s.axes.empty()) {
    detail::Json axes = detail::Json::array();
    for (const auto& axis : s.axes) axes.push_back(to_string(axis));
    doc["axes"] = axes;
  }
  if (s.procedure != ScenarioProcedure::None) doc["procedure"] = to_string(s.procedure);
  if (!s.ep_order.empty()) {
    detail::Json order = detail::Json::array();
    for (int p : s.ep_order) order.push_back(p + 1);
    doc["ep_order"] = order;
  }
  if (!s.checks.empty()) doc["checks"] = s.checks;
  if (s.baseline) {
    detail::Json bj;
    if (s.baseline->axis) bj["axis"] = to_string(*s.baseline->axis);
    bj["portions"] = detail::allocation_to_json(s.baseline->allocation);
    doc["baseline_allocation"] = bj;
  }
  return doc.dump(2) + "\n";
}

/// The three pinned counterexample scenarios.
inline Scenario builtin_counterexample(int id) {
  Scenario s;
  switch (id) {
    case 1: {
      s.name = "counterexample-1";
      Rect2DMeasure top{{Rational(0), Rational(1)},
                        {Rational(0), Rational(1, 2), Rational(1)},
                        {{Rational(0), Rational(2)}}};
      Rect2DMeasure bottom{{Rational(0), Rational(1)},
                           {Rational(0), Rational(1, 2), Rational(1)},
                           {{Rational(2), Rational(0)}}};
      s.players.push_back({"player 1", top});
      s.players.push_back({"player 2", bottom});
      s.axes = {Axis::X, Axis::Y};
      s.procedure = ScenarioProcedure::CutAndChoose;
      s.checks = {"pareto"};
      BaselineAllocation baseline;
      baseline.axis = Axis::Y;
      baseline.allocation.portions = {
          IntervalSet::of({Interval{Rational(1, 2), Rational(1)}}),
          IntervalSet::of({Interval{Rational(0), Rational(1, 2)}})};
      s.baseline = baseline;
      return s;
    }
    case 2: {
      s.name = "counterexample-2";
      s.players.push_back({"player 1", uniform_measure()});
      s.players.push_back(
          {"player 2",
           measure_from_density({Rational(0), Rational(1, 4), Rational(3, 4), Rational(1)},
                                {Rational(2), Rational(0), Rational(2)})});
      s.procedure = ScenarioProcedure::CutAndChoose;
      s.checks = {"pareto", "pareto-contiguous"};
      return s;
    }
    case 3: {
      s.name = "counterexample-3";
      s.players.push_back({"player 1", uniform_measure()});
      s.players.push_back({"player 2", uniform_measure()});
      s.procedure = ScenarioProcedure::Surplus;
      s.checks = {"strategy-floor"};
      return s;
    }
    default:
      throw ScenarioError("unknown counterexample id " + std::to_string(id) +
                          " (valid: 1, 2, 3)");
  }
}

}  // namespace cakecut

#endif  // CAKECUT_SCENARIO_HPP
