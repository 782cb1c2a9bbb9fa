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
#ifndef CAKECUT_PROPERTIES_HPP
#define CAKECUT_PROPERTIES_HPP

#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cakecut/efficiency.hpp"
#include "cakecut/measure.hpp"
#include "cakecut/procedures.hpp"
#include "cakecut/rational.hpp"
#include "cakecut/simplex.hpp"

namespace cakecut {

/// Fairness of a complete allocation under the players' own measures:
/// proportional (everyone gets >= 1/n), envy-free (nobody prefers another's
/// portion), equitable (everyone values its own portion the same).
struct FairnessReport {
  std::vector<std::vector<Rational>> valuations;  // valuations[i][j] = u_i(portion j)
  bool proportional = true;
  bool envy_free = true;
  bool equitable = true;
  std::optional<int> proportional_witness;           // first player below 1/n
  std::optional<std::pair<int, int>> envy_witness;   // (envier, envied)
  std::optional<std::pair<int, int>> equity_witness; // unequal own-values
};

inline FairnessReport check_fairness(const Allocation& a, std::span<const ValueMeasure> ms) {
  const std::size_t n = ms.size();
  if (a.portions.size() != n) throw std::invalid_argument("allocation/player count mismatch");
  FairnessReport report;
  report.valuations.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      report.valuations[i][j] = value(ms[i], a.portions[j]);
    }
  }
  const Rational share = Rational(1) / static_cast<int>(n);
  for (std::size_t i = 0; i < n && report.proportional; ++i) {
    if (report.valuations[i][i] < share) {
      report.proportional = false;
      report.proportional_witness = static_cast<int>(i);
    }
  }
  for (std::size_t i = 0; i < n && report.envy_free; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (report.valuations[i][j] > report.valuations[i][i]) {
        report.envy_free = false;
        report.envy_witness = {static_cast<int>(i), static_cast<int>(j)};
        break;
      }
    }
  }
  for (std::size_t i = 1; i < n && report.equitable; ++i) {
    if (report.valuations[i][i] != report.valuations[0][0]) {
      report.equitable = false;
      report.equity_witness = {0, static_cast<int>(i)};
    }
  }
  return report;
}

enum class ProcedureKind { CutAndChoose, Surplus, Equitability };

inline std::string to_string(ProcedureKind kind) {
  switch (kind) {
    case ProcedureKind::CutAndChoose: return "cut-and-choose";
    case ProcedureKind::Surplus: return "sp";
    case ProcedureKind::Equitability: return "ep";
  }
  return "?";
}

/// Run a procedure on the reported measures and evaluate the resulting
/// allocation under the true ones.
struct StrategyOutcome {
  ProcedureKind procedure;
  std::vector<ValueMeasure> true_measures;
  std::vector<ValueMeasure> reported_measures;
  Allocation allocation;               // produced from the reports
  std::vector<Rational> true_payoffs;  // evaluated under the truths
};

namespace detail {

inline ProcResult<Allocation> run_procedure_allocation(ProcedureKind kind,
                                                       std::span<const ValueMeasure> ms,
                                                       const std::vector<int>& ep_order) {
  switch (kind) {
    case ProcedureKind::CutAndChoose: {
      if (ms.size() != 2) throw std::invalid_argument("cut-and-choose needs exactly 2 players");
      return cut_and_choose(ms[0], ms[1]).allocation;
    }
    case ProcedureKind::Surplus: {
      if (ms.size() != 2) throw std::invalid_argument("sp needs exactly 2 players");
      auto r = surplus_procedure(ms[0], ms[1]);
      if (!ok(r)) return error(r);
      return result(r).allocation;
    }
    case ProcedureKind::Equitability: {
      auto r = equitability_procedure(ms, ep_order);
      if (!ok(r)) return error(r);
      return result(r).allocation;
    }
  }
  throw std::logic_error("unknown procedure");
}

}  // namespace detail

inline ProcResult<StrategyOutcome> payoffs_under_reports(
    ProcedureKind kind, std::span<const ValueMeasure> true_ms,
    std::span<const ValueMeasure> reported_ms, std::vector<int> ep_order = {}) {
  if (true_ms.size() != reported_ms.size()) {
    throw std::invalid_argument("true/reported player counts differ");
  }
  if (ep_order.empty()) {
    ep_order.resize(true_ms.size());
    std::iota(ep_order.begin(), ep_order.end(), 0);
  }
  auto alloc = detail::run_procedure_allocation(kind, reported_ms, ep_order);
  if (!ok(alloc)) return error(alloc);
  StrategyOutcome out;
  out.procedure = kind;
  out.true_measures.assign(true_ms.begin(), true_ms.end());
  out.reported_measures.assign(reported_ms.begin(), reported_ms.end());
  out.allocation = result(alloc);
  out.true_payoffs = utilities(out.allocation, true_ms);
  return out;
}

/// The pigeonhole floor behind the strategy-proofness argument: when all n
/// players report the same measure, someone's portion is worth at most 1/n.
struct FloorResult {
  std::vector<Rational> payoffs;
  Rational min_payoff;
  Rational floor;  // 1/n
  bool holds;      // min_payoff <= floor
};

inline ProcResult<FloorResult> identical_reports_floor(ProcedureKind kind,
                                                       const ValueMeasure& m, int n) {
  if (n < 2) throw std::invalid_argument("floor check needs at least 2 players");
  const std::vector<ValueMeasure> reports(static_cast<std::size_t>(n), m);
  std::vector<int> order(reports.size());
  std::iota(order.begin(), order.end(), 0);
  auto alloc = detail::run_procedure_allocation(kind, reports, order);
  if (!ok(alloc)) return error(alloc);
  FloorResult out;
  out.payoffs = utilities(result(alloc), reports);
  out.min_payoff = *std::min_element(out.payoffs.begin(), out.payoffs.end());
  out.floor = Rational(1) / n;
  out.holds = out.min_payoff <= out.floor;
  return out;
}

/// Exact probe of the claim that moving all marks strictly rightward can
/// give every player an equal amount greater than 1/n, with pieces assigned
/// left-to-right by player index. Searches every piecewise-linear branch of
/// the cut space exactly; either returns a witness cut vector or an
/// exhaustion report with the per-branch trace.
struct ShiftProbeResult {
  std::vector<Rational> marks;
  Rational floor;  // 1/n
  bool witness_found = false;
  std::vector<Rational> witness_cuts;
  Rational witness_value;
  std::optional<Rational> best_equal_value;  // best equal value at or right of the marks
  std::vector<std::string> trace;            // one line per branch
};

inline ShiftProbeResult rightward_shift_probe(std::span<const ValueMeasure> ms,
                                              const std::vector<Rational>& marks) {
  const std::size_t n = ms.size();
  if (n < 2) throw std::invalid_argument("probe needs at least 2 players");
  if (n > 5) throw std::invalid_argument("probe is guarded to at most 5 players");
  if (marks.size() != n - 1) throw std::invalid_argument("marks must have n-1 entries");
  for (std::size_t k = 0; k < marks.size(); ++k) {
    if (marks[k] < 0 || marks[k] > 1 || (k > 0 && marks[k] < marks[k - 1])) {
      throw std::invalid_argument("marks must be a nondecreasing cut vector in [0,1]");
    }
  }

  const RefinementCells cells = common_refinement(ms);
  const std::size_t cut_count = n - 1;
  const std::size_t state_count = 2 * cells.cell_count() + 1;

  std::vector<std::vector<Rational>> dens_cum(n, std::vector<Rational>(cells.grid.size()));
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t j = 0; j + 1 < cells.grid.size(); ++j) {
      dens_cum[m][j + 1] = dens_cum[m][j] + cells.cell_value(m, j);
    }
  }

  ShiftProbeResult out;
  out.marks = marks;
  out.floor = Rational(1) / static_cast<int>(n);

  std::vector<std::size_t> states(cut_count, 0);
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);

  auto branch_label = [&](const std::vector<std::size_t>& st) {
    std::string label;
    for (std::size_t k = 0; k < cut_count; ++k) {
      if (k > 0) label += ", ";
      label += "x" + std::to_string(k + 1);
      if (st[k] % 2 == 0) {
        label += " = " + to_string(cells.grid[st[k] / 2]);
      } else {
        label += " in [" + to_string(cells.grid[(st[k] - 1) / 2]) + ", " +
                 to_string(cells.grid[(st[k] - 1) / 2 + 1]) + "]";
      }
    }
    return label;
  };

  auto try_branch = [&](const std::vector<std::size_t>& st) {
    // Pinned cuts must already sit at or right of their marks.
    for (std::size_t k = 0; k < cut_count; ++k) {
      if (st[k] % 2 == 0 && cells.grid[st[k] / 2] < marks[k]) {
        out.trace.push_back(branch_label(st) + ": below the marks");
        return;
      }
    }

    std::vector<int> var_of_cut(cut_count, -1);
    LpProblem<Rational> lp;
    for (std::size_t k = 0; k < cut_count; ++k) {
      if (st[k] % 2 == 1) var_of_cut[k] = static_cast<int>(lp.add_variable(Rational(0)));
    }
    const std::size_t t_var = lp.add_variable(Rational(1));  // stage 1: maximize t

    auto cut_cell = [&](std::size_t k) { return (st[k] - 1) / 2; };
    auto cut_const = [&](std::size_t k) -> Rational {
      return st[k] % 2 == 0 ? cells.grid[st[k] / 2] : cells.grid[cut_cell(k)];
    };

    for (std::size_t k = 0; k < cut_count; ++k) {
      if (var_of_cut[k] < 0) continue;
      std::vector<Rational> row(lp.var_count, Rational(0));
      row[var_of_cut[k]] = 1;
      lp.add_row(row, LpRelation::LessEq, cells.cell_length(cut_cell(k)));
      std::vector<Rational> mark_row(lp.var_count, Rational(0));
      mark_row[var_of_cut[k]] = 1;
      lp.add_row(std::move(mark_row), LpRelation::GreaterEq, marks[k] - cut_const(k));
      if (k + 1 < cut_count && st[k + 1] == st[k]) {
        std::vector<Rational> ord(lp.var_count, Rational(0));
        ord[var_of_cut[k]] = 1;
        ord[var_of_cut[k + 1]] = -1;
        lp.add_row(std::move(ord), LpRelation::LessEq, Rational(0));
      }
    }

    // Atom ownership, structural per branch (see the contiguous search).
    std::vector<std::vector<Rational>> piece_atoms(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t a = 0; a < cells.atom_locations.size(); ++a) {
      std::size_t grid_idx = 0;
      while (cells.grid[grid_idx] != cells.atom_locations[a]) ++grid_idx;
      std::size_t piece = cut_count;
      for (std::size_t k = 0; k < cut_count; ++k) {
        if (st[k] >= 2 * grid_idx + 1) {
          piece = k;
          break;
        }
      }
      for (std::size_t m = 0; m < n; ++m) piece_atoms[piece][m] += cells.atom_masses[m][a];
    }

    // Equal-value rows: U_k = t for every piece k (player k).
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Rational> row(lp.var_count, Rational(0));
      Rational constant = piece_atoms[k][k];
      if (k < cut_count) {
        constant += dens_cum[k][st[k] % 2 == 0 ? st[k] / 2 : cut_cell(k)];
        if (var_of_cut[k] >= 0) row[var_of_cut[k]] += cells.densities[k][cut_cell(k)];
      } else {
        constant += dens_cum[k].back();
      }
      if (k > 0) {
        constant -= dens_cum[k][st[k - 1] % 2 == 0 ? st[k - 1] / 2 : cut_cell(k - 1)];
        if (var_of_cut[k - 1] >= 0) row[var_of_cut[k - 1]] -= cells.densities[k][cut_cell(k - 1)];
      }
      row[t_var] = -1;
      lp.add_row(std::move(row), LpRelation::Equal, -constant);
    }

    const LpSolution<Rational> stage1 = maximize(lp);
    if (stage1.status != LpStatus::Optimal) {
      out.trace.push_back(branch_label(st) + ": no equal-value point at or right of the marks");
      return;
    }
    const Rational t_max = stage1.objective;
    if (!out.best_equal_value || t_max > *out.best_equal_value) out.best_equal_value = t_max;
    if (!(t_max > out.floor)) {
      out.trace.push_back(branch_label(st) + ": equal value at most " + to_string(t_max) +
                          " (needs > " + to_string(out.floor) + ")");
      return;
    }

    // Stage 2: demand strict movement (and a strict floor margin) by
    // maximizing the common slack s with x_k - s >= marks_k and t - s >= 1/n.
    LpProblem<Rational> strict = lp;
    strict.objective[t_var] = 0;
    const std::size_t s_var = strict.add_variable(Rational(1));
    for (auto& row : strict.rows) row.coeffs.resize(strict.var_count, Rational(0));
    {
      std::vector<Rational> row(strict.var_count, Rational(0));
      row[t_var] = 1;
      row[s_var] = -1;
      strict.add_row(std::move(row), LpRelation::GreaterEq, out.floor);
    }
    for (std::size_t k = 0; k < cut_count; ++k) {
      std::vector<Rational> row(strict.var_count, Rational(0));
      row[s_var] = -1;
      if (var_of_cut[k] >= 0) row[var_of_cut[k]] = 1;
      strict.add_row(std::move(row), LpRelation::GreaterEq, marks[k] - cut_const(k));
    }
    const LpSolution<Rational> stage2 = maximize(strict);
    if (stage2.status != LpStatus::Optimal || !(stage2.objective > 0)) {
      out.trace.push_back(branch_label(st) + ": equal value " + to_string(t_max) +
                          " only without strictly rightward cuts");
      return;
    }

    auto realize = [&](const std::vector<Rational>& x) -> bool {
      std::vector<Rational> cuts;
      for (std::size_t k = 0; k < cut_count; ++k) {
        Rational c = cut_const(k);
        if (var_of_cut[k] >= 0) c += x[var_of_cut[k]];
        cuts.push_back(c);
      }
      const Allocation alloc = contiguous_allocation(cuts, identity);
      const std::vector<Rational> u = utilities(alloc, ms);
      for (std::size_t k = 0; k < cut_count; ++k) {
        if (!(cuts[k] > marks[k])) return false;
      }
      for (std::size_t i = 1; i < n; ++i) {
        if (u[i] != u[0]) return false;
      }
      if (!(u[0] > out.floor)) return false;
      if (!out.witness_found || u[0] > out.witness_value ||
          (u[0] == out.witness_value &&
           std::lexicographical_compare(cuts.begin(), cuts.end(), out.witness_cuts.begin(),
                                        out.witness_cuts.end()))) {
        out.witness_found = true;
        out.witness_cuts = cuts;
        out.witness_value = u[0];
      }
      out.trace.push_back(branch_label(st) + ": witness with equal value " + to_string(u[0]));
      return true;
    };

    if (realize(stage2.values)) return;

    // Atom-corner mismatch: insist on strictly interior cuts as well.
    LpProblem<Rational> interior = strict;
    interior.objective[s_var] = 0;
    const std::size_t s2_var = interior.add_variable(Rational(1));
    for (auto& row : interior.rows) row.coeffs.resize(interior.var_count, Rational(0));
    {
      std::vector<Rational> row(interior.var_count, Rational(0));
      row[s_var] = 1;
      interior.add_row(std::move(row), LpRelation::GreaterEq, stage2.objective / 2);
    }
    for (std::size_t k = 0; k < cut_count; ++k) {
      if (var_of_cut[k] < 0) continue;
      std::vector<Rational> row(interior.var_count, Rational(0));
      row[var_of_cut[k]] = 1;
      row[s2_var] = -1;
      interior.add_row(std::move(row), LpRelation::GreaterEq, Rational(0));
    }
    const LpSolution<Rational> stage3 = maximize(interior);
    if (stage3.status == LpStatus::Optimal && stage3.objective > 0 && realize(stage3.values)) {
      return;
    }
    out.trace.push_back(branch_label(st) +
                        ": equal value crossing exists only on an atom boundary");
  };

  for (;;) {
    try_branch(states);
    bool advanced = false;
    for (std::size_t k = cut_count; k-- > 0;) {
      if (states[k] + 1 < state_count) {
        ++states[k];
        for (std::size_t k2 = k + 1; k2 < cut_count; ++k2) states[k2] = states[k];
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

}  // namespace cakecut

#endif  // CAKECUT_PROPERTIES_HPP
