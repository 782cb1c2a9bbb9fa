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
#ifndef CAKECUT_EFFICIENCY_HPP
#define CAKECUT_EFFICIENCY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cakecut/measure.hpp"
#include "cakecut/procedures.hpp"
#include "cakecut/rational.hpp"
#include "cakecut/simplex.hpp"

namespace cakecut {

/// An allocation expressed over a common refinement: per cell, the fraction
/// each player receives (rows sum to 1); atoms are indivisible and owned
/// outright. Utilities depend only on these fractions because densities are
/// constant per cell.
struct FractionAllocation {
  std::vector<std::vector<Rational>> cell_fractions;  // [cell][player]
  std::map<Rational, int> atom_owner;                 // location -> player
};

/// Witness that an allocation is not Pareto optimal: an alternative whose
/// utility vector weakly dominates with at least one strict improvement.
struct DominanceCertificate {
  FractionAllocation alternative_fractions;
  Allocation alternative;
  std::vector<Rational> utilities_before;
  std::vector<Rational> utilities_after;
  std::vector<Rational> improvements;  // componentwise >= 0, some > 0
  // Set when the witness is itself contiguous (n-1 cuts).
  std::optional<std::vector<Rational>> contiguous_cuts;
  std::optional<std::vector<int>> contiguous_order;  // piece k -> player
};

inline std::vector<Rational> utilities(const Allocation& a, std::span<const ValueMeasure> ms) {
  if (a.portions.size() != ms.size()) {
    throw std::invalid_argument("allocation has " + std::to_string(a.portions.size()) +
                                " portions for " + std::to_string(ms.size()) + " players");
  }
  std::vector<Rational> u;
  u.reserve(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    u.push_back(value(ms[i], a.portions[i]));
  }
  return u;
}

namespace detail {

/// Realizes per-cell fractions as concrete intervals, splitting every cell
/// left-to-right in player order, with explicit atom ownership.
inline Allocation realize_fractions(const RefinementCells& cells,
                                    const FractionAllocation& fractions,
                                    std::size_t player_count) {
  std::vector<std::vector<Interval>> pieces(player_count);
  for (std::size_t j = 0; j < cells.cell_count(); ++j) {
    Rational pos = cells.grid[j];
    for (std::size_t i = 0; i < player_count; ++i) {
      const Rational& frac = fractions.cell_fractions[j][i];
      if (frac > 0) {
        const Rational next = pos + frac * cells.cell_length(j);
        pieces[i].push_back(Interval{pos, next});
        pos = next;
      }
    }
  }
  Allocation out;
  out.portions.resize(player_count);
  std::vector<std::set<Rational>> atoms(player_count);
  for (const auto& [loc, owner] : fractions.atom_owner) {
    atoms[owner].insert(loc);
  }
  for (std::size_t i = 0; i < player_count; ++i) {
    out.portions[i] = IntervalSet::of(std::move(pieces[i]), std::move(atoms[i]));
  }
  return out;
}

}  // namespace detail

/// Searches for an allocation whose utilities weakly dominate `baseline`
/// with at least one strict improvement, over all divisions of the common
/// refinement cells and all assignments of the (indivisible) atoms. For each
/// atom assignment this is one exact LP: maximize the total improvement
/// subject to u_i >= baseline_i + eps_i; the optimum is positive iff a
/// dominating allocation exists. Guarded to at most 4096 atom assignments.
inline std::optional<DominanceCertificate> find_dominating(
    std::span<const ValueMeasure> ms, const std::vector<Rational>& baseline) {
  const std::size_t n = ms.size();
  if (baseline.size() != n) throw std::invalid_argument("baseline size mismatch");
  const RefinementCells cells = common_refinement(ms);
  const std::size_t cell_count = cells.cell_count();
  const std::size_t atom_count = cells.atom_locations.size();

  std::size_t combos = 1;
  for (std::size_t a = 0; a < atom_count; ++a) {
    combos *= n;
    if (combos > 4096) {
      throw std::invalid_argument("too many atom assignments to enumerate (> 4096)");
    }
  }

  struct Candidate {
    Rational total;
    std::vector<int> owners;
    std::vector<Rational> x;
  };
  std::optional<Candidate> best;

  for (std::size_t combo = 0; combo < combos; ++combo) {
    std::vector<int> owners(atom_count, 0);
    std::size_t rem = combo;
    for (std::size_t a = atom_count; a-- > 0;) {
      owners[a] = static_cast<int>(rem % n);
      rem /= n;
    }
    std::vector<Rational> atom_base(n, Rational(0));
    for (std::size_t a = 0; a < atom_count; ++a) {
      atom_base[owners[a]] += cells.atom_masses[owners[a]][a];
    }

    LpProblem<Rational> lp;
    for (std::size_t j = 0; j < cell_count; ++j) {
      for (std::size_t i = 0; i < n; ++i) lp.add_variable(Rational(0));
    }
    for (std::size_t i = 0; i < n; ++i) lp.add_variable(Rational(1));  // eps_i
    for (std::size_t j = 0; j < cell_count; ++j) {
      std::vector<Rational> row(lp.var_count, Rational(0));
      for (std::size_t i = 0; i < n; ++i) row[j * n + i] = 1;
      lp.add_row(std::move(row), LpRelation::Equal, Rational(1));
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> row(lp.var_count, Rational(0));
      for (std::size_t j = 0; j < cell_count; ++j) {
        row[j * n + i] = cells.cell_value(i, j);
      }
      row[cell_count * n + i] = -1;
      lp.add_row(std::move(row), LpRelation::GreaterEq, baseline[i] - atom_base[i]);
    }

    const LpSolution<Rational> sol = maximize(lp);
    if (sol.status == LpStatus::Optimal && sol.objective > 0) {
      if (!best || sol.objective > best->total) {
        best = Candidate{sol.objective, owners, sol.values};
      }
    }
  }

  if (!best) return std::nullopt;

  DominanceCertificate cert;
  cert.alternative_fractions.cell_fractions.assign(cell_count, std::vector<Rational>(n));
  for (std::size_t j = 0; j < cell_count; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      cert.alternative_fractions.cell_fractions[j][i] = best->x[j * n + i];
    }
  }
  for (std::size_t a = 0; a < atom_count; ++a) {
    cert.alternative_fractions.atom_owner[cells.atom_locations[a]] = best->owners[a];
  }
  cert.alternative = detail::realize_fractions(cells, cert.alternative_fractions, n);
  cert.utilities_before = baseline;
  cert.utilities_after = utilities(cert.alternative, ms);
  cert.improvements.reserve(n);
  bool strict = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational gain = cert.utilities_after[i] - cert.utilities_before[i];
    if (gain < 0) throw std::logic_error("dominance certificate lost utility on realization");
    if (gain > 0) strict = true;
    cert.improvements.push_back(gain);
  }
  if (!strict) throw std::logic_error("dominance certificate has no strict improvement");
  return cert;
}

inline std::optional<DominanceCertificate> find_dominating(const Allocation& a,
                                                           std::span<const ValueMeasure> ms) {
  return find_dominating(ms, utilities(a, ms));
}

namespace detail {

// One branch of the contiguous search: each cut is either pinned at a grid
// point (state 2j, x = grid[j]) or ranges over the closure of cell j
// (state 2j+1). States are nondecreasing across cuts. Within a branch all
// utilities are affine in the interior cuts, except that the owner of an
// atom at a branch's open left cell boundary is asserted structurally; a
// solution landing exactly on such a boundary is re-checked and, if needed,
// re-solved strictly inside (boundary optima are covered by pinned states).
struct ContiguousCandidate {
  Rational total;
  std::vector<Rational> cuts;
  std::vector<int> order;
  Allocation allocation;
  std::vector<Rational> utilities_after;
};

inline bool candidate_preferred(const ContiguousCandidate& a, const ContiguousCandidate& b) {
  if (a.total != b.total) return a.total > b.total;
  if (a.cuts != b.cuts) {
    return std::lexicographical_compare(a.cuts.begin(), a.cuts.end(), b.cuts.begin(),
                                        b.cuts.end());
  }
  return std::lexicographical_compare(a.order.begin(), a.order.end(), b.order.begin(),
                                      b.order.end());
}

}  // namespace detail

/// Dominance search restricted to contiguous allocations: n-1 cuts plus a
/// permutation assigning the pieces. Exact search over the permutations and
/// the piecewise-linear cells of the cut space, one small LP per branch.
/// Guarded to n <= 5 players.
inline std::optional<DominanceCertificate> find_dominating_contiguous(
    std::span<const ValueMeasure> ms, const std::vector<Rational>& baseline) {
  const std::size_t n = ms.size();
  if (baseline.size() != n) throw std::invalid_argument("baseline size mismatch");
  if (n < 2) throw std::invalid_argument("contiguous search needs at least 2 players");
  if (n > 5) throw std::invalid_argument("contiguous search is guarded to at most 5 players");
  const RefinementCells cells = common_refinement(ms);
  const std::size_t cut_count = n - 1;
  const std::size_t state_count = 2 * cells.cell_count() + 1;

  // Density-only cumulative per measure at grid points.
  std::vector<std::vector<Rational>> dens_cum(n, std::vector<Rational>(cells.grid.size()));
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t j = 0; j + 1 < cells.grid.size(); ++j) {
      dens_cum[m][j + 1] = dens_cum[m][j] + cells.cell_value(m, j);
    }
  }

  std::optional<detail::ContiguousCandidate> best;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> states(cut_count, 0);

  auto try_branch = [&](const std::vector<int>& pi, const std::vector<std::size_t>& st) {
    // Interior cuts get one LP variable each (offset within their cell).
    std::vector<int> var_of_cut(cut_count, -1);
    LpProblem<Rational> lp;
    for (std::size_t k = 0; k < cut_count; ++k) {
      if (st[k] % 2 == 1) var_of_cut[k] = static_cast<int>(lp.add_variable(Rational(0)));
    }
    std::vector<std::size_t> eps_var(n);
    for (std::size_t i = 0; i < n; ++i) eps_var[i] = lp.add_variable(Rational(1));

    auto cut_cell = [&](std::size_t k) { return (st[k] - 1) / 2; };
    // x_k as (constant, coefficient on its variable).
    auto cut_const = [&](std::size_t k) -> Rational {
      return st[k] % 2 == 0 ? cells.grid[st[k] / 2] : cells.grid[cut_cell(k)];
    };

    for (std::size_t k = 0; k < cut_count; ++k) {
      if (var_of_cut[k] < 0) continue;
      std::vector<Rational> row(lp.var_count, Rational(0));
      row[var_of_cut[k]] = 1;
      lp.add_row(row, LpRelation::LessEq, cells.cell_length(cut_cell(k)));
      if (k + 1 < cut_count && st[k + 1] == st[k]) {
        std::vector<Rational> ord(lp.var_count, Rational(0));
        ord[var_of_cut[k]] = 1;
        ord[var_of_cut[k + 1]] = -1;
        lp.add_row(std::move(ord), LpRelation::LessEq, Rational(0));
      }
    }

    // Structural atom owners: piece owning atom p = min{k : x_k > p}.
    auto structurally_right_of = [&](std::size_t k, std::size_t grid_idx) {
      // whether cut k satisfies x_k > grid[grid_idx] throughout the branch
      return st[k] >= 2 * grid_idx + 1;
    };
    // piece_atoms[k][m]: atom mass of measure m inside piece k.
    std::vector<std::vector<Rational>> piece_atoms(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t a = 0; a < cells.atom_locations.size(); ++a) {
      std::size_t grid_idx = 0;
      while (cells.grid[grid_idx] != cells.atom_locations[a]) ++grid_idx;
      std::size_t piece = cut_count;  // defaults to the last piece
      for (std::size_t k = 0; k < cut_count; ++k) {
        if (structurally_right_of(k, grid_idx)) {
          piece = k;
          break;
        }
      }
      for (std::size_t m = 0; m < n; ++m) {
        piece_atoms[piece][m] += cells.atom_masses[m][a];
      }
    }

    // Domination rows: U_{pi(k)} - eps_{pi(k)} >= baseline.
    for (std::size_t k = 0; k < n; ++k) {
      const int player = pi[k];
      std::vector<Rational> row(lp.var_count, Rational(0));
      Rational constant = piece_atoms[k][player];
      // Right end of piece k.
      if (k < cut_count) {
        constant += dens_cum[player][st[k] % 2 == 0 ? st[k] / 2 : cut_cell(k)];
        if (var_of_cut[k] >= 0) {
          row[var_of_cut[k]] += cells.densities[player][cut_cell(k)];
        }
      } else {
        constant += dens_cum[player].back();
      }
      // Left end of piece k.
      if (k > 0) {
        constant -= dens_cum[player][st[k - 1] % 2 == 0 ? st[k - 1] / 2 : cut_cell(k - 1)];
        if (var_of_cut[k - 1] >= 0) {
          row[var_of_cut[k - 1]] -= cells.densities[player][cut_cell(k - 1)];
        }
      }
      row[eps_var[player]] = -1;
      lp.add_row(std::move(row), LpRelation::GreaterEq, baseline[player] - constant);
    }

    auto extract_cuts = [&](const std::vector<Rational>& x) {
      std::vector<Rational> cuts;
      cuts.reserve(cut_count);
      for (std::size_t k = 0; k < cut_count; ++k) {
        Rational c = cut_const(k);
        if (var_of_cut[k] >= 0) c += x[var_of_cut[k]];
        cuts.push_back(c);
      }
      return cuts;
    };

    auto accept = [&](const std::vector<Rational>& cuts) -> bool {
      const Allocation alloc = contiguous_allocation(cuts, pi);
      const std::vector<Rational> after = utilities(alloc, ms);
      Rational total(0);
      bool strict = false;
      for (std::size_t i = 0; i < n; ++i) {
        const Rational gain = after[i] - baseline[i];
        if (gain < 0) return false;
        if (gain > 0) strict = true;
        total += gain;
      }
      if (!strict) return false;
      detail::ContiguousCandidate cand{total, cuts, pi, alloc, after};
      if (!best || detail::candidate_preferred(cand, *best)) best = std::move(cand);
      return true;
    };

    const LpSolution<Rational> sol = maximize(lp);
    if (sol.status != LpStatus::Optimal || !(sol.objective > 0)) return;
    if (accept(extract_cuts(sol.values))) return;

    // The optimum landed on an atom-carrying cell boundary that this branch
    // models as open. Look for a strictly interior solution of comparable
    // quality; if none exists, pinned branches cover the boundary cases.
    LpProblem<Rational> strict_lp = lp;
    const std::size_t slack = strict_lp.add_variable(Rational(1));
    for (auto& row : strict_lp.rows) row.coeffs.resize(strict_lp.var_count, Rational(0));
    for (std::size_t i = 0; i < n; ++i) strict_lp.objective[eps_var[i]] = 0;
    {
      std::vector<Rational> lower(strict_lp.var_count, Rational(0));
      for (std::size_t i = 0; i < n; ++i) lower[eps_var[i]] = 1;
      strict_lp.add_row(std::move(lower), LpRelation::GreaterEq, sol.objective / 2);
    }
    for (std::size_t k = 0; k < cut_count; ++k) {
      if (var_of_cut[k] < 0) continue;
      std::vector<Rational> row(strict_lp.var_count, Rational(0));
      row[var_of_cut[k]] = 1;
      row[slack] = -1;
      strict_lp.add_row(std::move(row), LpRelation::GreaterEq, Rational(0));
    }
    const LpSolution<Rational> strict_sol = maximize(strict_lp);
    if (strict_sol.status == LpStatus::Optimal && strict_sol.objective > 0) {
      accept(extract_cuts(strict_sol.values));
    }
  };

  do {
    // Enumerate nondecreasing state vectors with an odometer.
    std::fill(states.begin(), states.end(), 0);
    for (;;) {
      try_branch(order, states);
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
  } while (std::next_permutation(order.begin(), order.end()));

  if (!best) return std::nullopt;

  DominanceCertificate cert;
  cert.alternative = best->allocation;
  cert.utilities_before = baseline;
  cert.utilities_after = best->utilities_after;
  for (std::size_t i = 0; i < n; ++i) {
    cert.improvements.push_back(best->utilities_after[i] - baseline[i]);
  }
  cert.contiguous_cuts = best->cuts;
  cert.contiguous_order = best->order;
  // Fractions of each refinement cell, for the certificate's LP-style view.
  cert.alternative_fractions.cell_fractions.assign(cells.cell_count(),
                                                   std::vector<Rational>(n, Rational(0)));
  for (std::size_t j = 0; j < cells.cell_count(); ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      Rational overlap(0);
      for (const auto& piece : best->allocation.portions[i].pieces()) {
        const Rational lo = std::max(piece.lo, cells.grid[j]);
        const Rational hi = std::min(piece.hi, cells.grid[j + 1]);
        if (lo < hi) overlap += hi - lo;
      }
      cert.alternative_fractions.cell_fractions[j][i] = overlap / cells.cell_length(j);
    }
  }
  for (const auto& loc : cells.atom_locations) {
    for (std::size_t i = 0; i < n; ++i) {
      if (best->allocation.portions[i].owns_atom(loc)) {
        cert.alternative_fractions.atom_owner[loc] = static_cast<int>(i);
        break;
      }
    }
  }
  return cert;
}

inline std::optional<DominanceCertificate> find_dominating_contiguous(
    const Allocation& a, std::span<const ValueMeasure> ms) {
  return find_dominating_contiguous(ms, utilities(a, ms));
}

/// Two-player frontier oracle for atom-free measures: assigns every
/// refinement cell to the player with the larger weighted density (even
/// split on ties) and returns the maximizer of w . u over all fraction
/// allocations, together with its utilities.
inline std::pair<FractionAllocation, std::vector<Rational>> weighted_optimal(
    const ValueMeasure& m1, const ValueMeasure& m2, const Rational& w1, const Rational& w2) {
  if (w1 < 0 || w2 < 0 || (w1 == 0 && w2 == 0)) {
    throw std::invalid_argument("weights must be nonnegative and not both zero");
  }
  if (!m1.atoms.atoms.empty() || !m2.atoms.atoms.empty()) {
    throw std::invalid_argument("weighted_optimal is restricted to atom-free measures");
  }
  const ValueMeasure pair_ms[] = {m1, m2};
  const RefinementCells cells = common_refinement(pair_ms);
  FractionAllocation fa;
  fa.cell_fractions.assign(cells.cell_count(), std::vector<Rational>(2));
  std::vector<Rational> u(2, Rational(0));
  for (std::size_t j = 0; j < cells.cell_count(); ++j) {
    const Rational score1 = w1 * cells.densities[0][j];
    const Rational score2 = w2 * cells.densities[1][j];
    Rational f1;
    if (score1 > score2) {
      f1 = 1;
    } else if (score1 < score2) {
      f1 = 0;
    } else {
      f1 = Rational(1, 2);
    }
    fa.cell_fractions[j][0] = f1;
    fa.cell_fractions[j][1] = 1 - f1;
    u[0] += f1 * cells.cell_value(0, j);
    u[1] += (1 - f1) * cells.cell_value(1, j);
  }
  return {fa, u};
}

}  // namespace cakecut

#endif  // CAKECUT_EFFICIENCY_HPP
