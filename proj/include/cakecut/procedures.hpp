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
#ifndef CAKECUT_PROCEDURES_HPP
#define CAKECUT_PROCEDURES_HPP

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cakecut/detail/leftmost_sweep.hpp"
#include "cakecut/interval_set.hpp"
#include "cakecut/measure.hpp"
#include "cakecut/rational.hpp"

namespace cakecut {

/// A partition of the cake into per-player portions (indexed by player).
struct Allocation {
  std::vector<IntervalSet> portions;

  bool operator==(const Allocation& other) const = default;
};

/// Partition invariant: the pieces tile [0,1] and every atom of every
/// declared measure is owned by exactly one player.
inline bool allocation_is_partition(const Allocation& a, std::span<const ValueMeasure> ms) {
  if (!pieces_tile_cake(a.portions)) return false;
  for (const auto& m : ms) {
    for (const auto& [loc, mass] : m.atoms.atoms) {
      int owners = 0;
      for (const auto& portion : a.portions) {
        if (portion.owns_atom(loc)) ++owners;
      }
      if (owners != 1) return false;
    }
  }
  return true;
}

/// Builds the contiguous allocation with pieces [0,x_1), [x_1,x_2), ...,
/// [x_{m},1], assigning piece k to player order[k]. Atom ownership is
/// positional (an atom at a cut belongs to the piece on its right).
inline Allocation contiguous_allocation(const std::vector<Rational>& cuts,
                                        const std::vector<int>& order) {
  Allocation a;
  a.portions.assign(order.size(), IntervalSet{});
  Rational lo(0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Rational hi = k + 1 < order.size() ? cuts[k] : Rational(1);
    if (lo < hi) {
      a.portions[order[k]] = IntervalSet::of({Interval{lo, hi}});
    }
    lo = hi;
  }
  return a;
}

struct ProcedureError {
  enum class Kind { NonUniqueMedian, NoSolution, DegenerateSurplus };
  Kind kind;
  int player = -1;                       // NonUniqueMedian: offending player (0-based)
  std::optional<Interval> flat_interval; // NonUniqueMedian: the flat median set
  std::string diagnostic;

  std::string describe() const {
    switch (kind) {
      case Kind::NonUniqueMedian:
        return "player " + std::to_string(player + 1) + " does not have a unique median: the "
               "level-1/2 set is [" + to_string(flat_interval->lo) + ", " +
               to_string(flat_interval->hi) + "]";
      case Kind::NoSolution:
        return "no solution: " + diagnostic;
      case Kind::DegenerateSurplus:
        return "degenerate surplus: " + diagnostic;
    }
    return diagnostic;
  }
};

template <class T>
using ProcResult = std::variant<T, ProcedureError>;

template <class T>
bool ok(const ProcResult<T>& r) {
  return std::holds_alternative<T>(r);
}
template <class T>
const T& result(const ProcResult<T>& r) {
  return std::get<T>(r);
}
template <class T>
const ProcedureError& error(const ProcResult<T>& r) {
  return std::get<ProcedureError>(r);
}

struct CutAndChooseResult {
  Rational cut_point;
  int cutter_index = 0;
  int chooser_index = 1;
  bool chooser_took_left = false;
  QuantileResult cutter_median;
  Allocation allocation;  // portions[0] = cutter, portions[1] = chooser
  std::vector<Rational> payoffs;
  std::optional<ProcedureError> degeneracy;  // set when the median is an atom jump
};

/// "I cut, you choose" with a risk-averse (maximin) cutter: the cut point is
/// taken from the cutter's median set, so both pieces are worth exactly 1/2
/// to the cutter whenever that set contains no atom jump. A flat median set
/// is cut at its midpoint; an atom-jump median is cut at the jump (the atom
/// goes right under the piece convention) and flagged as degenerate. The
/// chooser takes the piece it values more, the left piece on ties.
inline CutAndChooseResult cut_and_choose(const ValueMeasure& cutter,
                                         const ValueMeasure& chooser) {
  CutAndChooseResult out;
  out.cutter_median = quantile(cutter, Rational(1, 2));
  switch (out.cutter_median.kind) {
    case QuantileResult::Kind::UniquePoint:
      out.cut_point = out.cutter_median.point;
      break;
    case QuantileResult::Kind::FlatInterval:
      out.cut_point = (out.cutter_median.point + out.cutter_median.hi) / 2;
      break;
    case QuantileResult::Kind::AtJump:
      out.cut_point = out.cutter_median.point;
      out.degeneracy = ProcedureError{
          ProcedureError::Kind::DegenerateSurplus, 0, std::nullopt,
          "cutter median sits on an atom at " + to_string(out.cut_point) +
              "; the cutter cannot equalize the two pieces"};
      break;
  }

  IntervalSet left = out.cut_point > 0
                         ? IntervalSet::of({Interval{Rational(0), out.cut_point}})
                         : IntervalSet{};
  IntervalSet right = out.cut_point < 1
                          ? IntervalSet::of({Interval{out.cut_point, Rational(1)}})
                          : IntervalSet{};
  const Rational chooser_left = value(chooser, left);
  const Rational chooser_right = value(chooser, right);
  out.chooser_took_left = chooser_left >= chooser_right;

  out.allocation.portions.resize(2);
  out.allocation.portions[0] = out.chooser_took_left ? right : left;
  out.allocation.portions[1] = out.chooser_took_left ? left : right;
  out.payoffs = {value(cutter, out.allocation.portions[0]),
                 value(chooser, out.allocation.portions[1])};
  return out;
}

struct SurplusResult {
  std::array<Rational, 2> medians;
  Rational surplus_lo, surplus_hi;  // [min median, max median]
  Rational cut;                     // the equitable surplus cut e
  int left_player = 0;              // receives [0, e)
  int right_player = 1;             // receives [e, 1]
  Allocation allocation;
  std::vector<Rational> payoffs;
  std::array<Rational, 2> surplus_proportions;  // 1 by convention for a
                                                // player valuing the surplus at 0
};

/// The surplus procedure for two players. Each player receives the cake up
/// to (from) its own median; the surplus between the medians is cut at the
/// point e giving both players the same proportion of their own value of the
/// surplus. Fails with NonUniqueMedian when a median set is a nondegenerate
/// interval, and with DegenerateSurplus when an atom inside the surplus
/// makes exact proportion equality unattainable.
inline ProcResult<SurplusResult> surplus_procedure(const ValueMeasure& f1,
                                                   const ValueMeasure& f2) {
  const ValueMeasure* ms[2] = {&f1, &f2};
  std::array<Rational, 2> medians;
  for (int i = 0; i < 2; ++i) {
    const QuantileResult q = quantile(*ms[i], Rational(1, 2));
    if (q.kind == QuantileResult::Kind::FlatInterval) {
      return ProcedureError{ProcedureError::Kind::NonUniqueMedian, i,
                            Interval{q.point, q.hi}, ""};
    }
    medians[i] = q.point;  // an atom-jump median acts as a unique point
  }

  SurplusResult out;
  out.medians = medians;
  out.left_player = medians[0] <= medians[1] ? 0 : 1;
  out.right_player = 1 - out.left_player;
  out.surplus_lo = medians[out.left_player];
  out.surplus_hi = medians[out.right_player];
  const ValueMeasure& left_m = *ms[out.left_player];
  const ValueMeasure& right_m = *ms[out.right_player];

  const Rational a = out.surplus_lo;
  const Rational b = out.surplus_hi;
  const Rational surplus_left = cdf_left(left_m, b) - cdf_left(left_m, a);
  const Rational surplus_right = cdf_left(right_m, b) - cdf_left(right_m, a);

  if (a == b) {
    out.cut = a;
  } else if (surplus_left == 0 && surplus_right == 0) {
    out.cut = (a + b) / 2;
  } else if (surplus_left == 0) {
    out.cut = a;  // the right player takes the whole surplus it values
  } else if (surplus_right == 0) {
    out.cut = b;
  } else {
    // phi(e) = vL([a,e)) * S_R - vR([e,b)) * S_L is nondecreasing with
    // phi(a) < 0 < phi(b); find its leftmost root on the refinement grid.
    const ValueMeasure pair[] = {left_m, right_m};
    const RefinementCells cells = common_refinement(pair);
    std::vector<Rational> grid{a};
    for (const auto& g : cells.grid) {
      if (a < g && g < b) grid.push_back(g);
    }
    grid.push_back(b);

    auto phi = [&](const Rational& e) {
      return (cdf_left(left_m, e) - cdf_left(left_m, a)) * surplus_right -
             (cdf_left(right_m, b) - cdf_left(right_m, e)) * surplus_left;
    };
    std::optional<Rational> root;
    for (std::size_t i = 0; i < grid.size() && !root; ++i) {
      const Rational at_point = phi(grid[i]);
      if (at_point == 0) {
        root = grid[i];
        break;
      }
      if (i + 1 == grid.size()) break;
      const Rational after_jump =
          at_point + left_m.atoms.mass_at(grid[i]) * surplus_right +
          right_m.atoms.mass_at(grid[i]) * surplus_left;
      const Rational len = grid[i + 1] - grid[i];
      const Rational slope = left_m.density.integral(grid[i], grid[i + 1]) / len * surplus_right +
                             right_m.density.integral(grid[i], grid[i + 1]) / len * surplus_left;
      if (after_jump > 0 || (after_jump == 0 && slope > 0)) {
        return ProcedureError{
            ProcedureError::Kind::DegenerateSurplus, -1, std::nullopt,
            "the surplus proportion equality has no exact solution: the balance jumps past "
            "zero at e = " + to_string(grid[i]) + " (atom inside the surplus)"};
      }
      if (slope > 0 && after_jump + slope * len >= 0) {
        root = grid[i] - after_jump / slope;
      }
    }
    if (!root) {
      throw std::logic_error("surplus balance never crossed zero");  // unreachable
    }
    out.cut = *root;
  }

  Allocation alloc;
  alloc.portions.resize(2);
  if (out.cut > 0) {
    alloc.portions[out.left_player] = IntervalSet::of({Interval{Rational(0), out.cut}});
  }
  if (out.cut < 1) {
    alloc.portions[out.right_player] = IntervalSet::of({Interval{out.cut, Rational(1)}});
  }
  out.allocation = alloc;
  out.payoffs = {value(f1, alloc.portions[0]), value(f2, alloc.portions[1])};

  const Rational got_left = cdf_left(left_m, out.cut) - cdf_left(left_m, a);
  const Rational got_right = cdf_left(right_m, b) - cdf_left(right_m, out.cut);
  std::array<Rational, 2> props;  // indexed by player
  props[out.left_player] = surplus_left > 0 ? got_left / surplus_left : Rational(1);
  props[out.right_player] = surplus_right > 0 ? got_right / surplus_right : Rational(1);
  out.surplus_proportions = props;
  return out;
}

struct EquitabilityResult {
  std::vector<int> order;      // order[k] = player receiving piece k (0-based)
  std::vector<Rational> cuts;  // x_1 <= ... <= x_{n-1}
  Rational common_value;
  Allocation allocation;
  std::vector<Rational> payoffs;  // all exactly equal to common_value
};

/// The equitability procedure: n-1 cuts assigning contiguous pieces
/// left-to-right in the given player order, every player valuing its own
/// piece at exactly the same t. Solved by the exact leftmost sweep; fails
/// with NoSolution when atoms make the residual skip zero or no t works.
inline ProcResult<EquitabilityResult> equitability_procedure(std::span<const ValueMeasure> ms,
                                                             const std::vector<int>& order) {
  const std::size_t n = ms.size();
  if (n < 2) throw std::invalid_argument("equitability needs at least 2 players");
  {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) {
      if (sorted.size() != n || sorted[i] != static_cast<int>(i)) {
        throw std::invalid_argument("order must be a permutation of the players");
      }
    }
  }
  std::vector<ValueMeasure> ordered;
  ordered.reserve(n);
  for (int p : order) ordered.push_back(ms[p]);

  const detail::EqualValueSweep sweep = detail::equal_value_sweep(ordered);
  if (!sweep.solved) {
    return ProcedureError{ProcedureError::Kind::NoSolution, -1, std::nullopt,
                          sweep.diagnostic};
  }

  EquitabilityResult out;
  out.order = order;
  out.cuts = sweep.cuts;
  out.common_value = sweep.common_value;
  out.allocation = contiguous_allocation(sweep.cuts, order);
  out.payoffs.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    out.payoffs[i] = value(ms[i], out.allocation.portions[i]);
    if (out.payoffs[i] != out.common_value) {
      throw std::logic_error("equitability sweep produced an unequal piece");
    }
  }
  return out;
}

/// Runs the equitability procedure over every player ordering and returns
/// the solvable result with the largest common value; ties go to the
/// lexicographically smallest ordering. Guarded to n <= 8.
inline ProcResult<EquitabilityResult> ep_best_order(std::span<const ValueMeasure> ms) {
  const std::size_t n = ms.size();
  if (n < 2) throw std::invalid_argument("equitability needs at least 2 players");
  if (n > 8) throw std::invalid_argument("ep_best_order is guarded to at most 8 players");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::optional<EquitabilityResult> best;
  do {
    auto attempt = equitability_procedure(ms, order);
    if (ok(attempt) && (!best || result(attempt).common_value > best->common_value)) {
      best = result(attempt);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  if (!best) {
    return ProcedureError{ProcedureError::Kind::NoSolution, -1, std::nullopt,
                          "no player ordering admits an equal-value contiguous division"};
  }
  return *best;
}

}  // namespace cakecut

#endif  // CAKECUT_PROCEDURES_HPP
