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
#ifndef CAKECUT_DETAIL_LEFTMOST_SWEEP_HPP
#define CAKECUT_DETAIL_LEFTMOST_SWEEP_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cakecut/measure.hpp"
#include "cakecut/rational.hpp"

namespace cakecut::detail {

// Machinery for the equal-value sweep: every cut x_k, viewed as a function of
// the candidate common value t, is monotone piecewise-linear with jumps
// (where a cut hops over a zero-density stretch) and holes in its domain
// (where an atom makes the exact piece value unattainable). Such functions
// are lists of affine segments over half-open t-intervals (t0, t1]. The point
// t = 0 needs no segment: all cuts sit at 0 there and the residual is 1, so
// an equality root always lies in (0, 1].

struct SweepSegment {
  Rational t0, t1;  // domain (t0, t1], t0 < t1
  Rational x0, x1;  // x(t) = x0 + (t - t0) * (x1 - x0) / (t1 - t0)

  Rational eval(const Rational& t) const {
    return x0 + (t - t0) * (x1 - x0) / (t1 - t0);
  }
};

/// A t-interval (t_lo, t_hi] on which some piece cannot attain value t.
struct SweepGap {
  std::size_t piece;  // 1-based piece whose cut is undefined
  Rational t_lo, t_hi;
};

/// Per-measure inverse chart of the left cumulative L(x) = m([0, x)): the
/// attainable target values s, as half-open ranges (lo, hi] that map
/// affinely back into one grid cell via the leftmost preimage. Targets
/// between ranges (atom jumps, or plateaus trailing an atom) have no
/// leftmost preimage; they are exactly the unattainable-value gaps.
struct InverseChart {
  struct Entry {
    Rational lo, hi;   // attainable targets (lo, hi]
    std::size_t cell;  // preimage lies in (grid[cell], grid[cell + 1]]
  };
  std::vector<Entry> entries;
  std::vector<Rational> mass_through;       // mass_through[j] = m([0, grid[j]])
  std::vector<Rational> density;            // density per cell
  std::vector<Rational> atom_mass_at_grid;  // mass exactly at grid[j]

  /// m([0, grid[j])) — the left cumulative at a grid point.
  Rational left_mass(std::size_t j) const {
    return mass_through[j] - atom_mass_at_grid[j];
  }
};

inline InverseChart build_chart(const RefinementCells& cells, std::size_t measure) {
  InverseChart chart;
  const auto& grid = cells.grid;
  chart.density = cells.densities[measure];
  chart.mass_through.resize(grid.size());
  auto atom_at = [&](const Rational& p) {
    for (std::size_t a = 0; a < cells.atom_locations.size(); ++a) {
      if (cells.atom_locations[a] == p) return cells.atom_masses[measure][a];
    }
    return Rational(0);
  };
  chart.atom_mass_at_grid.resize(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    chart.atom_mass_at_grid[j] = atom_at(grid[j]);
  }
  Rational cum = chart.atom_mass_at_grid[0];
  chart.mass_through[0] = cum;
  for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
    const Rational cell_mass = cells.cell_value(measure, j);
    if (chart.density[j] > 0) {
      chart.entries.push_back({cum, cum + cell_mass, j});
    }
    cum += cell_mass + chart.atom_mass_at_grid[j + 1];
    chart.mass_through[j + 1] = cum;
  }
  return chart;
}

/// Leftmost x with m([0, x)) = target, or nullopt when no such point exists.
inline std::optional<Rational> leftmost_preimage(const RefinementCells& cells,
                                                 const InverseChart& chart,
                                                 const Rational& target) {
  if (target == 0) return Rational(0);
  for (const auto& entry : chart.entries) {
    if (entry.lo < target && target <= entry.hi) {
      return cells.grid[entry.cell] + (target - entry.lo) / chart.density[entry.cell];
    }
  }
  return std::nullopt;
}

/// Splits a segment at the t-values where x(t) crosses a grid point, so each
/// sub-range of x stays inside one half-open cell (g_c, g_{c+1}].
inline std::vector<Rational> grid_crossing_stops(const SweepSegment& seg,
                                                 const std::vector<Rational>& grid) {
  std::vector<Rational> stops{seg.t0};
  if (seg.x1 > seg.x0) {
    for (const auto& g : grid) {
      if (seg.x0 < g && g < seg.x1) {
        stops.push_back(seg.t0 + (g - seg.x0) * (seg.t1 - seg.t0) / (seg.x1 - seg.x0));
      }
    }
  }
  stops.push_back(seg.t1);
  return stops;
}

/// From the segments of x_{k-1}(t), produce the segments of x_k(t) such that
/// piece k = [x_{k-1}, x_k) has value exactly t under `chart`'s measure,
/// always taking the leftmost admissible cut. Unattainable stretches are
/// appended to `gaps` under 1-based piece index `piece`.
inline std::vector<SweepSegment> advance_level(const std::vector<SweepSegment>& prev,
                                               const RefinementCells& cells,
                                               const InverseChart& chart,
                                               std::size_t piece,
                                               std::vector<SweepGap>& gaps) {
  const auto& grid = cells.grid;
  std::vector<SweepSegment> out;

  for (const auto& seg : prev) {
    const std::vector<Rational> stops = grid_crossing_stops(seg, grid);
    for (std::size_t s = 0; s + 1 < stops.size(); ++s) {
      const Rational ta = stops[s];
      const Rational tb = stops[s + 1];
      const Rational xa = seg.eval(ta);
      const Rational xb = seg.eval(tb);

      // Target for the new cut: u(t) = m([0, x(t))) + t, affine over (ta, tb].
      Rational u_a, u_b;
      if (xb == xa) {
        // Stationary stretch (only x = 0, before the previous cut moves).
        Rational base(0);
        for (std::size_t j = 0; j < grid.size(); ++j) {
          if (grid[j] == xa) {
            base = chart.left_mass(j);
            break;
          }
        }
        u_a = base + ta;
        u_b = base + tb;
      } else {
        std::size_t c = 0;
        for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
          if (grid[j] <= xa && xb <= grid[j + 1]) {
            c = j;
            break;
          }
        }
        // x in (xa, xb] subset of (grid[c], grid[c+1]]: left cumulative is
        // mass through grid[c] plus the density run above it.
        u_a = chart.mass_through[c] + chart.density[c] * (xa - grid[c]) + ta;
        u_b = chart.mass_through[c] + chart.density[c] * (xb - grid[c]) + tb;
      }

      // Invert the targets (u_a, u_b] through the chart; uncovered target
      // stretches become domain gaps for this and all later cuts.
      auto t_of = [&](const Rational& u) { return ta + (u - u_a) * (tb - ta) / (u_b - u_a); };
      Rational pos = u_a;
      for (const auto& entry : chart.entries) {
        if (entry.hi <= pos) continue;
        if (entry.lo >= u_b) break;
        const Rational ov_lo = std::max(entry.lo, pos);
        const Rational ov_hi = std::min(entry.hi, u_b);
        if (ov_lo < ov_hi) {
          if (ov_lo > pos) gaps.push_back({piece, t_of(pos), t_of(ov_lo)});
          const Rational base_x = cells.grid[entry.cell];
          out.push_back(SweepSegment{t_of(ov_lo), t_of(ov_hi),
                                     base_x + (ov_lo - entry.lo) / chart.density[entry.cell],
                                     base_x + (ov_hi - entry.lo) / chart.density[entry.cell]});
          pos = ov_hi;
        }
      }
      if (pos < u_b) gaps.push_back({piece, t_of(pos), t_of(u_b)});
    }
  }
  return out;
}

struct EqualValueSweep {
  bool solved = false;
  Rational common_value;
  std::vector<Rational> cuts;  // x_1 <= ... <= x_{n-1}
  std::string diagnostic;      // set when !solved
};

/// Solves for cuts 0 <= x_1 <= ... <= x_{n-1} <= 1 and a common value t with
/// ordered[k]'s value of piece k equal to t for every k, by composing the
/// leftmost-cut levels and scanning the residual of the last piece for an
/// exact root. Never iterates numerically: every breakpoint is a rational.
inline EqualValueSweep equal_value_sweep(std::span<const ValueMeasure> ordered) {
  const std::size_t n = ordered.size();
  const RefinementCells cells = common_refinement(ordered);
  std::vector<SweepGap> gaps;

  std::vector<SweepSegment> level{{Rational(0), Rational(1), Rational(0), Rational(0)}};
  std::vector<InverseChart> charts;
  charts.reserve(n);
  for (std::size_t m = 0; m < n; ++m) charts.push_back(build_chart(cells, m));
  for (std::size_t k = 1; k < n; ++k) {
    level = advance_level(level, cells, charts[k - 1], k, gaps);
  }

  // Residual of the last piece [x_{n-1}, 1]: R(t) = 1 - L_n(x_{n-1}(t)) - t,
  // strictly decreasing wherever defined, starting from R(0) = 1.
  const InverseChart& last = charts[n - 1];
  struct RSeg {
    Rational t0, t1, r0, r1;
  };
  std::vector<RSeg> rsegs;
  for (const auto& seg : level) {
    const std::vector<Rational> stops = grid_crossing_stops(seg, cells.grid);
    for (std::size_t s = 0; s + 1 < stops.size(); ++s) {
      const Rational ta = stops[s];
      const Rational tb = stops[s + 1];
      const Rational xa = seg.eval(ta);
      const Rational xb = seg.eval(tb);
      Rational l_a, l_b;
      if (xb == xa) {
        std::size_t j = 0;
        while (cells.grid[j] != xa) ++j;
        l_a = l_b = last.left_mass(j);
      } else {
        std::size_t c = 0;
        for (std::size_t j = 0; j + 1 < cells.grid.size(); ++j) {
          if (cells.grid[j] <= xa && xb <= cells.grid[j + 1]) {
            c = j;
            break;
          }
        }
        l_a = last.mass_through[c] + last.density[c] * (xa - cells.grid[c]);
        l_b = last.mass_through[c] + last.density[c] * (xb - cells.grid[c]);
      }
      rsegs.push_back(RSeg{ta, tb, Rational(1) - l_a - ta, Rational(1) - l_b - tb});
    }
  }

  EqualValueSweep result;
  auto gap_note = [&](const Rational& t_lo, const Rational& t_hi) -> std::string {
    for (const auto& g : gaps) {
      if (g.t_lo <= t_lo && t_hi <= g.t_hi) {
        return " (piece " + std::to_string(g.piece) +
               " cannot attain value t anywhere in (" + to_string(g.t_lo) + ", " +
               to_string(g.t_hi) + "]: an atom carries its cumulative value past t)";
      }
    }
    return "";
  };

  // Leftmost cuts at an exact t (valid wherever the sweep domain covers t).
  auto cuts_at = [&](const Rational& t) {
    std::vector<Rational> cuts;
    Rational x(0);
    for (std::size_t k = 1; k < n; ++k) {
      const Rational target = cdf_left(ordered[k - 1], x) + t;
      const auto next = target == cdf_left(ordered[k - 1], x)
                            ? std::optional<Rational>(x)
                            : leftmost_preimage(cells, charts[k - 1], target);
      if (!next) {
        throw std::logic_error("equal-value sweep lost a cut preimage at its root");
      }
      x = std::max(x, *next);
      cuts.push_back(x);
    }
    return cuts;
  };

  // When the leftmost residual jumps past zero (a cut hopped over a
  // zero-density stretch), the division may still close at the jump value:
  // slide the last cut rightward through the stretch — its own piece keeps
  // value t there — until the last piece is worth exactly t too.
  auto attempt_slide = [&](const Rational& t) -> bool {
    std::vector<Rational> cuts = cuts_at(t);
    const Rational x = cuts[n - 2];
    const InverseChart& before_last = charts[n - 2];
    Rational window_end = x;
    if (x < 1) {
      std::size_t c = 0;
      while (!(cells.grid[c] <= x && x < cells.grid[c + 1])) ++c;
      for (;;) {
        if (before_last.density[c] > 0) break;
        window_end = cells.grid[c + 1];
        if (window_end == 1 || before_last.atom_mass_at_grid[c + 1] > 0) break;
        ++c;
      }
    }
    const Rational target = Rational(1) - t;  // want m_n([0, x')) = 1 - t
    auto preimage = leftmost_preimage(cells, last, target);
    Rational slid;
    if (preimage && *preimage >= x) {
      slid = *preimage;
    } else if (cdf_left(ordered[n - 1], x) == target) {
      slid = x;  // the plateau of the last measure already covers x
    } else {
      return false;
    }
    if (slid > window_end) return false;
    cuts[n - 2] = slid;
    result.solved = true;
    result.common_value = t;
    result.cuts = std::move(cuts);
    return true;
  };

  Rational prev_t(0);
  Rational prev_r(1);
  for (const auto& rs : rsegs) {
    if (prev_r > 0 && rs.r0 <= 0) {
      // Either a hole in the domain or a jump at the shared endpoint; both
      // lose the root unless the last cut can slide at the last valid t.
      if (attempt_slide(prev_t)) break;
      if (rs.t0 > prev_t) {
        result.diagnostic = "residual skips zero between t = " + to_string(prev_t) +
                            " (residual " + to_string(prev_r) + ") and t = " + to_string(rs.t0) +
                            " (residual " + to_string(rs.r0) + ")" + gap_note(prev_t, rs.t0);
      } else {
        result.diagnostic = "residual jumps from " + to_string(prev_r) + " to " +
                            to_string(rs.r0) + " at t = " + to_string(rs.t0) +
                            " without attaining zero";
      }
      return result;
    }
    if (rs.r1 <= 0 && rs.r0 > 0) {
      const Rational t_star = rs.t0 + (rs.t1 - rs.t0) * rs.r0 / (rs.r0 - rs.r1);
      result.solved = true;
      result.common_value = t_star;
      result.cuts = cuts_at(t_star);
      break;
    }
    prev_t = rs.t1;
    prev_r = rs.r1;
    if (prev_r == 0) {
      result.solved = true;
      result.common_value = prev_t;
      result.cuts = cuts_at(prev_t);
      break;
    }
  }
  if (!result.solved && result.diagnostic.empty() && !attempt_slide(prev_t)) {
    result.diagnostic = "no common value t in (0, 1] solves the cut equations; the sweep "
                        "domain ends at t = " + to_string(prev_t) + " with residual " +
                        to_string(prev_r) + gap_note(prev_t, Rational(1));
  }
  return result;
}

}  // namespace cakecut::detail

#endif  // CAKECUT_DETAIL_LEFTMOST_SWEEP_HPP
