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
#ifndef CAKECUT_MEASURE_HPP
#define CAKECUT_MEASURE_HPP

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cakecut/interval_set.hpp"
#include "cakecut/rational.hpp"

namespace cakecut {

/// Piecewise-constant density on [0,1]: breakpoints 0 = b_0 < ... < b_K = 1
/// and one nonnegative value per cell [b_k, b_{k+1}).
struct PiecewiseDensity {
  std::vector<Rational> breakpoints;
  std::vector<Rational> values;

  void validate() const {
    if (breakpoints.size() < 2) {
      throw std::invalid_argument("density needs at least breakpoints 0 and 1");
    }
    if (breakpoints.front() != 0 || breakpoints.back() != 1) {
      throw std::invalid_argument("density breakpoints must start at 0 and end at 1");
    }
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
      if (!(breakpoints[i - 1] < breakpoints[i])) {
        throw std::invalid_argument("density breakpoints must be strictly increasing");
      }
    }
    if (values.size() != breakpoints.size() - 1) {
      throw std::invalid_argument("density needs exactly one value per cell");
    }
    for (const auto& v : values) {
      if (v < 0) throw std::invalid_argument("density values must be nonnegative");
    }
  }

  Rational mass() const {
    Rational total(0);
    for (std::size_t i = 0; i < values.size(); ++i) {
      total += values[i] * (breakpoints[i + 1] - breakpoints[i]);
    }
    return total;
  }

  /// Integral of the density over [a, b], 0 <= a <= b <= 1.
  Rational integral(const Rational& a, const Rational& b) const {
    Rational total(0);
    for (std::size_t i = 0; i < values.size(); ++i) {
      const Rational lo = std::max(a, breakpoints[i]);
      const Rational hi = std::min(b, breakpoints[i + 1]);
      if (lo < hi) total += values[i] * (hi - lo);
    }
    return total;
  }

  bool operator==(const PiecewiseDensity& other) const = default;
};

/// Finitely many point masses; all masses strictly positive.
struct AtomSet {
  std::map<Rational, Rational> atoms;  // location -> mass

  void validate() const {
    for (const auto& [loc, mass] : atoms) {
      if (loc < 0 || loc > 1) {
        throw std::invalid_argument("atom at " + to_string(loc) + " outside [0,1]");
      }
      if (!(mass > 0)) {
        throw std::invalid_argument("atom at " + to_string(loc) + " must have positive mass");
      }
    }
  }

  Rational mass() const {
    Rational total(0);
    for (const auto& [loc, m] : atoms) total += m;
    return total;
  }

  Rational mass_at(const Rational& p) const {
    auto it = atoms.find(p);
    return it == atoms.end() ? Rational(0) : it->second;
  }

  bool operator==(const AtomSet& other) const = default;
};

/// One player's value measure over the cake: a piecewise-constant density
/// plus finitely many atoms, with total mass exactly 1.
struct ValueMeasure {
  PiecewiseDensity density;
  AtomSet atoms;

  void validate() const {
    density.validate();
    atoms.validate();
    if (total_mass() != 1) {
      throw std::invalid_argument("measure has total mass " + to_string(total_mass()) +
                                  ", expected 1");
    }
  }

  Rational total_mass() const { return density.mass() + atoms.mass(); }

  bool operator==(const ValueMeasure& other) const = default;
};

inline ValueMeasure uniform_measure() {
  return ValueMeasure{PiecewiseDensity{{Rational(0), Rational(1)}, {Rational(1)}}, {}};
}

inline ValueMeasure measure_from_density(std::vector<Rational> breakpoints,
                                         std::vector<Rational> values) {
  ValueMeasure m{PiecewiseDensity{std::move(breakpoints), std::move(values)}, {}};
  m.validate();
  return m;
}

inline ValueMeasure measure_with_atoms(std::vector<Rational> breakpoints,
                                       std::vector<Rational> values,
                                       std::map<Rational, Rational> atoms) {
  ValueMeasure m{PiecewiseDensity{std::move(breakpoints), std::move(values)},
                 AtomSet{std::move(atoms)}};
  m.validate();
  return m;
}

/// m([0, x)) — the left-continuous cumulative (excludes an atom at x).
inline Rational cdf_left(const ValueMeasure& m, const Rational& x) {
  if (x < 0 || x > 1) throw std::domain_error("cdf argument " + to_string(x) + " outside [0,1]");
  Rational total = m.density.integral(Rational(0), x);
  for (const auto& [loc, mass] : m.atoms.atoms) {
    if (loc < x) total += mass;
  }
  return total;
}

/// m([0, x]) — the right-continuous CDF (includes an atom at x).
inline Rational cdf(const ValueMeasure& m, const Rational& x) {
  return cdf_left(m, x) + m.atoms.mass_at(x);
}

/// Value of a portion: density integral over the pieces plus the masses of
/// the atoms the portion owns. Exactly additive over disjoint portions.
inline Rational value(const ValueMeasure& m, const IntervalSet& s) {
  Rational total(0);
  for (const auto& piece : s.pieces()) {
    total += m.density.integral(piece.lo, piece.hi);
  }
  for (const auto& [loc, mass] : m.atoms.atoms) {
    if (s.owns_atom(loc)) total += mass;
  }
  return total;
}

/// Classification of the level-p set of the CDF.
struct QuantileResult {
  enum class Kind { UniquePoint, FlatInterval, AtJump };
  Kind kind;
  Rational point;  // UniquePoint / AtJump location, or FlatInterval lower end
  Rational hi;     // FlatInterval upper end (== point otherwise)

  bool unique() const { return kind != Kind::FlatInterval; }
  bool operator==(const QuantileResult& other) const = default;
};

namespace detail {

/// Sorted union of a measure's density breakpoints and atom locations.
inline std::vector<Rational> scan_grid(const ValueMeasure& m) {
  std::vector<Rational> grid = m.density.breakpoints;
  for (const auto& [loc, mass] : m.atoms.atoms) grid.push_back(loc);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace detail

/// Level-p set of the CDF, as the closed interval
///   S = [ min{x : cdf(x) >= p},  max{x : cdf_left(x) <= p} ].
/// A nondegenerate S is a FlatInterval; a single point is AtJump when an
/// atom lifts the CDF from below p, and a UniquePoint crossing otherwise.
inline QuantileResult quantile(const ValueMeasure& m, const Rational& p) {
  if (!(p > 0) || !(p < 1)) {
    throw std::domain_error("quantile level must satisfy 0 < p < 1");
  }
  const std::vector<Rational> grid = detail::scan_grid(m);

  // lo: first x with cdf(x) >= p. Scan grid points, then solve inside a cell.
  Rational lo(1);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (cdf(m, grid[i]) >= p) {
      lo = grid[i];
      break;
    }
    if (i + 1 < grid.size()) {
      const Rational at_cell_start = cdf(m, grid[i]);
      const Rational d = m.density.integral(grid[i], grid[i + 1]) / (grid[i + 1] - grid[i]);
      if (d > 0 && at_cell_start + d * (grid[i + 1] - grid[i]) >= p) {
        lo = grid[i] + (p - at_cell_start) / d;
        break;
      }
    }
  }

  // hi: last x with cdf_left(x) <= p.
  Rational hi(0);
  for (std::size_t i = grid.size(); i-- > 0;) {
    if (cdf_left(m, grid[i]) <= p) {
      hi = grid[i];
      // Extend into the following cell while the left CDF stays <= p.
      if (i + 1 < grid.size()) {
        const Rational base = cdf(m, grid[i]);
        if (base <= p) {
          const Rational d = m.density.integral(grid[i], grid[i + 1]) / (grid[i + 1] - grid[i]);
          if (d == 0) {
            hi = grid[i + 1];  // flat cell: left CDF stays at base past its end
          } else {
            hi = std::min(grid[i + 1], grid[i] + (p - base) / d);
          }
        }
      }
      break;
    }
  }

  if (lo < hi) {
    return QuantileResult{QuantileResult::Kind::FlatInterval, lo, hi};
  }
  if (m.atoms.mass_at(lo) > 0 && cdf_left(m, lo) < p) {
    return QuantileResult{QuantileResult::Kind::AtJump, lo, lo};
  }
  return QuantileResult{QuantileResult::Kind::UniquePoint, lo, lo};
}

/// Common refinement of several measures: the union of all breakpoints as a
/// cell partition of [0,1), each measure's constant density per cell, and the
/// union of atom locations with each measure's mass there (possibly zero).
struct RefinementCells {
  std::vector<Rational> grid;                      // 0 = g_0 < ... < g_K = 1
  std::vector<std::vector<Rational>> densities;    // [measure][cell]
  std::vector<Rational> atom_locations;            // sorted
  std::vector<std::vector<Rational>> atom_masses;  // [measure][atom]

  std::size_t cell_count() const { return grid.size() - 1; }
  Rational cell_length(std::size_t j) const { return grid[j + 1] - grid[j]; }
  /// Measure m's value of cell j (density times length; atoms are separate).
  Rational cell_value(std::size_t m, std::size_t j) const {
    return densities[m][j] * cell_length(j);
  }
};

inline RefinementCells common_refinement(std::span<const ValueMeasure> ms) {
  if (ms.empty()) throw std::invalid_argument("common refinement of an empty list");
  RefinementCells out;
  for (const auto& m : ms) {
    out.grid.insert(out.grid.end(), m.density.breakpoints.begin(), m.density.breakpoints.end());
    for (const auto& [loc, mass] : m.atoms.atoms) {
      out.atom_locations.push_back(loc);
    }
  }
  std::sort(out.grid.begin(), out.grid.end());
  out.grid.erase(std::unique(out.grid.begin(), out.grid.end()), out.grid.end());
  std::sort(out.atom_locations.begin(), out.atom_locations.end());
  out.atom_locations.erase(std::unique(out.atom_locations.begin(), out.atom_locations.end()),
                           out.atom_locations.end());

  for (const auto& m : ms) {
    std::vector<Rational> dens;
    dens.reserve(out.cell_count());
    for (std::size_t j = 0; j + 1 < out.grid.size(); ++j) {
      const Rational len = out.grid[j + 1] - out.grid[j];
      dens.push_back(m.density.integral(out.grid[j], out.grid[j + 1]) / len);
    }
    out.densities.push_back(std::move(dens));
    std::vector<Rational> masses;
    masses.reserve(out.atom_locations.size());
    for (const auto& loc : out.atom_locations) {
      masses.push_back(m.atoms.mass_at(loc));
    }
    out.atom_masses.push_back(std::move(masses));
  }
  return out;
}

/// Mutual absolute continuity for this measure class: the densities are
/// positive on exactly the same cells of the common refinement, and the atom
/// location sets coincide.
inline bool mutually_abs_continuous(const ValueMeasure& m1, const ValueMeasure& m2) {
  const ValueMeasure pair[] = {m1, m2};
  const RefinementCells cells = common_refinement(pair);
  for (std::size_t j = 0; j < cells.cell_count(); ++j) {
    if ((cells.densities[0][j] > 0) != (cells.densities[1][j] > 0)) return false;
  }
  for (std::size_t a = 0; a < cells.atom_locations.size(); ++a) {
    if ((cells.atom_masses[0][a] > 0) != (cells.atom_masses[1][a] > 0)) return false;
  }
  return true;
}

enum class Axis { X, Y };

inline std::string to_string(Axis axis) { return axis == Axis::X ? "X" : "Y"; }

/// Piecewise-constant density on the unit square, constant per grid rectangle.
/// cell_values[i][j] is the density on x-cell i times y-cell j.
struct Rect2DMeasure {
  std::vector<Rational> x_breakpoints;
  std::vector<Rational> y_breakpoints;
  std::vector<std::vector<Rational>> cell_values;

  void validate() const {
    auto check_axis = [](const std::vector<Rational>& b, const char* name) {
      if (b.size() < 2 || b.front() != 0 || b.back() != 1) {
        throw std::invalid_argument(std::string(name) + " breakpoints must span [0,1]");
      }
      for (std::size_t i = 1; i < b.size(); ++i) {
        if (!(b[i - 1] < b[i])) {
          throw std::invalid_argument(std::string(name) + " breakpoints must be strictly increasing");
        }
      }
    };
    check_axis(x_breakpoints, "x");
    check_axis(y_breakpoints, "y");
    if (cell_values.size() != x_breakpoints.size() - 1) {
      throw std::invalid_argument("cell_values needs one row per x-cell");
    }
    for (const auto& row : cell_values) {
      if (row.size() != y_breakpoints.size() - 1) {
        throw std::invalid_argument("cell_values needs one column per y-cell");
      }
      for (const auto& v : row) {
        if (v < 0) throw std::invalid_argument("2-D density values must be nonnegative");
      }
    }
    if (total_mass() != 1) {
      throw std::invalid_argument("2-D measure has total mass " + to_string(total_mass()) +
                                  ", expected 1");
    }
  }

  Rational total_mass() const {
    Rational total(0);
    for (std::size_t i = 0; i + 1 < x_breakpoints.size(); ++i) {
      for (std::size_t j = 0; j + 1 < y_breakpoints.size(); ++j) {
        total += cell_values[i][j] * (x_breakpoints[i + 1] - x_breakpoints[i]) *
                 (y_breakpoints[j + 1] - y_breakpoints[j]);
      }
    }
    return total;
  }

  bool operator==(const Rect2DMeasure& other) const = default;
};

/// Marginal along the chosen axis (the other coordinate integrated out).
/// The result is a valid interval measure with the same total mass.
inline ValueMeasure project_2d(const Rect2DMeasure& m, Axis axis) {
  const auto& keep = axis == Axis::X ? m.x_breakpoints : m.y_breakpoints;
  const auto& other = axis == Axis::X ? m.y_breakpoints : m.x_breakpoints;
  std::vector<Rational> values;
  for (std::size_t i = 0; i + 1 < keep.size(); ++i) {
    Rational v(0);
    for (std::size_t j = 0; j + 1 < other.size(); ++j) {
      const Rational& cell =
          axis == Axis::X ? m.cell_values[i][j] : m.cell_values[j][i];
      v += cell * (other[j + 1] - other[j]);
    }
    values.push_back(v);
  }
  ValueMeasure out{PiecewiseDensity{keep, std::move(values)}, {}};
  out.validate();
  return out;
}

}  // namespace cakecut

#endif  // CAKECUT_MEASURE_HPP
