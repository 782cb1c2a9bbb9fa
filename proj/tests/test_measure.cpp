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
#include <catch2/catch_amalgamated.hpp>

#include "cakecut/measure.hpp"

using namespace cakecut;

namespace {

// The interval pair used throughout: player 1 uniform, player 2 with density
// 2 on the outer quarters and nothing in between.
ValueMeasure outer_quarters() {
  return measure_from_density({rat(0), rat(1, 4), rat(3, 4), rat(1)},
                              {rat(2), rat(0), rat(2)});
}

ValueMeasure atom_at_half() {
  return measure_with_atoms({rat(0), rat(1)}, {rat(0)}, {{rat(1, 2), rat(1)}});
}

}  // namespace

TEST_CASE("measure validation rejects bad densities and masses") {
  CHECK_THROWS_AS(measure_from_density({rat(0), rat(1)}, {rat(3, 4)}), std::invalid_argument);
  CHECK_THROWS_AS(measure_from_density({rat(0), rat(1, 2)}, {rat(2)}), std::invalid_argument);
  CHECK_THROWS_AS(measure_from_density({rat(0), rat(1, 2), rat(1, 2), rat(1)},
                                       {rat(1), rat(1), rat(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(measure_from_density({rat(0), rat(1)}, {rat(-1)}), std::invalid_argument);
  CHECK_THROWS_AS(measure_with_atoms({rat(0), rat(1)}, {rat(1)}, {{rat(1, 2), rat(0)}}),
                  std::invalid_argument);
}

TEST_CASE("value integrates densities and assigns atoms by the piece convention") {
  CHECK(value(uniform_measure(), IntervalSet::whole()) == 1);
  CHECK(value(outer_quarters(), IntervalSet::of({{rat(1, 2), rat(1)}})) == rat(1, 2));

  const ValueMeasure atom = atom_at_half();
  CHECK(value(atom, IntervalSet::of({{rat(0), rat(1, 2)}})) == 0);
  CHECK(value(atom, IntervalSet::of({{rat(1, 2), rat(1)}})) == 1);
}

TEST_CASE("cdf is right-continuous, cdf_left excludes the atom at the point") {
  CHECK(cdf(uniform_measure(), rat(1, 2)) == rat(1, 2));
  CHECK(cdf(outer_quarters(), rat(1, 2)) == rat(1, 2));
  const ValueMeasure atom = atom_at_half();
  CHECK(cdf(atom, rat(49, 100)) == 0);
  CHECK(cdf(atom, rat(1, 2)) == 1);
  CHECK(cdf_left(atom, rat(1, 2)) == 0);
  CHECK_THROWS_AS(cdf(atom, rat(3, 2)), std::domain_error);
}

TEST_CASE("quantile classifies unique, flat and jump medians") {
  const QuantileResult u = quantile(uniform_measure(), rat(1, 2));
  CHECK(u.kind == QuantileResult::Kind::UniquePoint);
  CHECK(u.point == rat(1, 2));

  const QuantileResult flat = quantile(outer_quarters(), rat(1, 2));
  CHECK(flat.kind == QuantileResult::Kind::FlatInterval);
  CHECK(flat.point == rat(1, 4));
  CHECK(flat.hi == rat(3, 4));

  const QuantileResult jump = quantile(atom_at_half(), rat(1, 2));
  CHECK(jump.kind == QuantileResult::Kind::AtJump);
  CHECK(jump.point == rat(1, 2));

  CHECK_THROWS_AS(quantile(uniform_measure(), rat(0)), std::domain_error);
  CHECK_THROWS_AS(quantile(uniform_measure(), rat(1)), std::domain_error);
}

TEST_CASE("quantile at other levels follows the cdf") {
  // outer-quarters measure: first quarter carries mass 1/2 at density 2.
  const QuantileResult q = quantile(outer_quarters(), rat(1, 4));
  CHECK(q.kind == QuantileResult::Kind::UniquePoint);
  CHECK(q.point == rat(1, 8));
}

TEST_CASE("common refinement merges breakpoints and atom locations") {
  const ValueMeasure ms[] = {uniform_measure(), outer_quarters()};
  const RefinementCells cells = common_refinement(ms);
  CHECK(cells.grid == std::vector<Rational>{rat(0), rat(1, 4), rat(3, 4), rat(1)});
  CHECK(cells.densities[0] == std::vector<Rational>{rat(1), rat(1), rat(1)});
  CHECK(cells.densities[1] == std::vector<Rational>{rat(2), rat(0), rat(2)});
  CHECK(cells.atom_locations.empty());

  const ValueMeasure single[] = {uniform_measure()};
  const RefinementCells one = common_refinement(single);
  CHECK(one.cell_count() == 1);
  CHECK(one.densities[0][0] == 1);

  const ValueMeasure with_atom[] = {uniform_measure(), atom_at_half()};
  const RefinementCells mixed = common_refinement(with_atom);
  CHECK(mixed.grid == std::vector<Rational>{rat(0), rat(1, 2), rat(1)});
  CHECK(mixed.atom_locations == std::vector<Rational>{rat(1, 2)});
  CHECK(mixed.atom_masses[0] == std::vector<Rational>{rat(0)});
  CHECK(mixed.atom_masses[1] == std::vector<Rational>{rat(1)});
}

TEST_CASE("mutual absolute continuity compares supports and atom locations") {
  CHECK(mutually_abs_continuous(uniform_measure(), uniform_measure()));
  CHECK_FALSE(mutually_abs_continuous(uniform_measure(), outer_quarters()));
  CHECK(mutually_abs_continuous(atom_at_half(), atom_at_half()));
  CHECK_FALSE(mutually_abs_continuous(uniform_measure(), atom_at_half()));
}

TEST_CASE("2-D projection produces the exact marginals") {
  // Player 1 of the unit-square example: density 2 on the top half.
  const Rect2DMeasure top{{rat(0), rat(1)}, {rat(0), rat(1, 2), rat(1)}, {{rat(0), rat(2)}}};
  top.validate();
  CHECK(project_2d(top, Axis::X) == uniform_measure());
  const ValueMeasure marginal_y = project_2d(top, Axis::Y);
  CHECK(marginal_y ==
        measure_from_density({rat(0), rat(1, 2), rat(1)}, {rat(0), rat(2)}));

  const Rect2DMeasure bottom{{rat(0), rat(1)}, {rat(0), rat(1, 2), rat(1)}, {{rat(2), rat(0)}}};
  CHECK(project_2d(bottom, Axis::Y) ==
        measure_from_density({rat(0), rat(1, 2), rat(1)}, {rat(2), rat(0)}));

  const Rect2DMeasure bad{{rat(0), rat(1)}, {rat(0), rat(1)}, {{rat(2)}}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("additivity on disjoint portions") {
  const ValueMeasure m = outer_quarters();
  const IntervalSet a = IntervalSet::of({{rat(0), rat(1, 8)}});
  const IntervalSet b = IntervalSet::of({{rat(1, 8), rat(2, 3)}});
  const IntervalSet both = IntervalSet::of({{rat(0), rat(2, 3)}});
  CHECK(value(m, a) + value(m, b) == value(m, both));
}
