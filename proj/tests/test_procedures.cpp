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

#include "cakecut/procedures.hpp"

using namespace cakecut;

namespace {

ValueMeasure outer_quarters() {
  return measure_from_density({rat(0), rat(1, 4), rat(3, 4), rat(1)},
                              {rat(2), rat(0), rat(2)});
}

ValueMeasure half_threehalves() {
  return measure_from_density({rat(0), rat(1, 2), rat(1)}, {rat(1, 2), rat(3, 2)});
}

ValueMeasure atom_at_half() {
  return measure_with_atoms({rat(0), rat(1)}, {rat(0)}, {{rat(1, 2), rat(1)}});
}

ValueMeasure top_half_marginal() {
  return measure_from_density({rat(0), rat(1, 2), rat(1)}, {rat(0), rat(2)});
}

ValueMeasure bottom_half_marginal() {
  return measure_from_density({rat(0), rat(1, 2), rat(1)}, {rat(2), rat(0)});
}

}  // namespace

TEST_CASE("cut-and-choose: uniform cutter against the outer-quarters chooser") {
  const CutAndChooseResult r = cut_and_choose(uniform_measure(), outer_quarters());
  CHECK(r.cut_point == rat(1, 2));
  CHECK(r.cutter_median.kind == QuantileResult::Kind::UniquePoint);
  CHECK(r.chooser_took_left);  // tie at 1/2 each, tie goes left
  CHECK(r.payoffs == std::vector<Rational>{rat(1, 2), rat(1, 2)});
  CHECK(r.allocation.portions[0] == IntervalSet::of({{rat(1, 2), rat(1)}}));
  CHECK(r.allocation.portions[1] == IntervalSet::of({{rat(0), rat(1, 2)}}));
  CHECK_FALSE(r.degeneracy);
}

TEST_CASE("cut-and-choose: square example via the Y projection") {
  const CutAndChooseResult r = cut_and_choose(top_half_marginal(), bottom_half_marginal());
  CHECK(r.cut_point == rat(3, 4));
  CHECK(r.chooser_took_left);  // the chooser's whole value sits below 3/4
  CHECK(r.payoffs == std::vector<Rational>{rat(1, 2), rat(1)});
  CHECK(r.allocation.portions[1] == IntervalSet::of({{rat(0), rat(3, 4)}}));
}

TEST_CASE("cut-and-choose: identical uniform players split at 1/2") {
  const CutAndChooseResult r = cut_and_choose(uniform_measure(), uniform_measure());
  CHECK(r.cut_point == rat(1, 2));
  CHECK(r.payoffs == std::vector<Rational>{rat(1, 2), rat(1, 2)});
}

TEST_CASE("cut-and-choose: flat median is cut at its midpoint") {
  const CutAndChooseResult r = cut_and_choose(outer_quarters(), uniform_measure());
  CHECK(r.cutter_median.kind == QuantileResult::Kind::FlatInterval);
  CHECK(r.cut_point == rat(1, 2));
  CHECK(r.payoffs[0] == rat(1, 2));  // cutter still gets exactly half by own measure
}

TEST_CASE("cut-and-choose: atom-jump median is degenerate but handled") {
  const CutAndChooseResult r = cut_and_choose(atom_at_half(), uniform_measure());
  CHECK(r.cut_point == rat(1, 2));
  REQUIRE(r.degeneracy);
  CHECK(r.degeneracy->kind == ProcedureError::Kind::DegenerateSurplus);
  // Chooser ties (1/2 each) and takes left; the atom goes right, to the cutter.
  CHECK(r.payoffs == std::vector<Rational>{rat(1), rat(1, 2)});
  CHECK(allocation_is_partition(r.allocation,
                                std::vector<ValueMeasure>{atom_at_half(), uniform_measure()}));
}

TEST_CASE("surplus procedure: the worked nondegenerate instance") {
  const auto r = surplus_procedure(uniform_measure(), half_threehalves());
  REQUIRE(ok(r));
  const SurplusResult& sp = result(r);
  CHECK(sp.medians == std::array<Rational, 2>{rat(1, 2), rat(2, 3)});
  CHECK(sp.surplus_lo == rat(1, 2));
  CHECK(sp.surplus_hi == rat(2, 3));
  CHECK(sp.cut == rat(7, 12));
  CHECK(sp.left_player == 0);
  CHECK(sp.payoffs == std::vector<Rational>{rat(7, 12), rat(5, 8)});
  CHECK(sp.surplus_proportions == std::array<Rational, 2>{rat(1, 2), rat(1, 2)});
  CHECK(sp.allocation.portions[0] == IntervalSet::of({{rat(0), rat(7, 12)}}));
  CHECK(sp.allocation.portions[1] == IntervalSet::of({{rat(7, 12), rat(1)}}));
}

TEST_CASE("surplus procedure: identical uniform reports meet at the median") {
  const auto r = surplus_procedure(uniform_measure(), uniform_measure());
  REQUIRE(ok(r));
  const SurplusResult& sp = result(r);
  CHECK(sp.medians[0] == rat(1, 2));
  CHECK(sp.cut == rat(1, 2));
  CHECK(sp.payoffs == std::vector<Rational>{rat(1, 2), rat(1, 2)});
  CHECK(sp.surplus_proportions[0] == sp.surplus_proportions[1]);
}

TEST_CASE("surplus procedure: a flat median set is reported, not guessed") {
  const auto r = surplus_procedure(uniform_measure(), outer_quarters());
  REQUIRE_FALSE(ok(r));
  const ProcedureError& e = error(r);
  CHECK(e.kind == ProcedureError::Kind::NonUniqueMedian);
  CHECK(e.player == 1);
  CHECK(e.flat_interval == Interval{rat(1, 4), rat(3, 4)});

  // Same failure regardless of which side the degenerate player is on.
  const auto r2 = surplus_procedure(outer_quarters(), uniform_measure());
  REQUIRE_FALSE(ok(r2));
  CHECK(error(r2).player == 0);
}

TEST_CASE("surplus procedure: atom-jump medians act as unique points") {
  const auto r = surplus_procedure(atom_at_half(), uniform_measure());
  REQUIRE(ok(r));
  CHECK(result(r).medians[0] == rat(1, 2));
  CHECK(result(r).cut == rat(1, 2));
}

TEST_CASE("equitability: three uniform players") {
  const std::vector<ValueMeasure> ms(3, uniform_measure());
  const auto r = equitability_procedure(ms, {0, 1, 2});
  REQUIRE(ok(r));
  const EquitabilityResult& ep = result(r);
  CHECK(ep.cuts == std::vector<Rational>{rat(1, 3), rat(2, 3)});
  CHECK(ep.common_value == rat(1, 3));
  CHECK(ep.payoffs == std::vector<Rational>{rat(1, 3), rat(1, 3), rat(1, 3)});
  CHECK(allocation_is_partition(ep.allocation, ms));
}

TEST_CASE("equitability: uniform vs outer-quarters, identity order") {
  const std::vector<ValueMeasure> ms{uniform_measure(), outer_quarters()};
  const auto r = equitability_procedure(ms, {0, 1});
  REQUIRE(ok(r));
  CHECK(result(r).cuts == std::vector<Rational>{rat(1, 2)});
  CHECK(result(r).common_value == rat(1, 2));
  CHECK(result(r).payoffs == std::vector<Rational>{rat(1, 2), rat(1, 2)});
}

TEST_CASE("equitability: reversed order slides the cut through the dead zone") {
  const std::vector<ValueMeasure> ms{uniform_measure(), outer_quarters()};
  const auto r = equitability_procedure(ms, {1, 0});
  REQUIRE(ok(r));
  CHECK(result(r).common_value == rat(1, 2));
  CHECK(result(r).cuts == std::vector<Rational>{rat(1, 2)});
  CHECK(result(r).payoffs == std::vector<Rational>{rat(1, 2), rat(1, 2)});
}

TEST_CASE("equitability: an atom can make the system unsolvable") {
  const std::vector<ValueMeasure> ms{atom_at_half(), uniform_measure()};
  const auto r = equitability_procedure(ms, {0, 1});
  REQUIRE_FALSE(ok(r));
  CHECK(error(r).kind == ProcedureError::Kind::NoSolution);
  CHECK_FALSE(error(r).diagnostic.empty());
}

TEST_CASE("equitability validates its order argument") {
  const std::vector<ValueMeasure> ms{uniform_measure(), uniform_measure()};
  CHECK_THROWS_AS(equitability_procedure(ms, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(equitability_procedure(ms, {0}), std::invalid_argument);
  const std::vector<ValueMeasure> one{uniform_measure()};
  CHECK_THROWS_AS(equitability_procedure(one, {0}), std::invalid_argument);
}

TEST_CASE("ep_best_order picks the order with the largest common value") {
  const ValueMeasure front_loaded =
      measure_from_density({rat(0), rat(1, 4), rat(1)}, {rat(4), rat(0)});
  const std::vector<ValueMeasure> ms{uniform_measure(), front_loaded};

  const auto identity = equitability_procedure(ms, {0, 1});
  REQUIRE(ok(identity));
  CHECK(result(identity).common_value == rat(1, 5));

  const auto best = ep_best_order(ms);
  REQUIRE(ok(best));
  CHECK(result(best).order == std::vector<int>{1, 0});
  CHECK(result(best).cuts == std::vector<Rational>{rat(1, 5)});
  CHECK(result(best).common_value == rat(4, 5));
}

TEST_CASE("ep_best_order ties break to the lexicographically smallest order") {
  const std::vector<ValueMeasure> uniform3(3, uniform_measure());
  const auto r = ep_best_order(uniform3);
  REQUIRE(ok(r));
  CHECK(result(r).order == std::vector<int>{0, 1, 2});
  CHECK(result(r).common_value == rat(1, 3));

  const std::vector<ValueMeasure> pair{uniform_measure(), outer_quarters()};
  const auto r2 = ep_best_order(pair);
  REQUIRE(ok(r2));
  CHECK(result(r2).order == std::vector<int>{0, 1});
  CHECK(result(r2).common_value == rat(1, 2));
}

TEST_CASE("procedure allocations partition the cake") {
  const std::vector<ValueMeasure> ms{uniform_measure(), half_threehalves()};
  const auto sp = surplus_procedure(ms[0], ms[1]);
  REQUIRE(ok(sp));
  CHECK(allocation_is_partition(result(sp).allocation, ms));

  const CutAndChooseResult cc = cut_and_choose(ms[0], ms[1]);
  CHECK(allocation_is_partition(cc.allocation, ms));
}
