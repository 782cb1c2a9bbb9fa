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

#include "cakecut/properties.hpp"

using namespace cakecut;

namespace {

ValueMeasure outer_quarters() {
  return measure_from_density({rat(0), rat(1, 4), rat(3, 4), rat(1)},
                              {rat(2), rat(0), rat(2)});
}

ValueMeasure half_threehalves() {
  return measure_from_density({rat(0), rat(1, 2), rat(1)}, {rat(1, 2), rat(3, 2)});
}

ValueMeasure front_loaded() {
  return measure_from_density({rat(0), rat(1, 4), rat(1)}, {rat(4), rat(0)});
}

}  // namespace

TEST_CASE("fairness of the cut-and-choose output on the interval pair") {
  const std::vector<ValueMeasure> ms{uniform_measure(), outer_quarters()};
  const CutAndChooseResult cc = cut_and_choose(ms[0], ms[1]);
  const FairnessReport fr = check_fairness(cc.allocation, ms);
  CHECK(fr.proportional);
  CHECK(fr.envy_free);
  CHECK(fr.equitable);
  CHECK(fr.valuations[0][0] == rat(1, 2));
  CHECK(fr.valuations[1][1] == rat(1, 2));
}

TEST_CASE("fairness of the worked surplus-procedure instance") {
  const std::vector<ValueMeasure> ms{uniform_measure(), half_threehalves()};
  const auto sp = surplus_procedure(ms[0], ms[1]);
  REQUIRE(ok(sp));
  const FairnessReport fr = check_fairness(result(sp).allocation, ms);
  CHECK(fr.proportional);
  CHECK(fr.envy_free);
  CHECK_FALSE(fr.equitable);
  REQUIRE(fr.equity_witness);
  CHECK(fr.valuations[0][0] == rat(7, 12));
  CHECK(fr.valuations[1][1] == rat(5, 8));
  CHECK(fr.valuations[0][1] == rat(5, 12));
  CHECK(fr.valuations[1][0] == rat(3, 8));
}

TEST_CASE("fairness flags a disproportional allocation with its witness") {
  const std::vector<ValueMeasure> ms{uniform_measure(), uniform_measure()};
  Allocation a;
  a.portions = {IntervalSet::whole(), IntervalSet{}};
  const FairnessReport fr = check_fairness(a, ms);
  CHECK_FALSE(fr.proportional);
  CHECK(fr.proportional_witness == 1);
  CHECK_FALSE(fr.envy_free);
  CHECK_FALSE(fr.equitable);
}

TEST_CASE("envy-free implies proportional for complete allocations") {
  const std::vector<ValueMeasure> ms{uniform_measure(), outer_quarters()};
  for (const auto& cut : {rat(1, 4), rat(2, 5), rat(1, 2), rat(3, 5)}) {
    Allocation a;
    a.portions = {IntervalSet::of({{rat(0), cut}}), IntervalSet::of({{cut, rat(1)}})};
    const FairnessReport fr = check_fairness(a, ms);
    if (fr.envy_free) CHECK(fr.proportional);
  }
}

TEST_CASE("misreporting under the surplus procedure can backfire") {
  const std::vector<ValueMeasure> truths{uniform_measure(), uniform_measure()};
  const std::vector<ValueMeasure> reports{front_loaded(), uniform_measure()};
  const auto outcome = payoffs_under_reports(ProcedureKind::Surplus, truths, reports);
  REQUIRE(ok(outcome));
  const StrategyOutcome& so = result(outcome);
  CHECK(so.allocation.portions[0] == IntervalSet::of({{rat(0), rat(7, 32)}}));
  CHECK(so.true_payoffs[0] == rat(7, 32));
  CHECK(so.true_payoffs[0] < rat(1, 2));
}

TEST_CASE("truthful reports reproduce the procedure's own payoffs") {
  const std::vector<ValueMeasure> ms{uniform_measure(), half_threehalves()};
  const auto outcome = payoffs_under_reports(ProcedureKind::Surplus, ms, ms);
  REQUIRE(ok(outcome));
  const auto sp = surplus_procedure(ms[0], ms[1]);
  CHECK(result(outcome).true_payoffs == result(sp).payoffs);
}

TEST_CASE("reports alone determine the allocation under ep") {
  const std::vector<ValueMeasure> truths{outer_quarters(), half_threehalves(),
                                         uniform_measure()};
  const std::vector<ValueMeasure> reports(3, uniform_measure());
  const auto outcome = payoffs_under_reports(ProcedureKind::Equitability, truths, reports);
  REQUIRE(ok(outcome));
  const StrategyOutcome& so = result(outcome);
  CHECK(so.allocation.portions[0] == IntervalSet::of({{rat(0), rat(1, 3)}}));
  CHECK(so.true_payoffs[0] == value(truths[0], so.allocation.portions[0]));
}

TEST_CASE("identical-reports floor for the three procedures") {
  const auto sp = identical_reports_floor(ProcedureKind::Surplus, uniform_measure(), 2);
  REQUIRE(ok(sp));
  CHECK(result(sp).payoffs == std::vector<Rational>{rat(1, 2), rat(1, 2)});
  CHECK(result(sp).min_payoff == rat(1, 2));
  CHECK(result(sp).holds);

  const auto ep3 = identical_reports_floor(ProcedureKind::Equitability, uniform_measure(), 3);
  REQUIRE(ok(ep3));
  CHECK(result(ep3).payoffs == std::vector<Rational>{rat(1, 3), rat(1, 3), rat(1, 3)});
  CHECK(result(ep3).min_payoff == rat(1, 3));
  CHECK(result(ep3).holds);

  // Cut-and-choose with the 1/2-and-3/2 measure: median 2/3, both sides 1/2.
  const auto cc = identical_reports_floor(ProcedureKind::CutAndChoose, half_threehalves(), 2);
  REQUIRE(ok(cc));
  CHECK(result(cc).payoffs == std::vector<Rational>{rat(1, 2), rat(1, 2)});
  CHECK(result(cc).holds);

  // A degenerate median propagates as a procedure error.
  const auto flat = identical_reports_floor(ProcedureKind::Surplus, outer_quarters(), 2);
  REQUIRE_FALSE(ok(flat));
  CHECK(error(flat).kind == ProcedureError::Kind::NonUniqueMedian);
}

TEST_CASE("rightward shift probe: uniform pair is exhausted at the median mark") {
  const std::vector<ValueMeasure> ms{uniform_measure(), uniform_measure()};
  const ShiftProbeResult probe = rightward_shift_probe(ms, {rat(1, 2)});
  CHECK_FALSE(probe.witness_found);
  REQUIRE(probe.best_equal_value);
  CHECK(*probe.best_equal_value == rat(1, 2));
  CHECK(probe.floor == rat(1, 2));
  CHECK_FALSE(probe.trace.empty());
}

TEST_CASE("rightward shift probe: equal shares exist but never beat the floor") {
  const std::vector<ValueMeasure> ms{uniform_measure(), uniform_measure()};
  const ShiftProbeResult probe = rightward_shift_probe(ms, {rat(1, 4)});
  CHECK_FALSE(probe.witness_found);
  CHECK(*probe.best_equal_value == rat(1, 2));
}

TEST_CASE("rightward shift probe: the front-loaded instance is exhausted") {
  const std::vector<ValueMeasure> ms{front_loaded(), uniform_measure()};
  const ShiftProbeResult probe = rightward_shift_probe(ms, {rat(1, 5)});
  CHECK_FALSE(probe.witness_found);
  // The only equal-value crossing sits exactly at the mark, not rightward.
  REQUIRE(probe.best_equal_value);
  CHECK(*probe.best_equal_value == rat(4, 5));
}

TEST_CASE("rightward shift probe: a genuine witness is found when one exists") {
  const std::vector<ValueMeasure> ms{uniform_measure(), uniform_measure()};
  const ShiftProbeResult probe = rightward_shift_probe(ms, {rat(1, 8)});
  // Equal shares force x = 1/2 with value exactly 1/2, never above the floor:
  CHECK_FALSE(probe.witness_found);

  // Opposed supports: splitting at 1/2 hands each player everything it
  // values, an equal share of 1 > 1/2 strictly right of the mark.
  const ValueMeasure bottom =
      measure_from_density({rat(0), rat(1, 2), rat(1)}, {rat(2), rat(0)});
  const ValueMeasure top =
      measure_from_density({rat(0), rat(1, 2), rat(1)}, {rat(0), rat(2)});
  const std::vector<ValueMeasure> ms2{bottom, top};
  const ShiftProbeResult probe2 = rightward_shift_probe(ms2, {rat(1, 8)});
  REQUIRE(probe2.witness_found);
  CHECK(probe2.witness_value == rat(1));
  REQUIRE(probe2.witness_cuts.size() == 1);
  CHECK(probe2.witness_cuts[0] > rat(1, 8));
  // Verify the witness by direct integration.
  Allocation a;
  a.portions = {IntervalSet::of({{rat(0), probe2.witness_cuts[0]}}),
                IntervalSet::of({{probe2.witness_cuts[0], rat(1)}})};
  const auto u = utilities(a, ms2);
  CHECK(u[0] == u[1]);
  CHECK(u[0] == probe2.witness_value);
}

TEST_CASE("probe validates its marks") {
  const std::vector<ValueMeasure> ms{uniform_measure(), uniform_measure()};
  CHECK_THROWS_AS(rightward_shift_probe(ms, {}), std::invalid_argument);
  CHECK_THROWS_AS(rightward_shift_probe(ms, {rat(3, 2)}), std::invalid_argument);
  const std::vector<ValueMeasure> ms3(3, uniform_measure());
  CHECK_THROWS_AS(rightward_shift_probe(ms3, {rat(1, 2), rat(1, 4)}), std::invalid_argument);
}
