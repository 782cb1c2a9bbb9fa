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

#include "cakecut/rational.hpp"
#include "cakecut/simplex.hpp"

using namespace cakecut;

TEST_CASE("simplex solves a textbook maximization") {
  // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18
  LpProblem<Rational> lp;
  lp.add_variable(rat(3));
  lp.add_variable(rat(5));
  lp.add_row({rat(1), rat(0)}, LpRelation::LessEq, rat(4));
  lp.add_row({rat(0), rat(2)}, LpRelation::LessEq, rat(12));
  lp.add_row({rat(3), rat(2)}, LpRelation::LessEq, rat(18));
  const auto sol = maximize(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == rat(36));
  CHECK(sol.values == std::vector<Rational>{rat(2), rat(6)});
}

TEST_CASE("simplex handles equality and >= rows via phase 1") {
  // max x + y s.t. x + y + z = 1, x >= 1/4, y <= 1/3
  LpProblem<Rational> lp;
  lp.add_variable(rat(1));
  lp.add_variable(rat(1));
  lp.add_variable(rat(0));
  lp.add_row({rat(1), rat(1), rat(1)}, LpRelation::Equal, rat(1));
  lp.add_row({rat(1), rat(0), rat(0)}, LpRelation::GreaterEq, rat(1, 4));
  lp.add_row({rat(0), rat(1), rat(0)}, LpRelation::LessEq, rat(1, 3));
  const auto sol = maximize(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == rat(1));
}

TEST_CASE("simplex reports infeasibility") {
  LpProblem<Rational> lp;
  lp.add_variable(rat(1));
  lp.add_row({rat(1)}, LpRelation::GreaterEq, rat(2));
  lp.add_row({rat(1)}, LpRelation::LessEq, rat(1));
  CHECK(maximize(lp).status == LpStatus::Infeasible);
}

TEST_CASE("simplex reports unboundedness") {
  LpProblem<Rational> lp;
  lp.add_variable(rat(1));
  lp.add_variable(rat(0));
  lp.add_row({rat(-1), rat(1)}, LpRelation::LessEq, rat(1));
  CHECK(maximize(lp).status == LpStatus::Unbounded);
}

TEST_CASE("simplex survives degenerate ties (Bland's rule)") {
  // A classically cycling instance when pivoting greedily.
  LpProblem<Rational> lp;
  lp.add_variable(rat(3, 4));
  lp.add_variable(rat(-150));
  lp.add_variable(rat(1, 50));
  lp.add_variable(rat(-6));
  lp.add_row({rat(1, 4), rat(-60), rat(-1, 25), rat(9)}, LpRelation::LessEq, rat(0));
  lp.add_row({rat(1, 2), rat(-90), rat(-1, 50), rat(3)}, LpRelation::LessEq, rat(0));
  lp.add_row({rat(0), rat(0), rat(1), rat(0)}, LpRelation::LessEq, rat(1));
  const auto sol = maximize(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == rat(1, 20));
}

TEST_CASE("negative right-hand sides are normalized") {
  // max -x s.t. -x <= -2  (i.e. x >= 2)
  LpProblem<Rational> lp;
  lp.add_variable(rat(-1));
  lp.add_row({rat(-1)}, LpRelation::LessEq, rat(-2));
  const auto sol = maximize(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == rat(-2));
  CHECK(sol.values == std::vector<Rational>{rat(2)});
}

TEST_CASE("redundant equality rows do not break phase 1") {
  LpProblem<Rational> lp;
  lp.add_variable(rat(1));
  lp.add_variable(rat(1));
  lp.add_row({rat(1), rat(1)}, LpRelation::Equal, rat(1));
  lp.add_row({rat(2), rat(2)}, LpRelation::Equal, rat(2));  // same hyperplane
  const auto sol = maximize(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == rat(1));
}
