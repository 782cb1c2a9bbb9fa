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

using namespace cakecut;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(make_rational(Int(-3), Int(-6)) == rat(1, 2));
  CHECK(make_rational(Int(3), Int(-6)) == rat(-1, 2));
  CHECK(to_string(rat(7, 12)) == "7/12");
  CHECK(to_string(rat(-7, 14)) == "-1/2");
  CHECK(to_string(rat(5)) == "5");
  CHECK_THROWS_AS(make_rational(Int(1), Int(0)), std::domain_error);
}

TEST_CASE("parsing accepts p and p/q and rejects everything else") {
  CHECK(parse_rational("7/12") == rat(7, 12));
  CHECK(parse_rational("-7/12") == rat(-7, 12));
  CHECK(parse_rational("3") == rat(3));
  CHECK(parse_rational("0") == rat(0));
  CHECK(parse_rational("10/4") == rat(5, 2));

  CHECK_FALSE(try_parse_rational("1/0"));
  CHECK_FALSE(try_parse_rational(""));
  CHECK_FALSE(try_parse_rational("1/"));
  CHECK_FALSE(try_parse_rational("/2"));
  CHECK_FALSE(try_parse_rational("1/-2"));
  CHECK_FALSE(try_parse_rational("1.5"));
  CHECK_FALSE(try_parse_rational(" 1"));
  CHECK_FALSE(try_parse_rational("1 "));
  CHECK_FALSE(try_parse_rational("1/2/3"));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  const Rational a = rat(1, 3) + rat(1, 6);
  CHECK(a == rat(1, 2));
  CHECK(rat(7, 12) * rat(3, 14) == rat(1, 8));
  CHECK(rat(1, 2) - rat(3, 4) == rat(-1, 4));
  CHECK(rat(1, 10) + rat(2, 10) == rat(3, 10));  // no 0.1 + 0.2 drama here
}
