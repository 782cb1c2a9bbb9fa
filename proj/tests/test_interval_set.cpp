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

#include "cakecut/interval_set.hpp"

using namespace cakecut;

TEST_CASE("intervals are half-open except at the right edge of the cake") {
  const Interval piece{rat(1, 4), rat(1, 2)};
  CHECK(piece.contains(rat(1, 4)));
  CHECK(piece.contains(rat(3, 8)));
  CHECK_FALSE(piece.contains(rat(1, 2)));

  const Interval last{rat(1, 2), rat(1)};
  CHECK(last.contains(rat(1)));
  CHECK(last.contains(rat(1, 2)));
}

TEST_CASE("interval sets normalize: sorted, merged, validated") {
  const IntervalSet s = IntervalSet::of({{rat(1, 2), rat(3, 4)}, {rat(0), rat(1, 2)}});
  REQUIRE(s.pieces().size() == 1);
  CHECK(s.pieces()[0] == Interval{rat(0), rat(3, 4)});
  CHECK(s.total_length() == rat(3, 4));

  CHECK_THROWS_AS(IntervalSet::of({{rat(0), rat(1, 2)}, {rat(1, 4), rat(3, 4)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(IntervalSet::of({{rat(1, 2), rat(1, 2)}}), std::invalid_argument);
  CHECK_THROWS_AS(IntervalSet::of({{rat(1, 2), rat(5, 4)}}), std::invalid_argument);
}

TEST_CASE("atom ownership is positional unless an explicit set is given") {
  const IntervalSet positional = IntervalSet::of({{rat(0), rat(1, 2)}});
  CHECK(positional.owns_atom(rat(1, 4)));
  CHECK_FALSE(positional.owns_atom(rat(1, 2)));  // a cut atom belongs right

  const IntervalSet explicit_atoms =
      IntervalSet::of({{rat(0), rat(1, 2)}}, {rat(3, 4)});
  CHECK(explicit_atoms.owns_atom(rat(3, 4)));
  CHECK_FALSE(explicit_atoms.owns_atom(rat(1, 4)));  // explicit set overrides position
}

TEST_CASE("partition detection over a set of portions") {
  CHECK(pieces_tile_cake({IntervalSet::of({{rat(0), rat(1, 2)}}),
                          IntervalSet::of({{rat(1, 2), rat(1)}})}));
  CHECK(pieces_tile_cake({IntervalSet::whole(), IntervalSet{}}));
  CHECK_FALSE(pieces_tile_cake({IntervalSet::of({{rat(0), rat(1, 2)}}),
                                IntervalSet::of({{rat(3, 4), rat(1)}})}));
  CHECK_FALSE(pieces_tile_cake({IntervalSet::of({{rat(0), rat(1, 2)}})}));
  CHECK_FALSE(pieces_tile_cake({}));
}
