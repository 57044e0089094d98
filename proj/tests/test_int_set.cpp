// Copyright 2026 The Factorium Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include "factorium/int_set.hpp"

using namespace factorium;

TEST_CASE("make_jn") {
  CHECK(make_jn(5) == IntSet::of({1, 3, 5}));
  CHECK(make_jn(4) == IntSet::of({1, 3, 4}));
  CHECK(make_jn(1) == IntSet::of({1}));
  CHECK(make_jn(2) == IntSet::of({1, 2}));
  CHECK_THROWS_AS(make_jn(0), std::invalid_argument);
}

TEST_CASE("make_jf_star") {
  CHECK(make_jf_star(1, 1) == IntSet::of({-3, -1, 1}));
  CHECK(make_jf_star(2, 2) == IntSet::of({-3, -1, 1, 2}));
  CHECK(make_jf_star(4, 0) == IntSet::of({-1, 1, 3, 4}));
  CHECK_THROWS_AS(make_jf_star(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_jf_star(1, -1), std::invalid_argument);
}

TEST_CASE("make_jf_star truncation is invisible to reachable queries") {
  for (int fv = 1; fv <= 6; ++fv) {
    for (int degv = 0; degv <= 6; ++degv) {
      IntSet truncated = make_jf_star(fv, degv);
      // extend the stored set by ten more odd integers below its minimum
      std::vector<int> ext = truncated.values();
      for (int k = 1; k <= 10; ++k) ext.push_back(truncated.min() - 2 * k);
      IntSet extended(ext);
      for (int x = -degv; x <= degv + fv + 3; ++x)
        CHECK(truncated.dist(x) == extended.dist(x));

      CHECK(truncated.is_allowed());
      CHECK(truncated.min() < -degv);  // below every reachable colored degree

      // nonnegative part is exactly J_f
      std::vector<int> nonneg;
      for (int x : truncated.values())
        if (x >= 0) nonneg.push_back(x);
      CHECK(IntSet(nonneg) == make_jn(fv));
      CHECK(make_jn(fv).subset_of(truncated));
    }
  }
}

TEST_CASE("dist") {
  CHECK(IntSet::of({1, 3, 5}).dist(1) == 0);
  CHECK(IntSet::of({-3, -1, 1, 2}).dist(0) == 1);
  CHECK(IntSet::of({1, 3, 4}).dist(6) == 2);
  CHECK(IntSet::of({5}).dist(-5) == 10);

  // 1-Lipschitz in the query point
  IntSet s = IntSet::of({-4, -1, 0, 2, 7});
  for (int x = -10; x < 10; ++x) CHECK(std::abs(s.dist(x) - s.dist(x + 1)) <= 1);
}

TEST_CASE("is_allowed") {
  CHECK(IntSet::of({1, 3, 4}).is_allowed());
  CHECK(!IntSet::of({1, 4}).is_allowed());
  CHECK(IntSet::of({0}).is_allowed());
}

TEST_CASE("shifted") {
  CHECK(IntSet::of({1, 3}).shifted(0) == IntSet::of({1, 3}));
  CHECK(IntSet::of({1, 3, 4}).shifted(2) == IntSet::of({-1, 1, 2}));
  CHECK(IntSet::of({-1, 1}).shifted(-1) == IntSet::of({0, 2}));
  CHECK(IntSet::of({1, 3, 4}).shifted(7).is_allowed());
}

TEST_CASE("hull") {
  CHECK(IntSet::of({1, 3, 4}).hull() == std::pair<int, int>(1, 4));
  CHECK(IntSet::of({-3, -1, 1}).hull() == std::pair<int, int>(-3, 1));
  CHECK(IntSet::of({0}).hull() == std::pair<int, int>(0, 0));
}

TEST_CASE("degree spec") {
  GeneralGraph g = build_graph(2, {{0, 1}});
  DegreeSpec spec = jf_star_spec(g, {1, 1});
  CHECK(spec.at(0) == IntSet::of({-3, -1, 1}));
  CHECK_THROWS_AS(jf_star_spec(g, {1}), std::invalid_argument);
  CHECK_THROWS_AS(DegreeSpec({IntSet{}}), std::invalid_argument);

  DegreeSpec jf = jf_spec(g, {4, 4});
  CHECK(jf.at(1) == IntSet::of({1, 3, 4}));
}
