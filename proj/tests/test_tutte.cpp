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

#include "factorium/generate.hpp"
#include "factorium/tutte.hpp"

using namespace factorium;

TEST_CASE("f_sum") {
  CHECK(f_sum({1, 1, 1}, VertexSet::of({0, 1, 2})) == 3);
  CHECK(f_sum({2, 2}, VertexSet{}) == 0);
  CHECK(f_sum({1, 2, 3}, VertexSet::of({0, 2})) == 4);
}

TEST_CASE("check_condition on small graphs") {
  GeneralGraph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  ConditionReport s = check_condition(star, {1, 1, 1, 1}, true);
  CHECK(!s.holds);
  CHECK(s.worst_set == VertexSet::single(0));
  CHECK(s.deficiency == 2);

  GeneralGraph triangle = build_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  ConditionReport t = check_condition(triangle, {1, 1, 1}, false);
  CHECK(t.holds);
  CHECK(t.deficiency == -1);
  CHECK(t.worst_set == VertexSet::single(0));  // least mask among the ties

  // with the empty set included the odd order makes it fail immediately
  ConditionReport t2 = check_condition(triangle, {1, 1, 1}, true);
  CHECK(!t2.holds);
  CHECK(t2.worst_set.empty());
  CHECK(t2.deficiency == 1);

  GeneralGraph k2 = build_graph(2, {{0, 1}});
  ConditionReport k = check_condition(k2, {1, 1}, true);
  CHECK(k.holds);
  CHECK(k.deficiency == 0);
  CHECK(k.worst_set.empty());  // the empty set ties at 0 and wins the tie-break
}

TEST_CASE("odd order always violates the empty-set condition") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + 2 * rng.below(3);
    GeneralGraph g = gen_random_graph(n, rng.between(n - 1, 7), 0.2, rng.next());
    std::vector<int> f(n);
    for (int& x : f) x = rng.between(1, 3);
    CHECK(!check_condition(g, f, true).holds);
  }
}

TEST_CASE("condition is monotone in f") {
  Rng rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    int n = rng.between(1, 6);
    GeneralGraph g = gen_random_graph(n, rng.between(n - 1, 8), 0.2, rng.next());
    std::vector<int> f(n), bigger(n);
    for (int v = 0; v < n; ++v) {
      f[v] = rng.between(1, 3);
      bigger[v] = f[v] + rng.below(3);
    }
    bool include_empty = rng.chance(0.5);
    ConditionReport small = check_condition(g, f, include_empty);
    ConditionReport large = check_condition(g, bigger, include_empty);
    if (small.holds) CHECK(large.holds);
    CHECK(large.deficiency <= small.deficiency);
  }
}
