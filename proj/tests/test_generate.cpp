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
#include "factorium/graph_io.hpp"

using namespace factorium;

TEST_CASE("gen_small_graphs enumerates the tiny corpora") {
  // n <= 2, m <= 2, multiplicity <= 2, no loops: K_1, K_2, doubled edge
  auto a = gen_small_graphs(2, 2, 2, false);
  REQUIRE(a.size() == 3);
  CHECK(a[0].vertex_count() == 1);
  CHECK(a[1] == build_graph(2, {{0, 1}}));
  CHECK(a[2] == build_graph(2, {{0, 1}, {0, 1}}));

  // n <= 1 with loops: K_1 and K_1 with one loop
  auto b = gen_small_graphs(1, 1, 1, true);
  REQUIRE(b.size() == 2);
  CHECK(b[0].edge_count() == 0);
  CHECK(b[1] == build_graph(1, {{0, 0}}));

  // connected simple graphs on up to 3 vertices: K_1, K_2, P_3, K_3
  auto c = gen_small_graphs(3, 3, 1, false);
  REQUIRE(c.size() == 4);
  CHECK(c[2] == build_graph(3, {{0, 2}, {1, 2}}));  // first path the odometer hits
  CHECK(c[3] == build_graph(3, {{0, 1}, {0, 2}, {1, 2}}));

  for (const GeneralGraph& g : gen_small_graphs(3, 4, 2, true)) CHECK(is_connected(g));
}

TEST_CASE("gen_small_graphs dedup collapses isomorphic labelings") {
  // without dedup the path on 3 vertices appears under all three labelings
  auto raw = gen_small_graphs(3, 3, 1, false, /*dedup=*/false);
  auto deduped = gen_small_graphs(3, 3, 1, false, /*dedup=*/true);
  CHECK(raw.size() == 6);      // K_1, K_2, three paths, K_3
  CHECK(deduped.size() == 4);

  // frozen size of the flagship corpus, as a regression guard
  CHECK(gen_small_graphs(3, 4, 2, true).size() == 27);
}

TEST_CASE("gen_random_graph") {
  GeneralGraph tree = gen_random_graph(4, 3, 0.0, 99);
  CHECK(is_connected(tree));
  CHECK(tree.edge_count() == 3);  // m = n-1 and connected: a tree
  for (const Edge& e : tree.edges()) CHECK(!e.is_loop());

  GeneralGraph one = gen_random_graph(1, 0, 0.0, 5);
  CHECK(one.vertex_count() == 1);
  CHECK(one.edge_count() == 0);

  GeneralGraph again = gen_random_graph(4, 3, 0.0, 99);
  CHECK(tree == again);  // same seed, same graph

  GeneralGraph other = gen_random_graph(4, 3, 0.0, 100);
  CHECK(is_connected(other));

  CHECK_THROWS_AS(gen_random_graph(4, 2, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_random_graph(0, 0, 0.0, 1), std::invalid_argument);

  for (int seed = 0; seed < 30; ++seed) {
    GeneralGraph g = gen_random_graph(5, 7, 0.3, static_cast<std::uint64_t>(seed));
    CHECK(is_connected(g));
    CHECK(g.edge_count() == 7);
  }
}

TEST_CASE("rng bounded draws") {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    int x = rng.below(7);
    CHECK(x >= 0);
    CHECK(x < 7);
  }
  CHECK(rng.between(3, 3) == 3);
  CHECK_THROWS_AS(rng.below(0), std::invalid_argument);
  CHECK(!rng.chance(0.0));
  CHECK(rng.chance(1.0));
}
