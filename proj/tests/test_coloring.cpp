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

#include <set>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "factorium/coloring.hpp"
#include "factorium/generate.hpp"
#include "factorium/tutte.hpp"

using namespace factorium;

namespace {

GeneralGraph k2() { return build_graph(2, {{0, 1}}); }
GeneralGraph loop_graph() { return build_graph(1, {{0, 0}}); }
GeneralGraph star3() { return build_graph(4, {{0, 1}, {0, 2}, {0, 3}}); }
GeneralGraph triangle() { return build_graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

}  // namespace

TEST_CASE("coloring enumeration counts and order") {
  CHECK(ColoringEnumerator(k2()).count() == 4);
  CHECK(ColoringEnumerator(loop_graph()).count() == 2);
  CHECK(ColoringEnumerator(star3()).count() == 64);

  // mixed graph: one loop, one non-loop
  GeneralGraph mixed = build_graph(2, {{0, 0}, {0, 1}});
  ColoringEnumerator en(mixed);
  REQUIRE(en.count() == 8);
  std::set<std::string> seen;
  for (std::uint64_t i = 0; i < en.count(); ++i) {
    EndColoring chi = en.at(i);
    CHECK(chi.u_end(0) == chi.v_end(0));  // loop stays monochromatic
    seen.insert(coloring_to_string(chi));
  }
  CHECK(seen.size() == en.count());  // no duplicates

  // canonical order: edge 0 is the most significant digit, red before green
  CHECK(coloring_to_string(en.at(0)) == "rr,rr");
  CHECK(coloring_to_string(en.at(1)) == "rr,rg");
  CHECK(coloring_to_string(en.at(3)) == "rr,gg");
  CHECK(coloring_to_string(en.at(4)) == "gg,rr");
  CHECK(coloring_to_string(en.at(7)) == "gg,gg");
  CHECK_THROWS_AS(en.at(8), std::invalid_argument);
}

TEST_CASE("proof coloring") {
  GeneralGraph s = star3();
  EndColoring chi = proof_coloring(s, VertexSet::single(0));
  for (int e = 0; e < 3; ++e) CHECK(chi.token(e) == "rg");

  CHECK(proof_coloring(s, VertexSet{}) == EndColoring::all_green(s));
  CHECK(proof_coloring(s, s.all_vertices()) == EndColoring::all_red(s));

  GeneralGraph l = loop_graph();
  CHECK(proof_coloring(l, VertexSet::single(0)).token(0) == "rr");
  CHECK(proof_coloring(l, VertexSet{}).token(0) == "gg");
}

TEST_CASE("coloring string round trip") {
  GeneralGraph g = build_graph(3, {{0, 1}, {1, 2}, {2, 2}});
  ColoringEnumerator en(g);
  for (std::uint64_t i = 0; i < en.count(); ++i) {
    EndColoring chi = en.at(i);
    CHECK(coloring_from_string(g, coloring_to_string(chi)) == chi);
  }
  CHECK_THROWS_AS(coloring_from_string(g, "rr,rg"), std::invalid_argument);
  CHECK_THROWS_AS(coloring_from_string(g, "rr,rg,xx"), std::invalid_argument);
  CHECK_THROWS_AS(coloring_from_string(g, "rr,rg,gg,rr"), std::invalid_argument);
}

TEST_CASE("universal factor check") {
  UniversalVerdict k = universal_factor_check(k2(), {1, 1});
  CHECK(k.all_ok);
  CHECK(k.stats.colorings == 4);
  CHECK(k.stats.with_factor == 4);

  UniversalVerdict k22 = universal_factor_check(k2(), {2, 2});
  CHECK(k22.all_ok);

  UniversalVerdict s = universal_factor_check(star3(), {1, 1, 1, 1});
  CHECK(!s.all_ok);
  REQUIRE(s.counterexample.has_value());
  CHECK(s.counterexample->second == FailureReason::NoFactor);
  // the canonically first failure is the all-red coloring: a star has no
  // perfect matching
  CHECK(s.counterexample->first == EndColoring::all_red(star3()));

  // the violating-set coloring is always a counterexample too
  GeneralGraph st = star3();
  ConditionReport cond = check_condition(st, {1, 1, 1, 1}, true);
  REQUIRE(!cond.holds);
  CHECK(!find_colored_factor(st, proof_coloring(st, cond.worst_set),
                             jf_star_spec(st, {1, 1, 1, 1})));
}

TEST_CASE("factor or critical check") {
  UniversalVerdict t = factor_or_critical_check(triangle(), {1, 1, 1});
  CHECK(t.all_ok);
  CHECK(t.stats.colorings == 64);
  CHECK(t.stats.with_factor + t.stats.critical_without_factor == 64);
  CHECK(t.stats.critical_without_factor > 0);  // the all-red coloring is critical

  GeneralGraph one(1, {});
  UniversalVerdict o = factor_or_critical_check(one, {1});
  CHECK(o.all_ok);
  CHECK(o.stats.colorings == 1);

  UniversalVerdict l = factor_or_critical_check(loop_graph(), {2});
  CHECK(l.all_ok);
  CHECK(l.stats.with_factor == 1);
  CHECK(l.stats.critical_without_factor == 1);

  CHECK_THROWS_AS(factor_or_critical_check(k2(), {1, 1}), std::invalid_argument);
}

TEST_CASE("necessity witness on a small corpus") {
  for (const GeneralGraph& g : gen_small_graphs(3, 3, 2, true)) {
    int n = g.vertex_count();
    for (int fv = 1; fv <= 2; ++fv) {
      std::vector<int> f(n, fv);
      ConditionReport cond = check_condition(g, f, true);
      if (cond.holds) continue;
      EndColoring chi = proof_coloring(g, cond.worst_set);
      INFO("n=" << n << " m=" << g.edge_count() << " f=" << fv
               << " S=" << cond.worst_set.to_string());
      CHECK(!find_colored_factor(g, chi, jf_star_spec(g, f)));
    }
  }
}
