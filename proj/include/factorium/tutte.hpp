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

#pragma once

// Brute-force scan of the Tutte-type condition o(G-S) <= f(S) over all (or
// all nonempty) vertex subsets S. Deliberately kept as a plain subset scan:
// it is the independent oracle the factor machinery is checked against.

#include <climits>
#include <stdexcept>
#include <vector>

#include "factorium/graph.hpp"

namespace factorium {

struct ConditionReport {
  bool holds = true;
  VertexSet worst_set;   // least bitmask attaining the deficiency
  int deficiency = 0;    // max over scanned S of o(G-S) - f(S)
  bool include_empty = true;
};

/// f(S) = sum of f(v) over v in S; zero on the empty set.
inline int f_sum(const std::vector<int>& f, VertexSet s) {
  int total = 0;
  for (int v : s.to_vector()) total += f[v];
  return total;
}

inline ConditionReport check_condition(const GeneralGraph& g, const std::vector<int>& f,
                                       bool include_empty) {
  if (static_cast<int>(f.size()) != g.vertex_count())
    throw std::invalid_argument("check_condition: f must assign a value to every vertex");
  int n = g.vertex_count();
  ConditionReport rep;
  rep.include_empty = include_empty;
  rep.deficiency = INT_MIN;
  std::uint32_t limit = VertexSet::full(n).bits;
  for (std::uint32_t bits = include_empty ? 0 : 1; bits <= limit; ++bits) {
    VertexSet s{bits};
    int d = odd_component_count(g, s) - f_sum(f, s);
    if (d > rep.deficiency) {  // strict: ascending scan keeps the least mask
      rep.deficiency = d;
      rep.worst_set = s;
    }
  }
  rep.holds = rep.deficiency <= 0;
  return rep;
}

}  // namespace factorium
