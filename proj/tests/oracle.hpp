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

// Test-only brute-force oracles. Plain loops over all 2^m edge subsets with
// no pruning, no incremental state and no tie bookkeeping tricks, kept
// deliberately independent of the search code they are used to check.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "factorium/graph.hpp"
#include "factorium/int_set.hpp"

namespace oracle {

inline int charge_at(const factorium::GeneralGraph& g, const factorium::EndColoring& chi,
                     int e, int v) {
  const factorium::Edge& ed = g.edge(e);
  using factorium::EndColor;
  if (ed.is_loop()) return ed.u == v ? (chi.u_end(e) == EndColor::Red ? 2 : -2) : 0;
  int c = 0;
  if (ed.u == v) c += chi.u_end(e) == EndColor::Red ? 1 : -1;
  if (ed.v == v) c += chi.v_end(e) == EndColor::Red ? 1 : -1;
  return c;
}

inline std::vector<int> phi_of_mask(const factorium::GeneralGraph& g,
                                    const factorium::EndColoring& chi, std::uint32_t mask) {
  std::vector<int> phi(g.vertex_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e)
    if ((mask >> e) & 1u)
      for (int v = 0; v < g.vertex_count(); ++v) phi[v] += charge_at(g, chi, e, v);
  return phi;
}

inline int set_dist(int x, const factorium::IntSet& s) {
  int best = 1 << 20;
  for (int h : s.values()) best = std::min(best, x > h ? x - h : h - x);
  return best;
}

struct BruteOptima {
  int delta = 1 << 20;
  std::vector<std::set<int>> I;
  std::uint32_t witness = 0;
  std::uint64_t count = 0;
};

inline BruteOptima brute_solve(const factorium::GeneralGraph& g,
                               const factorium::EndColoring& chi,
                               const factorium::DegreeSpec& spec) {
  BruteOptima out;
  out.I.assign(g.vertex_count(), {});
  std::uint32_t total = 1u << g.edge_count();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<int> phi = phi_of_mask(g, chi, mask);
    int delta = 0;
    for (int v = 0; v < g.vertex_count(); ++v) delta += set_dist(phi[v], spec.at(v));
    if (delta < out.delta) {
      out.delta = delta;
      out.count = 0;
      out.witness = mask;
      for (auto& s : out.I) s.clear();
    }
    if (delta == out.delta) {
      ++out.count;
      for (int v = 0; v < g.vertex_count(); ++v) out.I[v].insert(phi[v]);
    }
  }
  return out;
}

inline bool brute_has_factor(const factorium::GeneralGraph& g, const factorium::EndColoring& chi,
                             const factorium::DegreeSpec& spec) {
  std::uint32_t total = 1u << g.edge_count();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<int> phi = phi_of_mask(g, chi, mask);
    bool ok = true;
    for (int v = 0; v < g.vertex_count() && ok; ++v) ok = spec.at(v).contains(phi[v]);
    if (ok) return true;
  }
  return false;
}

inline bool jn_member(int d, int f) { return (d % 2 == 1 && d >= 1 && d <= f) || d == f; }

inline bool brute_has_uncolored_jf(const factorium::GeneralGraph& g, const std::vector<int>& f) {
  std::uint32_t total = 1u << g.edge_count();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<int> deg(g.vertex_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e)
      if ((mask >> e) & 1u) {
        const factorium::Edge& ed = g.edge(e);
        if (ed.is_loop()) {
          deg[ed.u] += 2;
        } else {
          deg[ed.u] += 1;
          deg[ed.v] += 1;
        }
      }
    bool ok = true;
    for (int v = 0; v < g.vertex_count() && ok; ++v) ok = jn_member(deg[v], f[v]);
    if (ok) return true;
  }
  return false;
}

inline factorium::IntSet to_int_set(const std::set<int>& s) {
  return factorium::IntSet(std::vector<int>(s.begin(), s.end()));
}

}  // namespace oracle
