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

// Instance generators: exhaustive connected general graphs at desk scale
// (with optional isomorphism dedup by minimum over vertex permutations) and
// seeded random connected graphs. Randomness avoids std distributions so a
// seed reproduces the same graph on every platform.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "factorium/graph.hpp"

namespace factorium {

/// Deterministic RNG wrapper; bounded draws use rejection sampling on the
/// raw 64-bit stream only.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, k).
  int below(int k) {
    if (k <= 0) throw std::invalid_argument("Rng::below: k must be positive");
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % static_cast<std::uint64_t>(k));
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return static_cast<int>(x % static_cast<std::uint64_t>(k));
  }

  /// Uniform in [lo, hi] inclusive.
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }

  bool chance(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    double x = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return x < p;
  }

 private:
  std::mt19937_64 eng_;
};

namespace gen_detail {

// Canonical key: min over all vertex permutations of the sorted edge list.
inline std::vector<std::pair<int, int>> canonical_key(int n,
                                                      const std::vector<Edge>& edges) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::pair<int, int>> best;
  bool have = false;
  do {
    std::vector<std::pair<int, int>> key;
    key.reserve(edges.size());
    for (const Edge& e : edges) {
      int a = perm[e.u], b = perm[e.v];
      key.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(key.begin(), key.end());
    if (!have || key < best) {
      best = std::move(key);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool slots_connected(int n, const std::vector<std::pair<int, int>>& slots,
                            const std::vector<int>& mult) {
  std::vector<std::pair<int, int>> used;
  for (size_t i = 0; i < slots.size(); ++i)
    if (mult[i] > 0 && slots[i].first != slots[i].second) used.push_back(slots[i]);
  // union-find at this size is overkill; BFS over an adjacency mask
  std::uint32_t adj[kMaxVertices] = {};
  for (auto [u, v] : used) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  std::uint32_t comp = 1u, frontier = 1u;
  while (frontier) {
    std::uint32_t next = 0, fr = frontier;
    while (fr) {
      int u = std::countr_zero(fr);
      fr &= fr - 1;
      next |= adj[u];
    }
    frontier = next & ~comp;
    comp |= frontier;
  }
  return comp == VertexSet::full(n).bits;
}

}  // namespace gen_detail

/// All connected general graphs with n <= n_max vertices, m <= m_max edges
/// and per-pair multiplicity <= max_multiplicity, loops optional. With
/// dedup, one representative per isomorphism class (canonical minimum over
/// vertex permutations); campaigns are correct either way.
inline std::vector<GeneralGraph> gen_small_graphs(int n_max, int m_max, int max_multiplicity,
                                                  bool allow_loops, bool dedup = true) {
  if (n_max < 1 || n_max > kMaxVertices || m_max < 0 || m_max > kMaxEdges ||
      max_multiplicity < 0)
    throw std::invalid_argument("gen_small_graphs: parameters out of range");
  std::vector<GeneralGraph> out;
  for (int n = 1; n <= n_max; ++n) {
    // slots in lexicographic (u,v) order, loops included when allowed
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
      for (int v = u; v < n; ++v) {
        if (u == v && !allow_loops) continue;
        slots.emplace_back(u, v);
      }
    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<int> mult(slots.size(), 0);
    auto emit = [&] {
      std::vector<Edge> edges;
      for (size_t i = 0; i < slots.size(); ++i)
        for (int k = 0; k < mult[i]; ++k) edges.push_back(Edge{slots[i].first, slots[i].second});
      if (static_cast<int>(edges.size()) > m_max) return;
      if (!gen_detail::slots_connected(n, slots, mult)) return;
      if (dedup && !seen.insert(gen_detail::canonical_key(n, edges)).second) return;
      out.emplace_back(n, std::move(edges));
    };
    // odometer over multiplicity vectors with a running total
    auto rec = [&](auto&& self, size_t i, int total) -> void {
      if (i == slots.size()) {
        emit();
        return;
      }
      for (int k = 0; k <= max_multiplicity && total + k <= m_max; ++k) {
        mult[i] = k;
        self(self, i + 1, total + k);
      }
      mult[i] = 0;
    };
    rec(rec, 0, 0);
  }
  return out;
}

/// Connected random general graph: m edge draws (loop with probability
/// loop_prob, otherwise a uniform unordered pair), resampled until
/// connected. Same seed, same graph.
inline GeneralGraph gen_random_graph(int n, int m, double loop_prob, std::uint64_t seed) {
  if (n < 1 || n > kMaxVertices || m < 0 || m > kMaxEdges)
    throw std::invalid_argument("gen_random_graph: size out of range");
  if (m < n - 1)
    throw std::invalid_argument("gen_random_graph: m < n-1 cannot be connected");
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
      if (n > 1 && !rng.chance(loop_prob)) {
        int u = rng.below(n);
        int v = rng.below(n - 1);
        if (v >= u) ++v;
        edges.push_back(Edge{std::min(u, v), std::max(u, v)});
      } else {
        int u = rng.below(n);
        edges.push_back(Edge{u, u});
      }
    }
    GeneralGraph g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("gen_random_graph: no connected sample found");
}

}  // namespace factorium
