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

// General multigraphs (loops and parallel edges allowed), 2-end-colorings,
// and the signed end-charge arithmetic defined on them. Every type here is
// an immutable value after construction; all operations are pure functions,
// safe to share across concurrent readers.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace factorium {

// Hard construction caps. Everything in this library runs exhaustive
// bit-subset enumeration, so oversized instances are rejected at
// construction instead of running forever.
inline constexpr int kMaxVertices = 24;
inline constexpr int kMaxEdges = 24;

// Enumeration cap on edge count, overridable via FACTORIUM_CAP_EDGES
// (clamped to [1, kMaxEdges]). Read per call so tests can adjust it.
inline int enumeration_edge_cap() {
  if (const char* s = std::getenv("FACTORIUM_CAP_EDGES")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && v >= 1) return static_cast<int>(std::min<long>(v, kMaxEdges));
  }
  return kMaxEdges;
}

inline void check_edge_cap(int m, const char* where) {
  int cap = enumeration_edge_cap();
  if (m > cap)
    throw std::invalid_argument(std::string(where) + ": edge count " +
                                std::to_string(m) + " exceeds enumeration cap " +
                                std::to_string(cap));
}

/// Subset of the vertices 0..n-1, stored as a bit mask (n <= 24).
struct VertexSet {
  std::uint32_t bits = 0;

  static VertexSet single(int v) { return VertexSet{1u << v}; }
  static VertexSet full(int n) { return VertexSet{n >= 32 ? ~0u : (1u << n) - 1u}; }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.bits |= 1u << v;
    return s;
  }

  bool contains(int v) const { return (bits >> v) & 1u; }
  bool empty() const { return bits == 0; }
  int count() const { return std::popcount(bits); }

  VertexSet with(int v) const { return VertexSet{bits | (1u << v)}; }
  VertexSet without(int v) const { return VertexSet{bits & ~(1u << v)}; }
  VertexSet unite(VertexSet o) const { return VertexSet{bits | o.bits}; }
  VertexSet intersect(VertexSet o) const { return VertexSet{bits & o.bits}; }
  VertexSet minus(VertexSet o) const { return VertexSet{bits & ~o.bits}; }
  VertexSet complement(int n) const { return VertexSet{full(n).bits & ~bits}; }
  bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = 0; v < 32; ++v)
      if (contains(v)) out.push_back(v);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : to_vector()) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
  friend bool operator!=(VertexSet a, VertexSet b) { return a.bits != b.bits; }
};

/// Subset of the edge identities 0..m-1 representing a spanning subgraph:
/// every vertex is retained, only edge membership varies.
struct SubgraphSelection {
  std::uint32_t bits = 0;

  static SubgraphSelection none() { return {}; }
  static SubgraphSelection all(int m) {
    return SubgraphSelection{m >= 32 ? ~0u : (1u << m) - 1u};
  }
  static SubgraphSelection of(std::initializer_list<int> es) {
    SubgraphSelection s;
    for (int e : es) s.bits |= 1u << e;
    return s;
  }

  bool contains(int e) const { return (bits >> e) & 1u; }
  bool empty() const { return bits == 0; }
  int count() const { return std::popcount(bits); }
  SubgraphSelection with(int e) const { return SubgraphSelection{bits | (1u << e)}; }
  SubgraphSelection without(int e) const { return SubgraphSelection{bits & ~(1u << e)}; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int e = 0; e < 32; ++e)
      if (contains(e)) out.push_back(e);
    return out;
  }

  std::string to_string() const {
    std::string s = "[";
    bool first = true;
    for (int e : to_vector()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "]";
  }

  friend bool operator==(SubgraphSelection a, SubgraphSelection b) { return a.bits == b.bits; }
  friend bool operator!=(SubgraphSelection a, SubgraphSelection b) { return a.bits != b.bits; }
  friend bool operator<(SubgraphSelection a, SubgraphSelection b) { return a.bits < b.bits; }
};

struct Edge {
  int u = 0;
  int v = 0;
  bool is_loop() const { return u == v; }
};

/// General multigraph: n vertices identified 0..n-1 and a dense edge list.
/// Edge identity is the position in the list; loops and parallel edges are
/// permitted. deg counts each loop as 2.
class GeneralGraph {
 public:
  GeneralGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 1) throw std::invalid_argument("graph: vertex count must be >= 1");
    if (n > kMaxVertices)
      throw std::invalid_argument("graph: vertex count " + std::to_string(n) +
                                  " exceeds cap " + std::to_string(kMaxVertices));
    if (static_cast<int>(edges_.size()) > kMaxEdges)
      throw std::invalid_argument("graph: edge count " + std::to_string(edges_.size()) +
                                  " exceeds cap " + std::to_string(kMaxEdges));
    for (const Edge& e : edges_)
      if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
        throw std::invalid_argument("graph: edge endpoint out of range");
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }
  VertexSet all_vertices() const { return VertexSet::full(n_); }

  /// Degree with loops counted twice.
  int degree(int v) const {
    int d = 0;
    for (const Edge& e : edges_) {
      if (e.is_loop()) {
        if (e.u == v) d += 2;
      } else {
        if (e.u == v) ++d;
        if (e.v == v) ++d;
      }
    }
    return d;
  }

  bool is_simple() const {
    std::vector<std::pair<int, int>> seen;
    for (const Edge& e : edges_) {
      if (e.is_loop()) return false;
      auto key = std::minmax(e.u, e.v);
      std::pair<int, int> p{key.first, key.second};
      if (std::find(seen.begin(), seen.end(), p) != seen.end()) return false;
      seen.push_back(p);
    }
    return true;
  }

  friend bool operator==(const GeneralGraph& a, const GeneralGraph& b) {
    if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
    for (size_t i = 0; i < a.edges_.size(); ++i)
      if (a.edges_[i].u != b.edges_[i].u || a.edges_[i].v != b.edges_[i].v) return false;
    return true;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
};

inline GeneralGraph build_graph(int n, const std::vector<std::pair<int, int>>& endpoints) {
  std::vector<Edge> es;
  es.reserve(endpoints.size());
  for (auto [u, v] : endpoints) es.push_back(Edge{u, v});
  return GeneralGraph(n, std::move(es));
}

enum class EndColor : std::uint8_t { Red, Green };

inline char end_color_char(EndColor c) { return c == EndColor::Red ? 'r' : 'g'; }

/// Per-edge pair of end colors (u-end, v-end). Loop ends always carry the
/// same color.
class EndColoring {
 public:
  using Ends = std::pair<EndColor, EndColor>;

  EndColoring(const GeneralGraph& g, std::vector<Ends> ends) : ends_(std::move(ends)) {
    if (static_cast<int>(ends_.size()) != g.edge_count())
      throw std::invalid_argument("coloring: one end pair required per edge");
    for (int e = 0; e < g.edge_count(); ++e)
      if (g.edge(e).is_loop() && ends_[e].first != ends_[e].second)
        throw std::invalid_argument("coloring: loop ends must share a color (edge " +
                                    std::to_string(e) + ")");
  }

  static EndColoring uniform(const GeneralGraph& g, EndColor c) {
    return EndColoring(g, std::vector<Ends>(g.edge_count(), {c, c}));
  }
  static EndColoring all_red(const GeneralGraph& g) { return uniform(g, EndColor::Red); }
  static EndColoring all_green(const GeneralGraph& g) { return uniform(g, EndColor::Green); }

  int size() const { return static_cast<int>(ends_.size()); }
  const Ends& at(int e) const { return ends_[e]; }
  EndColor u_end(int e) const { return ends_[e].first; }
  EndColor v_end(int e) const { return ends_[e].second; }

  /// Token form per edge: "rr" | "rg" | "gr" | "gg".
  std::string token(int e) const {
    return std::string{end_color_char(ends_[e].first), end_color_char(ends_[e].second)};
  }

  friend bool operator==(const EndColoring& a, const EndColoring& b) {
    return a.ends_ == b.ends_;
  }

 private:
  std::vector<Ends> ends_;
};

/// Maximal connected vertex sets of G - removed, ordered by smallest member.
/// Loops never affect connectivity.
inline std::vector<VertexSet> components(const GeneralGraph& g, VertexSet removed) {
  int n = g.vertex_count();
  removed = removed.intersect(VertexSet::full(n));
  std::uint32_t adj[kMaxVertices] = {};
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    if (removed.contains(e.u) || removed.contains(e.v)) continue;
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  std::vector<VertexSet> out;
  std::uint32_t done = removed.bits;
  for (int v = 0; v < n; ++v) {
    if ((done >> v) & 1u) continue;
    std::uint32_t comp = 1u << v;
    std::uint32_t frontier = comp;
    while (frontier) {
      std::uint32_t next = 0;
      std::uint32_t f = frontier;
      while (f) {
        int u = std::countr_zero(f);
        f &= f - 1;
        next |= adj[u];
      }
      frontier = next & ~comp;
      comp |= frontier;
    }
    done |= comp;
    out.push_back(VertexSet{comp});
  }
  return out;
}

inline bool is_connected(const GeneralGraph& g) {
  return components(g, VertexSet{}).size() == 1;
}

/// o(G - S): number of components of G - S with an odd number of vertices.
inline int odd_component_count(const GeneralGraph& g, VertexSet s) {
  int odd = 0;
  for (const VertexSet& c : components(g, s))
    if (c.count() % 2 == 1) ++odd;
  return odd;
}

/// Edges with exactly one (non-loop) end in S. Loops never cross a boundary.
inline SubgraphSelection boundary(const GeneralGraph& g, VertexSet s) {
  SubgraphSelection out;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) continue;
    if (s.contains(ed.u) != s.contains(ed.v)) out = out.with(e);
  }
  return out;
}

/// Charge contributed by edge e at vertex v: +-2 for a red/green loop
/// centered at v, +-1 per red/green non-loop end at v, 0 if not incident.
inline int end_charge(const GeneralGraph& g, const EndColoring& chi, int e, int v) {
  const Edge& ed = g.edge(e);
  if (ed.is_loop()) {
    if (ed.u != v) return 0;
    return chi.u_end(e) == EndColor::Red ? 2 : -2;
  }
  int c = 0;
  if (ed.u == v) c += chi.u_end(e) == EndColor::Red ? 1 : -1;
  if (ed.v == v) c += chi.v_end(e) == EndColor::Red ? 1 : -1;
  return c;
}

/// e(X) = sum of end charges of e over the vertices of X; always in
/// {0, +-1, +-2}.
inline int set_charge(const GeneralGraph& g, const EndColoring& chi, int e, VertexSet x) {
  int c = 0;
  for (int v : x.to_vector()) c += end_charge(g, chi, e, v);
  return c;
}

/// Colored degree Phi_F(v): sum of end charges at v over the edges of F.
inline int colored_degree(const GeneralGraph& g, const EndColoring& chi,
                          SubgraphSelection f, int v) {
  int phi = 0;
  std::uint32_t bits = f.bits & SubgraphSelection::all(g.edge_count()).bits;
  while (bits) {
    int e = std::countr_zero(bits);
    bits &= bits - 1;
    phi += end_charge(g, chi, e, v);
  }
  return phi;
}

/// Phi_F for every vertex at once.
inline std::vector<int> colored_degrees(const GeneralGraph& g, const EndColoring& chi,
                                        SubgraphSelection f) {
  std::vector<int> phi(g.vertex_count(), 0);
  std::uint32_t bits = f.bits & SubgraphSelection::all(g.edge_count()).bits;
  while (bits) {
    int e = std::countr_zero(bits);
    bits &= bits - 1;
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) {
      phi[ed.u] += chi.u_end(e) == EndColor::Red ? 2 : -2;
    } else {
      phi[ed.u] += chi.u_end(e) == EndColor::Red ? 1 : -1;
      phi[ed.v] += chi.v_end(e) == EndColor::Red ? 1 : -1;
    }
  }
  return phi;
}

/// Induced subgraph on the vertex set keep, with vertices relabeled densely
/// in ascending order of their original ids. Keeps every edge (including
/// loops) whose endpoints both lie in keep, in original id order.
struct InducedSubgraph {
  GeneralGraph graph;
  EndColoring coloring;
  std::vector<int> to_original;  // new id -> original id
  std::vector<int> edge_to_original;
};

inline InducedSubgraph induce(const GeneralGraph& g, const EndColoring& chi, VertexSet keep) {
  std::vector<int> to_original = keep.to_vector();
  if (to_original.empty()) throw std::invalid_argument("induce: empty vertex set");
  std::vector<int> new_id(g.vertex_count(), -1);
  for (size_t i = 0; i < to_original.size(); ++i) new_id[to_original[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  std::vector<EndColoring::Ends> ends;
  std::vector<int> edge_to_original;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (!keep.contains(ed.u) || !keep.contains(ed.v)) continue;
    edges.push_back(Edge{new_id[ed.u], new_id[ed.v]});
    ends.push_back(chi.at(e));
    edge_to_original.push_back(e);
  }
  GeneralGraph sub(static_cast<int>(to_original.size()), std::move(edges));
  EndColoring sub_chi(sub, std::move(ends));
  return InducedSubgraph{std::move(sub), std::move(sub_chi), std::move(to_original),
                         std::move(edge_to_original)};
}

}  // namespace factorium
