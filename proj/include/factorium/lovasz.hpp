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

// Exact minimization of the total prescription distance
//
//   delta_H(F) = sum_v dist(Phi_F(v), H(v))
//
// over all spanning subgraphs F, together with everything the structure
// theory hangs off it: the realized degree sets I_H(v), the (A,B,C,D)
// decomposition, the edge weight nu(X,Y), reduced prescriptions H_{X,Y},
// criticality, and a machine audit of the structural facts (no C-D edge,
// the delta formula, the interval properties of I_H on D, critical => delta
// = 1, and criticality of the components of G[D] under H_{A,B}).
//
// The search walks edges in id order; a vertex is scored once all of its
// incident edges are decided. The branch bound "partial delta <= best" is
// non-strict so ties survive and I_H(v) is complete. The witness is the
// lexicographically least optimal bitmask, deterministic across runs.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "factorium/graph.hpp"
#include "factorium/int_set.hpp"
#include "factorium/report.hpp"

namespace factorium {

/// delta and the complete picture of the optima.
struct OptimaSummary {
  int delta = 0;
  std::vector<IntSet> I;        // per vertex: colored degrees over all optima
  SubgraphSelection witness;    // least optimal bitmask
  std::uint64_t optima_count = 0;
};

struct SolveOptions {
  bool prune = true;  // turn off to force plain enumeration (equivalence gate)
};

struct Decomposition {
  VertexSet A, B, C, D;
};

struct CriticalityVerdict {
  bool critical = false;
  std::optional<int> deviant_vertex;  // unique off-spec vertex of the witness
};

/// delta_H(F) for one fixed subgraph.
inline int delta_of(const GeneralGraph& g, const EndColoring& chi, const DegreeSpec& spec,
                    SubgraphSelection f) {
  if (spec.size() != g.vertex_count())
    throw std::invalid_argument("delta_of: prescription must cover every vertex");
  std::vector<int> phi = colored_degrees(g, chi, f);
  int total = 0;
  for (int v = 0; v < g.vertex_count(); ++v) total += spec.at(v).dist(phi[v]);
  return total;
}

namespace lovasz_detail {

// Phi values lie in [-2m, 2m] subset of [-48, 48]; a 97-bit set per vertex.
struct PhiSet {
  std::uint64_t lo = 0, hi = 0;
  static constexpr int kOffset = 2 * kMaxEdges;

  void add(int phi) {
    int i = phi + kOffset;
    if (i < 64)
      lo |= std::uint64_t{1} << i;
    else
      hi |= std::uint64_t{1} << (i - 64);
  }
  void clear() { lo = hi = 0; }

  IntSet to_int_set() const {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
      if ((lo >> i) & 1u) out.push_back(i - kOffset);
    for (int i = 64; i <= 2 * kOffset; ++i)
      if ((hi >> (i - 64)) & 1u) out.push_back(i - kOffset);
    return IntSet(std::move(out));
  }
};

struct Searcher {
  const GeneralGraph& g;
  const DegreeSpec& spec;
  int n, m;
  bool prune;

  // per edge: charge applied at u and at v when the edge is taken
  // (loops carry their whole +-2 on the u slot)
  std::array<int, kMaxEdges> charge_u{}, charge_v{};
  // vertices whose incident edges are all decided once depth d is reached
  std::vector<std::vector<int>> finalize_at;

  std::array<int, kMaxVertices> phi{};
  int best;
  std::uint32_t witness = 0;
  std::uint64_t count = 0;
  std::array<PhiSet, kMaxVertices> isets{};

  Searcher(const GeneralGraph& graph, const EndColoring& chi, const DegreeSpec& s, bool do_prune)
      : g(graph), spec(s), n(graph.vertex_count()), m(graph.edge_count()), prune(do_prune),
        finalize_at(static_cast<size_t>(m) + 1), best(INT_MAX) {
    for (int e = 0; e < m; ++e) {
      const Edge& ed = g.edge(e);
      if (ed.is_loop()) {
        charge_u[e] = chi.u_end(e) == EndColor::Red ? 2 : -2;
        charge_v[e] = 0;
      } else {
        charge_u[e] = chi.u_end(e) == EndColor::Red ? 1 : -1;
        charge_v[e] = chi.v_end(e) == EndColor::Red ? 1 : -1;
      }
    }
    std::vector<int> last(n, -1);
    for (int e = 0; e < m; ++e) {
      last[g.edge(e).u] = e;
      last[g.edge(e).v] = e;
    }
    for (int v = 0; v < n; ++v) finalize_at[static_cast<size_t>(last[v]) + 1].push_back(v);
  }

  int score(int depth) const {
    int s = 0;
    for (int v : finalize_at[depth]) s += spec.at(v).dist(phi[v]);
    return s;
  }

  void candidate(std::uint32_t mask, int delta) {
    if (delta < best) {
      best = delta;
      count = 0;
      witness = mask;
      for (int v = 0; v < n; ++v) isets[v].clear();
    }
    if (delta == best) {
      ++count;
      if (mask < witness) witness = mask;
      for (int v = 0; v < n; ++v) isets[v].add(phi[v]);
    }
  }

  void dfs(int depth, std::uint32_t mask, int partial) {
    if (depth == m) {
      candidate(mask, partial);
      return;
    }
    // leave edge `depth` out
    {
      int p = partial + score(depth + 1);
      if (!prune || p <= best) dfs(depth + 1, mask, p);
    }
    // take it
    const Edge& ed = g.edge(depth);
    phi[ed.u] += charge_u[depth];
    phi[ed.v] += charge_v[depth];
    {
      int p = partial + score(depth + 1);
      if (!prune || p <= best) dfs(depth + 1, mask | (1u << depth), p);
    }
    phi[ed.u] -= charge_u[depth];
    phi[ed.v] -= charge_v[depth];
  }

  OptimaSummary run() {
    dfs(0, 0, score(0));
    OptimaSummary out;
    out.delta = best;
    out.witness = SubgraphSelection{witness};
    out.optima_count = count;
    out.I.reserve(n);
    for (int v = 0; v < n; ++v) out.I.push_back(isets[v].to_int_set());
    return out;
  }
};

}  // namespace lovasz_detail

/// Minimum of delta_H over all 2^m spanning subgraphs, every realized
/// colored degree per vertex, the least optimal bitmask and the optimum
/// count. Exhaustive up to the enumeration cap.
inline OptimaSummary solve(const GeneralGraph& g, const EndColoring& chi, const DegreeSpec& spec,
                           SolveOptions opts = {}) {
  if (spec.size() != g.vertex_count())
    throw std::invalid_argument("solve: prescription must cover every vertex");
  check_edge_cap(g.edge_count(), "solve");
  lovasz_detail::Searcher s(g, chi, spec, opts.prune);
  return s.run();
}

namespace lovasz_detail {

struct FactorSearcher {
  const GeneralGraph& g;
  const DegreeSpec& spec;
  int m;
  std::array<int, kMaxEdges> charge_u{}, charge_v{};
  std::vector<std::vector<int>> finalize_at;
  std::array<int, kMaxVertices> phi{};

  FactorSearcher(const GeneralGraph& graph, const EndColoring& chi, const DegreeSpec& s)
      : g(graph), spec(s), m(graph.edge_count()),
        finalize_at(static_cast<size_t>(m) + 1) {
    int n = g.vertex_count();
    for (int e = 0; e < m; ++e) {
      const Edge& ed = g.edge(e);
      if (ed.is_loop()) {
        charge_u[e] = chi.u_end(e) == EndColor::Red ? 2 : -2;
        charge_v[e] = 0;
      } else {
        charge_u[e] = chi.u_end(e) == EndColor::Red ? 1 : -1;
        charge_v[e] = chi.v_end(e) == EndColor::Red ? 1 : -1;
      }
    }
    std::vector<int> last(n, -1);
    for (int e = 0; e < m; ++e) {
      last[g.edge(e).u] = e;
      last[g.edge(e).v] = e;
    }
    for (int v = 0; v < n; ++v) finalize_at[static_cast<size_t>(last[v]) + 1].push_back(v);
  }

  bool finalized_ok(int depth) const {
    for (int v : finalize_at[depth])
      if (spec.at(v).dist(phi[v]) != 0) return false;
    return true;
  }

  std::optional<std::uint32_t> dfs(int depth, std::uint32_t mask) {
    if (depth == m) return mask;
    if (finalized_ok(depth + 1))
      if (auto r = dfs(depth + 1, mask)) return r;
    const Edge& ed = g.edge(depth);
    phi[ed.u] += charge_u[depth];
    phi[ed.v] += charge_v[depth];
    std::optional<std::uint32_t> r;
    if (finalized_ok(depth + 1)) r = dfs(depth + 1, mask | (1u << depth));
    phi[ed.u] -= charge_u[depth];
    phi[ed.v] -= charge_v[depth];
    return r;
  }

  std::optional<std::uint32_t> run() {
    if (!finalized_ok(0)) return std::nullopt;
    return dfs(0, 0);
  }
};

}  // namespace lovasz_detail

/// Some F with delta_H(F) = 0 (a colored H-factor), if one exists. Exits on
/// the first hit, pruning any branch where a fully-decided vertex is
/// already off prescription.
inline std::optional<SubgraphSelection> find_colored_factor(const GeneralGraph& g,
                                                            const EndColoring& chi,
                                                            const DegreeSpec& spec) {
  if (spec.size() != g.vertex_count())
    throw std::invalid_argument("find_colored_factor: prescription must cover every vertex");
  check_edge_cap(g.edge_count(), "find_colored_factor");
  lovasz_detail::FactorSearcher s(g, chi, spec);
  if (auto mask = s.run()) return SubgraphSelection{*mask};
  return std::nullopt;
}

/// Classification from an already-computed summary: C first (I(v) inside
/// H(v)), then A (min I >= max H), then B (max I <= min H), then D. A and
/// B are disjoint for non-C vertices; this is checked at runtime.
inline Decomposition classify(const OptimaSummary& sum, const DegreeSpec& spec) {
  Decomposition d;
  for (int v = 0; v < spec.size(); ++v) {
    const IntSet& iv = sum.I[v];
    const IntSet& hv = spec.at(v);
    if (iv.subset_of(hv)) {
      d.C = d.C.with(v);
      continue;
    }
    bool in_a = iv.min() >= hv.max();
    bool in_b = iv.max() <= hv.min();
    if (in_a && in_b)
      throw std::logic_error("classify: vertex qualifies for both A and B");
    if (in_a)
      d.A = d.A.with(v);
    else if (in_b)
      d.B = d.B.with(v);
    else
      d.D = d.D.with(v);
  }
  return d;
}

inline Decomposition decompose(const GeneralGraph& g, const EndColoring& chi,
                               const DegreeSpec& spec, SolveOptions opts = {}) {
  return classify(solve(g, chi, spec, opts), spec);
}

/// nu(X,Y) = sum over edges with e(Y) - e(X) >= 1 of that difference.
inline int nu(const GeneralGraph& g, const EndColoring& chi, VertexSet x, VertexSet y) {
  if (x.intersects(y)) throw std::invalid_argument("nu: X and Y must be disjoint");
  int total = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    int d = set_charge(g, chi, e, y) - set_charge(g, chi, e, x);
    if (d >= 1) total += d;
  }
  return total;
}

/// H_{X,Y}(z) = H(z) - sum of e(z) over edges with e(Y) - e(X) = 1, for
/// z outside X and Y. Entries at X and Y are left untouched and carry no
/// meaning.
inline DegreeSpec reduced_spec(const GeneralGraph& g, const EndColoring& chi,
                               const DegreeSpec& spec, VertexSet x, VertexSet y) {
  if (x.intersects(y)) throw std::invalid_argument("reduced_spec: X and Y must be disjoint");
  int n = g.vertex_count();
  std::vector<int> shift(n, 0);
  VertexSet xy = x.unite(y);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (set_charge(g, chi, e, y) - set_charge(g, chi, e, x) != 1) continue;
    const Edge& ed = g.edge(e);
    if (!xy.contains(ed.u)) shift[ed.u] += end_charge(g, chi, e, ed.u);
    if (!ed.is_loop() && ed.v != ed.u && !xy.contains(ed.v))
      shift[ed.v] += end_charge(g, chi, e, ed.v);
  }
  std::vector<IntSet> sets;
  sets.reserve(n);
  for (int v = 0; v < n; ++v)
    sets.push_back(xy.contains(v) ? spec.at(v) : spec.at(v).shifted(shift[v]));
  return DegreeSpec(std::move(sets));
}

/// Critical means connected with D_H = V(G); such graphs have delta = 1 and
/// every optimal subgraph leaves exactly one vertex off prescription.
inline CriticalityVerdict is_critical(const GeneralGraph& g, const EndColoring& chi,
                                      const DegreeSpec& spec) {
  OptimaSummary sum = solve(g, chi, spec);
  Decomposition dec = classify(sum, spec);
  CriticalityVerdict verdict;
  if (dec.D != g.all_vertices() || !is_connected(g)) return verdict;
  verdict.critical = true;
  std::vector<int> phi = colored_degrees(g, chi, sum.witness);
  int deviant = -1, deviants = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!spec.at(v).contains(phi[v])) {
      deviant = v;
      ++deviants;
    }
  if (deviants != 1)
    throw std::logic_error("is_critical: critical graph without a unique deviant vertex");
  verdict.deviant_vertex = deviant;
  return verdict;
}

namespace lovasz_detail {

inline bool has_consecutive_pair(const std::vector<int>& sorted) {
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] - sorted[i - 1] == 1) return true;
  return false;
}

}  // namespace lovasz_detail

/// Audits the structural facts on one instance:
///   no-cd-edge            no edge joins C_H and D_H
///   delta-formula         delta = c(D) + sum_B min H - sum_A max H - nu(A,B)
///   interval-structure    for v in D: I(v) allowed, plus both interval
///                         properties of I(v) against H(v)
///   critical-delta-one    critical graphs have delta = 1
///   components-critical   every component of G[D] is critical w.r.t.
///                         H_{A,B} restricted to it
inline VerificationReport audit_structure(const GeneralGraph& g, const EndColoring& chi,
                                          const DegreeSpec& spec) {
  OptimaSummary sum = solve(g, chi, spec);
  Decomposition dec = classify(sum, spec);
  int n = g.vertex_count();
  VerificationReport rep;
  rep.id = "audit";

  {
    CheckResult c = CheckResult::ok("no-cd-edge");
    for (int e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      bool cd = (dec.C.contains(ed.u) && dec.D.contains(ed.v)) ||
                (dec.D.contains(ed.u) && dec.C.contains(ed.v));
      if (cd) {
        c = CheckResult::fail("no-cd-edge", "edge " + std::to_string(e) + " joins C=" +
                                                dec.C.to_string() + " and D=" + dec.D.to_string());
        break;
      }
    }
    rep.checks.push_back(std::move(c));
  }

  {
    int c_of_d = dec.D.empty() ? 0 : static_cast<int>(components(g, dec.D.complement(n)).size());
    int rhs = c_of_d;
    for (int v : dec.B.to_vector()) rhs += spec.at(v).min();
    for (int v : dec.A.to_vector()) rhs -= spec.at(v).max();
    rhs -= nu(g, chi, dec.A, dec.B);
    if (sum.delta == rhs)
      rep.checks.push_back(CheckResult::ok("delta-formula"));
    else
      rep.checks.push_back(CheckResult::fail(
          "delta-formula", "delta=" + std::to_string(sum.delta) + " formula=" +
                               std::to_string(rhs) + " c(D)=" + std::to_string(c_of_d) +
                               " A=" + dec.A.to_string() + " B=" + dec.B.to_string()));
  }

  {
    CheckResult c = CheckResult::ok("interval-structure");
    for (int v : dec.D.to_vector()) {
      const IntSet& iv = sum.I[v];
      const IntSet& hv = spec.at(v);
      if (!iv.is_allowed()) {
        c = CheckResult::fail("interval-structure",
                              "v=" + std::to_string(v) + " I=" + iv.to_string() + " not allowed");
        break;
      }
      auto [lo, hi] = iv.hull();
      bool bad = false;
      for (int u = lo + 1; u < hi && !bad; ++u) {
        if (!iv.contains(u) && iv.contains(u - 1) && iv.contains(u + 1)) {
          if (!hv.contains(u) || hv.contains(u - 1) || hv.contains(u + 1)) {
            c = CheckResult::fail("interval-structure",
                                  "v=" + std::to_string(v) + " hole at " + std::to_string(u) +
                                      " I=" + iv.to_string() + " H=" + hv.to_string());
            bad = true;
          }
        }
      }
      if (bad) break;
      std::vector<int> inter, diff;
      for (int u = lo; u <= hi; ++u) (hv.contains(u) ? inter : diff).push_back(u);
      if (lovasz_detail::has_consecutive_pair(inter) || lovasz_detail::has_consecutive_pair(diff)) {
        c = CheckResult::fail("interval-structure",
                              "v=" + std::to_string(v) + " hull of I=" + iv.to_string() +
                                  " meets H=" + hv.to_string() + " in consecutive integers");
        break;
      }
    }
    if (c.pass) {
      // Off-D allowedness is not asserted anywhere; keep it as an observation.
      int off_total = 0, off_allowed = 0;
      for (int v = 0; v < n; ++v)
        if (!dec.D.contains(v)) {
          ++off_total;
          if (sum.I[v].is_allowed()) ++off_allowed;
        }
      c.witness = "off-D allowed " + std::to_string(off_allowed) + "/" + std::to_string(off_total);
    }
    rep.checks.push_back(std::move(c));
  }

  {
    bool critical = dec.D == g.all_vertices() && is_connected(g);
    if (!critical)
      rep.checks.push_back(CheckResult::ok("critical-delta-one", "not critical"));
    else if (sum.delta == 1)
      rep.checks.push_back(CheckResult::ok("critical-delta-one"));
    else
      rep.checks.push_back(CheckResult::fail("critical-delta-one",
                                             "critical but delta=" + std::to_string(sum.delta)));
  }

  {
    CheckResult c = CheckResult::ok("components-critical");
    if (!dec.D.empty()) {
      DegreeSpec reduced = reduced_spec(g, chi, spec, dec.A, dec.B);
      for (const VertexSet& comp : components(g, dec.D.complement(n))) {
        InducedSubgraph sub = induce(g, chi, comp);
        std::vector<IntSet> sets;
        sets.reserve(sub.to_original.size());
        for (int orig : sub.to_original) sets.push_back(reduced.at(orig));
        CriticalityVerdict verdict =
            is_critical(sub.graph, sub.coloring, DegreeSpec(std::move(sets)));
        if (!verdict.critical) {
          c = CheckResult::fail("components-critical",
                                "component " + comp.to_string() + " of G[D] not critical");
          break;
        }
      }
    }
    rep.checks.push_back(std::move(c));
  }

  return rep;
}

}  // namespace factorium
