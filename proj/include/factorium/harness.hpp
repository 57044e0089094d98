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

// End-to-end verification campaigns. For each generated (graph, f) instance
// the harness compares the subset-scan side of the characterizations
// against the factor-search side:
//
//   main-even   o(G-S) <= f(S) for all S        <=>  colored J_f*-factor
//                                                    under every coloring
//   main-odd    o(G-S) <= f(S) for nonempty S   <=>  factor or critical
//                                                    under every coloring
//   necessity   a violating S yields a coloring with no factor
//   classical   Cui-Kano biconditional (odd-valued f, even order) and the
//               Egawa-style implication (simple connected, even order) for
//               uncolored J_f-factors
//   corollary   odd order, even f, condition holds, every colored degree
//               >= f  =>  a factor exists
//   audit       the structural audit passes under every sampled coloring
//
// Reports are JSON lines, one object per instance, summary object last.
// Output is byte-identical across reruns: timing is reported as 0 unless
// explicitly requested.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "factorium/coloring.hpp"
#include "factorium/generate.hpp"
#include "factorium/graph.hpp"
#include "factorium/graph_io.hpp"
#include "factorium/int_set.hpp"
#include "factorium/lovasz.hpp"
#include "factorium/report.hpp"
#include "factorium/tutte.hpp"

namespace factorium {

struct Instance {
  GeneralGraph graph;
  std::vector<int> f;
  std::string provenance;
};

namespace harness_detail {

struct UncoloredSearcher {
  const GeneralGraph& g;
  const std::vector<int>& f;
  int m;
  std::vector<std::vector<int>> finalize_at;
  std::array<int, kMaxVertices> deg{};

  UncoloredSearcher(const GeneralGraph& graph, const std::vector<int>& fv)
      : g(graph), f(fv), m(graph.edge_count()), finalize_at(static_cast<size_t>(m) + 1) {
    std::vector<int> last(g.vertex_count(), -1);
    for (int e = 0; e < m; ++e) {
      last[g.edge(e).u] = e;
      last[g.edge(e).v] = e;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
      finalize_at[static_cast<size_t>(last[v]) + 1].push_back(v);
  }

  bool ok(int v) const {
    int d = deg[v];
    return (d % 2 == 1 && d <= f[v]) || d == f[v];
  }

  bool finalized_ok(int depth) const {
    for (int v : finalize_at[depth])
      if (!ok(v)) return false;
    return true;
  }

  std::optional<std::uint32_t> dfs(int depth, std::uint32_t mask) {
    if (depth == m) return mask;
    if (finalized_ok(depth + 1))
      if (auto r = dfs(depth + 1, mask)) return r;
    const Edge& ed = g.edge(depth);
    int du = ed.is_loop() ? 2 : 1;
    deg[ed.u] += du;
    if (!ed.is_loop()) deg[ed.v] += 1;
    std::optional<std::uint32_t> r;
    if (finalized_ok(depth + 1)) r = dfs(depth + 1, mask | (1u << depth));
    deg[ed.u] -= du;
    if (!ed.is_loop()) deg[ed.v] -= 1;
    return r;
  }
};

}  // namespace harness_detail

/// Uncolored J_f-factor: a spanning subgraph with deg_F(v) in J_{f(v)} for
/// every v (loops count 2). Independent of the colored machinery; the
/// all-red reduction ties the two together in tests.
inline std::optional<SubgraphSelection> find_uncolored_Jf_factor(const GeneralGraph& g,
                                                                 const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != g.vertex_count())
    throw std::invalid_argument("find_uncolored_Jf_factor: f must cover every vertex");
  for (int v : f)
    if (v < 1) throw std::invalid_argument("find_uncolored_Jf_factor: f values must be >= 1");
  check_edge_cap(g.edge_count(), "find_uncolored_Jf_factor");
  harness_detail::UncoloredSearcher s(g, f);
  if (!s.finalized_ok(0)) return std::nullopt;
  if (auto mask = s.dfs(0, 0)) return SubgraphSelection{*mask};
  return std::nullopt;
}

inline std::string describe_condition(const ConditionReport& rep) {
  return std::string("holds=") + (rep.holds ? "true" : "false") + " S=" +
         rep.worst_set.to_string() + " deficiency=" + std::to_string(rep.deficiency);
}

/// Even-order characterization: condition over all S (empty included) iff a
/// colored J_f*-factor exists under every 2-end-coloring.
inline VerificationReport verify_main_even(const Instance& inst) {
  VerificationReport rep;
  rep.id = "main-even";
  if (!is_connected(inst.graph)) {
    rep.checks.push_back(CheckResult::skip("main-even", "graph not connected"));
    return rep;
  }
  ConditionReport cond = check_condition(inst.graph, inst.f, /*include_empty=*/true);
  UniversalVerdict univ = universal_factor_check(inst.graph, inst.f);
  if (cond.holds == univ.all_ok) {
    rep.checks.push_back(CheckResult::ok("main-even", describe_condition(cond)));
  } else {
    std::string w = "condition: " + describe_condition(cond) + "; factors: all_ok=" +
                    (univ.all_ok ? "true" : "false");
    if (univ.counterexample)
      w += " counterexample=" + coloring_to_string(univ.counterexample->first);
    rep.checks.push_back(CheckResult::fail("main-even", w));
  }
  return rep;
}

/// Odd-order characterization: condition over nonempty S iff every coloring
/// admits a factor or leaves the graph critical.
inline VerificationReport verify_main_odd(const Instance& inst) {
  if (inst.graph.vertex_count() % 2 == 0)
    throw std::invalid_argument("verify_main_odd: graph order must be odd");
  VerificationReport rep;
  rep.id = "main-odd";
  if (!is_connected(inst.graph)) {
    rep.checks.push_back(CheckResult::skip("main-odd", "graph not connected"));
    return rep;
  }
  ConditionReport cond = check_condition(inst.graph, inst.f, /*include_empty=*/false);
  UniversalVerdict univ = factor_or_critical_check(inst.graph, inst.f);
  if (cond.holds == univ.all_ok) {
    rep.checks.push_back(CheckResult::ok("main-odd", describe_condition(cond)));
  } else {
    std::string w = "condition: " + describe_condition(cond) + "; factor-or-critical: all_ok=" +
                    (univ.all_ok ? "true" : "false");
    if (univ.counterexample)
      w += " counterexample=" + coloring_to_string(univ.counterexample->first);
    rep.checks.push_back(CheckResult::fail("main-odd", w));
  }
  return rep;
}

/// Odd order, even-valued f, nonempty-set condition holds, and every vertex
/// has colored degree >= f(v) under chi: a colored J_f*-factor must exist.
inline VerificationReport verify_corollary(const Instance& inst, const EndColoring& chi) {
  VerificationReport rep;
  rep.id = "corollary";
  const GeneralGraph& g = inst.graph;
  if (g.vertex_count() % 2 == 0) {
    rep.checks.push_back(CheckResult::skip("corollary", "even order"));
    return rep;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (inst.f[v] % 2 != 0) {
      rep.checks.push_back(CheckResult::skip("corollary", "f not even-valued"));
      return rep;
    }
  if (!is_connected(g)) {
    rep.checks.push_back(CheckResult::skip("corollary", "graph not connected"));
    return rep;
  }
  if (!check_condition(g, inst.f, /*include_empty=*/false).holds) {
    rep.checks.push_back(CheckResult::skip("corollary", "condition fails"));
    return rep;
  }
  std::vector<int> phi = colored_degrees(g, chi, SubgraphSelection::all(g.edge_count()));
  for (int v = 0; v < g.vertex_count(); ++v)
    if (phi[v] < inst.f[v]) {
      rep.checks.push_back(CheckResult::skip("corollary", "colored degree below f"));
      return rep;
    }
  if (find_colored_factor(g, chi, jf_star_spec(g, inst.f)))
    rep.checks.push_back(CheckResult::ok("corollary"));
  else
    rep.checks.push_back(CheckResult::fail(
        "corollary", "premises hold but no factor under " + coloring_to_string(chi)));
  return rep;
}

/// Classical special cases for uncolored J_f-factors: the Cui-Kano
/// biconditional (f odd-valued, even order; general graphs) and the
/// Egawa-style implication (simple connected, even order; any f). Constant
/// f recovers the global-factor variants of both.
inline VerificationReport verify_classical(const Instance& inst) {
  VerificationReport rep;
  rep.id = "classical";
  const GeneralGraph& g = inst.graph;
  bool even_order = g.vertex_count() % 2 == 0;

  bool f_odd = true;
  for (int v : inst.f) f_odd = f_odd && v % 2 == 1;
  if (!f_odd) {
    rep.checks.push_back(CheckResult::skip("cui-kano", "f not odd-valued"));
  } else if (!even_order) {
    rep.checks.push_back(CheckResult::skip("cui-kano", "odd order"));
  } else {
    bool cond = check_condition(g, inst.f, /*include_empty=*/true).holds;
    bool factor = find_uncolored_Jf_factor(g, inst.f).has_value();
    if (cond == factor)
      rep.checks.push_back(CheckResult::ok("cui-kano"));
    else
      rep.checks.push_back(CheckResult::fail(
          "cui-kano", std::string("condition=") + (cond ? "true" : "false") + " factor=" +
                          (factor ? "true" : "false")));
  }

  if (!g.is_simple()) {
    rep.checks.push_back(CheckResult::skip("egawa", "graph not simple"));
  } else if (!is_connected(g)) {
    rep.checks.push_back(CheckResult::skip("egawa", "graph not connected"));
  } else if (!even_order) {
    rep.checks.push_back(CheckResult::skip("egawa", "odd order"));
  } else {
    bool cond = check_condition(g, inst.f, /*include_empty=*/true).holds;
    if (!cond) {
      rep.checks.push_back(CheckResult::ok("egawa", "condition fails; implication vacuous"));
    } else if (find_uncolored_Jf_factor(g, inst.f)) {
      rep.checks.push_back(CheckResult::ok("egawa"));
    } else {
      rep.checks.push_back(CheckResult::fail("egawa", "condition holds but no J_f-factor"));
    }
  }
  return rep;
}

struct ExhaustiveCorpus {
  int n_max = 3;
  int m_max = 4;
  int max_multiplicity = 2;
  bool allow_loops = true;
  bool dedup = true;
  int f_max = 3;
};

struct RandomCorpus {
  int count = 0;  // graphs to draw
  std::uint64_t seed = 1;
  int n_min = 4;
  int n_max = 4;
  int m_max = 5;
  double loop_prob = 0.15;
  int f_max = 3;
  int f_per_graph = 1;  // f vectors sampled per graph
};

struct CampaignConfig {
  std::optional<ExhaustiveCorpus> exhaustive = ExhaustiveCorpus{};
  std::optional<RandomCorpus> random;
  // empty = all of: main-even, main-odd, necessity, classical, corollary, audit
  std::set<std::string> theorems;
  std::uint64_t audit_budget = 64;  // colorings audited per instance (seeded sample beyond)
  std::uint64_t audit_seed = 17;
  int threads = 1;
  bool include_timing = false;
};

struct CampaignSummary {
  std::uint64_t total = 0;
  std::uint64_t failed = 0;
  std::uint64_t seed = 0;
  int cap_vertices = kMaxVertices;
  int cap_edges = kMaxEdges;
};

struct CampaignResult {
  std::vector<Instance> instances;
  std::vector<VerificationReport> reports;
  CampaignSummary summary;
};

namespace harness_detail {

inline bool selected(const std::set<std::string>& theorems, const std::string& name) {
  return theorems.empty() || theorems.count(name) > 0;
}

inline std::vector<Instance> build_instances(const CampaignConfig& cfg) {
  std::vector<Instance> out;
  if (cfg.exhaustive) {
    const ExhaustiveCorpus& ex = *cfg.exhaustive;
    for (const GeneralGraph& g :
         gen_small_graphs(ex.n_max, ex.m_max, ex.max_multiplicity, ex.allow_loops, ex.dedup)) {
      int n = g.vertex_count();
      std::vector<int> f(n, 1);
      // odometer over f in {1..f_max}^V
      while (true) {
        out.push_back(Instance{g, f, "exhaustive"});
        int i = 0;
        while (i < n && f[i] == ex.f_max) f[i++] = 1;
        if (i == n) break;
        ++f[i];
      }
    }
  }
  if (cfg.random && cfg.random->count > 0) {
    const RandomCorpus& rc = *cfg.random;
    if (rc.n_min < 1 || rc.n_min > rc.n_max)
      throw std::invalid_argument("random corpus: need 1 <= n_min <= n_max");
    Rng rng(rc.seed);
    for (int i = 0; i < rc.count; ++i) {
      int n = rng.between(rc.n_min, rc.n_max);
      int m = rng.between(std::max(0, n - 1), std::max(n - 1, rc.m_max));
      std::uint64_t graph_seed = rng.next();
      GeneralGraph g = gen_random_graph(n, m, rc.loop_prob, graph_seed);
      for (int j = 0; j < std::max(1, rc.f_per_graph); ++j) {
        std::vector<int> f(n);
        for (int v = 0; v < n; ++v) f[v] = rng.between(1, rc.f_max);
        out.push_back(Instance{g, std::move(f), "random seed=" + std::to_string(rc.seed)});
      }
    }
  }
  return out;
}

inline VerificationReport verify_instance(const Instance& inst, const CampaignConfig& cfg,
                                          std::uint64_t instance_id) {
  auto started = std::chrono::steady_clock::now();
  const GeneralGraph& g = inst.graph;
  VerificationReport rep;
  rep.id = std::to_string(instance_id);

  if (selected(cfg.theorems, "main-even")) rep.merge(verify_main_even(inst));

  if (selected(cfg.theorems, "main-odd")) {
    if (g.vertex_count() % 2 == 1)
      rep.merge(verify_main_odd(inst));
    else
      rep.checks.push_back(CheckResult::skip("main-odd", "even order"));
  }

  if (selected(cfg.theorems, "necessity")) {
    ConditionReport cond = check_condition(g, inst.f, /*include_empty=*/true);
    if (cond.holds) {
      rep.checks.push_back(CheckResult::skip("necessity-witness", "condition holds"));
    } else {
      EndColoring chi = proof_coloring(g, cond.worst_set);
      if (find_colored_factor(g, chi, jf_star_spec(g, inst.f)))
        rep.checks.push_back(
            CheckResult::fail("necessity-witness", "factor exists under proof coloring for S=" +
                                                       cond.worst_set.to_string()));
      else
        rep.checks.push_back(
            CheckResult::ok("necessity-witness", "S=" + cond.worst_set.to_string()));
    }
  }

  if (selected(cfg.theorems, "classical")) rep.merge(verify_classical(inst));

  bool want_audit = selected(cfg.theorems, "audit");
  bool want_corollary = selected(cfg.theorems, "corollary");
  if (want_audit || want_corollary) {
    ColoringEnumerator en(g);
    std::vector<std::uint64_t> indices;
    if (en.count() <= cfg.audit_budget) {
      for (std::uint64_t i = 0; i < en.count(); ++i) indices.push_back(i);
    } else {
      // seeded sample, deterministic per instance; audits only, never the
      // theorem equivalence checks
      Rng rng(cfg.audit_seed ^ (instance_id * 0x9e3779b97f4a7c15ull));
      std::set<std::uint64_t> picked;
      while (picked.size() < cfg.audit_budget)
        picked.insert(static_cast<std::uint64_t>(rng.next() % en.count()));
      indices.assign(picked.begin(), picked.end());
    }

    CheckResult audit_check = CheckResult::ok("audit-structure");
    std::uint64_t corollary_checked = 0, corollary_skipped = 0;
    CheckResult corollary_check = CheckResult::ok("corollary");
    DegreeSpec spec = jf_star_spec(g, inst.f);
    for (std::uint64_t idx : indices) {
      EndColoring chi = en.at(idx);
      if (want_audit && audit_check.pass) {
        VerificationReport audit = audit_structure(g, chi, spec);
        if (!audit.all_passed()) {
          std::string w = "coloring=" + coloring_to_string(chi);
          for (const CheckResult& c : audit.checks)
            if (!c.pass) w += "; " + c.name + ": " + c.witness;
          audit_check = CheckResult::fail("audit-structure", w);
        }
      }
      if (want_corollary && corollary_check.pass) {
        VerificationReport cor = verify_corollary(inst, chi);
        const CheckResult* c = cor.find("corollary");
        if (!c->pass)
          corollary_check = CheckResult::fail("corollary", c->witness);
        else if (c->skipped)
          ++corollary_skipped;
        else
          ++corollary_checked;
      }
    }
    if (want_audit) {
      if (audit_check.pass)
        audit_check.witness = "colorings=" + std::to_string(indices.size());
      rep.checks.push_back(std::move(audit_check));
    }
    if (want_corollary) {
      if (corollary_check.pass) {
        if (corollary_checked == 0)
          corollary_check =
              CheckResult::skip("corollary", "no sampled coloring met the premises");
        else
          corollary_check.witness = "checked=" + std::to_string(corollary_checked) +
                                    " skipped=" + std::to_string(corollary_skipped);
      }
      rep.checks.push_back(std::move(corollary_check));
    }
  }

  if (cfg.include_timing) {
    auto elapsed = std::chrono::steady_clock::now() - started;
    rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }
  return rep;
}

}  // namespace harness_detail

/// Runs every selected check on every instance of the configured corpus.
/// Reports keep instance generation order regardless of thread count.
inline CampaignResult run_campaign(const CampaignConfig& cfg) {
  CampaignResult result;
  result.instances = harness_detail::build_instances(cfg);
  size_t total = result.instances.size();
  result.reports.resize(total);

  int threads = std::max(1, cfg.threads);
  if (threads == 1 || total <= 1) {
    for (size_t i = 0; i < total; ++i)
      result.reports[i] =
          harness_detail::verify_instance(result.instances[i], cfg, static_cast<std::uint64_t>(i));
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= total) break;
        result.reports[i] = harness_detail::verify_instance(result.instances[i], cfg,
                                                            static_cast<std::uint64_t>(i));
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  result.summary.total = total;
  result.summary.seed = cfg.random ? cfg.random->seed : 0;
  result.summary.cap_edges = enumeration_edge_cap();
  for (const VerificationReport& rep : result.reports)
    if (!rep.all_passed()) ++result.summary.failed;
  return result;
}

/// JSON-lines serialization: one object per instance, summary object last.
inline void write_jsonl(const CampaignResult& result, std::ostream& out) {
  using nlohmann::json;
  for (size_t i = 0; i < result.reports.size(); ++i) {
    const Instance& inst = result.instances[i];
    const VerificationReport& rep = result.reports[i];
    json checks = json::array();
    for (const CheckResult& c : rep.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    json line = {{"instance_id", i},
                 {"provenance", inst.provenance},
                 {"graph", write_graph(inst.graph)},
                 {"f", inst.f},
                 {"checks", checks},
                 {"millis", rep.millis}};
    out << line.dump() << "\n";
  }
  json caps = {{"vertices", result.summary.cap_vertices}, {"edges", result.summary.cap_edges}};
  json summary = {{"total", result.summary.total},
                  {"failed", result.summary.failed},
                  {"seed", result.summary.seed},
                  {"caps", caps},
                  {"schema", 1}};
  out << summary.dump() << "\n";
}

}  // namespace factorium
