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

// Command line front end.
//
// Exit codes, stable across versions:
//   0  the queried property holds / zero failures
//   1  the property fails (a witness is printed)
//   2  usage, parse or I/O error
//
// Human-readable text is not a stable interface; pass --json for scripting.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "factorium/factorium.hpp"

namespace {

using nlohmann::json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitError = 2;

struct LoadedGraph {
  factorium::GeneralGraph graph;
  std::vector<int> f;
  factorium::EndColoring coloring;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<int> parse_f_flag(const std::string& flag, int n) {
  std::vector<int> out;
  std::stringstream ss(flag);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size() || v < 1) throw std::runtime_error("--f values must be integers >= 1");
    out.push_back(v);
  }
  if (out.size() == 1) out.assign(static_cast<size_t>(n), out[0]);
  if (static_cast<int>(out.size()) != n)
    throw std::runtime_error("--f needs one value or one per vertex");
  return out;
}

// File f and coloring may be overridden / defaulted: --f wins over the f
// line; a missing coloring means all ends red.
LoadedGraph load(const std::string& path, const std::string& f_flag, bool need_f = true) {
  factorium::ParsedGraph parsed = factorium::parse_graph(read_input(path));
  std::vector<int> f;
  if (!f_flag.empty())
    f = parse_f_flag(f_flag, parsed.graph.vertex_count());
  else if (parsed.f)
    f = *parsed.f;
  else if (need_f)
    throw std::runtime_error("no f values: add an 'f' line to the file or pass --f");
  factorium::EndColoring chi =
      parsed.coloring ? *parsed.coloring : factorium::EndColoring::all_red(parsed.graph);
  return LoadedGraph{std::move(parsed.graph), std::move(f), std::move(chi)};
}

json vertex_set_json(factorium::VertexSet s) { return json(s.to_vector()); }

int cmd_check(const std::string& path, const std::string& f_flag, bool nonempty_only,
              bool as_json) {
  LoadedGraph in = load(path, f_flag);
  factorium::ConditionReport rep =
      factorium::check_condition(in.graph, in.f, /*include_empty=*/!nonempty_only);
  if (as_json) {
    json j = {{"holds", rep.holds},
              {"worst_set", vertex_set_json(rep.worst_set)},
              {"deficiency", rep.deficiency},
              {"include_empty", rep.include_empty}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "holds=" << (rep.holds ? "true" : "false") << " S="
              << rep.worst_set.to_string() << " deficiency=" << rep.deficiency << "\n";
  }
  return rep.holds ? kExitHolds : kExitFails;
}

int cmd_factor(const std::string& path, const std::string& f_flag, bool as_json) {
  LoadedGraph in = load(path, f_flag);
  auto factor =
      factorium::find_colored_factor(in.graph, in.coloring, factorium::jf_star_spec(in.graph, in.f));
  if (as_json) {
    json j = {{"found", factor.has_value()},
              {"edges", factor ? json(factor->to_vector()) : json::array()}};
    std::cout << j.dump() << "\n";
  } else if (factor) {
    std::cout << "factor: " << factor->to_string() << "\n";
  } else {
    std::cout << "none\n";
  }
  return factor ? kExitHolds : kExitFails;
}

int cmd_decompose(const std::string& path, const std::string& f_flag, bool as_json) {
  LoadedGraph in = load(path, f_flag);
  factorium::DegreeSpec spec = factorium::jf_star_spec(in.graph, in.f);
  factorium::OptimaSummary sum = factorium::solve(in.graph, in.coloring, spec);
  factorium::Decomposition dec = factorium::classify(sum, spec);
  factorium::CriticalityVerdict crit = factorium::is_critical(in.graph, in.coloring, spec);
  if (as_json) {
    json isets = json::array();
    for (const factorium::IntSet& s : sum.I) isets.push_back(s.values());
    json j = {{"delta", sum.delta},
              {"A", vertex_set_json(dec.A)},
              {"B", vertex_set_json(dec.B)},
              {"C", vertex_set_json(dec.C)},
              {"D", vertex_set_json(dec.D)},
              {"I", isets},
              {"witness", sum.witness.to_vector()},
              {"optima_count", sum.optima_count},
              {"critical", crit.critical}};
    if (crit.deviant_vertex) j["deviant_vertex"] = *crit.deviant_vertex;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "delta=" << sum.delta << "\n";
    std::cout << "A=" << dec.A.to_string() << " B=" << dec.B.to_string() << " C="
              << dec.C.to_string() << " D=" << dec.D.to_string() << "\n";
    for (int v = 0; v < in.graph.vertex_count(); ++v)
      std::cout << "I(" << v << ")=" << sum.I[v].to_string() << "\n";
    std::cout << "witness=" << sum.witness.to_string() << " optima=" << sum.optima_count << "\n";
    std::cout << "critical=" << (crit.critical ? "true" : "false");
    if (crit.deviant_vertex) std::cout << " deviant=" << *crit.deviant_vertex;
    std::cout << "\n";
  }
  return kExitHolds;
}

int cmd_audit(const std::string& path, const std::string& f_flag, bool as_json) {
  LoadedGraph in = load(path, f_flag);
  factorium::VerificationReport rep =
      factorium::audit_structure(in.graph, in.coloring, factorium::jf_star_spec(in.graph, in.f));
  if (as_json) {
    json checks = json::array();
    for (const factorium::CheckResult& c : rep.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    std::cout << json{{"checks", checks}, {"all_passed", rep.all_passed()}}.dump() << "\n";
  } else {
    for (const factorium::CheckResult& c : rep.checks) {
      std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.name;
      if (!c.witness.empty()) std::cout << "  (" << c.witness << ")";
      std::cout << "\n";
    }
  }
  return rep.all_passed() ? kExitHolds : kExitFails;
}

struct VerifyFlags {
  bool exhaustive = false;
  int n_max = 3, m_max = 4, mult = 2;
  bool loops = true;
  int f_max = 3;
  int random_count = 0;
  std::uint64_t seed = 1;
  int rand_n_min = 4, rand_n_max = 4, rand_m_max = 5, f_per_graph = 1;
  double loop_prob = 0.15;
  std::string theorems;
  std::uint64_t audit_budget = 64;
  int threads = 1;
  bool timing = false;
  std::string out_path;
};

int cmd_verify(const VerifyFlags& flags) {
  factorium::CampaignConfig cfg;
  cfg.exhaustive.reset();
  if (flags.exhaustive || flags.random_count == 0) {
    factorium::ExhaustiveCorpus ex;
    ex.n_max = flags.n_max;
    ex.m_max = flags.m_max;
    ex.max_multiplicity = flags.mult;
    ex.allow_loops = flags.loops;
    ex.f_max = flags.f_max;
    cfg.exhaustive = ex;
  }
  if (flags.random_count > 0) {
    factorium::RandomCorpus rc;
    rc.count = flags.random_count;
    rc.seed = flags.seed;
    rc.n_min = flags.rand_n_min;
    rc.n_max = flags.rand_n_max;
    rc.m_max = flags.rand_m_max;
    rc.loop_prob = flags.loop_prob;
    rc.f_max = flags.f_max;
    rc.f_per_graph = flags.f_per_graph;
    cfg.random = rc;
  }
  if (!flags.theorems.empty()) {
    std::stringstream ss(flags.theorems);
    std::string tok;
    while (std::getline(ss, tok, ',')) cfg.theorems.insert(tok);
  }
  cfg.audit_budget = flags.audit_budget;
  cfg.threads = flags.threads;
  cfg.include_timing = flags.timing;

  factorium::CampaignResult result = factorium::run_campaign(cfg);
  if (!flags.out_path.empty()) {
    std::ofstream out(flags.out_path);
    if (!out) throw std::runtime_error("cannot write '" + flags.out_path + "'");
    factorium::write_jsonl(result, out);
  } else {
    factorium::write_jsonl(result, std::cout);
  }
  std::cerr << "instances=" << result.summary.total << " failed=" << result.summary.failed
            << "\n";
  return result.summary.failed == 0 ? kExitHolds : kExitFails;
}

int cmd_gen(bool exhaustive, int n_max, int m_max, int mult, bool loops, int random_count,
            int rand_n, int rand_m, double loop_prob, std::uint64_t seed) {
  std::vector<factorium::GeneralGraph> graphs;
  if (exhaustive || random_count == 0) {
    graphs = factorium::gen_small_graphs(n_max, m_max, mult, loops);
  }
  if (random_count > 0) {
    factorium::Rng rng(seed);
    for (int i = 0; i < random_count; ++i)
      graphs.push_back(factorium::gen_random_graph(rand_n, rand_m, loop_prob, rng.next()));
  }
  for (size_t i = 0; i < graphs.size(); ++i) {
    std::cout << "# graph " << i << "\n" << factorium::write_graph(graphs[i]) << "\n";
  }
  return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"factorium: exact degree-prescribed factors in end-colored general graphs"};
  app.require_subcommand(1);

  std::string path, f_flag;
  bool as_json = false, nonempty_only = false;

  auto add_common = [&](CLI::App* sub, bool with_graph = true) {
    if (with_graph)
      sub->add_option("graph", path, "graph file ('-' for stdin)")->required();
    sub->add_option("--f", f_flag, "f values: one integer or a comma list per vertex");
    sub->add_flag("--json", as_json, "machine-readable output");
  };

  CLI::App* check = app.add_subcommand("check", "scan the Tutte-type condition o(G-S) <= f(S)");
  add_common(check);
  check->add_flag("--nonempty-only", nonempty_only, "quantify over nonempty S only");

  CLI::App* factor = app.add_subcommand("factor", "search a colored J_f*-factor");
  add_common(factor);

  CLI::App* decompose = app.add_subcommand("decompose",
                                           "delta, realized degree sets and the (A,B,C,D) split");
  add_common(decompose);

  CLI::App* audit = app.add_subcommand("audit", "structural audit of one instance");
  add_common(audit);

  VerifyFlags vf;
  CLI::App* verify = app.add_subcommand("verify", "run a verification campaign");
  verify->add_flag("--exhaustive", vf.exhaustive, "exhaustive small-graph corpus (default)");
  verify->add_option("--n", vf.n_max, "exhaustive: max vertices")->capture_default_str();
  verify->add_option("--m", vf.m_max, "exhaustive: max edges")->capture_default_str();
  verify->add_option("--mult", vf.mult, "exhaustive: max edge multiplicity")->capture_default_str();
  verify->add_flag("--loops,!--no-loops", vf.loops, "exhaustive: allow loops");
  verify->add_option("--f-max", vf.f_max, "f values range over 1..f-max")->capture_default_str();
  verify->add_option("--random", vf.random_count, "add N random instances");
  verify->add_option("--seed", vf.seed, "random corpus seed")->capture_default_str();
  verify->add_option("--rand-n-min", vf.rand_n_min, "random: min vertices")->capture_default_str();
  verify->add_option("--rand-n-max", vf.rand_n_max, "random: max vertices")->capture_default_str();
  verify->add_option("--rand-m-max", vf.rand_m_max, "random: max edges")->capture_default_str();
  verify->add_option("--loop-prob", vf.loop_prob, "random: loop probability")->capture_default_str();
  verify->add_option("--f-per-graph", vf.f_per_graph, "random: f vectors sampled per graph")
      ->capture_default_str();
  verify->add_option("--theorems", vf.theorems,
                     "comma list of main-even,main-odd,necessity,classical,corollary,audit");
  verify->add_option("--audit-budget", vf.audit_budget, "colorings audited per instance")
      ->capture_default_str();
  verify->add_option("--threads", vf.threads, "worker threads")->capture_default_str();
  verify->add_flag("--timing", vf.timing, "include real per-instance timings in the report");
  verify->add_option("--out", vf.out_path, "write the JSON-lines report to a file");

  bool gen_exhaustive = false;
  int gen_n = 3, gen_m = 4, gen_mult = 2, gen_random = 0, gen_rand_n = 5, gen_rand_m = 6;
  bool gen_loops = true;
  double gen_loop_prob = 0.15;
  std::uint64_t gen_seed = 1;
  CLI::App* gen = app.add_subcommand("gen", "emit corpus graphs in the text format");
  gen->add_flag("--exhaustive", gen_exhaustive, "exhaustive small-graph corpus (default)");
  gen->add_option("--n", gen_n, "max vertices")->capture_default_str();
  gen->add_option("--m", gen_m, "max edges")->capture_default_str();
  gen->add_option("--mult", gen_mult, "max multiplicity")->capture_default_str();
  gen->add_flag("--loops,!--no-loops", gen_loops, "allow loops");
  gen->add_option("--random", gen_random, "emit N random graphs");
  gen->add_option("--rand-n", gen_rand_n, "random: vertices")->capture_default_str();
  gen->add_option("--rand-m", gen_rand_m, "random: edges")->capture_default_str();
  gen->add_option("--loop-prob", gen_loop_prob, "random: loop probability")->capture_default_str();
  gen->add_option("--seed", gen_seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (check->parsed()) return cmd_check(path, f_flag, nonempty_only, as_json);
    if (factor->parsed()) return cmd_factor(path, f_flag, as_json);
    if (decompose->parsed()) return cmd_decompose(path, f_flag, as_json);
    if (audit->parsed()) return cmd_audit(path, f_flag, as_json);
    if (verify->parsed()) return cmd_verify(vf);
    if (gen->parsed())
      return cmd_gen(gen_exhaustive, gen_n, gen_m, gen_mult, gen_loops, gen_random, gen_rand_n,
                     gen_rand_m, gen_loop_prob, gen_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
