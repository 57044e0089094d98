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

// Enumeration of all 2-end-colorings of a graph and the universally
// quantified factor / criticality checks built on it. Canonical order:
// each edge contributes one digit (rr < rg < gr < gg for non-loops,
// rr < gg for loops) and edge 0 is the most significant digit, so the
// all-red coloring has index 0. Counterexamples are always the canonically
// first failing coloring.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "factorium/graph.hpp"
#include "factorium/int_set.hpp"
#include "factorium/lovasz.hpp"

namespace factorium {

// TODO: dedup colorings equivalent under graph automorphisms; plain
// enumeration is fine at the edge cap but wastes work on symmetric graphs.
class ColoringEnumerator {
 public:
  explicit ColoringEnumerator(const GeneralGraph& g) : g_(&g) {
    check_edge_cap(g.edge_count(), "enumerate_colorings");
    total_ = 1;
    for (int e = 0; e < g.edge_count(); ++e) {
      radix_.push_back(g.edge(e).is_loop() ? 2 : 4);
      total_ *= radix_.back();
    }
  }

  /// 2^(#loops) * 4^(#non-loops).
  std::uint64_t count() const { return total_; }

  EndColoring at(std::uint64_t index) const {
    if (index >= total_) throw std::invalid_argument("coloring index out of range");
    int m = g_->edge_count();
    std::vector<EndColoring::Ends> ends(m, {EndColor::Red, EndColor::Red});
    for (int e = m - 1; e >= 0; --e) {
      int digit = static_cast<int>(index % radix_[e]);
      index /= radix_[e];
      if (radix_[e] == 2) {
        EndColor c = digit == 0 ? EndColor::Red : EndColor::Green;
        ends[e] = {c, c};
      } else {
        EndColor cu = (digit >> 1) == 0 ? EndColor::Red : EndColor::Green;
        EndColor cv = (digit & 1) == 0 ? EndColor::Red : EndColor::Green;
        ends[e] = {cu, cv};
      }
    }
    return EndColoring(*g_, std::move(ends));
  }

 private:
  const GeneralGraph* g_;
  std::vector<int> radix_;
  std::uint64_t total_ = 1;
};

/// The coloring that certifies necessity for a violating set S: an end is
/// red exactly when its incident vertex lies in S.
inline EndColoring proof_coloring(const GeneralGraph& g, VertexSet s) {
  std::vector<EndColoring::Ends> ends;
  ends.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    EndColor cu = s.contains(e.u) ? EndColor::Red : EndColor::Green;
    EndColor cv = s.contains(e.v) ? EndColor::Red : EndColor::Green;
    ends.push_back({cu, cv});
  }
  return EndColoring(g, std::move(ends));
}

/// "rr,rg,gg" in edge id order.
inline std::string coloring_to_string(const EndColoring& chi) {
  std::string out;
  for (int e = 0; e < chi.size(); ++e) {
    if (e) out += ",";
    out += chi.token(e);
  }
  return out;
}

inline EndColoring coloring_from_string(const GeneralGraph& g, const std::string& s) {
  std::vector<EndColoring::Ends> ends;
  size_t pos = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (e > 0) {
      if (pos >= s.size() || s[pos] != ',')
        throw std::invalid_argument("coloring string: expected ',' between tokens");
      ++pos;
    }
    if (pos + 2 > s.size()) throw std::invalid_argument("coloring string: too few tokens");
    auto parse = [&](char c) {
      if (c == 'r') return EndColor::Red;
      if (c == 'g') return EndColor::Green;
      throw std::invalid_argument("coloring string: bad color character");
    };
    ends.push_back({parse(s[pos]), parse(s[pos + 1])});
    pos += 2;
  }
  if (pos != s.size()) throw std::invalid_argument("coloring string: trailing characters");
  return EndColoring(g, std::move(ends));
}

enum class FailureReason { NoFactor, NeitherFactorNorCritical };

struct PerColoringStats {
  std::uint64_t colorings = 0;                // colorings examined
  std::uint64_t with_factor = 0;              // had a colored factor
  std::uint64_t critical_without_factor = 0;  // critical, no factor
};

struct UniversalVerdict {
  bool all_ok = true;
  std::optional<std::pair<EndColoring, FailureReason>> counterexample;
  PerColoringStats stats;
};

/// Does G contain a colored J_f*-factor for every 2-end-coloring? Stops at
/// the canonically first coloring without one.
inline UniversalVerdict universal_factor_check(const GeneralGraph& g, const std::vector<int>& f) {
  DegreeSpec spec = jf_star_spec(g, f);
  ColoringEnumerator en(g);
  UniversalVerdict verdict;
  for (std::uint64_t i = 0; i < en.count(); ++i) {
    EndColoring chi = en.at(i);
    ++verdict.stats.colorings;
    if (find_colored_factor(g, chi, spec)) {
      ++verdict.stats.with_factor;
    } else {
      verdict.all_ok = false;
      verdict.counterexample = {std::move(chi), FailureReason::NoFactor};
      break;
    }
  }
  return verdict;
}

/// For every 2-end-coloring of an odd-order graph: either a colored
/// J_f*-factor exists or the graph is J_f*-critical. Stops at the
/// canonically first coloring with neither.
inline UniversalVerdict factor_or_critical_check(const GeneralGraph& g,
                                                 const std::vector<int>& f) {
  if (g.vertex_count() % 2 == 0)
    throw std::invalid_argument("factor_or_critical_check: graph order must be odd");
  DegreeSpec spec = jf_star_spec(g, f);
  ColoringEnumerator en(g);
  UniversalVerdict verdict;
  for (std::uint64_t i = 0; i < en.count(); ++i) {
    EndColoring chi = en.at(i);
    ++verdict.stats.colorings;
    if (find_colored_factor(g, chi, spec)) {
      ++verdict.stats.with_factor;
    } else if (is_critical(g, chi, spec).critical) {
      ++verdict.stats.critical_without_factor;
    } else {
      verdict.all_ok = false;
      verdict.counterexample = {std::move(chi), FailureReason::NeitherFactorNorCritical};
      break;
    }
  }
  return verdict;
}

}  // namespace factorium
