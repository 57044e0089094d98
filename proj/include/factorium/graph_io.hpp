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

// On-disk graph format, line based, UTF-8, '#' starts a comment:
//
//   vertices <n>          required first directive
//   f <n positive ints>   optional per-vertex f values
//   edge <u> <v> [<cc>]   one line per edge; <cc> is two chars from {r,g}
//                         giving the (u-end, v-end) colors; loops must use
//                         rr or gg; omitted colors default to rr
//
// parse_graph(write_graph(x)) == x for every valid x.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "factorium/graph.hpp"

namespace factorium {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParsedGraph {
  GeneralGraph graph;
  std::optional<std::vector<int>> f;
  std::optional<EndColoring> coloring;  // absent means all ends default to red
};

namespace io_detail {

inline EndColoring::Ends parse_color_token(const std::string& tok, bool loop, int line_no) {
  if (tok.size() != 2 || (tok[0] != 'r' && tok[0] != 'g') || (tok[1] != 'r' && tok[1] != 'g'))
    throw ParseError("line " + std::to_string(line_no) + ": bad color token '" + tok + "'");
  EndColor a = tok[0] == 'r' ? EndColor::Red : EndColor::Green;
  EndColor b = tok[1] == 'r' ? EndColor::Red : EndColor::Green;
  if (loop && a != b)
    throw ParseError("line " + std::to_string(line_no) + ": loop ends must share a color");
  return {a, b};
}

inline long parse_int(const std::string& tok, int line_no) {
  try {
    size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" + tok + "'");
  }
}

}  // namespace io_detail

inline ParsedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  std::optional<std::vector<int>> f;
  std::vector<Edge> edges;
  std::vector<EndColoring::Ends> ends;
  bool any_color = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;

    if (key == "vertices") {
      if (n != -1) throw ParseError("line " + std::to_string(line_no) + ": duplicate 'vertices'");
      std::string tok;
      if (!(ls >> tok))
        throw ParseError("line " + std::to_string(line_no) + ": 'vertices' needs a count");
      long v = io_detail::parse_int(tok, line_no);
      if (v < 1 || v > kMaxVertices)
        throw ParseError("line " + std::to_string(line_no) + ": vertex count out of range [1," +
                         std::to_string(kMaxVertices) + "]");
      n = static_cast<int>(v);
    } else if (key == "f") {
      if (n == -1) throw ParseError("line " + std::to_string(line_no) + ": 'f' before 'vertices'");
      if (f) throw ParseError("line " + std::to_string(line_no) + ": duplicate 'f'");
      std::vector<int> vals;
      std::string tok;
      while (ls >> tok) {
        long v = io_detail::parse_int(tok, line_no);
        if (v < 1) throw ParseError("line " + std::to_string(line_no) + ": f values must be >= 1");
        vals.push_back(static_cast<int>(v));
      }
      if (static_cast<int>(vals.size()) != n)
        throw ParseError("line " + std::to_string(line_no) + ": 'f' needs exactly " +
                         std::to_string(n) + " values");
      f = std::move(vals);
    } else if (key == "edge") {
      if (n == -1) throw ParseError("line " + std::to_string(line_no) + ": 'edge' before 'vertices'");
      std::string ut, vt;
      if (!(ls >> ut >> vt))
        throw ParseError("line " + std::to_string(line_no) + ": 'edge' needs two endpoints");
      long u = io_detail::parse_int(ut, line_no);
      long v = io_detail::parse_int(vt, line_no);
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw ParseError("line " + std::to_string(line_no) + ": edge endpoint out of range");
      std::string cc;
      EndColoring::Ends pair{EndColor::Red, EndColor::Red};
      if (ls >> cc) {
        pair = io_detail::parse_color_token(cc, u == v, line_no);
        any_color = true;
        std::string extra;
        if (ls >> extra)
          throw ParseError("line " + std::to_string(line_no) + ": trailing token '" + extra + "'");
      }
      edges.push_back(Edge{static_cast<int>(u), static_cast<int>(v)});
      ends.push_back(pair);
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown directive '" + key + "'");
    }
  }

  if (n == -1) throw ParseError("missing 'vertices' line");
  GeneralGraph g = [&] {
    try {
      return GeneralGraph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }();
  std::optional<EndColoring> chi;
  if (any_color) chi = EndColoring(g, std::move(ends));
  return ParsedGraph{std::move(g), std::move(f), std::move(chi)};
}

inline std::string write_graph(const GeneralGraph& g,
                               const std::optional<std::vector<int>>& f = std::nullopt,
                               const std::optional<EndColoring>& chi = std::nullopt) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << "\n";
  if (f) {
    out << "f";
    for (int v : *f) out << " " << v;
    out << "\n";
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    out << "edge " << g.edge(e).u << " " << g.edge(e).v;
    if (chi) out << " " << chi->token(e);
    out << "\n";
  }
  return out.str();
}

}  // namespace factorium
