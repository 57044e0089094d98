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

// Finite integer sets used as degree prescriptions: the J_n sets of odd
// integers, their J_f* extension with all negative odd integers (stored
// truncated below the reachable colored-degree range), distances, shifts
// and hulls. Sets are stored explicitly so interval audits are exact.

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

#include "factorium/graph.hpp"

namespace factorium {

/// Sorted set of distinct integers. "Allowed" means every gap between
/// consecutive members is at most 2.
class IntSet {
 public:
  IntSet() = default;
  explicit IntSet(std::vector<int> values) : v_(std::move(values)) {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
  }
  static IntSet of(std::initializer_list<int> values) {
    return IntSet(std::vector<int>(values));
  }

  bool empty() const { return v_.empty(); }
  int size() const { return static_cast<int>(v_.size()); }
  const std::vector<int>& values() const { return v_; }

  int min() const { require_nonempty(); return v_.front(); }
  int max() const { require_nonempty(); return v_.back(); }

  bool contains(int x) const {
    return std::binary_search(v_.begin(), v_.end(), x);
  }

  /// min over h of |x - h|; zero iff x is a member.
  int dist(int x) const {
    require_nonempty();
    auto it = std::lower_bound(v_.begin(), v_.end(), x);
    int best = INT_MAX;
    if (it != v_.end()) best = *it - x;
    if (it != v_.begin()) best = std::min(best, x - *(it - 1));
    return best;
  }

  bool is_allowed() const {
    for (size_t i = 1; i < v_.size(); ++i)
      if (v_[i] - v_[i - 1] > 2) return false;
    return true;
  }

  /// {a - k : a in A}. Allowedness is translation invariant.
  IntSet shifted(int k) const {
    std::vector<int> out;
    out.reserve(v_.size());
    for (int a : v_) out.push_back(a - k);
    return IntSet(std::move(out));
  }

  /// Convex hull [min, max].
  std::pair<int, int> hull() const {
    require_nonempty();
    return {v_.front(), v_.back()};
  }

  bool subset_of(const IntSet& o) const {
    for (int x : v_)
      if (!o.contains(x)) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "{";
    for (size_t i = 0; i < v_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v_[i]);
    }
    return s + "}";
  }

  friend bool operator==(const IntSet& a, const IntSet& b) { return a.v_ == b.v_; }
  friend bool operator!=(const IntSet& a, const IntSet& b) { return !(a == b); }

 private:
  void require_nonempty() const {
    if (v_.empty()) throw std::logic_error("IntSet: empty set has no extrema");
  }
  std::vector<int> v_;
};

/// J_n = {1,3,...,n} for odd n and {1,3,...,n-1,n} for even n.
inline IntSet make_jn(int n) {
  if (n < 1) throw std::invalid_argument("make_jn: n must be >= 1");
  std::vector<int> v;
  for (int x = 1; x <= n; x += 2) v.push_back(x);
  if (n % 2 == 0) v.push_back(n);
  return IntSet(std::move(v));
}

/// J_f*(v) = J_{f(v)} together with all negative odd integers, truncated
/// below at the largest odd integer L strictly less than -deg(v). The
/// truncation is exact: every reachable colored degree satisfies
/// Phi >= -deg(v) > L, so distance queries never see the cut.
inline IntSet make_jf_star(int fv, int degv) {
  if (fv < 1) throw std::invalid_argument("make_jf_star: f value must be >= 1");
  if (degv < 0) throw std::invalid_argument("make_jf_star: degree must be >= 0");
  int lower = -degv - 1;
  if (lower % 2 == 0) --lower;
  std::vector<int> v;
  for (int x = lower; x <= -1; x += 2) v.push_back(x);
  IntSet jn = make_jn(fv);
  for (int x : jn.values()) v.push_back(x);
  return IntSet(std::move(v));
}

/// Per-vertex prescription sets, defined on all of V.
class DegreeSpec {
 public:
  explicit DegreeSpec(std::vector<IntSet> sets) : sets_(std::move(sets)) {
    for (const IntSet& s : sets_)
      if (s.empty()) throw std::invalid_argument("DegreeSpec: empty prescription set");
  }

  int size() const { return static_cast<int>(sets_.size()); }
  const IntSet& at(int v) const { return sets_[v]; }

  DegreeSpec with(int v, IntSet s) const {
    std::vector<IntSet> out = sets_;
    out[v] = std::move(s);
    return DegreeSpec(std::move(out));
  }

  friend bool operator==(const DegreeSpec& a, const DegreeSpec& b) {
    return a.sets_ == b.sets_;
  }

 private:
  std::vector<IntSet> sets_;
};

/// Same set at every vertex.
inline DegreeSpec uniform_spec(int n, const IntSet& s) {
  return DegreeSpec(std::vector<IntSet>(static_cast<size_t>(n), s));
}

/// The J_f* prescription for a graph: J*_{f(v)} truncated at deg_G(v).
inline DegreeSpec jf_star_spec(const GeneralGraph& g, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != g.vertex_count())
    throw std::invalid_argument("jf_star_spec: f must assign a value to every vertex");
  std::vector<IntSet> sets;
  sets.reserve(f.size());
  for (int v = 0; v < g.vertex_count(); ++v) sets.push_back(make_jf_star(f[v], g.degree(v)));
  return DegreeSpec(std::move(sets));
}

/// The uncolored J_f prescription (degrees are nonnegative).
inline DegreeSpec jf_spec(const GeneralGraph& g, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != g.vertex_count())
    throw std::invalid_argument("jf_spec: f must assign a value to every vertex");
  std::vector<IntSet> sets;
  sets.reserve(f.size());
  for (int v = 0; v < g.vertex_count(); ++v) sets.push_back(make_jn(f[v]));
  return DegreeSpec(std::move(sets));
}

}  // namespace factorium
