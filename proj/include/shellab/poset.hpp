// Copyright 2026 The Authors.
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

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "shellab/complex.hpp"
#include "shellab/search.hpp"
#include "shellab/shelling.hpp"

namespace shellab {

/// Finite poset on 1..m, built from strict relations a < b. The transitive
/// closure is computed once; covers are its transitive reduction.
class Poset {
 public:
  Poset() = default;

  static Poset from_relations(int m, const std::vector<std::pair<int, int>>& less) {
    if (m < 0) throw InputError("poset: negative element count");
    Poset p;
    p.m_ = m;
    const auto sz = static_cast<std::size_t>(m);
    p.lt_.assign(sz, std::vector<bool>(sz, false));
    for (auto [a, b] : less) {
      if (a < 1 || a > m || b < 1 || b > m)
        throw InputError("poset: element outside 1.." + std::to_string(m));
      if (a == b) throw InputError("poset: relation " + std::to_string(a) + " < itself");
      p.lt_[idx(a)][idx(b)] = true;
    }
    for (std::size_t k = 0; k < sz; ++k)
      for (std::size_t i = 0; i < sz; ++i)
        if (p.lt_[i][k])
          for (std::size_t j = 0; j < sz; ++j)
            if (p.lt_[k][j]) p.lt_[i][j] = true;
    for (std::size_t i = 0; i < sz; ++i)
      if (p.lt_[i][i]) throw InputError("poset: relations contain a cycle");
    p.up_.assign(sz, {});
    for (int a = 1; a <= m; ++a)
      for (int b = 1; b <= m; ++b) {
        if (!p.less(a, b)) continue;
        bool cover = true;
        for (int c = 1; c <= m && cover; ++c)
          if (p.less(a, c) && p.less(c, b)) cover = false;
        if (cover) {
          p.up_[idx(a)].push_back(b);
          p.covers_.emplace_back(a, b);
        }
      }
    return p;
  }

  int size() const { return m_; }
  bool less(int x, int y) const { return lt_[idx(x)][idx(y)]; }
  bool leq(int x, int y) const { return x == y || less(x, y); }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int x) const { return up_[idx(x)]; }

  std::vector<int> minimal_elements() const {
    std::vector<int> out;
    for (int y = 1; y <= m_; ++y) {
      bool min = true;
      for (int x = 1; x <= m_ && min; ++x) min = !less(x, y);
      if (min) out.push_back(y);
    }
    return out;
  }

  /// Unrefinable chains from a minimal to a maximal element, in DFS order.
  std::vector<std::vector<int>> maximal_chains() const {
    std::vector<std::vector<int>> out;
    std::vector<int> chain;
    std::function<void(int)> walk = [&](int x) {
      chain.push_back(x);
      if (upper_covers(x).empty()) out.push_back(chain);
      for (int y : upper_covers(x)) walk(y);
      chain.pop_back();
    };
    for (int x : minimal_elements()) walk(x);
    return out;
  }

  /// All maximal chains have the same number of elements.
  bool is_pure() const {
    if (m_ == 0) return true;
    const auto lo = chain_extent(false), hi = chain_extent(true);
    return lo == hi;
  }

  /// Number of elements in a longest chain, minus one.
  int length() const { return m_ == 0 ? -1 : chain_extent(true) - 1; }

  /// rank[x-1] = number of elements on any unrefinable chain from a minimal
  /// element up to x (the rank of x in P with 0̂, 1̂ adjoined).
  std::vector<int> rank_function() const {
    if (!is_pure()) throw InputError("rank_function: poset is not pure");
    std::vector<int> rank(static_cast<std::size_t>(m_), 0);
    for (int x : minimal_elements()) rank[idx(x)] = 1;
    // Covers are sorted by lower element, not topologically; iterate to a
    // fixpoint (at most m rounds).
    for (bool changed = true; changed;) {
      changed = false;
      for (auto [a, b] : covers_)
        if (rank[idx(a)] != 0 && rank[idx(b)] < rank[idx(a)] + 1) {
          rank[idx(b)] = rank[idx(a)] + 1;
          changed = true;
        }
    }
    return rank;
  }

  /// The subposet on `keep` (ascending), relabelled 1..|keep|.
  Poset induced(const std::vector<int>& keep) const {
    std::vector<std::pair<int, int>> rel;
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j)
        if (less(keep[i], keep[j]))
          rel.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return from_relations(static_cast<int>(keep.size()), rel);
  }

  std::vector<std::pair<int, int>> relations() const {
    std::vector<std::pair<int, int>> rel;
    for (int a = 1; a <= m_; ++a)
      for (int b = 1; b <= m_; ++b)
        if (less(a, b)) rel.emplace_back(a, b);
    return rel;
  }

 private:
  static std::size_t idx(int x) { return static_cast<std::size_t>(x - 1); }

  // Shortest or longest maximal chain, counted in elements.
  int chain_extent(bool longest) const {
    std::vector<int> memo(static_cast<std::size_t>(m_), 0);
    std::function<int(int)> down = [&](int x) {
      int& r = memo[idx(x)];
      if (r != 0) return r;
      int best = 0;
      for (int y : upper_covers(x)) {
        const int d = down(y);
        best = best == 0 ? d : (longest ? std::max(best, d) : std::min(best, d));
      }
      return r = best + 1;
    };
    int best = 0;
    for (int x : minimal_elements()) {
      const int d = down(x);
      best = best == 0 ? d : (longest ? std::max(best, d) : std::min(best, d));
    }
    return best;
  }

  int m_ = 0;
  std::vector<std::vector<bool>> lt_;
  std::vector<std::vector<int>> up_;
  std::vector<std::pair<int, int>> covers_;
};

/// Δ(P): facets are the maximal chains, over the vertex set [m].
template <std::size_t W = 2>
BasicComplex<W> order_complex(const Poset& p) {
  if (p.size() == 0) throw InputError("order_complex: empty poset");
  std::vector<BasicFace<W>> facets;
  for (const auto& chain : p.maximal_chains()) facets.push_back(BasicFace<W>::from_range(chain));
  return BasicComplex<W>::from_facets(facets, p.size());
}

/// P_S = {x : ρ(x) ∈ S}, relabelled 1..|P_S| in increasing label order.
inline Poset rank_selected(const Poset& p, const std::set<int>& s) {
  const auto rank = p.rank_function();
  const int r = p.length() + 1;
  for (int k : s)
    if (k < 1 || k > r) throw InputError("rank_selected: rank " + std::to_string(k) +
                                         " outside 1.." + std::to_string(r));
  std::vector<int> keep;
  for (int x = 1; x <= p.size(); ++x)
    if (s.contains(rank[static_cast<std::size_t>(x - 1)])) keep.push_back(x);
  if (keep.empty()) throw InputError("rank_selected: no elements of the selected ranks");
  return p.induced(keep);
}

/// [x, y] = {z : x ≤ z ≤ y}, relabelled.
inline Poset interval(const Poset& p, int x, int y) {
  if (x < 1 || y < 1 || x > p.size() || y > p.size())
    throw InputError("interval: element out of range");
  if (!p.leq(x, y)) throw InputError("interval: " + std::to_string(x) + " is not ≤ " +
                                     std::to_string(y));
  std::vector<int> keep;
  for (int z = 1; z <= p.size(); ++z)
    if (p.leq(x, z) && p.leq(z, y)) keep.push_back(z);
  return p.induced(keep);
}

/// P ⊕ Q: Q relabelled after P, and every element of P below every element of Q.
inline Poset ordinal_sum(const Poset& p, const Poset& q) {
  const int off = p.size();
  auto rel = p.relations();
  for (auto [a, b] : q.relations()) rel.emplace_back(a + off, b + off);
  for (int a = 1; a <= p.size(); ++a)
    for (int b = 1; b <= q.size(); ++b) rel.emplace_back(a, b + off);
  return Poset::from_relations(p.size() + q.size(), rel);
}

/// P̂: a new bottom (label 1) and top (label m+2); P shifted up by one.
inline Poset with_bounds(const Poset& p) {
  const int m = p.size();
  std::vector<std::pair<int, int>> rel;
  for (auto [a, b] : p.relations()) rel.emplace_back(a + 1, b + 1);
  for (int x = 2; x <= m + 1; ++x) {
    rel.emplace_back(1, x);
    rel.emplace_back(x, m + 2);
  }
  if (m == 0) rel.emplace_back(1, 2);
  return Poset::from_relations(m + 2, rel);
}

/// Strong shellability of Δ(P).
template <std::size_t W = 2>
Answer is_strongly_shellable_poset(const Poset& p, const SearchOptions& opts = {}) {
  return search_strong_shelling_order(order_complex<W>(p), opts).answer;
}

}  // namespace shellab
