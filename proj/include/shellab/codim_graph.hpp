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
#include <limits>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "shellab/complex.hpp"
#include "shellab/search.hpp"
#include "shellab/shelling.hpp"

namespace shellab {

/// Finite simple undirected graph on vertices 0..size()-1.
class Graph {
 public:
  static constexpr int kUnreachable = std::numeric_limits<int>::max();

  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  std::size_t size() const { return adj_.size(); }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw InputError("graph: loops are not allowed");
    if (u >= size() || v >= size()) throw InputError("graph: vertex out of range");
    if (adjacent(u, v)) return;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    std::sort(adj_[u].begin(), adj_[u].end());
    std::sort(adj_[v].begin(), adj_[v].end());
  }

  bool adjacent(std::size_t u, std::size_t v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }
  const std::vector<std::size_t>& neighbors(std::size_t u) const { return adj_[u]; }

  std::size_t edge_count() const {
    std::size_t m = 0;
    for (const auto& a : adj_) m += a.size();
    return m / 2;
  }

  /// Single-source BFS restricted to the vertices in `alive`.
  std::vector<int> bfs(std::size_t source, const IndexSet& alive) const {
    std::vector<int> dist(size(), kUnreachable);
    std::queue<std::size_t> todo;
    dist[source] = 0;
    todo.push(source);
    while (!todo.empty()) {
      const auto u = todo.front();
      todo.pop();
      for (auto w : adj_[u]) {
        if (!alive.test(w) || dist[w] != kUnreachable) continue;
        dist[w] = dist[u] + 1;
        todo.push(w);
      }
    }
    return dist;
  }

  /// All-pairs distances; kUnreachable between components.
  std::vector<std::vector<int>> distances() const {
    const auto alive = IndexSet::all(size());
    std::vector<std::vector<int>> d;
    d.reserve(size());
    for (std::size_t s = 0; s < size(); ++s) d.push_back(bfs(s, alive));
    return d;
  }

 private:
  std::vector<std::vector<std::size_t>> adj_;
};

/// Γ(Δ): one vertex per facet (canonical index), edges at distance 1.
struct CodimGraph {
  Graph graph;
  std::vector<std::vector<int>> dist;

  std::size_t size() const { return graph.size(); }
};

template <std::size_t W>
CodimGraph build_gamma(const BasicComplex<W>& c) {
  CodimGraph g{Graph(c.size()), {}};
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (distance(c.facet(i), c.facet(j)) == 1) g.graph.add_edge(i, j);
  g.dist = g.graph.distances();
  return g;
}

/// Facet pairs whose graph distance differs from their complex distance.
template <std::size_t W>
std::vector<std::pair<std::size_t, std::size_t>> harmonious_violations(
    const BasicComplex<W>& c, const CodimGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (g.dist[i][j] != distance(c.facet(i), c.facet(j))) bad.emplace_back(i, j);
  return bad;
}

template <std::size_t W>
bool is_harmonious(const BasicComplex<W>& c) {
  return harmonious_violations(c, build_gamma(c)).empty();
}

/// Searches a dimension-decreasing strong shelling order in which every pair
/// F_i ≻ F_j has a witness F_k ≻ F_j with dim F_i ≥ dim F_k ≥ dim F_j.
template <std::size_t W>
SearchOutcome<FacetOrder> search_quasi_harmonious_order(const BasicComplex<W>& c,
                                                        const SearchOptions& opts = {}) {
  detail::require_shellability_input(c);
  auto table = detail::strong_witness_table(c);
  const std::size_t t = c.size();
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) {
      if (i == j) continue;
      auto& cell = table.at(i, j);
      const int di = c.facet(i).dim(), dj = c.facet(j).dim();
      for (auto k : cell.indices()) {
        const int dk = c.facet(k).dim();
        if (!(di >= dk && dk >= dj)) cell.reset(k);
      }
    }
  detail::FollowFilter dim_decreasing = [&c](std::size_t last, std::size_t next) {
    return c.facet(next).dim() <= c.facet(last).dim();
  };
  return detail::to_order_outcome(detail::search_order(table, dim_decreasing, opts));
}

template <std::size_t W>
bool is_quasi_harmonious(const BasicComplex<W>& c) {
  return search_quasi_harmonious_order(c).answer == Answer::yes;
}

namespace detail {

/// Removal-order search: deleting vertices one at a time must never change a
/// surviving distance (finite to larger or to unreachable; unreachable pairs
/// may stay unreachable).
class DistancePreservingSearch {
 public:
  DistancePreservingSearch(const Graph& g, NodeBudget& budget)
      : g_(g), budget_(budget), alive_(IndexSet::all(g.size())) {}

  enum class Status { found, dead, exhausted };

  Status run() { return dfs(); }
  const std::vector<std::size_t>& order() const { return order_; }

 private:
  bool removable(std::size_t v, const std::vector<std::vector<int>>& cur) const {
    IndexSet rest = alive_;
    rest.reset(v);
    // Only sources in v's component can see a change.
    for (std::size_t s = 0; s < g_.size(); ++s) {
      if (!rest.test(s) || cur[v][s] == Graph::kUnreachable) continue;
      const auto d = g_.bfs(s, rest);
      for (std::size_t u = 0; u < g_.size(); ++u)
        if (rest.test(u) && d[u] != cur[s][u]) return false;
    }
    return true;
  }

  Status dfs() {
    const auto left = alive_.count();
    if (left <= 1) {
      alive_.for_each([&](std::size_t v) { order_.push_back(v); });
      return Status::found;
    }
    if (dead_.contains(alive_)) return Status::dead;
    std::vector<std::vector<int>> cur(g_.size());
    alive_.for_each([&](std::size_t s) { cur[s] = g_.bfs(s, alive_); });
    for (std::size_t v = 0; v < g_.size(); ++v) {
      if (!alive_.test(v) || !removable(v, cur)) continue;
      if (!budget_.charge()) return Status::exhausted;
      alive_.reset(v);
      order_.push_back(v);
      const Status st = dfs();
      if (st == Status::found) return st;
      order_.pop_back();
      alive_.set(v);
      if (st != Status::dead) return st;
    }
    dead_.insert(alive_);
    return Status::dead;
  }

  const Graph& g_;
  NodeBudget& budget_;
  IndexSet alive_;
  std::vector<std::size_t> order_;
  std::unordered_set<IndexSet, IndexSetHash> dead_;
};

}  // namespace detail

/// Deterministic search for a distance-preserving vertex removal order.
inline SearchOutcome<std::vector<std::size_t>> search_distance_preserving_order(
    const Graph& g, const SearchOptions& opts = {}) {
  SearchOutcome<std::vector<std::size_t>> out;
  NodeBudget budget(opts.max_nodes);
  detail::DistancePreservingSearch s(g, budget);
  const auto st = s.run();
  out.nodes = budget.used();
  if (st == detail::DistancePreservingSearch::Status::found) {
    out.answer = Answer::yes;
    out.witness = s.order();
  } else {
    out.answer = st == detail::DistancePreservingSearch::Status::dead ? Answer::no
                                                                      : Answer::undecided;
  }
  return out;
}

inline std::optional<std::vector<std::size_t>> find_distance_preserving_order(
    const Graph& g) {
  return search_distance_preserving_order(g).witness;
}

/// True iff removing the vertices of `order` one by one never changes a
/// surviving distance.
inline bool is_distance_preserving_order(const Graph& g,
                                         const std::vector<std::size_t>& order) {
  if (!FacetOrder(order).is_permutation_of(g.size())) return false;
  IndexSet alive = IndexSet::all(g.size());
  for (auto v : order) {
    IndexSet rest = alive;
    rest.reset(v);
    for (std::size_t s = 0; s < g.size(); ++s) {
      if (!rest.test(s)) continue;
      const auto before = g.bfs(s, alive);
      const auto after = g.bfs(s, rest);
      for (std::size_t u = 0; u < g.size(); ++u)
        if (rest.test(u) && before[u] != after[u]) return false;
    }
    alive = rest;
  }
  return true;
}

struct GraphMetrics {
  bool connected = true;
  /// Shortest cycle length; 0 for forests.
  int girth = 0;
  /// Largest distance; nullopt when the graph is disconnected.
  std::optional<int> diameter;
  /// Largest finite distance (equals the diameter when connected).
  int max_finite_distance = 0;
};

inline GraphMetrics graph_metrics(const Graph& g) {
  GraphMetrics m;
  int girth = Graph::kUnreachable;
  for (std::size_t s = 0; s < g.size(); ++s) {
    // BFS with parents; a non-tree edge closes a cycle through s of length
    // at most d[u] + d[w] + 1, and the minimum over all s is exact.
    std::vector<int> dist(g.size(), Graph::kUnreachable);
    std::vector<std::size_t> parent(g.size(), g.size());
    std::queue<std::size_t> todo;
    dist[s] = 0;
    todo.push(s);
    while (!todo.empty()) {
      const auto u = todo.front();
      todo.pop();
      for (auto w : g.neighbors(u)) {
        if (dist[w] == Graph::kUnreachable) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          todo.push(w);
        } else if (parent[u] != w) {
          girth = std::min(girth, dist[u] + dist[w] + 1);
        }
      }
    }
    for (std::size_t u = 0; u < g.size(); ++u) {
      if (dist[u] == Graph::kUnreachable)
        m.connected = false;
      else
        m.max_finite_distance = std::max(m.max_finite_distance, dist[u]);
    }
  }
  m.girth = girth == Graph::kUnreachable ? 0 : girth;
  if (m.connected) m.diameter = m.max_finite_distance;
  return m;
}

/// Pure complexes only: an order exists iff Γ(Δ) is harmonious and has a
/// distance-preserving order; the strong shelling order is that removal order
/// reversed.
template <std::size_t W>
SearchOutcome<FacetOrder> decide_pure_ss_via_gamma(const BasicComplex<W>& c,
                                                   const SearchOptions& opts = {}) {
  detail::require_shellability_input(c);
  if (!c.is_pure()) throw InputError("decide_pure_ss_via_gamma: complex is not pure");
  SearchOutcome<FacetOrder> out;
  const auto g = build_gamma(c);
  if (!harmonious_violations(c, g).empty()) {
    out.answer = Answer::no;
    return out;
  }
  auto dpo = search_distance_preserving_order(g.graph, opts);
  out.answer = dpo.answer;
  out.nodes = dpo.nodes;
  if (dpo.witness) {
    FacetOrder ord = FacetOrder(std::move(*dpo.witness)).reversed();
    if (!is_strong_shelling_order(c, ord))
      throw std::logic_error("reversed distance-preserving order failed verification");
    out.witness = std::move(ord);
  }
  return out;
}

/// Graphviz DOT with each graph vertex labelled by its facet.
template <std::size_t W>
std::string to_dot(const BasicComplex<W>& c, const CodimGraph& g) {
  std::ostringstream os;
  os << "graph codim_one {\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    os << "  f" << i << " [label=\"";
    const auto v = c.facet(i).vertices();
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? " " : "") << v[k];
    os << "\"];\n";
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    for (auto j : g.graph.neighbors(i))
      if (i < j) os << "  f" << i << " -- f" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace shellab
