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
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shellab/complex.hpp"
#include "shellab/search.hpp"
#include "shellab/shelling.hpp"

namespace shellab {

/// Pure, and for facets F != G and i in F \ G some j in G \ F has
/// (F \ {i}) ∪ {j} in Δ.
template <std::size_t W>
bool is_matroid(const BasicComplex<W>& c) {
  if (!c.is_pure()) return false;
  for (const auto& f : c.facets())
    for (const auto& g : c.facets()) {
      if (f == g) continue;
      const auto gf = g - f;
      bool ok = true;
      (f - g).for_each([&](int i) {
        if (!ok) return;
        bool found = false;
        gf.for_each([&](int j) {
          if (found) return;
          auto e = f;
          e.erase(i);
          e.insert(j);
          found = c.contains_face(e);
        });
        ok = found;
      });
      if (!ok) return false;
    }
  return true;
}

/// Shiftedness under the given labelling. Checking facets suffices: the
/// condition on a face follows from the condition on any facet containing it.
template <std::size_t W>
bool is_shifted(const BasicComplex<W>& c) {
  for (const auto& f : c.facets()) {
    bool ok = true;
    f.for_each([&](int i) {
      for (int j = i + 1; ok && j <= c.n(); ++j) {
        if (f.contains(j)) continue;
        auto e = f;
        e.erase(i);
        e.insert(j);
        ok = c.contains_face(e);
      }
    });
    if (!ok) return false;
  }
  return true;
}

/// Searches a vertex permutation under which Δ is shifted. perm[v-1] is the
/// new label of v. Exhaustive over n! permutations; budgeted.
template <std::size_t W>
SearchOutcome<std::vector<int>> find_shifting_relabeling(const BasicComplex<W>& c,
                                                         const SearchOptions& opts = {}) {
  SearchOutcome<std::vector<int>> out;
  NodeBudget budget(opts.max_nodes);
  std::vector<int> perm(static_cast<std::size_t>(c.n()));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (!budget.charge()) {
      out.answer = Answer::undecided;
      out.nodes = budget.used();
      return out;
    }
    std::vector<BasicFace<W>> relabelled;
    for (const auto& f : c.facets()) {
      BasicFace<W> g;
      f.for_each([&](int v) { g.insert(perm[static_cast<std::size_t>(v - 1)]); });
      relabelled.push_back(g);
    }
    if (is_shifted(BasicComplex<W>::from_facets(relabelled, c.n()))) {
      out.answer = Answer::yes;
      out.witness = perm;
      out.nodes = budget.used();
      return out;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.answer = Answer::no;
  out.nodes = budget.used();
  return out;
}

struct WeaklyMatroidReport {
  bool holds = true;
  /// Ordered facet pairs (G, F) without a vertex q in G \ F on which they
  /// first disagree; these impose no condition.
  std::size_t vacuous_pairs = 0;
};

/// For distinct facets G, F let q be the smallest vertex of G △ F. When q lies
/// in G, some p > q outside G must have (G \ {q}) ∪ {p} in Δ.
template <std::size_t W>
WeaklyMatroidReport weakly_matroid_report(const BasicComplex<W>& c) {
  WeaklyMatroidReport r;
  for (const auto& g : c.facets())
    for (const auto& f : c.facets()) {
      if (f == g) continue;
      const int q = ((g - f) | (f - g)).min_vertex();
      if (!g.contains(q)) {
        ++r.vacuous_pairs;
        continue;
      }
      bool found = false;
      for (int p = q + 1; !found && p <= c.n(); ++p) {
        if (g.contains(p)) continue;
        auto e = g;
        e.erase(q);
        e.insert(p);
        found = c.contains_face(e);
      }
      if (!found) r.holds = false;
    }
  return r;
}

template <std::size_t W>
bool is_weakly_matroid(const BasicComplex<W>& c) {
  return weakly_matroid_report(c).holds;
}

namespace detail {

template <std::size_t W>
class VertexDecomposability {
 public:
  bool decide(const BasicComplex<W>& c) {
    if (c.is_simplex()) return true;
    auto key = c.facets();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int d = c.dim();
    bool result = false;
    c.vertex_set().for_each([&](int x) {
      if (result) return;
      BasicFace<W> xf;
      xf.insert(x);
      const auto del = deletion(c, x);
      if (!del.is_pure() || del.dim() != d) return;
      const auto lk = link(c, xf);
      if (!lk.is_pure() || lk.dim() != d - 1) return;
      result = decide(del) && decide(lk);
    });
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::map<std::vector<BasicFace<W>>, bool> memo_;
};

}  // namespace detail

/// Pure vertex decomposability, memoized on the sorted facet list.
template <std::size_t W>
bool is_vertex_decomposable(const BasicComplex<W>& c) {
  if (!c.is_pure()) throw InputError("is_vertex_decomposable: complex is not pure");
  return detail::VertexDecomposability<W>{}.decide(c);
}

enum class HereditaryProperty { shellable, strongly_shellable };

/// Whether every restriction to a nonempty W ⊆ V(Δ) has the property.
/// The node budget applies to each restriction's search separately.
template <std::size_t W>
Answer is_hereditary(const BasicComplex<W>& c, HereditaryProperty prop,
                     const SearchOptions& opts = {}) {
  detail::require_shellability_input(c);
  const auto verts = c.vertex_set().vertices();
  const std::size_t m = verts.size();
  if (m >= 63) throw InputError("is_hereditary: too many vertices");
  Answer overall = Answer::yes;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    BasicFace<W> w;
    for (std::size_t b = 0; b < m; ++b)
      if ((mask >> b) & 1U) w.insert(verts[b]);
    const auto r = restriction(c, w);
    const auto a = prop == HereditaryProperty::shellable
                       ? search_shelling_order(r, opts).answer
                       : search_strong_shelling_order(r, opts).answer;
    if (a == Answer::no) return Answer::no;
    if (a == Answer::undecided) overall = Answer::undecided;
  }
  return overall;
}

/// Cycle matroid of a simple graph: edges are labelled 1..|E| in the given
/// order and facets are the edge sets of spanning forests.
template <std::size_t W = 2>
BasicComplex<W> spanning_forest_complex(const std::vector<std::pair<int, int>>& edges) {
  if (edges.empty()) throw InputError("spanning_forest_complex: graph has no edges");
  const int m = static_cast<int>(edges.size());
  BasicFace<W>::check_vertex_count(m);
  if (m > 30) throw InputError("spanning_forest_complex: too many edges to enumerate");
  std::vector<int> nodes;
  for (auto [a, b] : edges) {
    if (a == b) throw InputError("spanning_forest_complex: loop edge");
    nodes.push_back(a);
    nodes.push_back(b);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  auto id = [&](int v) {
    return static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), v) -
                                    nodes.begin());
  };
  {
    auto sorted = edges;
    for (auto& e : sorted)
      if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("spanning_forest_complex: parallel edges");
  }

  struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
      std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    }
    bool unite(std::size_t a, std::size_t b) {
      a = find(a);
      b = find(b);
      if (a == b) return false;
      parent[a] = b;
      return true;
    }
  };

  UnionFind all(nodes.size());
  std::size_t components = nodes.size();
  for (auto [a, b] : edges)
    if (all.unite(id(a), id(b))) --components;
  const int rank = static_cast<int>(nodes.size() - components);

  // A forest with rank edges spans every component.
  std::vector<BasicFace<W>> forests;
  detail::for_each_subset_of_size(BasicFace<W>::full(m), rank, [&](const BasicFace<W>& s) {
    UnionFind uf(nodes.size());
    bool acyclic = true;
    s.for_each([&](int e) {
      const auto [a, b] = edges[static_cast<std::size_t>(e - 1)];
      if (acyclic && !uf.unite(id(a), id(b))) acyclic = false;
    });
    if (acyclic) forests.push_back(s);
  });
  return BasicComplex<W>::from_facets(forests, m);
}

/// Pure complexes: facets compared on their largest differing vertex. For
/// equal-size facets this is ascending mask order, i.e. the canonical order.
template <std::size_t W>
FacetOrder reverse_lex_order(const BasicComplex<W>& c) {
  if (!c.is_pure()) throw InputError("reverse_lex_order: complex is not pure");
  return FacetOrder::identity(c.size());
}

/// Lexicographic order of the sorted vertex lists.
template <std::size_t W>
FacetOrder lex_order(const BasicComplex<W>& c) {
  auto ord = FacetOrder::identity(c.size()).indices();
  std::sort(ord.begin(), ord.end(), [&](auto a, auto b) {
    return c.facet(a).vertices() < c.facet(b).vertices();
  });
  return FacetOrder(std::move(ord));
}

struct ClassReport {
  Answer matroid = Answer::undecided;
  Answer shifted = Answer::undecided;
  Answer weakly_matroid = Answer::undecided;
  Answer vertex_decomposable = Answer::undecided;
  Answer hereditary_shellable = Answer::undecided;
  Answer hereditarily_strongly_shellable = Answer::undecided;
  Answer strongly_shellable = Answer::undecided;
  Answer shellable = Answer::undecided;
  bool pure = true;
  std::size_t weakly_matroid_vacuous_pairs = 0;

  /// (name, value) in a fixed order.
  std::vector<std::pair<std::string, Answer>> flags() const {
    return {{"matroid", matroid},
            {"shifted", shifted},
            {"weakly_matroid", weakly_matroid},
            {"vertex_decomposable", vertex_decomposable},
            {"hereditary_shellable", hereditary_shellable},
            {"hereditarily_strongly_shellable", hereditarily_strongly_shellable},
            {"strongly_shellable", strongly_shellable},
            {"shellable", shellable}};
  }
};

/// Implication arrows among the classes. The pure-only arrows are skipped for
/// nonpure input.
struct ClassImplication {
  Answer ClassReport::*from;
  Answer ClassReport::*to;
  const char* text;
  bool pure_only;
};

inline const std::vector<ClassImplication>& class_implications() {
  static const std::vector<ClassImplication> arrows = {
      {&ClassReport::shifted, &ClassReport::weakly_matroid, "shifted => weakly matroid", false},
      {&ClassReport::shifted, &ClassReport::hereditary_shellable,
       "shifted => hereditary-shellable", false},
      {&ClassReport::shifted, &ClassReport::strongly_shellable,
       "shifted => strongly shellable", true},
      {&ClassReport::matroid, &ClassReport::weakly_matroid, "matroid => weakly matroid", false},
      {&ClassReport::matroid, &ClassReport::hereditarily_strongly_shellable,
       "matroid => hereditarily strongly shellable", false},
      {&ClassReport::weakly_matroid, &ClassReport::vertex_decomposable,
       "weakly matroid => vertex decomposable", true},
      {&ClassReport::hereditarily_strongly_shellable, &ClassReport::hereditary_shellable,
       "hereditarily strongly shellable => hereditary-shellable", false},
      {&ClassReport::hereditarily_strongly_shellable, &ClassReport::strongly_shellable,
       "hereditarily strongly shellable => strongly shellable", false},
      {&ClassReport::vertex_decomposable, &ClassReport::shellable,
       "vertex decomposable => shellable", true},
      {&ClassReport::hereditary_shellable, &ClassReport::shellable,
       "hereditary-shellable => shellable", false},
      {&ClassReport::strongly_shellable, &ClassReport::shellable,
       "strongly shellable => shellable", false},
  };
  return arrows;
}

/// Arrows whose premise is yes and conclusion is no.
inline std::vector<std::string> implication_violations(const ClassReport& r) {
  std::vector<std::string> bad;
  for (const auto& a : class_implications()) {
    if (a.pure_only && !r.pure) continue;
    if (r.*(a.from) == Answer::yes && r.*(a.to) == Answer::no) bad.emplace_back(a.text);
  }
  return bad;
}

inline Answer to_answer(bool b) { return b ? Answer::yes : Answer::no; }

/// Runs every membership test. Vertex decomposability is only decided for
/// pure input. Throws std::logic_error if a decided report breaks an arrow.
template <std::size_t W>
ClassReport classify(const BasicComplex<W>& c, const SearchOptions& opts = {}) {
  detail::require_shellability_input(c);
  ClassReport r;
  r.pure = c.is_pure();
  r.matroid = to_answer(is_matroid(c));
  r.shifted = to_answer(is_shifted(c));
  const auto wm = weakly_matroid_report(c);
  r.weakly_matroid = to_answer(wm.holds);
  r.weakly_matroid_vacuous_pairs = wm.vacuous_pairs;
  if (r.pure) r.vertex_decomposable = to_answer(is_vertex_decomposable(c));
  r.strongly_shellable = search_strong_shelling_order(c, opts).answer;
  r.shellable = search_shelling_order(c, opts).answer;
  r.hereditary_shellable = is_hereditary(c, HereditaryProperty::shellable, opts);
  r.hereditarily_strongly_shellable =
      is_hereditary(c, HereditaryProperty::strongly_shellable, opts);
  if (const auto bad = implication_violations(r); !bad.empty())
    throw std::logic_error("class report violates: " + bad.front());
  return r;
}

}  // namespace shellab
