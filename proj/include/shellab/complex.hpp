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
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "shellab/face.hpp"

namespace shellab {

template <std::size_t W>
class BasicComplex;

/// Result of inclusion-reducing a list of vertex sets.
template <std::size_t W>
struct FacetReduction;

/// A simplicial complex over [n] given by its facets.
///
/// Facets are pairwise incomparable and kept sorted ascending by mask value,
/// so facet indices are canonical and stable across runs. The void complex
/// {∅} is the single facet ∅ and has dimension -1.
template <std::size_t W>
class BasicComplex {
 public:
  using face_type = BasicFace<W>;

  /// Inclusion-reduces `sets`. Non-maximal sets are dropped, duplicates
  /// merged.
  static BasicComplex from_facets(std::vector<face_type> sets, int n);

  static BasicComplex from_facets(const std::vector<std::vector<int>>& sets,
                                  int n) {
    std::vector<face_type> faces;
    faces.reserve(sets.size());
    for (const auto& s : sets) {
      for (int v : s) check_vertex(v, n);
      faces.push_back(face_type::from_range(s));
    }
    return from_facets(std::move(faces), n);
  }

  /// The simplex on the vertices of `f`.
  static BasicComplex simplex(const face_type& f, int n) {
    return from_facets(std::vector<face_type>{f}, n);
  }

  int n() const { return n_; }
  std::size_t size() const { return facets_.size(); }
  const std::vector<face_type>& facets() const { return facets_; }
  const face_type& facet(std::size_t i) const { return facets_[i]; }

  int dim() const { return dim_; }
  bool is_pure() const { return pure_; }
  bool is_void() const { return facets_.size() == 1 && facets_[0].empty(); }
  bool is_simplex() const { return facets_.size() == 1; }

  face_type vertex_set() const {
    face_type v;
    for (const auto& f : facets_) v |= f;
    return v;
  }

  bool contains_face(const face_type& a) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const face_type& f) { return a.is_subset_of(f); });
  }

  std::optional<std::size_t> index_of(const face_type& f) const {
    auto it = std::lower_bound(facets_.begin(), facets_.end(), f);
    if (it == facets_.end() || *it != f) return std::nullopt;
    return static_cast<std::size_t>(it - facets_.begin());
  }

  /// The subcomplex generated by the facets at `indices`.
  BasicComplex generated_by(std::span<const std::size_t> indices) const {
    std::vector<face_type> sel;
    sel.reserve(indices.size());
    for (auto i : indices) sel.push_back(facets_.at(i));
    return from_facets(std::move(sel), n_);
  }

  std::string to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      if (i) s += ',';
      s += facets_[i].to_string();
    }
    return s + ">";
  }

  friend bool operator==(const BasicComplex& a, const BasicComplex& b) {
    return a.n_ == b.n_ && a.facets_ == b.facets_;
  }

  static void check_vertex(int v, int n) {
    if (v < 1 || v > n)
      throw InputError("vertex " + std::to_string(v) + " outside [1, " +
                       std::to_string(n) + "]");
  }

 private:
  template <std::size_t V>
  friend FacetReduction<V> reduce_facets(std::vector<BasicFace<V>>, int);

  BasicComplex(int n, std::vector<face_type> facets)
      : n_(n), facets_(std::move(facets)) {
    dim_ = -1;
    for (const auto& f : facets_) dim_ = std::max(dim_, f.dim());
    pure_ = std::all_of(facets_.begin(), facets_.end(),
                        [&](const face_type& f) { return f.dim() == dim_; });
  }

  int n_ = 0;
  std::vector<face_type> facets_;
  int dim_ = -1;
  bool pure_ = true;
};

template <std::size_t W>
struct FacetReduction {
  BasicComplex<W> complex;
  /// Input sets strictly contained in another input set (deduplicated).
  std::vector<BasicFace<W>> dropped;
};

/// Inclusion reduction with a report of the dropped (non-maximal) sets.
template <std::size_t W>
FacetReduction<W> reduce_facets(std::vector<BasicFace<W>> sets, int n) {
  BasicFace<W>::check_vertex_count(n);
  if (sets.empty()) throw InputError("facet list is empty");
  for (const auto& s : sets) {
    if (s.max_vertex() > n) BasicComplex<W>::check_vertex(s.max_vertex(), n);
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  // Larger sets first; a set survives unless some kept set contains it.
  std::vector<std::size_t> by_size(sets.size());
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(), [&](auto a, auto b) {
    return sets[a].size() > sets[b].size();
  });
  std::vector<BasicFace<W>> kept, dropped;
  for (auto i : by_size) {
    const auto& s = sets[i];
    bool covered = std::any_of(kept.begin(), kept.end(), [&](const auto& k) {
      return s.is_subset_of(k);
    });
    (covered ? dropped : kept).push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  std::sort(dropped.begin(), dropped.end());
  return FacetReduction<W>{BasicComplex<W>(n, std::move(kept)),
                           std::move(dropped)};
}

template <std::size_t W>
BasicComplex<W> BasicComplex<W>::from_facets(std::vector<face_type> sets,
                                              int n) {
  return reduce_facets<W>(std::move(sets), n).complex;
}

using Complex = BasicComplex<2>;

// ---------------------------------------------------------------------------
// Set-algebraic constructions

namespace detail {

/// Calls fn(face) for every k-subset of `f`.
template <std::size_t W, class Fn>
void for_each_subset_of_size(const BasicFace<W>& f, int k, Fn&& fn) {
  const auto verts = f.vertices();
  const int m = static_cast<int>(verts.size());
  if (k < 0 || k > m) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    BasicFace<W> s;
    for (int i : idx) s.insert(verts[static_cast<std::size_t>(i)]);
    fn(s);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// link(A) = ⟨F \ A : A ⊆ F⟩ over the same ambient [n].
template <std::size_t W>
BasicComplex<W> link(const BasicComplex<W>& c, const BasicFace<W>& a) {
  if (!c.contains_face(a))
    throw InputError("link: " + a.to_string() + " is not a face");
  std::vector<BasicFace<W>> out;
  for (const auto& f : c.facets())
    if (a.is_subset_of(f)) out.push_back(f - a);
  return BasicComplex<W>::from_facets(std::move(out), c.n());
}

/// All faces of `c` contained in `w`.
template <std::size_t W>
BasicComplex<W> restriction(const BasicComplex<W>& c, const BasicFace<W>& w) {
  if (w.empty()) throw InputError("restriction: empty vertex set");
  if (w.max_vertex() > c.n())
    throw InputError("restriction: " + w.to_string() + " not inside [n]");
  std::vector<BasicFace<W>> out;
  out.reserve(c.size());
  for (const auto& f : c.facets()) out.push_back(f & w);
  return BasicComplex<W>::from_facets(std::move(out), c.n());
}

/// Δ \ x, the restriction to [n] \ {x}.
template <std::size_t W>
BasicComplex<W> deletion(const BasicComplex<W>& c, int x) {
  BasicComplex<W>::check_vertex(x, c.n());
  auto w = BasicFace<W>::full(c.n());
  w.erase(x);
  return restriction(c, w);
}

/// Join; the vertices of `b` are shifted up by a.n().
template <std::size_t W>
BasicComplex<W> join(const BasicComplex<W>& a, const BasicComplex<W>& b) {
  const int n = a.n() + b.n();
  BasicFace<W>::check_vertex_count(n);
  std::vector<BasicFace<W>> shifted;
  for (const auto& g : b.facets()) {
    BasicFace<W> s;
    g.for_each([&](int v) { s.insert(v + a.n()); });
    shifted.push_back(s);
  }
  std::vector<BasicFace<W>> out;
  for (const auto& f : a.facets())
    for (const auto& g : shifted) out.push_back(f | g);
  return BasicComplex<W>::from_facets(std::move(out), n);
}

/// ⟨[n] \ F : F a facet⟩. Complements of an antichain form an antichain, so
/// nothing is ever dropped here.
template <std::size_t W>
BasicComplex<W> complement_complex(const BasicComplex<W>& c) {
  const auto all = BasicFace<W>::full(c.n());
  std::vector<BasicFace<W>> out;
  for (const auto& f : c.facets()) out.push_back(all - f);
  return BasicComplex<W>::from_facets(std::move(out), c.n());
}

/// Vertex x_{i,j} of the (s_1,...,s_n)-expansion is labelled s_1+...+s_{i-1}+j.
template <std::size_t W>
BasicComplex<W> expansion(const BasicComplex<W>& c, std::span<const int> s) {
  if (static_cast<int>(s.size()) != c.n())
    throw InputError("expansion: expected " + std::to_string(c.n()) +
                     " counts, got " + std::to_string(s.size()));
  std::vector<int> offset(s.size() + 1, 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] <= 0) throw InputError("expansion: counts must be positive");
    offset[i + 1] = offset[i] + s[i];
  }
  const int n = offset.back();
  BasicFace<W>::check_vertex_count(n);

  std::vector<BasicFace<W>> out;
  for (const auto& f : c.facets()) {
    const auto verts = f.vertices();
    std::vector<int> r(verts.size(), 1);
    while (true) {
      BasicFace<W> g;
      for (std::size_t k = 0; k < verts.size(); ++k)
        g.insert(offset[static_cast<std::size_t>(verts[k] - 1)] + r[k]);
      out.push_back(g);
      std::size_t k = 0;
      for (; k < verts.size(); ++k) {
        if (r[k] < s[static_cast<std::size_t>(verts[k] - 1)]) {
          ++r[k];
          break;
        }
        r[k] = 1;
      }
      if (k == verts.size()) break;
    }
  }
  return BasicComplex<W>::from_facets(std::move(out), n);
}

/// Δ^(i): generated by all faces of dimension at most i.
template <std::size_t W>
BasicComplex<W> skeleton(const BasicComplex<W>& c, int i) {
  if (i < 0 || i > c.dim())
    throw InputError("skeleton: dimension " + std::to_string(i) +
                     " out of range");
  std::vector<BasicFace<W>> out;
  for (const auto& f : c.facets()) {
    if (f.dim() <= i)
      out.push_back(f);
    else
      detail::for_each_subset_of_size(f, i + 1,
                                      [&](const auto& s) { out.push_back(s); });
  }
  return BasicComplex<W>::from_facets(std::move(out), c.n());
}

/// Δ^[i]: generated by the i-dimensional faces.
template <std::size_t W>
BasicComplex<W> pure_skeleton(const BasicComplex<W>& c, int i) {
  if (i < 0 || i > c.dim())
    throw InputError("pure_skeleton: dimension " + std::to_string(i) +
                     " out of range");
  std::vector<BasicFace<W>> out;
  for (const auto& f : c.facets())
    detail::for_each_subset_of_size(f, i + 1,
                                    [&](const auto& s) { out.push_back(s); });
  return BasicComplex<W>::from_facets(std::move(out), c.n());
}

/// The pure complex generated by the k-dimensional facets.
template <std::size_t W>
BasicComplex<W> pure_part(const BasicComplex<W>& c, int k) {
  std::vector<BasicFace<W>> out;
  for (const auto& f : c.facets())
    if (f.dim() == k) out.push_back(f);
  if (out.empty())
    throw InputError("pure_part: no facet of dimension " + std::to_string(k));
  return BasicComplex<W>::from_facets(std::move(out), c.n());
}

// ---------------------------------------------------------------------------
// Face counts

/// f_{-1}, f_0, ..., f_d. Index with f(i).
struct FVector {
  std::vector<std::int64_t> counts;  // counts[i + 1] = f_i
  std::int64_t f(int i) const { return counts.at(static_cast<std::size_t>(i + 1)); }
  int dim() const { return static_cast<int>(counts.size()) - 2; }
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// h_0, ..., h_{d+1}; entries may be negative for non-shellable input.
struct HVector {
  std::vector<std::int64_t> entries;
  std::int64_t h(int i) const { return entries.at(static_cast<std::size_t>(i)); }
  std::size_t size() const { return entries.size(); }
  bool nonnegative() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](auto x) { return x >= 0; });
  }
  friend bool operator==(const HVector&, const HVector&) = default;
};

/// Breadth-first face enumeration from the facets.
template <std::size_t W>
FVector f_vector(const BasicComplex<W>& c) {
  std::unordered_set<BasicFace<W>> seen(c.facets().begin(), c.facets().end());
  std::vector<BasicFace<W>> frontier(c.facets().begin(), c.facets().end());
  FVector fv;
  fv.counts.assign(static_cast<std::size_t>(c.dim() + 2), 0);
  while (!frontier.empty()) {
    std::vector<BasicFace<W>> next;
    for (const auto& f : frontier) {
      ++fv.counts[static_cast<std::size_t>(f.size())];
      f.for_each([&](int v) {
        auto g = f;
        g.erase(v);
        if (seen.insert(g).second) next.push_back(g);
      });
    }
    frontier = std::move(next);
  }
  return fv;
}

/// h_j = Σ_{i=0}^{j} (-1)^{j-i} C(d+1-i, j-i) f_{i-1}. Requires purity.
template <std::size_t W>
HVector h_vector(const BasicComplex<W>& c) {
  if (!c.is_pure()) throw InputError("h_vector: complex is not pure");
  const auto fv = f_vector(c);
  const int d = c.dim();
  HVector hv;
  for (int j = 0; j <= d + 1; ++j) {
    std::int64_t h = 0;
    for (int i = 0; i <= j; ++i) {
      const std::int64_t term = detail::binomial(d + 1 - i, j - i) * fv.f(i - 1);
      h += ((j - i) % 2 == 0) ? term : -term;
    }
    hv.entries.push_back(h);
  }
  return hv;
}

/// (d-1)-faces lying in exactly one facet. Requires purity.
template <std::size_t W>
std::vector<BasicFace<W>> boundary_ridges(const BasicComplex<W>& c) {
  if (!c.is_pure()) throw InputError("boundary_ridges: complex is not pure");
  std::map<BasicFace<W>, int> count;
  for (const auto& f : c.facets())
    f.for_each([&](int v) {
      auto r = f;
      r.erase(v);
      ++count[r];
    });
  std::vector<BasicFace<W>> out;
  for (const auto& [r, k] : count)
    if (k == 1) out.push_back(r);
  return out;
}

/// Number of boundary ridges of `c` contained in the facet `f`.
template <std::size_t W>
int boundary_ridge_count(const BasicComplex<W>& c, const BasicFace<W>& f) {
  if (!c.is_pure()) throw InputError("boundary_ridge_count: complex is not pure");
  if (!c.index_of(f)) throw InputError(f.to_string() + " is not a facet");
  int n = 0;
  f.for_each([&](int v) {
    auto r = f;
    r.erase(v);
    int holders = 0;
    for (const auto& g : c.facets())
      if (r.is_subset_of(g)) ++holders;
    if (holders == 1) ++n;
  });
  return n;
}

}  // namespace shellab
