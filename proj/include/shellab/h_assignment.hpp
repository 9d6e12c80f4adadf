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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "shellab/complex.hpp"
#include "shellab/search.hpp"
#include "shellab/shelling.hpp"

namespace shellab {

/// labels[i] is the label of canonical facet i, in 0..d+1.
struct HAssignment {
  std::vector<int> labels;

  friend bool operator==(const HAssignment&, const HAssignment&) = default;
};

namespace detail {

template <std::size_t W>
void require_pure_for_h(const BasicComplex<W>& c, const char* what) {
  require_shellability_input(c);
  if (!c.is_pure()) throw InputError(std::string(what) + ": complex is not pure");
}

template <std::size_t W>
void require_label_shape(const BasicComplex<W>& c, const HAssignment& a) {
  if (a.labels.size() != c.size())
    throw InputError("h-assignment: label count does not match facet count");
  for (int l : a.labels)
    if (l < 0 || l > c.dim() + 1)
      throw InputError("h-assignment: label " + std::to_string(l) + " outside 0.." +
                       std::to_string(c.dim() + 1));
}

/// Precomputed incidence for removal searches on a fixed pure complex.
///
/// ridge_partners[f][r]: facets sharing the ridge F \ {v_r}, where v_r is the
/// r-th vertex of F. The ridge is a boundary ridge of the alive subcomplex iff
/// none of them is alive.
template <std::size_t W>
class RemovalContext {
 public:
  explicit RemovalContext(const BasicComplex<W>& c)
      : c_(c), t_(c.size()), ridge_partners_(t_), dist_(t_ * t_, 0) {
    for (std::size_t f = 0; f < t_; ++f) {
      const auto verts = c.facet(f).vertices();
      ridge_partners_[f].assign(verts.size(), IndexSet(t_));
      for (std::size_t g = 0; g < t_; ++g) {
        dist_[f * t_ + g] = distance(c.facet(f), c.facet(g));
        if (g == f) continue;
        const auto diff = c.facet(f) - c.facet(g);
        if (diff.size() != 1) continue;
        const auto r = std::lower_bound(verts.begin(), verts.end(), diff.min_vertex());
        ridge_partners_[f][static_cast<std::size_t>(r - verts.begin())].set(g);
      }
    }
  }

  std::size_t size() const { return t_; }
  int dis(std::size_t f, std::size_t g) const { return dist_[f * t_ + g]; }

  int boundary_count(std::size_t f, const IndexSet& alive) const {
    int n = 0;
    for (const auto& p : ridge_partners_[f])
      if (!p.intersects(alive)) ++n;
    return n;
  }

  bool is_candidate(std::size_t f, int label, const IndexSet& alive) const {
    return boundary_count(f, alive) == c_.dim() + 1 - label;
  }

  /// Every other alive G has an alive H with dis(F,H)=1, dis(G,H)=dis(G,F)-1.
  bool is_strong(std::size_t f, const IndexSet& alive) const {
    bool ok = true;
    alive.for_each([&](std::size_t g) {
      if (!ok || g == f) return;
      const int target = dis(g, f) - 1;
      bool found = false;
      alive.for_each([&](std::size_t h) {
        if (!found && dis(f, h) == 1 && dis(g, h) == target) found = true;
      });
      ok = found;
    });
    return ok;
  }

 private:
  const BasicComplex<W>& c_;
  std::size_t t_;
  std::vector<std::vector<IndexSet>> ridge_partners_;
  std::vector<int> dist_;
};

}  // namespace detail

/// Validates `labels` as an h-assignment: one label per facet and
/// |A^{-1}(i)| = h_i for every i.
template <std::size_t W>
HAssignment make_h_assignment(const BasicComplex<W>& c, std::vector<int> labels) {
  detail::require_pure_for_h(c, "make_h_assignment");
  HAssignment a{std::move(labels)};
  detail::require_label_shape(c, a);
  const auto h = h_vector(c);
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto m = std::count(a.labels.begin(), a.labels.end(), static_cast<int>(i));
    if (m != h.h(static_cast<int>(i)))
      throw InputError("h-assignment: label " + std::to_string(i) + " used " +
                       std::to_string(m) + " times, h-vector requires " +
                       std::to_string(h.h(static_cast<int>(i))));
  }
  return a;
}

/// Facets containing exactly d+1-A(F) boundary ridges.
template <std::size_t W>
std::vector<std::size_t> candidate_facets(const BasicComplex<W>& c, const HAssignment& a) {
  detail::require_pure_for_h(c, "candidate_facets");
  detail::require_label_shape(c, a);
  detail::RemovalContext<W> ctx(c);
  const auto alive = IndexSet::all(c.size());
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < c.size(); ++f)
    if (ctx.is_candidate(f, a.labels[f], alive)) out.push_back(f);
  return out;
}

template <std::size_t W>
std::vector<std::size_t> strong_candidate_facets(const BasicComplex<W>& c,
                                                 const HAssignment& a) {
  detail::RemovalContext<W> ctx(c);
  const auto alive = IndexSet::all(c.size());
  std::vector<std::size_t> out;
  for (auto f : candidate_facets(c, a))
    if (ctx.is_strong(f, alive)) out.push_back(f);
  return out;
}

template <std::size_t W>
struct RemovalResult {
  /// nullopt once the last facet is gone.
  std::optional<BasicComplex<W>> complex;
  HAssignment assignment;
};

/// Drops candidate facet `f` and restricts the assignment accordingly.
template <std::size_t W>
RemovalResult<W> removing_step(const BasicComplex<W>& c, const HAssignment& a,
                               std::size_t f) {
  const auto cand = candidate_facets(c, a);
  if (!std::binary_search(cand.begin(), cand.end(), f))
    throw InputError("removing_step: facet " + std::to_string(f) + " is not a candidate");
  RemovalResult<W> out;
  std::vector<std::size_t> keep;
  for (std::size_t g = 0; g < c.size(); ++g) {
    if (g == f) continue;
    keep.push_back(g);
    out.assignment.labels.push_back(a.labels[g]);
  }
  if (!keep.empty()) out.complex = c.generated_by(keep);
  return out;
}

/// t! / (h_0! ... h_{d+1}!).
template <std::size_t W>
std::uint64_t h_assignment_count(const BasicComplex<W>& c) {
  detail::require_pure_for_h(c, "h_assignment_count");
  const auto h = h_vector(c);
  if (!h.nonnegative()) throw InputError("h_assignment_count: negative h-vector entry");
  // Product of binomials C(h_0+...+h_i, h_i), with 128-bit intermediates.
  using wide = unsigned __int128;
  const wide limit = UINT64_MAX;
  wide count = 1;
  std::int64_t placed = 0;
  for (auto m : h.entries) {
    placed += m;
    wide b = 1;
    for (std::int64_t i = 1; i <= m; ++i) {
      b = b * static_cast<wide>(placed - m + i) / static_cast<wide>(i);
      if (b > limit) throw std::overflow_error("h_assignment_count: result exceeds 64 bits");
    }
    count *= b;
    if (count > limit) throw std::overflow_error("h_assignment_count: result exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(count);
}

struct HCertificate {
  /// Shelling order: the removal sequence reversed.
  FacetOrder order;
  HAssignment assignment;
  std::vector<std::size_t> removal;
};

namespace detail {

template <std::size_t W>
class HSearch {
 public:
  HSearch(const BasicComplex<W>& c, bool strong, NodeBudget& budget)
      : ctx_(c), strong_(strong), budget_(budget) {}

  enum class Status { found, dead, exhausted };

  Status run(const std::vector<int>& labels) {
    labels_.assign(labels.begin(), labels.end());
    alive_ = IndexSet::all(ctx_.size());
    removal_.clear();
    return dfs();
  }

  const std::vector<std::size_t>& removal() const { return removal_; }

 private:
  // The search state is the alive set together with its labels; dead facets
  // are marked -1 so the label string alone is a complete key.
  Status dfs() {
    if (removal_.size() == ctx_.size()) return Status::found;
    const std::string key(labels_.begin(), labels_.end());
    if (dead_.contains(key)) return Status::dead;
    for (std::size_t f = 0; f < ctx_.size(); ++f) {
      if (!alive_.test(f) || !ctx_.is_candidate(f, labels_[f], alive_)) continue;
      if (strong_ && !ctx_.is_strong(f, alive_)) continue;
      if (!budget_.charge()) return Status::exhausted;
      const signed char saved = labels_[f];
      alive_.reset(f);
      labels_[f] = -1;
      removal_.push_back(f);
      const Status s = dfs();
      if (s == Status::found) return s;
      removal_.pop_back();
      labels_[f] = saved;
      alive_.set(f);
      if (s != Status::dead) return s;
    }
    dead_.insert(key);
    return Status::dead;
  }

  RemovalContext<W> ctx_;
  bool strong_;
  NodeBudget& budget_;
  std::vector<signed char> labels_;
  IndexSet alive_;
  std::vector<std::size_t> removal_;
  std::unordered_set<std::string> dead_;
};

template <std::size_t W>
SearchOutcome<HCertificate> decide_via_h(const BasicComplex<W>& c, bool strong,
                                         const SearchOptions& opts) {
  SearchOutcome<HCertificate> out;
  const auto h = h_vector(c);
  if (!h.nonnegative()) {
    out.answer = Answer::no;
    return out;
  }
  std::vector<int> labels;
  for (std::size_t i = 0; i < h.size(); ++i)
    labels.insert(labels.end(), static_cast<std::size_t>(h.entries[i]), static_cast<int>(i));
  if (labels.size() != c.size())
    throw std::logic_error("h-vector sum differs from facet count");

  NodeBudget budget(opts.max_nodes);
  HSearch<W> search(c, strong, budget);
  // Multiset permutations in lexicographic order of the label sequence.
  do {
    if (!budget.charge()) {
      out.answer = Answer::undecided;
      out.nodes = budget.used();
      return out;
    }
    const auto st = search.run(labels);
    if (st == HSearch<W>::Status::exhausted) {
      out.answer = Answer::undecided;
      out.nodes = budget.used();
      return out;
    }
    if (st == HSearch<W>::Status::found) {
      HCertificate cert;
      cert.removal = search.removal();
      cert.order = FacetOrder(cert.removal).reversed();
      cert.assignment.labels = labels;
      const bool ok = strong ? is_strong_shelling_order(c, cert.order)
                             : is_shelling_order(c, cert.order);
      if (!ok) throw std::logic_error("h-assignment removal order failed verification");
      out.answer = Answer::yes;
      out.witness = std::move(cert);
      out.nodes = budget.used();
      return out;
    }
  } while (std::next_permutation(labels.begin(), labels.end()));
  out.answer = Answer::no;
  out.nodes = budget.used();
  return out;
}

}  // namespace detail

/// Pure complexes: searches h-assignments and removal sequences of candidate
/// facets. Negative h-vector entries answer "no" immediately.
template <std::size_t W>
SearchOutcome<HCertificate> decide_shellable_via_h(const BasicComplex<W>& c,
                                                   const SearchOptions& opts = {}) {
  detail::require_pure_for_h(c, "decide_shellable_via_h");
  return detail::decide_via_h(c, false, opts);
}

/// As decide_shellable_via_h, removing only strong candidate facets.
template <std::size_t W>
SearchOutcome<HCertificate> decide_strongly_shellable_via_h(
    const BasicComplex<W>& c, const SearchOptions& opts = {}) {
  detail::require_pure_for_h(c, "decide_strongly_shellable_via_h");
  return detail::decide_via_h(c, true, opts);
}

}  // namespace shellab
