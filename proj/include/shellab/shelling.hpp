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
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shellab/complex.hpp"
#include "shellab/search.hpp"

namespace shellab {

/// A sequence of canonical facet indices. Earlier means "precedes" (≻).
class FacetOrder {
 public:
  FacetOrder() = default;
  explicit FacetOrder(std::vector<std::size_t> indices) : idx_(std::move(indices)) {}

  static FacetOrder identity(std::size_t t) {
    std::vector<std::size_t> v(t);
    std::iota(v.begin(), v.end(), 0);
    return FacetOrder(std::move(v));
  }

  std::size_t size() const { return idx_.size(); }
  std::size_t operator[](std::size_t pos) const { return idx_[pos]; }
  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }
  const std::vector<std::size_t>& indices() const { return idx_; }

  FacetOrder reversed() const {
    return FacetOrder(std::vector<std::size_t>(idx_.rbegin(), idx_.rend()));
  }

  /// positions()[facet] = position of that facet in the sequence.
  std::vector<std::size_t> positions() const {
    std::vector<std::size_t> pos(idx_.size());
    for (std::size_t p = 0; p < idx_.size(); ++p) pos[idx_[p]] = p;
    return pos;
  }

  bool is_permutation_of(std::size_t t) const {
    if (idx_.size() != t) return false;
    std::vector<bool> seen(t, false);
    for (auto i : idx_) {
      if (i >= t || seen[i]) return false;
      seen[i] = true;
    }
    return true;
  }

  friend bool operator==(const FacetOrder&, const FacetOrder&) = default;

 private:
  std::vector<std::size_t> idx_;
};

namespace detail {

inline void require_permutation(const FacetOrder& ord, std::size_t t) {
  if (!ord.is_permutation_of(t))
    throw InputError("facet order is not a permutation of 0.." +
                     std::to_string(t == 0 ? 0 : t - 1));
}

template <std::size_t W>
void require_shellability_input(const BasicComplex<W>& c) {
  if (c.is_void()) throw InputError("the void complex has no shelling");
}

/// Strong witnesses: |F_j \ F_k| = 1 and F_i ∩ F_j ⊆ F_k ⊆ F_i ∪ F_j.
template <std::size_t W>
WitnessTable strong_witness_table(const BasicComplex<W>& c) {
  const auto& f = c.facets();
  const std::size_t t = f.size();
  WitnessTable table(t);
  std::vector<std::size_t> near;
  for (std::size_t j = 0; j < t; ++j) {
    near.clear();
    for (std::size_t k = 0; k < t; ++k)
      if (k != j && (f[j] - f[k]).size() == 1) near.push_back(k);
    for (std::size_t i = 0; i < t; ++i) {
      if (i == j) continue;
      const auto meet = f[i] & f[j];
      const auto span = f[i] | f[j];
      for (auto k : near)
        if (meet.is_subset_of(f[k]) && f[k].is_subset_of(span)) table.at(i, j).set(k);
    }
  }
  return table;
}

/// Shelling witnesses: |F_j \ F_k| = 1 and F_j \ F_k ⊆ F_j \ F_i.
template <std::size_t W>
WitnessTable plain_witness_table(const BasicComplex<W>& c) {
  const auto& f = c.facets();
  const std::size_t t = f.size();
  WitnessTable table(t);
  std::vector<std::size_t> near;
  for (std::size_t j = 0; j < t; ++j) {
    near.clear();
    for (std::size_t k = 0; k < t; ++k)
      if (k != j && (f[j] - f[k]).size() == 1) near.push_back(k);
    for (std::size_t i = 0; i < t; ++i) {
      if (i == j) continue;
      const auto outside = f[j] - f[i];
      for (auto k : near)
        if ((f[j] - f[k]).is_subset_of(outside)) table.at(i, j).set(k);
    }
  }
  return table;
}

inline bool satisfies_table(const WitnessTable& table, const FacetOrder& ord) {
  IndexSet placed(table.size());
  std::vector<std::size_t> prefix;
  for (auto j : ord) {
    if (!table.can_append(placed, prefix, j)) return false;
    placed.set(j);
    prefix.push_back(j);
  }
  return true;
}

inline SearchOutcome<FacetOrder> to_order_outcome(
    SearchOutcome<std::vector<std::size_t>> in) {
  SearchOutcome<FacetOrder> out;
  out.answer = in.answer;
  out.nodes = in.nodes;
  if (in.witness) out.witness = FacetOrder(std::move(*in.witness));
  return out;
}

}  // namespace detail

/// Björner-Wachs two-condition form: for every i < j some k < j has
/// |F_j \ F_k| = 1 and F_j \ F_k ⊆ F_j \ F_i.
template <std::size_t W>
bool is_shelling_order(const BasicComplex<W>& c, const FacetOrder& ord) {
  detail::require_shellability_input(c);
  detail::require_permutation(ord, c.size());
  return detail::satisfies_table(detail::plain_witness_table(c), ord);
}

/// Every pair i < j has a witness k < j with |F_j \ F_k| = 1,
/// F_j \ F_k ⊆ F_j \ F_i and F_k \ F_j ⊆ F_i. k = i is permitted.
template <std::size_t W>
bool is_strong_shelling_order(const BasicComplex<W>& c, const FacetOrder& ord) {
  detail::require_shellability_input(c);
  detail::require_permutation(ord, c.size());
  return detail::satisfies_table(detail::strong_witness_table(c), ord);
}

template <std::size_t W>
SearchOutcome<FacetOrder> search_shelling_order(const BasicComplex<W>& c,
                                                const SearchOptions& opts = {}) {
  detail::require_shellability_input(c);
  return detail::to_order_outcome(
      detail::search_order(detail::plain_witness_table(c), nullptr, opts));
}

template <std::size_t W>
SearchOutcome<FacetOrder> search_strong_shelling_order(
    const BasicComplex<W>& c, const SearchOptions& opts = {}) {
  detail::require_shellability_input(c);
  return detail::to_order_outcome(
      detail::search_order(detail::strong_witness_table(c), nullptr, opts));
}

/// First valid order in lexicographic order of index sequences, or nullopt.
template <std::size_t W>
std::optional<FacetOrder> find_shelling_order(const BasicComplex<W>& c) {
  return search_shelling_order(c).witness;
}

template <std::size_t W>
std::optional<FacetOrder> find_strong_shelling_order(const BasicComplex<W>& c) {
  return search_strong_shelling_order(c).witness;
}

/// ⊢: stable sort by decreasing dimension, ties kept in the given order.
template <std::size_t W>
FacetOrder induced_dimension_order(const BasicComplex<W>& c, const FacetOrder& ord) {
  detail::require_permutation(ord, c.size());
  std::vector<std::size_t> v = ord.indices();
  std::stable_sort(v.begin(), v.end(), [&](auto a, auto b) {
    return c.facet(a).dim() > c.facet(b).dim();
  });
  return FacetOrder(std::move(v));
}

template <std::size_t W>
bool is_dimension_decreasing(const BasicComplex<W>& c, const FacetOrder& ord) {
  for (std::size_t p = 1; p < ord.size(); ++p)
    if (c.facet(ord[p]).dim() > c.facet(ord[p - 1]).dim()) return false;
  return true;
}

/// Rearranges a strong shelling order into the induced dimension-related
/// order, which is again a strong shelling order.
template <std::size_t W>
FacetOrder dimension_decreasing_reorder(const BasicComplex<W>& c,
                                        const FacetOrder& ord) {
  if (!is_strong_shelling_order(c, ord))
    throw InputError("dimension_decreasing_reorder: not a strong shelling order");
  return induced_dimension_order(c, ord);
}

/// Inv_{ord1}(ord2) = {(a, b) : a ⊢_{ord1} b and b ≻_{ord2} a}, as facet
/// index pairs sorted lexicographically.
template <std::size_t W>
std::vector<std::pair<std::size_t, std::size_t>> relative_inverse_pairs(
    const BasicComplex<W>& c, const FacetOrder& ord1, const FacetOrder& ord2) {
  detail::require_permutation(ord1, c.size());
  detail::require_permutation(ord2, c.size());
  const auto induced = induced_dimension_order(c, ord1);
  const auto pos2 = ord2.positions();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 0; p < induced.size(); ++p)
    for (std::size_t q = p + 1; q < induced.size(); ++q) {
      const auto a = induced[p], b = induced[q];
      if (pos2[b] < pos2[a]) out.emplace_back(a, b);
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Inv(≻): pairs (F_i, F_j) with j < i and dim F_j < dim F_i.
template <std::size_t W>
std::vector<std::pair<std::size_t, std::size_t>> inverse_pairs(
    const BasicComplex<W>& c, const FacetOrder& ord) {
  return relative_inverse_pairs(c, ord, ord);
}

/// ⟨G : a ⪰ G ⪰ b⟩ for facet indices a, b in `ord`.
template <std::size_t W>
BasicComplex<W> interval_subcomplex(const BasicComplex<W>& c, const FacetOrder& ord,
                                    std::size_t a, std::size_t b) {
  detail::require_permutation(ord, c.size());
  if (a >= c.size() || b >= c.size()) throw InputError("interval: facet index out of range");
  const auto pos = ord.positions();
  if (pos[a] > pos[b]) throw InputError("interval: end facet precedes start facet");
  std::vector<std::size_t> sel(ord.begin() + static_cast<std::ptrdiff_t>(pos[a]),
                               ord.begin() + static_cast<std::ptrdiff_t>(pos[b]) + 1);
  return c.generated_by(sel);
}

/// The subcomplex generated by the first `length` facets of `ord`.
template <std::size_t W>
BasicComplex<W> initial_interval(const BasicComplex<W>& c, const FacetOrder& ord,
                                 std::size_t length) {
  std::vector<std::size_t> sel(ord.begin(),
                               ord.begin() + static_cast<std::ptrdiff_t>(length));
  return c.generated_by(sel);
}

}  // namespace shellab
