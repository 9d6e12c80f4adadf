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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shellab/complex.hpp"
#include "shellab/search.hpp"
#include "shellab/shelling.hpp"

namespace shellab {

/// x_1^{e_1} ... x_n^{e_n}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
    for (int x : e_)
      if (x < 0) throw InputError("monomial: negative exponent");
    trim();
  }

  template <std::size_t W>
  static Monomial of_face(const BasicFace<W>& f) {
    std::vector<int> e(static_cast<std::size_t>(f.max_vertex()), 0);
    f.for_each([&](int v) { e[static_cast<std::size_t>(v - 1)] = 1; });
    return Monomial(std::move(e));
  }

  /// Exponent of x_i (1-based).
  int exponent(int i) const {
    const auto k = static_cast<std::size_t>(i - 1);
    return i >= 1 && k < e_.size() ? e_[k] : 0;
  }
  int degree() const {
    int d = 0;
    for (int x : e_) d += x;
    return d;
  }
  bool is_one() const { return e_.empty(); }
  bool is_squarefree() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x <= 1; });
  }
  /// 1-based variable count the exponent vector spans.
  int width() const { return static_cast<int>(e_.size()); }

  bool divides(const Monomial& o) const {
    for (int i = 1; i <= width(); ++i)
      if (exponent(i) > o.exponent(i)) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<int> e(static_cast<std::size_t>(std::max(a.width(), b.width())), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      e[i] = a.exponent(static_cast<int>(i) + 1) + b.exponent(static_cast<int>(i) + 1);
    return Monomial(std::move(e));
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// "x1*x2^2*x3", or "1".
  std::string to_string() const {
    std::string s;
    for (int i = 1; i <= width(); ++i) {
      const int x = exponent(i);
      if (x == 0) continue;
      if (!s.empty()) s += '*';
      s += "x" + std::to_string(i);
      if (x > 1) s += "^" + std::to_string(x);
    }
    return s.empty() ? "1" : s;
  }

 private:
  void trim() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
  }

  std::vector<int> e_;
};

/// u : v, exponents max(u_i - v_i, 0).
inline Monomial colon_monomial(const Monomial& u, const Monomial& v) {
  std::vector<int> e(static_cast<std::size_t>(u.width()), 0);
  for (int i = 1; i <= u.width(); ++i)
    e[static_cast<std::size_t>(i - 1)] = std::max(u.exponent(i) - v.exponent(i), 0);
  return Monomial(std::move(e));
}

/// Minimal monomial generators, kept in the given order.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Drops duplicates and generators divisible by another generator.
  explicit MonomialIdeal(const std::vector<Monomial>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
        if (i == j || !gens[j].divides(gens[i])) continue;
        // Equal generators: keep the first copy only.
        redundant = !(gens[i] == gens[j]) || j < i;
      }
      if (!redundant) gens_.push_back(gens[i]);
    }
  }

  std::size_t size() const { return gens_.size(); }
  const Monomial& operator[](std::size_t i) const { return gens_[i]; }
  const std::vector<Monomial>& generators() const { return gens_; }

  std::string to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
    return s + ">";
  }

 private:
  std::vector<Monomial> gens_;
};

/// I(Δ) = <x^F : F a facet>, generators in canonical facet order.
template <std::size_t W>
MonomialIdeal facet_ideal(const BasicComplex<W>& c) {
  std::vector<Monomial> gens;
  for (const auto& f : c.facets()) gens.push_back(Monomial::of_face(f));
  return MonomialIdeal(gens);
}

namespace detail {

/// at(j, i): generators k with u_k : u_i a single variable dividing u_j : u_i.
inline WitnessTable linear_quotient_table(const MonomialIdeal& ideal) {
  const std::size_t m = ideal.size();
  WitnessTable table(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::pair<std::size_t, Monomial>> linear;
    for (std::size_t k = 0; k < m; ++k) {
      if (k == i) continue;
      auto q = colon_monomial(ideal[k], ideal[i]);
      if (q.degree() == 1) linear.emplace_back(k, std::move(q));
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      const auto target = colon_monomial(ideal[j], ideal[i]);
      for (const auto& [k, q] : linear)
        if (q.divides(target)) table.at(j, i).set(k);
    }
  }
  return table;
}

}  // namespace detail

/// <u_1, ..., u_{i-1}> : u_i is generated by variables for every i. For
/// monomial ideals: each j < i has k < i with u_k : u_i a variable dividing
/// u_j : u_i.
inline bool has_linear_quotients(const MonomialIdeal& ideal, const FacetOrder& ord) {
  if (!ord.is_permutation_of(ideal.size()))
    throw InputError("generator order is not a permutation");
  return detail::satisfies_table(detail::linear_quotient_table(ideal), ord);
}

inline SearchOutcome<FacetOrder> search_linear_quotient_order(const MonomialIdeal& ideal,
                                                              const SearchOptions& opts = {}) {
  return detail::to_order_outcome(
      detail::search_order(detail::linear_quotient_table(ideal), nullptr, opts));
}

inline std::optional<FacetOrder> find_linear_quotient_order(const MonomialIdeal& ideal) {
  return search_linear_quotient_order(ideal).witness;
}

}  // namespace shellab
