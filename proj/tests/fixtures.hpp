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
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "shellab/shellab.hpp"

#ifndef SHELLAB_DATA_DIR
#define SHELLAB_DATA_DIR "data"
#endif

namespace fx {

using shellab::Complex;
using shellab::Face;

inline std::string read_file(const std::string& name) {
  std::ifstream in(std::string(SHELLAB_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline shellab::ParsedComplex<2> load(const std::string& name) {
  return shellab::parse_complex<2>(read_file(name));
}

inline Complex make(std::vector<std::vector<int>> sets, int n) {
  return Complex::from_facets(std::move(sets), n);
}

inline oracle::Family family(const Complex& c) {
  oracle::Family f;
  for (const auto& face : c.facets()) {
    const auto v = face.vertices();
    f.emplace_back(v.begin(), v.end());
  }
  return f;
}

inline oracle::Family family(const Complex& c, const shellab::FacetOrder& ord) {
  const auto f = family(c);
  oracle::Family out;
  for (auto i : ord) out.push_back(f[i]);
  return out;
}

/// Strongly shellable or not, per the fixture files.
struct Named {
  const char* file;
  bool strongly_shellable;
};

inline const std::vector<Named>& decision_table() {
  static const std::vector<Named> t = {
      {"strip4.txt", true},      {"mixed3.txt", true},   {"fan8.txt", true},
      {"mixed6.txt", true},      {"grid76.txt", true},   {"hereditary8.txt", true},
      {"strip5.txt", false},     {"hexagon.txt", false}, {"weakly8.txt", false},
      {"shifted11.txt", false},
  };
  return t;
}

/// Strongly shellable fixtures small enough for exhaustive property checks.
inline std::vector<std::string> small_ss_fixtures() {
  return {"strip4.txt", "mixed3.txt", "fan8.txt",  "mixed6.txt",
          "hereditary8.txt", "quasi5.txt", "forest8.txt"};
}

// ---------------------------------------------------------------------------
// Random generation.

/// `count` random vertex sets over [n] with sizes in [lo, hi].
inline Complex random_complex(std::mt19937_64& rng, int n, int count, int lo, int hi) {
  std::uniform_int_distribution<int> size(lo, hi);
  std::vector<std::vector<int>> sets;
  std::vector<int> verts(static_cast<std::size_t>(n));
  std::iota(verts.begin(), verts.end(), 1);
  for (int i = 0; i < count; ++i) {
    std::shuffle(verts.begin(), verts.end(), rng);
    std::vector<int> s(verts.begin(), verts.begin() + size(rng));
    std::sort(s.begin(), s.end());
    sets.push_back(s);
  }
  return Complex::from_facets(sets, n);
}

/// Random strongly shellable complexes on at most 6 vertices (rejection sampling).
inline std::vector<Complex> random_ss_complexes(std::uint64_t seed, std::size_t want,
                                                bool pure_only) {
  std::mt19937_64 rng(seed);
  std::vector<Complex> out;
  std::uniform_int_distribution<int> nd(3, 6), cd(1, 7);
  while (out.size() < want) {
    const int n = nd(rng);
    int lo = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    int hi = pure_only ? lo : lo + static_cast<int>(rng() % 2);
    hi = std::min(hi, n);
    const auto c = random_complex(rng, n, cd(rng), lo, hi);
    if (pure_only && !c.is_pure()) continue;
    if (shellab::find_strong_shelling_order(c)) out.push_back(c);
  }
  return out;
}

/// Random simple graph with 1..max_edges edges on up to 5 nodes.
inline std::vector<std::pair<int, int>> random_graph(std::mt19937_64& rng, int max_edges) {
  std::vector<std::pair<int, int>> all;
  const int nodes = 2 + static_cast<int>(rng() % 4);
  for (int a = 1; a <= nodes; ++a)
    for (int b = a + 1; b <= nodes; ++b) all.emplace_back(a, b);
  std::shuffle(all.begin(), all.end(), rng);
  const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(
                        std::min<int>(max_edges, static_cast<int>(all.size()))));
  all.resize(static_cast<std::size_t>(m));
  return all;
}

/// Random pure poset: ranks 1..r with 1..3 elements each; every element has a
/// lower cover in the previous rank and an upper cover in the next one.
inline shellab::Poset random_pure_poset(std::mt19937_64& rng) {
  const int r = 2 + static_cast<int>(rng() % 3);
  std::vector<std::vector<int>> level;
  int next = 1;
  for (int k = 0; k < r; ++k) {
    const int w = 1 + static_cast<int>(rng() % 3);
    level.emplace_back();
    for (int i = 0; i < w; ++i) level.back().push_back(next++);
  }
  std::vector<std::pair<int, int>> rel;
  for (int k = 0; k + 1 < r; ++k) {
    const auto& lo = level[static_cast<std::size_t>(k)];
    const auto& hi = level[static_cast<std::size_t>(k + 1)];
    std::vector<bool> up_ok(lo.size(), false), down_ok(hi.size(), false);
    for (std::size_t i = 0; i < lo.size(); ++i)
      for (std::size_t j = 0; j < hi.size(); ++j)
        if (rng() % 2) {
          rel.emplace_back(lo[i], hi[j]);
          up_ok[i] = down_ok[j] = true;
        }
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (!up_ok[i]) {
        const auto j = rng() % hi.size();
        rel.emplace_back(lo[i], hi[j]);
        down_ok[j] = true;
      }
    for (std::size_t j = 0; j < hi.size(); ++j)
      if (!down_ok[j]) rel.emplace_back(lo[rng() % lo.size()], hi[j]);
  }
  return shellab::Poset::from_relations(next - 1, rel);
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of pure complexes on [6] up to relabelling.

/// Every pure complex on [6] with at most `max_facets` facets, one per
/// isomorphism class (the member whose facet bit-vector is smallest).
inline std::vector<Complex> pure_complexes_up_to_iso(int max_facets) {
  constexpr int n = 6;
  std::vector<Complex> out;
  std::vector<int> perm(n);
  std::vector<std::vector<int>> perms;
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  for (int k = 1; k <= n; ++k) {
    std::vector<std::uint32_t> subs;  // k-subsets of [6] as masks
    for (std::uint32_t m = 0; m < (1U << n); ++m)
      if (std::popcount(m) == k) subs.push_back(m);
    const std::size_t s = subs.size();
    std::vector<int> index(1U << n, -1);
    for (std::size_t i = 0; i < s; ++i) index[subs[i]] = static_cast<int>(i);
    // image[p][i]: index of the subset i under permutation p
    std::vector<std::vector<int>> image(perms.size(), std::vector<int>(s));
    for (std::size_t p = 0; p < perms.size(); ++p)
      for (std::size_t i = 0; i < s; ++i) {
        std::uint32_t m = 0;
        for (int b = 0; b < n; ++b)
          if ((subs[i] >> b) & 1U) m |= 1U << perms[p][static_cast<std::size_t>(b)];
        image[p][i] = index[m];
      }

    std::vector<int> chosen;
    auto consider = [&] {
      std::uint64_t mask = 0;
      for (int i : chosen) mask |= std::uint64_t{1} << i;
      for (std::size_t p = 1; p < perms.size(); ++p) {
        std::uint64_t img = 0;
        for (int i : chosen) img |= std::uint64_t{1} << image[p][static_cast<std::size_t>(i)];
        if (img < mask) return;
      }
      std::vector<Face> facets;
      for (int i : chosen) {
        Face f;
        for (int b = 0; b < n; ++b)
          if ((subs[static_cast<std::size_t>(i)] >> b) & 1U) f.insert(b + 1);
        facets.push_back(f);
      }
      out.push_back(Complex::from_facets(facets, n));
    };
    // combinations of increasing subset indices
    std::function<void(int)> rec = [&](int start) {
      if (!chosen.empty()) consider();
      if (static_cast<int>(chosen.size()) == max_facets) return;
      for (int i = start; i < static_cast<int>(s); ++i) {
        chosen.push_back(i);
        rec(i + 1);
        chosen.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

}  // namespace fx
