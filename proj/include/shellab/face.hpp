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

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace shellab {

/// Thrown for malformed user input (out-of-range vertices, bad orders, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A set of vertices drawn from [n], stored as a fixed-width bit mask.
///
/// Vertex v occupies bit v-1, so a face over [n] needs n <= 64 * Words.
/// Faces compare by mask value read as an unsigned integer (highest word
/// most significant); this is the canonical facet order used everywhere.
template <std::size_t Words>
class BasicFace {
  static_assert(Words > 0);

 public:
  static constexpr int kMaxVertex = static_cast<int>(64 * Words);

  constexpr BasicFace() = default;

  BasicFace(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  template <class Range>
  static BasicFace from_range(const Range& vertices) {
    BasicFace f;
    for (int v : vertices) f.insert(v);
    return f;
  }

  /// The full simplex on [n].
  static BasicFace full(int n) {
    check_vertex_count(n);
    BasicFace f;
    for (int v = 1; v <= n; ++v) f.insert(v);
    return f;
  }

  static void check_vertex_count(int n) {
    if (n < 0 || n > kMaxVertex) {
      throw InputError("vertex count " + std::to_string(n) +
                       " exceeds mask capacity " + std::to_string(kMaxVertex));
    }
  }

  void insert(int v) {
    check(v);
    words_[word_of(v)] |= bit_of(v);
  }
  void erase(int v) {
    check(v);
    words_[word_of(v)] &= ~bit_of(v);
  }
  bool contains(int v) const {
    if (v < 1 || v > kMaxVertex) return false;
    return (words_[word_of(v)] & bit_of(v)) != 0;
  }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  /// |F| - 1; the empty face has dimension -1.
  int dim() const { return size() - 1; }

  bool is_subset_of(const BasicFace& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const BasicFace& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }

  /// Smallest vertex, or 0 when empty.
  int min_vertex() const {
    for (std::size_t i = 0; i < Words; ++i)
      if (words_[i] != 0)
        return static_cast<int>(64 * i) + std::countr_zero(words_[i]) + 1;
    return 0;
  }
  /// Largest vertex, or 0 when empty.
  int max_vertex() const {
    for (std::size_t i = Words; i-- > 0;)
      if (words_[i] != 0)
        return static_cast<int>(64 * i) + 63 - std::countl_zero(words_[i]) + 1;
    return 0;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < Words; ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        fn(static_cast<int>(64 * i) + std::countr_zero(w) + 1);
        w &= w - 1;
      }
    }
  }

  /// Vertices in ascending order.
  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  BasicFace& operator|=(const BasicFace& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  BasicFace& operator&=(const BasicFace& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  BasicFace& operator-=(const BasicFace& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend BasicFace operator|(BasicFace a, const BasicFace& b) { return a |= b; }
  friend BasicFace operator&(BasicFace a, const BasicFace& b) { return a &= b; }
  friend BasicFace operator-(BasicFace a, const BasicFace& b) { return a -= b; }

  friend bool operator==(const BasicFace&, const BasicFace&) = default;
  friend std::strong_ordering operator<=>(const BasicFace& a,
                                          const BasicFace& b) {
    for (std::size_t i = Words; i-- > 0;) {
      if (a.words_[i] != b.words_[i])
        return a.words_[i] < b.words_[i] ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  const std::array<std::uint64_t, Words>& words() const { return words_; }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ULL;
    return h;
  }

  /// "{1,2,3}"
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each([&](int v) {
      if (!first) s += ',';
      s += std::to_string(v);
      first = false;
    });
    return s + "}";
  }

 private:
  static std::size_t word_of(int v) { return static_cast<std::size_t>(v - 1) / 64; }
  static std::uint64_t bit_of(int v) {
    return std::uint64_t{1} << (static_cast<unsigned>(v - 1) % 64);
  }
  static void check(int v) {
    if (v < 1 || v > kMaxVertex)
      throw InputError("vertex " + std::to_string(v) + " outside mask range");
  }

  std::array<std::uint64_t, Words> words_{};
};

/// min(|F \ G|, |G \ F|).
template <std::size_t W>
int distance(const BasicFace<W>& f, const BasicFace<W>& g) {
  const int a = (f - g).size();
  const int b = (g - f).size();
  return a < b ? a : b;
}

using Face = BasicFace<2>;

}  // namespace shellab

template <std::size_t W>
struct std::hash<shellab::BasicFace<W>> {
  std::size_t operator()(const shellab::BasicFace<W>& f) const noexcept {
    return f.hash();
  }
};
