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
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string_view>
#include <thread>
#include <unordered_set>
#include <vector>

namespace shellab {

/// Outcome of a budgeted decision.
enum class Answer { yes, no, undecided };

inline std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::undecided: return "undecided";
  }
  return "undecided";
}

struct SearchOptions {
  /// Node budget; 0 means unlimited.
  std::uint64_t max_nodes = 0;
  /// Worker threads for searches that split their first level.
  unsigned threads = 1;
};

template <class T>
struct SearchOutcome {
  Answer answer = Answer::undecided;
  std::optional<T> witness;
  std::uint64_t nodes = 0;

  explicit operator bool() const { return answer == Answer::yes; }
};

/// Shared node counter. charge() fails once the budget is spent.
class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t max_nodes) : max_(max_nodes) {}

  bool charge(std::uint64_t n = 1) {
    const auto used = used_.fetch_add(n, std::memory_order_relaxed) + n;
    return max_ == 0 || used <= max_;
  }
  bool exhausted() const {
    return max_ != 0 && used_.load(std::memory_order_relaxed) > max_;
  }
  std::uint64_t used() const {
    return std::min(used_.load(std::memory_order_relaxed),
                    max_ == 0 ? std::numeric_limits<std::uint64_t>::max() : max_);
  }

 private:
  std::uint64_t max_;
  std::atomic<std::uint64_t> used_{0};
};

/// Runtime-sized bit set used for search states over facet indices.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static IndexSet all(std::size_t n) {
    IndexSet s(n);
    for (std::size_t i = 0; i < n; ++i) s.set(i);
    return s;
  }

  std::size_t universe() const { return n_; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1U;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }
  bool intersects(const IndexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        fn(64 * i + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ULL;
    return h;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const noexcept { return s.hash(); }
};

namespace detail {

/// witnesses(i, j): the positions k that may justify placing j after i.
/// Appending j to a prefix P is allowed iff every i in P has a witness in P.
class WitnessTable {
 public:
  explicit WitnessTable(std::size_t t) : t_(t), cells_(t * t, IndexSet(t)) {}

  std::size_t size() const { return t_; }
  IndexSet& at(std::size_t i, std::size_t j) { return cells_[i * t_ + j]; }
  const IndexSet& at(std::size_t i, std::size_t j) const { return cells_[i * t_ + j]; }

  bool can_append(const IndexSet& placed, const std::vector<std::size_t>& order,
                  std::size_t j) const {
    for (auto i : order)
      if (!at(i, j).intersects(placed)) return false;
    return true;
  }

 private:
  std::size_t t_;
  std::vector<IndexSet> cells_;
};

/// Optional extra constraint on consecutive positions, e.g. dimension
/// monotonicity. When present, the memo key also records the last element.
using FollowFilter = std::function<bool(std::size_t last, std::size_t next)>;

/// Depth-first search for an ordering of 0..t-1 in which every append is
/// allowed by `table`. Candidates are tried in ascending index, so the result
/// is the lexicographically first valid sequence. Prefix sets that admit no
/// completion are memoized.
class PrefixSearch {
 public:
  PrefixSearch(const WitnessTable& table, FollowFilter filter, NodeBudget& budget,
               const std::atomic<std::size_t>* stop_above = nullptr,
               std::size_t branch = 0)
      : table_(table),
        filter_(std::move(filter)),
        budget_(budget),
        stop_above_(stop_above),
        branch_(branch),
        placed_(table.size()) {}

  enum class Status { found, dead, exhausted, cancelled };

  Status run(std::optional<std::size_t> first = std::nullopt) {
    if (first) {
      if (!budget_.charge()) return Status::exhausted;
      place(*first);
    }
    return dfs();
  }

  const std::vector<std::size_t>& order() const { return order_; }

 private:
  struct Key {
    IndexSet set;
    std::size_t last;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return k.set.hash() ^ (k.last * 0x9e3779b97f4a7c15ULL);
    }
  };

  void place(std::size_t j) {
    placed_.set(j);
    order_.push_back(j);
  }
  void unplace(std::size_t j) {
    placed_.reset(j);
    order_.pop_back();
  }

  Key key() const {
    return Key{placed_, filter_ && !order_.empty() ? order_.back() : 0};
  }

  Status dfs() {
    const std::size_t t = table_.size();
    if (order_.size() == t) return Status::found;
    if (stop_above_ && stop_above_->load(std::memory_order_relaxed) < branch_)
      return Status::cancelled;
    Key k = key();
    if (dead_.contains(k)) return Status::dead;
    if (!completable()) {
      dead_.insert(std::move(k));
      return Status::dead;
    }
    for (std::size_t j = 0; j < t; ++j) {
      if (placed_.test(j)) continue;
      if (filter_ && !order_.empty() && !filter_(order_.back(), j)) continue;
      if (!table_.can_append(placed_, order_, j)) continue;
      if (!budget_.charge()) return Status::exhausted;
      place(j);
      const Status s = dfs();
      if (s == Status::found) return s;
      unplace(j);
      if (s != Status::dead) return s;
    }
    dead_.insert(std::move(k));
    return Status::dead;
  }

  // Monotone relaxation of "every remaining facet is eventually appended":
  // grow Q from the placed set, admitting j once each placed i has a witness
  // for (i, j) inside Q. Any completion only ever appends facets of the
  // fixpoint, so a fixpoint short of everything proves the prefix dead.
  bool completable() {
    const std::size_t t = table_.size();
    reach_ = placed_;
    std::size_t reached = order_.size();
    bool grew = true;
    while (grew && reached < t) {
      grew = false;
      for (std::size_t j = 0; j < t; ++j) {
        if (reach_.test(j)) continue;
        if (table_.can_append(reach_, order_, j)) {
          reach_.set(j);
          ++reached;
          grew = true;
        }
      }
    }
    return reached == t;
  }

  const WitnessTable& table_;
  FollowFilter filter_;
  NodeBudget& budget_;
  const std::atomic<std::size_t>* stop_above_;
  std::size_t branch_;
  IndexSet placed_;
  IndexSet reach_;
  std::vector<std::size_t> order_;
  std::unordered_set<Key, KeyHash> dead_;
};

/// Runs PrefixSearch, optionally splitting the first position across threads.
/// The merged answer equals the sequential one whenever both are decided.
inline SearchOutcome<std::vector<std::size_t>> search_order(
    const WitnessTable& table, const FollowFilter& filter,
    const SearchOptions& opts) {
  using Status = PrefixSearch::Status;
  SearchOutcome<std::vector<std::size_t>> out;
  NodeBudget budget(opts.max_nodes);
  const std::size_t t = table.size();
  if (t == 0) {
    out.answer = Answer::yes;
    out.witness.emplace();
    return out;
  }

  if (opts.threads <= 1 || t < 2) {
    PrefixSearch s(table, filter, budget);
    const Status st = s.run();
    out.nodes = budget.used();
    if (st == Status::found) {
      out.answer = Answer::yes;
      out.witness = s.order();
    } else {
      out.answer = st == Status::dead ? Answer::no : Answer::undecided;
    }
    return out;
  }

  // Branch b fixes position 0 to facet b. Branches above the best success so
  // far are cancelled; lower branches always run to completion.
  std::atomic<std::size_t> best{t};
  std::atomic<std::size_t> next{0};
  std::vector<Status> status(t, Status::cancelled);
  std::vector<std::vector<std::size_t>> orders(t);
  auto worker = [&] {
    for (std::size_t b = next.fetch_add(1); b < t; b = next.fetch_add(1)) {
      if (best.load() < b) continue;
      PrefixSearch s(table, filter, budget, &best, b);
      status[b] = s.run(b);
      if (status[b] == Status::found) {
        orders[b] = s.order();
        std::size_t cur = best.load();
        while (b < cur && !best.compare_exchange_weak(cur, b)) {
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned n = std::min<unsigned>(opts.threads, static_cast<unsigned>(t));
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  out.nodes = budget.used();
  out.answer = Answer::no;
  for (std::size_t b = 0; b < t; ++b) {
    if (status[b] == Status::found) {
      out.answer = Answer::yes;
      out.witness = orders[b];
      return out;
    }
    if (status[b] != Status::dead) {
      out.answer = Answer::undecided;
      return out;
    }
  }
  return out;
}

}  // namespace detail
}  // namespace shellab
