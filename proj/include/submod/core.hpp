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

#ifndef SUBMOD_CORE_HPP
#define SUBMOD_CORE_HPP

#include <atomic>
#include <cstdint>
#include <initializer_list>
#include <unordered_set>
#include <vector>

namespace submod {

// Index into the ground set. Real elements occupy [0, n); dummy elements,
// when an algorithm pads the ground set, live above the real range.
using ElementId = std::uint32_t;

// Insertion-ordered set of distinct element ids. The prefix order is part of
// the contract: greedy-style algorithms append in acceptance order and tests
// replay against prefixes.
class SolutionSet {
 public:
  SolutionSet() = default;
  SolutionSet(std::initializer_list<ElementId> ids);

  bool contains(ElementId x) const { return members_.count(x) > 0; }
  // Throws std::invalid_argument on a duplicate id.
  void insert(ElementId x);
  const std::vector<ElementId>& elements() const { return order_; }
  std::size_t size() const { return order_.size(); }
  bool empty() const { return order_.empty(); }

  friend bool operator==(const SolutionSet& a, const SolutionSet& b) {
    return a.order_ == b.order_;
  }

 private:
  std::vector<ElementId> order_;
  std::unordered_set<ElementId> members_;
};

// Counts value-oracle queries and the adaptive rounds they are grouped into.
// Counters only grow; concurrent increments are safe.
class QueryLedger {
 public:
  void add_queries(std::uint64_t n = 1) {
    queries_.fetch_add(n, std::memory_order_relaxed);
  }
  void add_rounds(std::uint64_t n) {
    rounds_.fetch_add(n, std::memory_order_relaxed);
  }
  void mark_round() { add_rounds(1); }

  std::uint64_t query_count() const {
    return queries_.load(std::memory_order_relaxed);
  }
  std::uint64_t round_count() const {
    return rounds_.load(std::memory_order_relaxed);
  }

 private:
  std::atomic<std::uint64_t> queries_{0};
  std::atomic<std::uint64_t> rounds_{0};
};

// Result envelope for one algorithm execution. `queries` and `rounds` are the
// ledger deltas attributable to the run; `seed` is 0 for deterministic
// algorithms.
struct RunRecord {
  SolutionSet solution;
  double value = 0.0;
  std::uint64_t queries = 0;
  std::uint64_t rounds = 0;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
};

}  // namespace submod

#endif  // SUBMOD_CORE_HPP
