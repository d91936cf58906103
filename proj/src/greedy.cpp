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

#include "submod/greedy.hpp"

#include <stdexcept>

#include "algo_util.hpp"
#include "submod/rng.hpp"

namespace submod {

using detail::argmax_gain;
using detail::LedgerMark;
using detail::ScanResult;
using detail::Stopwatch;
using detail::strip_dummies;

RunRecord interlace_greedy(const ValueOracle& oracle, std::size_t k,
                           InterlaceTrace* trace) {
  const std::size_t n = oracle.real_universe_size();
  if (k < 1 || k > n) {
    throw std::invalid_argument("interlace_greedy: need 1 <= k <= n");
  }

  Stopwatch watch;
  const ValueOracle f = oracle.with_dummies(2 * k);
  const LedgerMark mark(*f.ledger());
  const std::vector<ElementId> universe = f.universe();
  std::vector<std::uint8_t> used(universe.back() + 1, 0);
  if (trace != nullptr) {
    trace->dummy_base = universe[n];
    trace->picks.clear();
  }

  SolutionSet a;
  SolutionSet b;
  double f_a = f.evaluate(a);
  double f_b = f_a;

  for (std::size_t i = 0; i < k; ++i) {
    const ScanResult pick_a = argmax_gain(f, universe, used, a, f_a);
    if (pick_a.evaluated > 0) f.ledger()->mark_round();
    a.insert(pick_a.id);
    used[pick_a.id] = 1;
    f_a = pick_a.value_after;

    const ScanResult pick_b = argmax_gain(f, universe, used, b, f_b);
    if (pick_b.evaluated > 0) f.ledger()->mark_round();
    b.insert(pick_b.id);
    used[pick_b.id] = 1;
    f_b = pick_b.value_after;

    if (trace != nullptr) trace->picks.emplace_back(pick_a.id, pick_b.id);
  }

  RunRecord record;
  if (f_a >= f_b) {
    record.solution = strip_dummies(f, a);
    record.value = f_a;
  } else {
    record.solution = strip_dummies(f, b);
    record.value = f_b;
  }
  detail::finish_record(record, *f.ledger(), mark, watch);
  return record;
}

RunRecord interpolated_greedy(const ValueOracle& oracle, std::size_t k,
                              std::size_t ell, std::uint64_t seed,
                              InterpolatedTrace* trace) {
  const std::size_t n = oracle.real_universe_size();
  if (k < 1 || k > n) {
    throw std::invalid_argument("interpolated_greedy: need 1 <= k <= n");
  }
  if (ell < 1 || ell > k) {
    throw std::invalid_argument("interpolated_greedy: need 1 <= ell <= k");
  }

  Stopwatch watch;
  const std::size_t m = k / ell;
  const ValueOracle f = oracle.with_dummies(2 * k);
  const LedgerMark mark(*f.ledger());
  const std::vector<ElementId> universe = f.universe();
  std::vector<std::uint8_t> claimed(universe.back() + 1, 0);
  if (trace != nullptr) {
    trace->dummy_base = universe[n];
    trace->claims.clear();
    trace->chosen.clear();
  }

  Rng rng(seed);
  SolutionSet incumbent;
  double f_incumbent = f.evaluate(incumbent);

  for (std::size_t i = 0; i < ell; ++i) {
    // The random choice is fixed before this iteration issues any query.
    const std::size_t chosen = static_cast<std::size_t>(rng.below(ell));
    std::vector<SolutionSet> sols(ell, incumbent);
    std::vector<double> values(ell, f_incumbent);
    std::vector<std::vector<ElementId>> iteration_claims(ell);

    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t l = 0; l < ell; ++l) {
        const ScanResult pick =
            argmax_gain(f, universe, claimed, sols[l], values[l]);
        if (pick.evaluated > 0) f.ledger()->mark_round();
        if (!pick.found) continue;  // pool exhausted, degenerate configs only
        sols[l].insert(pick.id);
        claimed[pick.id] = 1;
        values[l] = pick.value_after;
        iteration_claims[l].push_back(pick.id);
      }
    }

    incumbent = std::move(sols[chosen]);
    f_incumbent = values[chosen];
    if (trace != nullptr) {
      trace->claims.push_back(std::move(iteration_claims));
      trace->chosen.push_back(chosen);
    }
  }

  RunRecord record;
  record.solution = strip_dummies(f, incumbent);
  record.value = f_incumbent;
  record.seed = seed;
  detail::finish_record(record, *f.ledger(), mark, watch);
  return record;
}

}  // namespace submod
