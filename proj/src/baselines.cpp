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

#include "submod/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "algo_util.hpp"
#include "submod/rng.hpp"

namespace submod {

using detail::LedgerMark;
using detail::Stopwatch;
using detail::strip_dummies;

RunRecord random_greedy(const ValueOracle& oracle, std::size_t k,
                        std::uint64_t seed) {
  const std::size_t n = oracle.real_universe_size();
  if (k < 1 || k > n) {
    throw std::invalid_argument("random_greedy: need 1 <= k <= n");
  }

  Stopwatch watch;
  const ValueOracle f = oracle.with_dummies(k);
  const LedgerMark mark(*f.ledger());
  const std::vector<ElementId> universe = f.universe();
  std::vector<std::uint8_t> used(universe.back() + 1, 0);

  SolutionSet solution;
  double value = f.evaluate(solution);
  Rng rng(seed);

  struct Candidate {
    double gain;
    ElementId id;
    double value_after;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(universe.size());

  for (std::size_t step = 0; step < k; ++step) {
    candidates.clear();
    for (ElementId x : universe) {
      if (used[x]) continue;
      if (f.is_dummy(x)) {
        candidates.push_back({0.0, x, value});
      } else {
        const double after = f.evaluate_with(solution, x);
        candidates.push_back({after - value, x, after});
      }
    }
    f.ledger()->mark_round();
    // Largest gain first, lowest id on ties; dummies sit above real ids.
    std::partial_sort(candidates.begin(), candidates.begin() + k,
                      candidates.end(), [](const Candidate& a, const Candidate& b) {
                        if (a.gain != b.gain) return a.gain > b.gain;
                        return a.id < b.id;
                      });
    const Candidate& pick =
        candidates[static_cast<std::size_t>(rng.below(k))];
    solution.insert(pick.id);
    used[pick.id] = 1;
    value = pick.value_after;
  }

  RunRecord record;
  record.solution = strip_dummies(f, solution);
  record.value = value;
  record.seed = seed;
  detail::finish_record(record, *f.ledger(), mark, watch);
  return record;
}

double fast_random_greedy_p(std::size_t k, double eps) {
  return 8.0 * std::log(2.0 / eps) / (static_cast<double>(k) * eps);
}

RunRecord fast_random_greedy(const ValueOracle& oracle, std::size_t k,
                             double eps, std::uint64_t seed) {
  const std::size_t n = oracle.real_universe_size();
  if (k < 1 || k > n) {
    throw std::invalid_argument("fast_random_greedy: need 1 <= k <= n");
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("fast_random_greedy: need 0 < eps < 1");
  }

  const double p = fast_random_greedy_p(k, eps);
  if (p >= 1.0) return random_greedy(oracle, k, seed);

  Stopwatch watch;
  const ValueOracle f = oracle.with_dummies(k);
  const LedgerMark mark(*f.ledger());
  const std::vector<ElementId> real = oracle.real_universe();
  const std::vector<ElementId> universe = f.universe();
  std::vector<std::uint8_t> used(universe.back() + 1, 0);

  SolutionSet solution;
  double value = f.evaluate(solution);
  Rng rng(seed);
  std::size_t dummies_used = 0;

  for (std::size_t step = 0; step < k; ++step) {
    // Sample first, then issue the whole batch of marginals.
    std::vector<ElementId> sampled;
    for (ElementId x : real) {
      if (!used[x] && rng.bernoulli(p)) sampled.push_back(x);
    }
    bool found = false;
    ElementId best_id = 0;
    double best_gain = 0.0;
    double best_after = 0.0;
    for (ElementId x : sampled) {
      const double after = f.evaluate_with(solution, x);
      const double gain = after - value;
      if (!found || gain > best_gain) {
        found = true;
        best_id = x;
        best_gain = gain;
        best_after = after;
      }
    }
    if (!sampled.empty()) f.ledger()->mark_round();

    if (!found || best_gain < 0.0) {
      const ElementId dummy = universe[real.size() + dummies_used++];
      solution.insert(dummy);
      used[dummy] = 1;
    } else {
      solution.insert(best_id);
      used[best_id] = 1;
      value = best_after;
    }
  }

  RunRecord record;
  record.solution = strip_dummies(f, solution);
  record.value = value;
  record.seed = seed;
  detail::finish_record(record, *f.ledger(), mark, watch);
  return record;
}

}  // namespace submod
