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

#include "submod/exact.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "submod/rng.hpp"

namespace submod {

namespace {

SolutionSet mask_to_set(std::uint32_t mask,
                        const std::vector<ElementId>& ids) {
  SolutionSet s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (mask & (1u << i)) s.insert(ids[i]);
  }
  return s;
}

}  // namespace

OptResult brute_force_opt(const ValueOracle& oracle, std::size_t k,
                          EnumOrder order) {
  const std::vector<ElementId> ids = oracle.real_universe();
  const std::size_t n = ids.size();
  if (n > 22) {
    throw std::invalid_argument(
        "brute_force_opt: refusing to enumerate a universe of size " +
        std::to_string(n));
  }

  const std::uint64_t total = 1ull << n;
  bool have_best = false;
  OptResult best;
  std::vector<ElementId> best_sorted;

  for (std::uint64_t step = 0; step < total; ++step) {
    const std::uint32_t mask = static_cast<std::uint32_t>(
        order == EnumOrder::kForward ? step : total - 1 - step);
    if (static_cast<std::size_t>(std::popcount(mask)) > k) continue;
    SolutionSet s = mask_to_set(mask, ids);
    const double v = oracle.evaluate(s);
    std::vector<ElementId> sorted = s.elements();
    std::sort(sorted.begin(), sorted.end());
    const bool better =
        !have_best || v > best.value ||
        (v == best.value &&
         std::lexicographical_compare(sorted.begin(), sorted.end(),
                                      best_sorted.begin(), best_sorted.end()));
    if (better) {
      best.set = std::move(s);
      best.value = v;
      best_sorted = std::move(sorted);
      have_best = true;
    }
  }
  return best;
}

SubmodularityReport check_submodular(const ValueOracle& oracle,
                                     std::uint64_t trials,
                                     std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("check_submodular: trials < 1");
  SubmodularityReport report;
  report.trials = trials;

  std::vector<ElementId> ids = oracle.real_universe();
  const std::size_t n = ids.size();
  if (n < 2) return report;  // no chain with x outside T exists

  Rng rng(seed);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    rng.shuffle(ids);
    const std::size_t t_size = static_cast<std::size_t>(rng.below(n));
    SolutionSet big;
    SolutionSet small;
    for (std::size_t i = 0; i < t_size; ++i) {
      big.insert(ids[i]);
      if (rng.bernoulli(0.5)) small.insert(ids[i]);
    }
    const ElementId x =
        ids[t_size + static_cast<std::size_t>(rng.below(n - t_size))];

    const double f_big = oracle.evaluate(big);
    if (f_big < -report.tolerance) ++report.negativity_violations;
    const double gain_big = oracle.marginal_gain(x, big, f_big);
    const double gain_small = oracle.marginal_gain(x, small);
    const double gap = gain_small - gain_big;
    if (gap < report.worst_gap) report.worst_gap = gap;
    if (gap < -report.tolerance) ++report.violations;
  }
  return report;
}

}  // namespace submod
