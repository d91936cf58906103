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

#include "submod/threshold_greedy.hpp"

#include <cmath>
#include <stdexcept>

#include "algo_util.hpp"
#include "submod/rng.hpp"

namespace submod {

using detail::LedgerMark;
using detail::Stopwatch;

namespace {

// Maximum singleton value plus f(empty), all batched as one adaptive round.
struct SingletonScan {
  double f_empty = 0.0;
  double max_single = 0.0;
};

SingletonScan max_singleton_round(const ValueOracle& f,
                                  const std::vector<ElementId>& universe) {
  SingletonScan out;
  SolutionSet empty;
  out.f_empty = f.evaluate(empty);
  bool first = true;
  for (ElementId x : universe) {
    const double v = f.evaluate_with(empty, x);
    if (first || v > out.max_single) out.max_single = v;
    first = false;
  }
  f.ledger()->mark_round();
  return out;
}

// First element of the universe outside `used` whose marginal on `s` clears
// tau, scanning ids in ascending order. One adaptive round when any query is
// issued. Returns found=false with evaluated=0 when no candidate remains.
struct ThresholdHit {
  bool found = false;
  ElementId id = 0;
  double value_after = 0.0;
  std::size_t evaluated = 0;
};

ThresholdHit first_above(const ValueOracle& f,
                         const std::vector<ElementId>& universe,
                         const std::vector<std::uint8_t>& used,
                         const SolutionSet& s, double f_s, double tau) {
  ThresholdHit hit;
  for (ElementId x : universe) {
    if (used[x]) continue;
    const double after = f.evaluate_with(s, x);
    ++hit.evaluated;
    if (after - f_s >= tau) {
      hit.found = true;
      hit.id = x;
      hit.value_after = after;
      break;
    }
  }
  if (hit.evaluated > 0) f.ledger()->mark_round();
  return hit;
}

}  // namespace

RunRecord fast_interlace_greedy(const ValueOracle& oracle, std::size_t k,
                                double eps, ThresholdTrace* trace) {
  const std::size_t n = oracle.real_universe_size();
  if (k < 1 || k > n) {
    throw std::invalid_argument("fast_interlace_greedy: need 1 <= k <= n");
  }
  if (!(eps > 0.0 && eps < 0.5)) {
    throw std::invalid_argument("fast_interlace_greedy: need 0 < eps < 1/2");
  }

  Stopwatch watch;
  const LedgerMark mark(*oracle.ledger());
  const std::vector<ElementId> universe = oracle.real_universe();
  const SingletonScan init = max_singleton_round(oracle, universe);
  if (trace != nullptr) trace->log.clear();

  RunRecord record;
  if (init.max_single <= 0.0) {
    // Nothing clears any threshold; the empty set is optimal here.
    record.value = init.f_empty;
    detail::finish_record(record, *oracle.ledger(), mark, watch);
    return record;
  }

  const double floor_tau = eps * init.max_single / static_cast<double>(k);
  double tau[2] = {init.max_single, init.max_single};
  SolutionSet sol[2];
  double val[2] = {init.f_empty, init.f_empty};
  bool dead[2] = {false, false};
  std::vector<std::uint8_t> used(universe.empty() ? 0 : universe.back() + 1, 0);

  auto advance = [&](int w) {
    while (!dead[w] && tau[w] >= floor_tau && sol[w].size() < k) {
      const ThresholdHit hit =
          first_above(oracle, universe, used, sol[w], val[w], tau[w]);
      if (hit.evaluated == 0) {
        dead[w] = true;  // no candidates left at all
        return;
      }
      if (hit.found) {
        if (trace != nullptr) {
          trace->log.push_back({static_cast<std::size_t>(w), hit.id, tau[w],
                                sol[w].elements()});
        }
        sol[w].insert(hit.id);
        used[hit.id] = 1;
        val[w] = hit.value_after;
        return;
      }
      tau[w] *= (1.0 - eps);
    }
    dead[w] = true;
  };

  for (std::size_t i = 0; i < k; ++i) {
    advance(0);
    advance(1);
    if (dead[0] && dead[1]) break;
  }

  const int winner = val[0] >= val[1] ? 0 : 1;
  record.solution = sol[winner];
  record.value = val[winner];
  detail::finish_record(record, *oracle.ledger(), mark, watch);
  return record;
}

std::size_t fast_interpolated_ell(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("fast_interpolated_greedy: need 0 < eps < 1");
  }
  return static_cast<std::size_t>(
      std::ceil(4.0 / (std::exp(1.0) * eps)));
}

RunRecord fast_interpolated_greedy(const ValueOracle& oracle, std::size_t k,
                                   double eps, std::uint64_t seed,
                                   ThresholdTrace* trace) {
  const std::size_t n = oracle.real_universe_size();
  const std::size_t ell = fast_interpolated_ell(eps);
  if (k < 1 || k > n) {
    throw std::invalid_argument("fast_interpolated_greedy: need 1 <= k <= n");
  }
  if (k < ell) {
    throw std::invalid_argument(
        "fast_interpolated_greedy: k must be at least ell = " +
        std::to_string(ell));
  }

  Stopwatch watch;
  const LedgerMark mark(*oracle.ledger());
  const double eps_prime = eps / 2.0;
  const std::size_t m = k / ell;
  const std::vector<ElementId> universe = oracle.real_universe();
  const SingletonScan init = max_singleton_round(oracle, universe);
  if (trace != nullptr) trace->log.clear();

  RunRecord record;
  record.seed = seed;
  if (init.max_single <= 0.0) {
    record.value = init.f_empty;
    detail::finish_record(record, *oracle.ledger(), mark, watch);
    return record;
  }

  const double floor_tau =
      eps_prime * init.max_single / static_cast<double>(k);
  std::vector<std::uint8_t> used(universe.empty() ? 0 : universe.back() + 1, 0);
  Rng rng(seed);
  SolutionSet incumbent;
  double f_incumbent = init.f_empty;

  for (std::size_t i = 0; i < ell; ++i) {
    const std::size_t chosen = static_cast<std::size_t>(rng.below(ell));
    std::vector<SolutionSet> sols(ell, incumbent);
    std::vector<double> values(ell, f_incumbent);
    std::vector<double> tau(ell, init.max_single);
    std::vector<std::size_t> added(ell, 0);
    // The exclusion set is the union of the iteration's solutions; the
    // incumbent's elements were flagged when first claimed.
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t l = 0; l < ell; ++l) {
        while (tau[l] >= floor_tau && added[l] < m) {
          const ThresholdHit hit = first_above(oracle, universe, used, sols[l],
                                               values[l], tau[l]);
          if (hit.evaluated == 0) {
            tau[l] = 0.0;  // candidates exhausted, retire this solution
            break;
          }
          if (hit.found) {
            if (trace != nullptr) {
              // Threshold streams restart every outer iteration.
              trace->log.push_back(
                  {i * ell + l, hit.id, tau[l], sols[l].elements()});
            }
            sols[l].insert(hit.id);
            used[hit.id] = 1;
            values[l] = hit.value_after;
            ++added[l];
            break;
          }
          tau[l] *= (1.0 - eps_prime);
        }
      }
    }

    // Only the chosen solution's claims persist; the rest return to the pool.
    for (std::size_t l = 0; l < ell; ++l) {
      if (l == chosen) continue;
      for (std::size_t t = incumbent.size(); t < sols[l].size(); ++t) {
        used[sols[l].elements()[t]] = 0;
      }
    }
    incumbent = std::move(sols[chosen]);
    f_incumbent = values[chosen];
  }

  record.solution = incumbent;
  record.value = f_incumbent;
  detail::finish_record(record, *oracle.ledger(), mark, watch);
  return record;
}

}  // namespace submod
