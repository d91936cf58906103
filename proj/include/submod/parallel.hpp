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

#ifndef SUBMOD_PARALLEL_HPP
#define SUBMOD_PARALLEL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "submod/core.hpp"
#include "submod/oracle.hpp"
#include "submod/rng.hpp"

namespace submod {

// Mark attached to each evaluated prefix position: kTrue when the marginal
// cleared the threshold, kFalse when it was negative, kNone otherwise.
enum class PrefixMark : std::uint8_t { kTrue, kNone, kFalse };

// Filters `pool` down to the elements whose singleton gain under g clears
// tau; while the filtered pool is empty, decays tau by (1 - eps) and
// refilters the oracle's whole universe. Stops once tau drops below tau_min
// (possibly with an empty pool) so the caller can retire the stream; the
// paper's loop as printed has no such exit. One adaptive round per filter
// pass. `gains` is aligned with `pool` on return.
struct UpdateResult {
  std::vector<ElementId> pool;
  double tau = 0.0;
  std::vector<double> gains;
};
UpdateResult update(const ValueOracle& g, std::vector<ElementId> pool,
                    double tau, double eps, double tau_min);

// Pairwise disjoint subsets, one per input pool: inputs are processed in
// ascending size order (ties to the lower index) and floor(|V_j| / ell)
// elements are drawn uniformly without replacement from what previous picks
// left available. When every |V_j| >= 2*ell, each output keeps at least
// |V_j| / (2*ell) elements.
std::vector<std::vector<ElementId>> distribute(
    const std::vector<std::vector<ElementId>>& sets, Rng& rng);
std::vector<std::vector<ElementId>> distribute(
    const std::vector<std::vector<ElementId>>& sets, std::uint64_t seed);

// Random-permutes the pool and, in one adaptive round, evaluates every
// prefix marginal g(v_i | v_1..v_{i-1}) for i <= min(s, |pool|), marking
// each position. i_star is the longest prefix whose TRUE-count is at least
// (1 - eps) times its length, or 0 when no prefix qualifies.
struct PrefixSelection {
  std::size_t i_star = 0;
  std::vector<PrefixMark> marks;        // size min(s, |pool|)
  std::vector<ElementId> permuted;      // the full permuted pool
  std::vector<double> prefix_values;    // g(v_1..v_i) per evaluated prefix
};
PrefixSelection prefix_selection(const ValueOracle& g,
                                 const std::vector<ElementId>& pool,
                                 std::size_t s, double tau, double eps,
                                 Rng& rng);
PrefixSelection prefix_selection(const ValueOracle& g,
                                 const std::vector<ElementId>& pool,
                                 std::size_t s, double tau, double eps,
                                 std::uint64_t seed);

// From the first i_star_j permuted elements, keeps exactly i_star of them in
// three passes (TRUE positions first, then NONE, then FALSE), all in pool
// order. `kept_filtered` drops the FALSE-marked survivors.
struct SubsetSelection {
  std::vector<std::size_t> positions;        // ascending, into `permuted`
  std::vector<ElementId> kept;               // S_j
  std::vector<ElementId> kept_filtered;      // S_j'
};
SubsetSelection select_subset(const std::vector<ElementId>& permuted,
                              std::size_t i_star_j, std::size_t i_star,
                              const std::vector<PrefixMark>& marks);

// One acceptance in a parallel run: `context` is the set the mark was
// computed against (the solution at batch start plus the earlier permuted
// elements), so the run can be replayed on a fresh oracle.
struct PigAcceptance {
  std::size_t solution = 0;
  ElementId element = 0;
  double tau = 0.0;
  PrefixMark mark = PrefixMark::kTrue;
  std::vector<ElementId> context;
};

struct PigResult {
  std::vector<SolutionSet> full;      // A_l
  std::vector<SolutionSet> filtered;  // A_l'
  double max_singleton = 0.0;         // M
  std::uint64_t iterations = 0;       // while-loop passes
  // Per iteration: the size of every solution and whether it was active at
  // the end of the pass.
  std::vector<std::vector<std::size_t>> size_history;
  std::vector<std::vector<bool>> active_history;
  std::vector<PigAcceptance> log;
};

// The parallel interlacing core: ell solutions grown in lockstep with
// per-solution descending thresholds, candidate pools maintained by update,
// and block additions taken from distribute + prefix_selection. Queries
// issued by the parallel sections are metered per branch and merged as one
// batch (rounds advance by the widest branch).
PigResult parallel_interlace_greedy(const ValueOracle& oracle, std::size_t m,
                                    std::size_t ell, double tau_min,
                                    double eps, std::uint64_t seed,
                                    std::optional<double> known_max_singleton =
                                        std::nullopt);

// ParallelInterlaceGreedy at (f, k, 2, eps*M/k, eps): the better of the two
// filtered solutions, a (1/4 - eps)-approximation with high probability.
RunRecord pig(const ValueOracle& oracle, std::size_t k, double eps,
              std::uint64_t seed);

// ParallelInterpolatedGreedy: ell rounds of the interlacing core on the
// contraction f_G, each time merging a uniformly random filtered solution
// into G. Expected (1/e - eps)-approximation for admissible (k, ell).
// `diagnostics`, when given, collects the inner core results.
RunRecord parallel_interpolated_greedy(const ValueOracle& oracle,
                                       std::size_t k, std::size_t ell,
                                       double eps, std::uint64_t seed,
                                       std::vector<PigResult>* diagnostics =
                                           nullptr);

}  // namespace submod

#endif  // SUBMOD_PARALLEL_HPP
