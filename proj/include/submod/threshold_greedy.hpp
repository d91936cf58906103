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

#ifndef SUBMOD_THRESHOLD_GREEDY_HPP
#define SUBMOD_THRESHOLD_GREEDY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "submod/core.hpp"
#include "submod/oracle.hpp"

namespace submod {

// Acceptance log of a descending-threshold run. Each entry records the
// threshold stream it belongs to (a stream's tau only ever decreases), the
// threshold in force, and the solution contents just before the insertion.
// Replaying an entry must show marginal_gain(element | context) >= tau.
struct ThresholdAcceptance {
  std::size_t stream = 0;
  ElementId element = 0;
  double tau = 0.0;
  std::vector<ElementId> context;
};

struct ThresholdTrace {
  std::vector<ThresholdAcceptance> log;
};

// Descending-threshold interlaced greedy. Thresholds start at the maximum
// singleton value and decay by (1 - eps) whenever no element outside both
// solutions clears them; a solution retires below eps*M/k or at k elements.
// f(S) >= (1/4 - eps)OPT in O(n log(k)/eps) queries.
RunRecord fast_interlace_greedy(const ValueOracle& oracle, std::size_t k,
                                double eps, ThresholdTrace* trace = nullptr);

// ell = ceil(4 / (e * eps)) used by fast_interpolated_greedy; exposed so
// callers can validate k >= ell up front.
std::size_t fast_interpolated_ell(double eps);

// Descending-threshold interpolated greedy: ell outer rounds of ell
// round-robin threshold greedies growing from the incumbent G, thresholds
// reset to M each round with decay factor (1 - eps/2) and floor eps*M/(2k).
// f(G) >= (1/e - eps)OPT in expectation for admissible (k, eps).
RunRecord fast_interpolated_greedy(const ValueOracle& oracle, std::size_t k,
                                   double eps, std::uint64_t seed,
                                   ThresholdTrace* trace = nullptr);

}  // namespace submod

#endif  // SUBMOD_THRESHOLD_GREEDY_HPP
