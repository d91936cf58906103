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

#ifndef SUBMOD_EXACT_HPP
#define SUBMOD_EXACT_HPP

#include <cstdint>

#include "submod/core.hpp"
#include "submod/oracle.hpp"

namespace submod {

struct OptResult {
  SolutionSet set;
  double value = 0.0;
};

enum class EnumOrder { kForward, kReverse };

// Exact maximizer over all subsets of the real universe with |S| <= k.
// Ties break toward the lexicographically smallest set, so the result does
// not depend on enumeration order. Refuses universes larger than 22 elements.
OptResult brute_force_opt(const ValueOracle& oracle, std::size_t k,
                          EnumOrder order = EnumOrder::kForward);

struct SubmodularityReport {
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;           // diminishing returns failed
  std::uint64_t negativity_violations = 0;  // f(T) < 0 observed
  double worst_gap = 0.0;  // most negative delta(x|S) - delta(x|T) seen
  double tolerance = 1e-9;
};

// Samples random chains S subset of T and x outside T, and checks
// delta(x|S) >= delta(x|T) and f(T) >= 0 up to the tolerance. Violations are
// report content, not errors.
SubmodularityReport check_submodular(const ValueOracle& oracle,
                                     std::uint64_t trials, std::uint64_t seed);

}  // namespace submod

#endif  // SUBMOD_EXACT_HPP
