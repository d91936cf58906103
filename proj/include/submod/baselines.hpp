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

#ifndef SUBMOD_BASELINES_HPP
#define SUBMOD_BASELINES_HPP

#include <cstdint>

#include "submod/core.hpp"
#include "submod/oracle.hpp"

namespace submod {

// RandomGreedy: k steps, each taking the k candidates of largest marginal
// gain (ties to the lowest id, dummies standing in for "add nothing") and
// adding one of them uniformly at random. At most kn + n queries, k rounds.
RunRecord random_greedy(const ValueOracle& oracle, std::size_t k,
                        std::uint64_t seed);

// Per-element sampling probability used by fast_random_greedy.
double fast_random_greedy_p(std::size_t k, double eps);

// FastRandomGreedy: when the sampling probability reaches 1 this is exactly
// random_greedy (same seed, same record); otherwise every step draws a fresh
// Bernoulli(p) sample of the remaining ground set and adds its best element,
// falling back to a dummy when the sample is empty or the best gain is
// negative.
RunRecord fast_random_greedy(const ValueOracle& oracle, std::size_t k,
                             double eps, std::uint64_t seed);

}  // namespace submod

#endif  // SUBMOD_BASELINES_HPP
