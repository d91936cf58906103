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

#ifndef SUBMOD_DISPATCH_HPP
#define SUBMOD_DISPATCH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "submod/core.hpp"
#include "submod/oracle.hpp"

namespace submod {

struct AlgoParams {
  double epsilon = 0.1;
  std::size_t ell = 5;
  std::uint64_t seed = 0;
};

// Runs the named algorithm. Names: interlace_greedy, interpolated_greedy,
// fast_interlace_greedy, fast_interpolated_greedy, pig, pitg, random_greedy,
// fast_random_greedy. Throws std::invalid_argument for unknown names or
// inadmissible parameters.
RunRecord run_algorithm(std::string_view name, const ValueOracle& oracle,
                        std::size_t k, const AlgoParams& params);

bool algorithm_is_randomized(std::string_view name);
const std::vector<std::string>& known_algorithms();

}  // namespace submod

#endif  // SUBMOD_DISPATCH_HPP
