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

#include "submod/dispatch.hpp"

#include <stdexcept>

#include "submod/baselines.hpp"
#include "submod/greedy.hpp"
#include "submod/parallel.hpp"
#include "submod/threshold_greedy.hpp"

namespace submod {

RunRecord run_algorithm(std::string_view name, const ValueOracle& oracle,
                        std::size_t k, const AlgoParams& p) {
  if (name == "interlace_greedy") return interlace_greedy(oracle, k);
  if (name == "interpolated_greedy") {
    return interpolated_greedy(oracle, k, p.ell, p.seed);
  }
  if (name == "fast_interlace_greedy") {
    return fast_interlace_greedy(oracle, k, p.epsilon);
  }
  if (name == "fast_interpolated_greedy") {
    return fast_interpolated_greedy(oracle, k, p.epsilon, p.seed);
  }
  if (name == "pig") return pig(oracle, k, p.epsilon, p.seed);
  if (name == "pitg") {
    return parallel_interpolated_greedy(oracle, k, p.ell, p.epsilon, p.seed);
  }
  if (name == "random_greedy") return random_greedy(oracle, k, p.seed);
  if (name == "fast_random_greedy") {
    return fast_random_greedy(oracle, k, p.epsilon, p.seed);
  }
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

bool algorithm_is_randomized(std::string_view name) {
  return name != "interlace_greedy" && name != "fast_interlace_greedy";
}

const std::vector<std::string>& known_algorithms() {
  static const std::vector<std::string> names = {
      "interlace_greedy",      "interpolated_greedy",
      "fast_interlace_greedy", "fast_interpolated_greedy",
      "pig",                   "pitg",
      "random_greedy",         "fast_random_greedy"};
  return names;
}

}  // namespace submod
