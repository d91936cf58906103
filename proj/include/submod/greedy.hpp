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

#ifndef SUBMOD_GREEDY_HPP
#define SUBMOD_GREEDY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "submod/core.hpp"
#include "submod/oracle.hpp"

namespace submod {

// Per-iteration picks of the interlaced run, dummies included. Tests use
// this to check disjointness and the |A| == |B| boundary invariant.
struct InterlaceTrace {
  ElementId dummy_base = 0;
  std::vector<std::pair<ElementId, ElementId>> picks;  // (into A, into B)
};

// Deterministic interlaced greedy: grows two disjoint solutions by
// alternating argmax steps over the ground set padded with 2k dummies, and
// returns the better of the two. Guarantees f(S) >= OPT/4 in at most 2kn
// marginal queries and exactly 2k adaptive rounds.
RunRecord interlace_greedy(const ValueOracle& oracle, std::size_t k,
                           InterlaceTrace* trace = nullptr);

// Elements claimed per outer iteration, one list per candidate solution.
struct InterpolatedTrace {
  ElementId dummy_base = 0;
  // claims[i][l] = ids appended to candidate l during outer iteration i.
  std::vector<std::vector<std::vector<ElementId>>> claims;
  std::vector<std::size_t> chosen;  // index picked as G per iteration
};

// Randomized interpolated greedy: ell outer rounds, each interlacing ell
// solutions grown from the incumbent G over a shared shrinking pool, then
// replacing G with a uniformly random candidate. E[f(G)] >= (1/e - eps)OPT
// for admissible (k, ell). |G| = ell * floor(k / ell).
RunRecord interpolated_greedy(const ValueOracle& oracle, std::size_t k,
                              std::size_t ell, std::uint64_t seed,
                              InterpolatedTrace* trace = nullptr);

}  // namespace submod

#endif  // SUBMOD_GREEDY_HPP
