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

#include <doctest.h>

#include <cmath>
#include <map>
#include <unordered_set>

#include "submod/exact.hpp"
#include "submod/graph.hpp"
#include "submod/objectives.hpp"
#include "submod/rng.hpp"
#include "submod/threshold_greedy.hpp"

using namespace submod;

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v <= leaves; ++v) {
    edges.push_back({0, static_cast<ElementId>(v), 1.0});
  }
  return Graph(leaves + 1, edges);
}

// Replays an acceptance log on a fresh oracle: per stream, thresholds never
// increase and each accepted element clears its threshold on its context.
void replay(const ValueOracle& fresh, const ThresholdTrace& trace) {
  std::map<std::size_t, double> last_tau;
  for (const ThresholdAcceptance& acc : trace.log) {
    auto it = last_tau.find(acc.stream);
    if (it != last_tau.end()) {
      CHECK(acc.tau <= it->second);
    }
    last_tau[acc.stream] = acc.tau;

    SolutionSet context;
    for (ElementId x : acc.context) context.insert(x);
    CHECK(fresh.marginal_gain(acc.element, context) >= acc.tau - 1e-9);
  }
}

}  // namespace

TEST_CASE("fast interlace greedy finds the max-degree vertex on K3") {
  ValueOracle f = maxcut_oracle(triangle());
  const RunRecord run = fast_interlace_greedy(f, 1, 0.1);
  CHECK(run.value == 2.0);
}

TEST_CASE("fast interlace greedy validates parameters") {
  ValueOracle f = maxcut_oracle(triangle());
  CHECK_THROWS_AS(fast_interlace_greedy(f, 0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(fast_interlace_greedy(f, 1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(fast_interlace_greedy(f, 1, -0.1), std::invalid_argument);
}

TEST_CASE("fast interlace greedy meets the (1/4 - eps) ratio on instances") {
  std::size_t cells = 0;
  for (std::size_t n = 6; n <= 12; ++n) {
    for (double p : {0.3, 0.5}) {
      Graph g = gen_er(n, p, 500 + n * 3 + static_cast<std::uint64_t>(p * 10));
      auto fn = std::make_shared<MaxcutFunction>(g);
      for (std::size_t k : {2, 3, 4}) {
        const OptResult opt = brute_force_opt(ValueOracle{fn}, k);
        const RunRecord run = fast_interlace_greedy(ValueOracle{fn}, k, 0.1);
        CHECK(run.value >= 0.15 * opt.value - 1e-9);
        ++cells;
      }
    }
  }
  CHECK(cells == 42);
}

TEST_CASE("fast interlace greedy acceptance log replays") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    Graph g = gen_er(24, 0.25, 300 + s);
    auto fn = std::make_shared<MaxcutFunction>(g);
    ThresholdTrace trace;
    fast_interlace_greedy(ValueOracle{fn}, 6, 0.2, &trace);
    replay(ValueOracle{fn}, trace);

    // The two solutions never share an element.
    std::unordered_set<ElementId> seen;
    for (const auto& acc : trace.log) CHECK(seen.insert(acc.element).second);
  }
}

TEST_CASE("fast interlace greedy query count scales linearly in n") {
  const std::size_t k = 16;
  const double eps = 0.1;
  std::uint64_t q_small = 0;
  std::uint64_t q_big = 0;
  {
    Graph g = gen_er(300, 5.0 / 300, 21);
    ValueOracle f = maxcut_oracle(g);
    q_small = fast_interlace_greedy(f, k, eps).queries;
  }
  {
    Graph g = gen_er(600, 5.0 / 600, 22);
    ValueOracle f = maxcut_oracle(g);
    q_big = fast_interlace_greedy(f, k, eps).queries;
  }
  // Doubling n at fixed k may at most double the queries, plus 10% slack.
  CHECK(static_cast<double>(q_big) <= 2.2 * static_cast<double>(q_small));
}

TEST_CASE("fast interlace greedy is deterministic") {
  Graph g = gen_er(30, 0.2, 77);
  auto fn = std::make_shared<MaxcutFunction>(g);
  const RunRecord a = fast_interlace_greedy(ValueOracle{fn}, 5, 0.1);
  const RunRecord b = fast_interlace_greedy(ValueOracle{fn}, 5, 0.1);
  CHECK(a.solution == b.solution);
  CHECK(a.value == b.value);
  CHECK(a.queries == b.queries);
  CHECK(a.rounds == b.rounds);
}

TEST_CASE("fast interpolated ell matches the formula") {
  CHECK(fast_interpolated_ell(0.8) == 2);  // ceil(4 / (e * 0.8))
  CHECK(fast_interpolated_ell(0.6) == 3);
  CHECK(fast_interpolated_ell(0.2) == 8);
}

TEST_CASE("fast interpolated greedy size bound on K4") {
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  ValueOracle f = maxcut_oracle(k4);
  const RunRecord run = fast_interpolated_greedy(f, 4, 0.8, 3);
  CHECK(run.solution.size() <= 4);
}

TEST_CASE("fast interpolated greedy rejects k below ell") {
  Graph g = gen_er(10, 0.4, 5);
  ValueOracle f = maxcut_oracle(g);
  // eps = 0.2 forces ell = 8 > k = 4.
  CHECK_THROWS_WITH_AS(fast_interpolated_greedy(f, 4, 0.2, 1),
                       doctest::Contains("ell = 8"), std::invalid_argument);
}

TEST_CASE("fast interpolated greedy is deterministic per seed") {
  Graph g = gen_er(26, 0.3, 44);
  auto fn = std::make_shared<MaxcutFunction>(g);
  const RunRecord a = fast_interpolated_greedy(ValueOracle{fn}, 8, 0.6, 55);
  const RunRecord b = fast_interpolated_greedy(ValueOracle{fn}, 8, 0.6, 55);
  CHECK(a.solution == b.solution);
  CHECK(a.value == b.value);
  CHECK(a.queries == b.queries);
}

TEST_CASE("fast interpolated greedy empirical floor on the 9-leaf star") {
  Graph g = star(9);
  auto fn = std::make_shared<MaxcutFunction>(g);
  const OptResult opt = brute_force_opt(ValueOracle{fn}, 4);
  REQUIRE(opt.value == 9.0);

  double sum = 0.0;
  const int runs = 500;
  for (int s = 0; s < runs; ++s) {
    sum += fast_interpolated_greedy(ValueOracle{fn}, 4, 0.6, 40000 + s).value;
  }
  CHECK(sum / runs >= 0.25 * opt.value);
}

TEST_CASE("fast interpolated greedy acceptance log replays") {
  for (std::uint64_t s = 0; s < 4; ++s) {
    Graph g = gen_er(20, 0.3, 700 + s);
    auto fn = std::make_shared<MaxcutFunction>(g);
    ThresholdTrace trace;
    fast_interpolated_greedy(ValueOracle{fn}, 6, 0.7, 80 + s, &trace);
    replay(ValueOracle{fn}, trace);
  }
}

TEST_CASE("fast variants handle an edgeless graph") {
  Graph g(4, {});
  ValueOracle f = maxcut_oracle(g);
  CHECK(fast_interlace_greedy(f, 2, 0.1).value == 0.0);
  CHECK(fast_interpolated_greedy(f, 3, 0.7, 1).value == 0.0);
}
