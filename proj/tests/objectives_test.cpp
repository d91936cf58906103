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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <tuple>
#include <unordered_map>

#include "submod/exact.hpp"
#include "submod/graph.hpp"
#include "submod/objectives.hpp"
#include "submod/rng.hpp"

using namespace submod;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("maxcut values on small graphs") {
  Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  ValueOracle f = maxcut_oracle(k3);
  CHECK(f.evaluate({0}) == 2.0);
  SolutionSet empty;
  CHECK(f.evaluate(empty) == 0.0);
  CHECK(f.evaluate({0, 1, 2}) == 0.0);

  Graph path(3, {{0, 1}, {1, 2}});
  ValueOracle fp = maxcut_oracle(path);
  CHECK(fp.evaluate({1}) == 2.0);
}

TEST_CASE("maxcut complement symmetry") {
  for (std::uint64_t inst = 0; inst < 3; ++inst) {
    Graph g = gen_er(14, 0.3, 70 + inst);
    ValueOracle f = maxcut_oracle(g);
    Rng rng(500 + inst);
    std::vector<ElementId> ids = f.real_universe();
    for (int t = 0; t < 100; ++t) {
      rng.shuffle(ids);
      const std::size_t size = static_cast<std::size_t>(rng.below(ids.size()));
      SolutionSet s;
      SolutionSet complement;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        (i < size ? s : complement).insert(ids[i]);
      }
      CHECK(f.evaluate(s) ==
            doctest::Approx(f.evaluate(complement)).epsilon(1e-12));
    }
  }
}

TEST_CASE("revmax formula on a two-vertex graph") {
  Graph g(2, {{0, 1}});
  RevMaxParams params;
  params.alpha = {0.9, 0.5};
  params.weight = {{0.7}, {0.25}};  // w_01 = 0.7, w_10 = 0.25
  ValueOracle f = revmax_oracle(g, params);
  CHECK(f.evaluate({0}) == doctest::Approx(std::sqrt(0.25)).epsilon(1e-15));
  SolutionSet empty;
  CHECK(f.evaluate(empty) == 0.0);
  CHECK(f.evaluate({0, 1}) == 0.0);
}

TEST_CASE("revmax rejects incomplete or out-of-range parameters") {
  Graph g(2, {{0, 1}});
  RevMaxParams missing;
  missing.alpha = {0.5};
  missing.weight = {{0.5}};
  CHECK_THROWS_AS(revmax_oracle(g, missing), std::invalid_argument);

  RevMaxParams bad_alpha;
  bad_alpha.alpha = {0.5, 1.0};
  bad_alpha.weight = {{0.5}, {0.5}};
  CHECK_THROWS_AS(revmax_oracle(g, bad_alpha), std::invalid_argument);
}

TEST_CASE("gen_er edge counts at the extremes") {
  CHECK(gen_er(5, 0.0, 1).edge_count() == 0);
  CHECK(gen_er(5, 1.0, 1).edge_count() == 10);
  CHECK_THROWS_AS(gen_er(5, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_er(0, 0.5, 1), std::invalid_argument);
}

TEST_CASE("gen_er edge count near the binomial mean") {
  // C(1000,2) * 0.005 = 2497.5, sigma ~ 49.9; stay within four sigma.
  Graph g = gen_er(1000, 5.0 / 1000.0, 20260810);
  CHECK(g.edge_count() > 2497.5 - 4 * 49.9);
  CHECK(g.edge_count() < 2497.5 + 4 * 49.9);
}

TEST_CASE("gen_er is deterministic per seed") {
  Graph a = gen_er(60, 0.1, 5);
  Graph b = gen_er(60, 0.1, 5);
  Graph c = gen_er(60, 0.1, 6);
  REQUIRE(a.edge_count() == b.edge_count());
  const auto ea = a.edges();
  const auto eb = b.edges();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    CHECK(ea[i].u == eb[i].u);
    CHECK(ea[i].v == eb[i].v);
  }
  CHECK(a.edges().size() != c.edges().size());  // overwhelmingly likely
}

TEST_CASE("load_edge_list basics") {
  const auto path = temp_file("submod_edges_basic.txt");
  write_file(path, "0 1\n1 2\n");
  Graph g = load_edge_list(path.string());
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("load_edge_list remaps labels in first-appearance order") {
  const auto path = temp_file("submod_edges_remap.txt");
  write_file(path, "# comment line\n5 9\n");
  Graph g = load_edge_list(path.string());
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.neighbors(0).size() == 1);
  CHECK(g.neighbors(0)[0].first == 1);
}

TEST_CASE("load_edge_list dedups symmetric duplicates") {
  const auto path = temp_file("submod_edges_dedup.txt");
  write_file(path, "0 1\n1 0\n");
  Graph g = load_edge_list(path.string());
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("load_edge_list errors") {
  const auto missing = temp_file("submod_edges_missing.txt");
  std::filesystem::remove(missing);
  CHECK_THROWS_AS(load_edge_list(missing.string()), std::runtime_error);

  const auto empty = temp_file("submod_edges_empty.txt");
  write_file(empty, "# only a comment\n");
  CHECK_THROWS_AS(load_edge_list(empty.string()), std::runtime_error);

  const auto malformed = temp_file("submod_edges_bad.txt");
  write_file(malformed, "0 1\nnot numbers\n");
  CHECK_THROWS_WITH_AS(load_edge_list(malformed.string()),
                       doctest::Contains(":2:"), std::runtime_error);
}

TEST_CASE("load_edge_list keeps weights and drops self-loops") {
  const auto path = temp_file("submod_edges_weights.txt");
  write_file(path, "0 1 2.5\n2 2\n1 2\n");
  Graph g = load_edge_list(path.string());
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.neighbors(0)[0].second == 2.5);
}

TEST_CASE("edge list round-trips the edge multiset") {
  // The loader renames labels densely in first-appearance order; applying
  // that same remap to the source graph must reproduce the loaded edge
  // multiset exactly.
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 6 + static_cast<std::size_t>(rng.below(10));
    std::vector<Edge> edges;
    for (ElementId v = 0; v + 1 < n; ++v) {
      edges.push_back({v, static_cast<ElementId>(v + 1), 1.0});
    }
    for (ElementId u = 0; u + 2 < n; ++u) {
      for (ElementId v = u + 2; v < n; ++v) {
        if (rng.bernoulli(0.3)) {
          edges.push_back({u, v, 1.0 + static_cast<double>(rng.below(5))});
        }
      }
    }
    Graph g(n, edges);
    const auto path = temp_file("submod_edges_roundtrip.txt");
    write_edge_list(g, path.string());
    Graph h = load_edge_list(path.string());
    REQUIRE(h.vertex_count() == g.vertex_count());
    REQUIRE(h.edge_count() == g.edge_count());

    std::unordered_map<ElementId, ElementId> remap;
    auto mapped = [&](ElementId x) {
      return remap.emplace(x, static_cast<ElementId>(remap.size()))
          .first->second;
    };
    std::vector<std::tuple<ElementId, ElementId, double>> expected;
    for (const Edge& e : g.edges()) {
      const ElementId mu = mapped(e.u);
      const ElementId mv = mapped(e.v);
      expected.emplace_back(std::min(mu, mv), std::max(mu, mv), e.w);
    }
    std::sort(expected.begin(), expected.end());
    std::vector<std::tuple<ElementId, ElementId, double>> got;
    for (const Edge& e : h.edges()) got.emplace_back(e.u, e.v, e.w);
    std::sort(got.begin(), got.end());
    CHECK(expected == got);
  }
}

TEST_CASE("gen_revmax_params is deterministic and in range") {
  Graph g = gen_er(30, 0.2, 77);
  RevMaxParams a = gen_revmax_params(g, 9);
  RevMaxParams b = gen_revmax_params(g, 9);
  CHECK(a.alpha == b.alpha);
  CHECK(a.weight == b.weight);
  for (double alpha : a.alpha) {
    CHECK(alpha > 0.0);
    CHECK(alpha < 1.0);
  }
  for (const auto& row : a.weight) {
    for (double w : row) {
      CHECK(w > 0.0);
      CHECK(w < 1.0);
    }
  }
}

TEST_CASE("gen_revmax_params weights have mean near one half") {
  Graph g = gen_er(200, 0.5, 123);
  RevMaxParams params = gen_revmax_params(g, 10);
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& row : params.weight) {
    for (double w : row) {
      sum += w;
      ++count;
    }
  }
  REQUIRE(count > 10000);
  const double mean = sum / static_cast<double>(count);
  CHECK(mean > 0.48);
  CHECK(mean < 0.52);
}

TEST_CASE("both objectives pass the submodularity audit") {
  Graph g = gen_er(18, 0.35, 2026);
  CHECK(check_submodular(maxcut_oracle(g), 1000, 1).violations == 0);
  CHECK(check_submodular(revmax_oracle(g, gen_revmax_params(g, 3)), 1000, 2)
            .violations == 0);
}

TEST_CASE("graph construction rejects bad edges") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1, -1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}
