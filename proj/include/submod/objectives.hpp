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

#ifndef SUBMOD_OBJECTIVES_HPP
#define SUBMOD_OBJECTIVES_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "submod/graph.hpp"
#include "submod/oracle.hpp"

namespace submod {

// Cut value: f(S) = total weight of edges crossing (S, V \ S).
class MaxcutFunction : public SetFunction {
 public:
  explicit MaxcutFunction(Graph g) : g_(std::move(g)) {}
  std::size_t ground_size() const override { return g_.vertex_count(); }
  double value(std::span<const ElementId> elements) const override;
  const Graph& graph() const { return g_; }

 private:
  Graph g_;
};

// Parameters of the revenue model: directed edge weights w_ij in (0,1)
// (buyer i's valuation coefficient for seller j) and per-vertex concavity
// exponents alpha_i in (0,1). Weights are stored aligned with the graph's
// adjacency lists: weight[i][t] belongs to the directed pair
// (i, neighbors(i)[t]).
struct RevMaxParams {
  std::vector<double> alpha;
  std::vector<std::vector<double>> weight;
};

// w_ij ~ Uniform(0,1) independently per directed edge and alpha_i ~
// Uniform(0,1) per vertex, endpoints excluded. Draw order: all alphas by
// vertex id, then weights by (vertex id, adjacency position).
RevMaxParams gen_revmax_params(const Graph& g, std::uint64_t seed);

// Revenue: f(S) = sum over buyers i outside S of (sum_{j in S} w_ij)^alpha_i,
// with 0^alpha defined as 0.
class RevenueFunction : public SetFunction {
 public:
  // Throws std::invalid_argument when the parameters do not cover every
  // vertex and directed edge of the graph or leave the open interval (0,1).
  RevenueFunction(Graph g, RevMaxParams params);
  std::size_t ground_size() const override { return g_.vertex_count(); }
  double value(std::span<const ElementId> elements) const override;

 private:
  Graph g_;
  RevMaxParams params_;
};

ValueOracle maxcut_oracle(const Graph& g);
ValueOracle revmax_oracle(const Graph& g, const RevMaxParams& params);

}  // namespace submod

#endif  // SUBMOD_OBJECTIVES_HPP
