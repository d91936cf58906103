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

#include "submod/objectives.hpp"

#include <cmath>
#include <stdexcept>

#include "submod/rng.hpp"

namespace submod {

double MaxcutFunction::value(std::span<const ElementId> elements) const {
  const std::size_t n = g_.vertex_count();
  std::vector<std::uint8_t> in_s(n, 0);
  for (ElementId x : elements) in_s[x] = 1;
  double cut = 0.0;
  for (ElementId x : elements) {
    for (const auto& [y, w] : g_.neighbors(x)) {
      if (!in_s[y]) cut += w;
    }
  }
  return cut;
}

RevMaxParams gen_revmax_params(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  RevMaxParams params;
  const std::size_t n = g.vertex_count();
  params.alpha.reserve(n);
  for (std::size_t i = 0; i < n; ++i) params.alpha.push_back(rng.unit_open());
  params.weight.resize(n);
  for (ElementId i = 0; i < n; ++i) {
    params.weight[i].reserve(g.neighbors(i).size());
    for (std::size_t t = 0; t < g.neighbors(i).size(); ++t) {
      params.weight[i].push_back(rng.unit_open());
    }
  }
  return params;
}

RevenueFunction::RevenueFunction(Graph g, RevMaxParams params)
    : g_(std::move(g)), params_(std::move(params)) {
  const std::size_t n = g_.vertex_count();
  if (params_.alpha.size() != n || params_.weight.size() != n) {
    throw std::invalid_argument("RevenueFunction: parameters missing vertices");
  }
  for (ElementId i = 0; i < n; ++i) {
    if (params_.weight[i].size() != g_.neighbors(i).size()) {
      throw std::invalid_argument(
          "RevenueFunction: parameters missing directed edges");
    }
    if (!(params_.alpha[i] > 0.0 && params_.alpha[i] < 1.0)) {
      throw std::invalid_argument("RevenueFunction: alpha outside (0,1)");
    }
    for (double w : params_.weight[i]) {
      if (!(w > 0.0 && w < 1.0)) {
        throw std::invalid_argument("RevenueFunction: weight outside (0,1)");
      }
    }
  }
}

double RevenueFunction::value(std::span<const ElementId> elements) const {
  const std::size_t n = g_.vertex_count();
  std::vector<std::uint8_t> in_s(n, 0);
  for (ElementId x : elements) in_s[x] = 1;
  double revenue = 0.0;
  for (ElementId i = 0; i < n; ++i) {
    if (in_s[i]) continue;
    const auto& nbrs = g_.neighbors(i);
    double exposure = 0.0;
    for (std::size_t t = 0; t < nbrs.size(); ++t) {
      if (in_s[nbrs[t].first]) exposure += params_.weight[i][t];
    }
    if (exposure > 0.0) revenue += std::pow(exposure, params_.alpha[i]);
  }
  return revenue;
}

ValueOracle maxcut_oracle(const Graph& g) {
  return ValueOracle(std::make_shared<MaxcutFunction>(g));
}

ValueOracle revmax_oracle(const Graph& g, const RevMaxParams& params) {
  return ValueOracle(std::make_shared<RevenueFunction>(g, params));
}

}  // namespace submod
