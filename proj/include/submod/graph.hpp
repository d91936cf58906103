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

#ifndef SUBMOD_GRAPH_HPP
#define SUBMOD_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "submod/core.hpp"

namespace submod {

struct Edge {
  ElementId u = 0;
  ElementId v = 0;
  double w = 1.0;
};

// Undirected weighted graph. Immutable after construction; adjacency lists
// are sorted by neighbor id. No self-loops, weights strictly positive,
// symmetric by construction.
class Graph {
 public:
  Graph() = default;
  // `edges` lists each undirected edge once (either endpoint order).
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<std::pair<ElementId, double>>& neighbors(
      ElementId u) const {
    return adj_[u];
  }
  // Each undirected edge once, with u < v, ordered lexicographically.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::vector<std::pair<ElementId, double>>> adj_;
  std::size_t edge_count_ = 0;
};

// Erdos-Renyi G(n, p) with unit weights; every unordered pair is included
// independently with probability p. Deterministic for a fixed seed.
Graph gen_er(std::size_t n, double p, std::uint64_t seed);

// Parses a SNAP-style edge list: lines "u v" or "u v w", '#' comments,
// whitespace separated. Vertex labels are remapped densely to 0..n-1 in
// first-appearance order; duplicate edges keep the first occurrence;
// self-loops are dropped. Throws std::runtime_error with the line number on
// malformed input and on files with no edges.
Graph load_edge_list(const std::string& path);

// Inverse of load_edge_list for graphs whose labels are already dense: one
// line per undirected edge, weight omitted when it is 1.
void write_edge_list(const Graph& g, const std::string& path);

}  // namespace submod

#endif  // SUBMOD_GRAPH_HPP
