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

#include "submod/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "submod/rng.hpp"

namespace submod {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) {
  adj_.resize(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("Graph: endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("Graph: self-loop");
    if (!(e.w > 0.0) || !std::isfinite(e.w)) {
      throw std::invalid_argument("Graph: edge weight must be positive");
    }
    adj_[e.u].emplace_back(e.v, e.w);
    adj_[e.v].emplace_back(e.u, e.w);
  }
  edge_count_ = edges.size();
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (list[i].first == list[i - 1].first) {
        throw std::invalid_argument("Graph: parallel edge");
      }
    }
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (ElementId u = 0; u < adj_.size(); ++u) {
    for (const auto& [v, w] : adj_[u]) {
      if (v > u) out.push_back({u, v, w});
    }
  }
  return out;
}

Graph gen_er(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_er: n must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("gen_er: p must lie in [0, 1]");
  }

  std::vector<Edge> edges;
  if (p >= 1.0) {
    for (ElementId u = 0; u + 1 < n; ++u) {
      for (ElementId v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
    }
    return Graph(n, edges);
  }
  if (p <= 0.0 || n < 2) return Graph(n, edges);

  // Geometric skipping over the C(n,2) pairs in lexicographic order.
  Rng rng(seed);
  const double log1mp = std::log1p(-p);
  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::uint64_t pos = 0;
  ElementId row = 0;
  std::uint64_t row_start = 0;  // pair index of (row, row+1)
  bool first = true;
  while (true) {
    const double u = rng.unit();
    const double jump = std::floor(std::log1p(-u) / log1mp);
    if (!(jump < static_cast<double>(total))) break;
    const std::uint64_t skip = static_cast<std::uint64_t>(jump);
    pos = first ? skip : pos + skip + 1;
    first = false;
    if (pos >= total) break;
    while (pos >= row_start + (n - 1 - row)) {
      row_start += n - 1 - row;
      ++row;
    }
    const ElementId col =
        static_cast<ElementId>(row + 1 + (pos - row_start));
    edges.push_back({row, col, 1.0});
  }
  return Graph(n, edges);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_edge_list: cannot open " + path);

  std::unordered_map<long long, ElementId> remap;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  std::string line;
  std::size_t line_no = 0;
  bool any_data = false;

  auto fail = [&](const std::string& what) {
    throw std::runtime_error("load_edge_list: " + path + ":" +
                             std::to_string(line_no) + ": " + what);
  };
  auto map_vertex = [&](long long label) {
    auto [it, inserted] =
        remap.emplace(label, static_cast<ElementId>(remap.size()));
    return it->second;
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;

    std::istringstream fields(line);
    long long u = 0;
    long long v = 0;
    if (!(fields >> u >> v)) fail("expected two vertex labels");
    if (u < 0 || v < 0) fail("negative vertex label");
    double w = 1.0;
    if (fields >> w) {
      if (!(w > 0.0) || !std::isfinite(w)) fail("non-positive edge weight");
    } else {
      fields.clear();
    }
    std::string rest;
    if (fields >> rest) fail("trailing tokens");

    any_data = true;
    if (u == v) continue;  // declared policy: self-loops dropped
    const ElementId mu = map_vertex(u);
    const ElementId mv = map_vertex(v);
    const std::uint64_t key =
        (static_cast<std::uint64_t>(std::min(mu, mv)) << 32) |
        std::max(mu, mv);
    if (!seen.insert(key).second) continue;  // dedup keeps the first
    edges.push_back({mu, mv, w});
  }
  if (!any_data) throw std::runtime_error("load_edge_list: " + path + ": empty edge list");
  return Graph(remap.size(), edges);
}

void write_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_edge_list: cannot open " + path);
  out << "# " << g.vertex_count() << " vertices, " << g.edge_count()
      << " edges\n";
  char buf[32];
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (e.w != 1.0) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), e.w);
      out << ' ' << std::string_view(buf, ptr - buf);
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write_edge_list: write failed");
}

}  // namespace submod
