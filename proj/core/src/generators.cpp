// Copyright 2026 The wdcolor Authors
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

#include "wdcolor/generators.hpp"

#include <limits>
#include <map>

namespace wdcolor {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error("empty draw range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

WeightedGraph grid_graph(int d, int m) {
  if (d < 1 || m < 1) throw Error("grid needs d >= 1 and m >= 1");
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= static_cast<std::uint64_t>(m);
  WeightedGraph g;
  for (VertexId v = 0; v < total; ++v) g.add_vertex(v);
  for (VertexId v = 0; v < total; ++v) {
    std::uint64_t stride = 1;
    for (int i = 0; i < d; ++i) {
      if ((v / stride) % static_cast<std::uint64_t>(m) + 1 < static_cast<std::uint64_t>(m)) {
        g.add_edge(v, v + stride, Length(1));
      }
      stride *= static_cast<std::uint64_t>(m);
    }
  }
  return g;
}

WeightedGraph random_tree(std::size_t n, Rng& rng) {
  WeightedGraph g;
  if (n == 0) return g;
  g.add_vertex(0);
  for (VertexId v = 1; v < n; ++v) g.add_edge(rng.below(v), v, Length(1));
  return g;
}

WeightedGraph random_connected_graph(std::size_t n, std::uint64_t num, std::uint64_t den,
                                     Rng& rng) {
  if (den == 0 || num > den) throw Error("edge probability must lie in [0, 1]");
  WeightedGraph g = random_tree(n, rng);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v) && rng.chance(num, den)) g.add_edge(u, v, Length(1));
    }
  }
  return g;
}

TreeDecomposition forest_decomposition(const WeightedGraph& forest) {
  std::map<VertexId, VertexId> parent;
  std::vector<VertexId> roots;
  std::map<VertexId, bool> seen;
  for (VertexId root : forest.vertices()) {
    if (seen[root]) continue;
    roots.push_back(root);
    seen[root] = true;
    std::vector<std::pair<VertexId, VertexId>> stack{{root, root}};
    while (!stack.empty()) {
      auto [u, from] = stack.back();
      stack.pop_back();
      for (const auto& arc : forest.arcs(forest.index_of(u))) {
        VertexId v = forest.id_at(arc.to);
        if (v == from) continue;
        if (seen[v]) throw Error("graph has a cycle through " + std::to_string(v));
        seen[v] = true;
        parent[v] = u;
        stack.push_back({v, u});
      }
    }
  }
  TreeDecomposition td;
  for (VertexId v : forest.vertices()) {
    auto it = parent.find(v);
    td.add_node(v, it == parent.end() ? VertexSet{v} : make_vertex_set({it->second, v}));
  }
  for (const auto& [v, p] : parent) td.add_edge(p, v);
  for (std::size_t i = 1; i < roots.size(); ++i) td.add_edge(roots[i - 1], roots[i]);
  return td;
}

Partition grid_row_partition(int m) {
  if (m < 1) throw Error("grid side must be at least 1");
  const VertexId side = static_cast<VertexId>(m);
  Partition p;
  for (VertexId i = 0; i < side; ++i) {
    VertexSet row;
    for (VertexId j = 0; j < side; ++j) row.push_back(i * side + j);
    p.add_part(i, std::move(row));
  }
  return p;
}

TreeDecomposition grid_row_decomposition(int m) {
  if (m < 1) throw Error("grid side must be at least 1");
  TreeDecomposition td;
  if (m == 1) {
    td.add_node(0, {0});
    return td;
  }
  for (NodeId i = 0; i + 1 < static_cast<NodeId>(m); ++i) {
    td.add_node(i, {i, i + 1});
    if (i > 0) td.add_edge(i - 1, i);
  }
  return td;
}

std::vector<WeightedGraph> connected_graphs(std::size_t n) {
  if (n > 6) throw Error("exhaustive enumeration is limited to 6 vertices");
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  std::vector<WeightedGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    WeightedGraph g;
    for (VertexId v = 0; v < n; ++v) g.add_vertex(v);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second, Length(1));
    }
    // Connected iff a search from 0 reaches everything.
    std::vector<bool> reached(n, false);
    std::vector<std::size_t> stack;
    if (n > 0) {
      reached[0] = true;
      stack.push_back(0);
    }
    std::size_t count = n > 0 ? 1 : 0;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (const auto& arc : g.arcs(u)) {
        if (!reached[arc.to]) {
          reached[arc.to] = true;
          ++count;
          stack.push_back(arc.to);
        }
      }
    }
    if (count == n && n > 0) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace wdcolor
