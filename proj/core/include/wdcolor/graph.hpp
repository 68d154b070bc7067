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

#ifndef WDCOLOR_GRAPH_HPP_
#define WDCOLOR_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wdcolor/rational.hpp"

namespace wdcolor {

using VertexId = std::uint64_t;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

// Raised on malformed input or violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

VertexSet make_vertex_set(std::vector<VertexId> ids);
bool contains(const VertexSet& set, VertexId v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);

struct Edge {
  VertexId u;  // u < v
  VertexId v;
  Length weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite simple undirected graph with weights in (0, inf]. Vertices are kept
// sorted by id; dense indices follow that order.
class WeightedGraph {
 public:
  struct Arc {
    std::size_t to;
    Length weight;
  };

  WeightedGraph() = default;

  void add_vertex(VertexId v);
  // Adds both endpoints if needed. Rejects loops, parallel edges and
  // nonpositive weights.
  void add_edge(VertexId u, VertexId v, const Length& weight);
  // Replaces the weight of an existing edge, or adds it.
  void set_weight(VertexId u, VertexId v, const Length& weight);

  std::size_t num_vertices() const { return ids_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  bool empty() const { return ids_.empty(); }

  const VertexSet& vertices() const { return ids_; }
  bool has_vertex(VertexId v) const;
  // Throws Error for unknown ids.
  std::size_t index_of(VertexId v) const;
  VertexId id_at(std::size_t index) const { return ids_[index]; }

  std::span<const Arc> arcs(std::size_t index) const { return adj_[index]; }
  std::optional<Length> weight(VertexId u, VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const { return weight(u, v).has_value(); }

  // Sorted by (u, v) with u < v.
  std::vector<Edge> edges() const;

  WeightedGraph induced(const VertexSet& keep) const;
  WeightedGraph without(const VertexSet& removed) const;
  // Same vertices and edges, every weight 1.
  WeightedGraph shape() const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b);

 private:
  VertexSet ids_;
  std::vector<std::vector<Arc>> adj_;
  std::size_t num_edges_ = 0;
};

// Union of two graphs that agree on shared edges.
WeightedGraph graph_union(const WeightedGraph& a, const WeightedGraph& b);

}  // namespace wdcolor

#endif  // WDCOLOR_GRAPH_HPP_
