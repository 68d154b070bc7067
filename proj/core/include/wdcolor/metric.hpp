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

// Shortest-path metric of a weighted graph and the primitives built on it:
// neighbourhoods, weak diameter, radius, power graphs and tightness.

#ifndef WDCOLOR_METRIC_HPP_
#define WDCOLOR_METRIC_HPP_

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "wdcolor/graph.hpp"
#include "wdcolor/rational.hpp"

namespace wdcolor {

// Exact all-pairs distances. Restricting to a vertex subset yields a view that
// shares storage with the parent, which is how tight subgraphs reuse the
// ambient metric.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  const VertexSet& vertices() const { return ids_; }
  std::size_t size() const { return ids_.size(); }

  // Local dense indices, matching the sorted vertex order.
  const Length& at(std::size_t i, std::size_t j) const {
    return (*storage_)[rows_[i] * stride_ + rows_[j]];
  }
  // Throws Error for ids outside the matrix.
  const Length& operator()(VertexId u, VertexId v) const;
  std::size_t index_of(VertexId v) const;
  bool has_vertex(VertexId v) const;

  // View onto a subset of the vertices. Throws Error if not a subset.
  DistanceMatrix restrict(const VertexSet& subset) const;

 private:
  friend DistanceMatrix all_pairs_distances(const WeightedGraph& graph);

  VertexSet ids_;
  std::vector<std::size_t> rows_;
  std::size_t stride_ = 0;
  std::shared_ptr<const std::vector<Length>> storage_;
};

struct ShortestPathTree {
  VertexId source;
  std::vector<Length> dist;  // indexed like graph.vertices()
  // Dense index of the predecessor, or nullopt for the source and unreachable
  // vertices.
  std::vector<std::optional<std::size_t>> parent;
};

ShortestPathTree shortest_path_tree(const WeightedGraph& graph, VertexId source);

DistanceMatrix all_pairs_distances(const WeightedGraph& graph);

Length distance_to_set(const DistanceMatrix& dist, VertexId v, const VertexSet& set);

// {v : dist(v, S) <= r}.
VertexSet neighborhood(const DistanceMatrix& dist, const VertexSet& set, const Rational& r);

// Max pairwise distance. Throws Error on an empty set.
Length weak_diameter(const DistanceMatrix& dist, const VertexSet& set);

struct RadiusCenter {
  Length radius;
  VertexId center;
};

// Ties broken by smallest id. Throws Error on an empty matrix.
RadiusCenter radius_and_center(const DistanceMatrix& dist);

// Pairs (u, v), u < v, at distance at most r.
std::vector<std::pair<VertexId, VertexId>> power_adjacency(const DistanceMatrix& dist,
                                                           const Rational& r);

struct TightnessReport {
  bool tight = true;
  // First pair (in id order) whose distances differ.
  std::optional<std::pair<VertexId, VertexId>> witness;
  Length sub_distance;
  Length host_distance;
};

// Whether dist_sub agrees with dist_host on every pair of sub's vertices.
// Throws Error if V(sub) is not contained in V(host).
TightnessReport is_tight(const WeightedGraph& sub, const WeightedGraph& host);
TightnessReport is_tight(const DistanceMatrix& sub, const DistanceMatrix& host);

bool is_r_walk(const DistanceMatrix& dist, const std::vector<VertexId>& walk, const Rational& r);

}  // namespace wdcolor

#endif  // WDCOLOR_METRIC_HPP_
