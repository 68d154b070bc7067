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

#include "wdcolor/graph.hpp"

#include <algorithm>
#include <iterator>

namespace wdcolor {

VertexSet make_vertex_set(std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool contains(const VertexSet& set, VertexId v) {
  return std::binary_search(set.begin(), set.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool WeightedGraph::has_vertex(VertexId v) const { return contains(ids_, v); }

std::size_t WeightedGraph::index_of(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) throw Error("unknown vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - ids_.begin());
}

void WeightedGraph::add_vertex(VertexId v) {
  if (ids_.empty() || v > ids_.back()) {
    ids_.push_back(v);
    adj_.emplace_back();
    return;
  }
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (*it == v) return;
  std::size_t pos = static_cast<std::size_t>(it - ids_.begin());
  ids_.insert(it, v);
  adj_.insert(adj_.begin() + static_cast<std::ptrdiff_t>(pos), std::vector<Arc>{});
  for (auto& list : adj_) {
    for (auto& arc : list) {
      if (arc.to >= pos) ++arc.to;
    }
  }
}

void WeightedGraph::add_edge(VertexId u, VertexId v, const Length& weight) {
  if (u == v) throw Error("loop at vertex " + std::to_string(u));
  if (weight.is_finite() && weight.value() <= 0) {
    throw Error("nonpositive weight on edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  if (has_vertex(u) && has_vertex(v) && has_edge(u, v)) {
    throw Error("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  add_vertex(u);
  add_vertex(v);
  std::size_t iu = index_of(u);
  std::size_t iv = index_of(v);
  adj_[iu].push_back({iv, weight});
  adj_[iv].push_back({iu, weight});
  ++num_edges_;
}

void WeightedGraph::set_weight(VertexId u, VertexId v, const Length& weight) {
  if (!has_vertex(u) || !has_vertex(v) || !has_edge(u, v)) {
    add_edge(u, v, weight);
    return;
  }
  if (weight.is_finite() && weight.value() <= 0) throw Error("nonpositive weight");
  std::size_t iu = index_of(u);
  std::size_t iv = index_of(v);
  for (auto& arc : adj_[iu]) {
    if (arc.to == iv) arc.weight = weight;
  }
  for (auto& arc : adj_[iv]) {
    if (arc.to == iu) arc.weight = weight;
  }
}

std::optional<Length> WeightedGraph::weight(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v)) return std::nullopt;
  std::size_t iu = index_of(u);
  std::size_t iv = index_of(v);
  for (const auto& arc : adj_[iu]) {
    if (arc.to == iv) return arc.weight;
  }
  return std::nullopt;
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    for (const auto& arc : adj_[i]) {
      if (arc.to > i) out.push_back({ids_[i], ids_[arc.to], arc.weight});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return out;
}

WeightedGraph WeightedGraph::induced(const VertexSet& keep) const {
  WeightedGraph out;
  std::vector<std::size_t> local(ids_.size(), SIZE_MAX);
  for (VertexId v : keep) {
    std::size_t i = index_of(v);
    local[i] = out.ids_.size();
    out.ids_.push_back(v);
    out.adj_.emplace_back();
  }
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (local[i] == SIZE_MAX) continue;
    for (const auto& arc : adj_[i]) {
      if (local[arc.to] == SIZE_MAX) continue;
      out.adj_[local[i]].push_back({local[arc.to], arc.weight});
      if (arc.to > i) ++out.num_edges_;
    }
  }
  return out;
}

WeightedGraph WeightedGraph::without(const VertexSet& removed) const {
  return induced(set_difference(ids_, removed));
}

WeightedGraph WeightedGraph::shape() const {
  WeightedGraph out = *this;
  for (auto& list : out.adj_) {
    for (auto& arc : list) arc.weight = Length(1);
  }
  return out;
}

bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
  return a.ids_ == b.ids_ && a.edges() == b.edges();
}

WeightedGraph graph_union(const WeightedGraph& a, const WeightedGraph& b) {
  WeightedGraph out = a;
  for (VertexId v : b.vertices()) out.add_vertex(v);
  for (const auto& e : b.edges()) {
    auto existing = out.weight(e.u, e.v);
    if (!existing) {
      out.add_edge(e.u, e.v, e.weight);
    } else if (*existing != e.weight) {
      throw Error("graph_union: conflicting weights on " + std::to_string(e.u) + "-" +
                  std::to_string(e.v));
    }
  }
  return out;
}

}  // namespace wdcolor
