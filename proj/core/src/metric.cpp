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

#include "wdcolor/metric.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace wdcolor {

const Length& DistanceMatrix::operator()(VertexId u, VertexId v) const {
  return at(index_of(u), index_of(v));
}

std::size_t DistanceMatrix::index_of(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) {
    throw Error("vertex " + std::to_string(v) + " not in distance matrix");
  }
  return static_cast<std::size_t>(it - ids_.begin());
}

bool DistanceMatrix::has_vertex(VertexId v) const { return contains(ids_, v); }

DistanceMatrix DistanceMatrix::restrict(const VertexSet& subset) const {
  DistanceMatrix out;
  out.ids_ = subset;
  out.stride_ = stride_;
  out.storage_ = storage_;
  out.rows_.reserve(subset.size());
  // Both lists are sorted, so a merge walk finds the rows.
  std::size_t j = 0;
  for (VertexId v : subset) {
    while (j < ids_.size() && ids_[j] < v) ++j;
    if (j == ids_.size() || ids_[j] != v) {
      throw Error("restrict: vertex " + std::to_string(v) + " not in distance matrix");
    }
    out.rows_.push_back(rows_[j]);
  }
  return out;
}

ShortestPathTree shortest_path_tree(const WeightedGraph& graph, VertexId source) {
  const std::size_t n = graph.num_vertices();
  ShortestPathTree tree{source, std::vector<Length>(n, Length::infinity()),
                        std::vector<std::optional<std::size_t>>(n)};
  std::size_t s = graph.index_of(source);
  tree.dist[s] = Length(0);

  using Item = std::pair<Rational, std::size_t>;
  auto greater = [](const Item& a, const Item& b) {
    int c = cmp(a.first, b.first);
    return c > 0 || (c == 0 && a.second > b.second);
  };
  std::priority_queue<Item, std::vector<Item>, decltype(greater)> queue(greater);
  std::vector<bool> done(n, false);
  queue.push({Rational(0), s});
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = true;
    for (const auto& arc : graph.arcs(u)) {
      // Infinite edges never improve a finite tentative distance, and a
      // vertex only reachable through them keeps distance infinity.
      if (arc.weight.is_infinite() || done[arc.to]) continue;
      Rational candidate = d + arc.weight.value();
      const Length& current = tree.dist[arc.to];
      if (current.is_infinite() || candidate < current.value()) {
        tree.dist[arc.to] = Length(candidate);
        tree.parent[arc.to] = u;
        queue.push({candidate, arc.to});
      }
    }
  }
  return tree;
}

DistanceMatrix all_pairs_distances(const WeightedGraph& graph) {
  const std::size_t n = graph.num_vertices();
  auto storage = std::make_shared<std::vector<Length>>(n * n, Length::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    ShortestPathTree tree = shortest_path_tree(graph, graph.id_at(i));
    std::move(tree.dist.begin(), tree.dist.end(), storage->begin() + static_cast<std::ptrdiff_t>(i * n));
  }
  DistanceMatrix out;
  out.ids_ = graph.vertices();
  out.stride_ = n;
  out.rows_.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.rows_[i] = i;
  out.storage_ = std::move(storage);
  return out;
}

Length distance_to_set(const DistanceMatrix& dist, VertexId v, const VertexSet& set) {
  Length best = Length::infinity();
  std::size_t i = dist.index_of(v);
  for (VertexId s : set) {
    const Length& d = dist.at(i, dist.index_of(s));
    if (d < best) best = d;
  }
  return best;
}

VertexSet neighborhood(const DistanceMatrix& dist, const VertexSet& set, const Rational& r) {
  std::vector<std::size_t> sources;
  sources.reserve(set.size());
  for (VertexId s : set) sources.push_back(dist.index_of(s));
  Length radius(r);
  VertexSet out;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    for (std::size_t s : sources) {
      if (dist.at(i, s) <= radius) {
        out.push_back(dist.vertices()[i]);
        break;
      }
    }
  }
  return out;
}

Length weak_diameter(const DistanceMatrix& dist, const VertexSet& set) {
  if (set.empty()) throw Error("weak diameter of an empty set is undefined");
  std::vector<std::size_t> idx;
  idx.reserve(set.size());
  for (VertexId v : set) idx.push_back(dist.index_of(v));
  Length best(0);
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      const Length& d = dist.at(idx[a], idx[b]);
      if (d > best) {
        best = d;
        if (best.is_infinite()) return best;
      }
    }
  }
  return best;
}

RadiusCenter radius_and_center(const DistanceMatrix& dist) {
  if (dist.size() == 0) throw Error("radius of an empty graph is undefined");
  std::optional<RadiusCenter> best;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    Length ecc(0);
    for (std::size_t j = 0; j < dist.size(); ++j) {
      if (dist.at(i, j) > ecc) ecc = dist.at(i, j);
    }
    if (!best || ecc < best->radius) best = RadiusCenter{ecc, dist.vertices()[i]};
  }
  return *best;
}

std::vector<std::pair<VertexId, VertexId>> power_adjacency(const DistanceMatrix& dist,
                                                           const Rational& r) {
  Length radius(r);
  std::vector<std::pair<VertexId, VertexId>> out;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    for (std::size_t j = i + 1; j < dist.size(); ++j) {
      if (dist.at(i, j) <= radius) out.emplace_back(dist.vertices()[i], dist.vertices()[j]);
    }
  }
  return out;
}

TightnessReport is_tight(const DistanceMatrix& sub, const DistanceMatrix& host) {
  if (!is_subset(sub.vertices(), host.vertices())) {
    throw Error("is_tight: subgraph vertices are not contained in the host");
  }
  DistanceMatrix view = host.restrict(sub.vertices());
  for (std::size_t i = 0; i < sub.size(); ++i) {
    for (std::size_t j = i + 1; j < sub.size(); ++j) {
      if (sub.at(i, j) != view.at(i, j)) {
        return {false, std::make_pair(sub.vertices()[i], sub.vertices()[j]), sub.at(i, j),
                view.at(i, j)};
      }
    }
  }
  return {};
}

TightnessReport is_tight(const WeightedGraph& sub, const WeightedGraph& host) {
  if (!is_subset(sub.vertices(), host.vertices())) {
    throw Error("is_tight: subgraph vertices are not contained in the host");
  }
  return is_tight(all_pairs_distances(sub), all_pairs_distances(host));
}

bool is_r_walk(const DistanceMatrix& dist, const std::vector<VertexId>& walk, const Rational& r) {
  if (walk.empty()) throw Error("is_r_walk: empty sequence");
  Length radius(r);
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    if (dist(walk[i], walk[i + 1]) > radius) return false;
  }
  dist.index_of(walk.back());
  return true;
}

}  // namespace wdcolor
