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

// Shared fixtures for the test suites: small graph builders, random
// instances, and oracles that recompute metrics and components without going
// through the library's own algorithms.

#ifndef WDCOLOR_TESTS_SUPPORT_HPP_
#define WDCOLOR_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <initializer_list>
#include <map>
#include <tuple>
#include <vector>

#include "wdcolor/colouring.hpp"
#include "wdcolor/generators.hpp"
#include "wdcolor/graph.hpp"
#include "wdcolor/metric.hpp"
#include "wdcolor/rational.hpp"

namespace wdcolor::testing {

inline Rational Q(const char* text) { return parse_rational(text); }

struct E {
  VertexId u;
  VertexId v;
  Length w = Length(1);
};

inline WeightedGraph make_graph(std::initializer_list<E> edges, std::initializer_list<VertexId> extra = {}) {
  WeightedGraph g;
  for (VertexId v : extra) g.add_vertex(v);
  for (const E& e : edges) g.add_edge(e.u, e.v, e.w);
  return g;
}

// 0 - 1 - ... - (n-1), unit weights.
inline WeightedGraph unit_path(std::size_t n) {
  WeightedGraph g;
  if (n > 0) g.add_vertex(0);
  for (VertexId v = 1; v < n; ++v) g.add_edge(v - 1, v, Length(1));
  return g;
}

inline WeightedGraph unit_cycle(std::size_t n) {
  WeightedGraph g = unit_path(n);
  g.add_edge(0, n - 1, Length(1));
  return g;
}

// Hub 0 with leaves 1..k.
inline WeightedGraph star(std::size_t k, const Length& w = Length(1)) {
  WeightedGraph g;
  g.add_vertex(0);
  for (VertexId v = 1; v <= k; ++v) g.add_edge(0, v, w);
  return g;
}

inline WeightedGraph complete(std::size_t n) {
  WeightedGraph g;
  for (VertexId v = 0; v < n; ++v) g.add_vertex(v);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v, Length(1));
  }
  return g;
}

// Weight drawn from a small fixed menu, infinity included when asked.
inline Length random_weight(Rng& rng, bool allow_infinite) {
  static const char* menu[] = {"1/2", "1", "1", "3/2", "2", "3", "5/4"};
  if (allow_infinite && rng.chance(1, 10)) return Length::infinity();
  return Length(parse_rational(menu[rng.below(7)]));
}

inline WeightedGraph random_weighted_graph(Rng& rng, std::size_t n, std::uint64_t num,
                                           std::uint64_t den, bool allow_infinite) {
  WeightedGraph shape = random_connected_graph(n, num, den, rng);
  WeightedGraph g;
  for (VertexId v : shape.vertices()) g.add_vertex(v);
  for (const Edge& e : shape.edges()) g.add_edge(e.u, e.v, random_weight(rng, allow_infinite));
  return g;
}

// Floyd-Warshall over the edge list; index = position in vertices().
inline std::vector<std::vector<Length>> floyd_warshall(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<Length>> d(n, std::vector<Length>(n, Length::infinity()));
  std::map<VertexId, std::size_t> at;
  for (std::size_t i = 0; i < n; ++i) {
    at[g.vertices()[i]] = i;
    d[i][i] = Length(0);
  }
  for (const Edge& e : g.edges()) {
    std::size_t a = at[e.u], b = at[e.v];
    d[a][b] = std::min(d[a][b], e.weight);
    d[b][a] = d[a][b];
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Length via = d[i][k] + d[k][j];
        if (via < d[i][j]) d[i][j] = via;
      }
    }
  }
  return d;
}

// Monochromatic r-components by repeated flooding over the oracle metric;
// sorted list of vertex sets.
inline std::vector<VertexSet> oracle_components(const WeightedGraph& g, const Colouring& c,
                                                const Rational& r) {
  auto d = floyd_warshall(g);
  const VertexSet& ids = g.vertices();
  std::vector<int> label(ids.size(), -1);
  std::vector<VertexSet> out;
  for (std::size_t s = 0; s < ids.size(); ++s) {
    if (label[s] >= 0) continue;
    label[s] = static_cast<int>(out.size());
    VertexSet comp{ids[s]};
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < ids.size(); ++v) {
        if (label[v] < 0 && c.at(ids[v]) == c.at(ids[u]) && d[u][v] <= Length(r)) {
          label[v] = label[s];
          comp.push_back(ids[v]);
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Largest oracle weak diameter over the oracle components.
inline Length oracle_max_diameter(const WeightedGraph& g, const Colouring& c, const Rational& r) {
  auto d = floyd_warshall(g);
  std::map<VertexId, std::size_t> at;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) at[g.vertices()[i]] = i;
  Length best(0);
  for (const VertexSet& comp : oracle_components(g, c, r)) {
    for (VertexId u : comp) {
      for (VertexId v : comp) best = std::max(best, d[at[u]][at[v]]);
    }
  }
  return best;
}

inline std::vector<VertexSet> sorted_sets(const ComponentReport& report) {
  std::vector<VertexSet> out;
  for (const Component& c : report.components) out.push_back(c.vertices);
  std::sort(out.begin(), out.end());
  return out;
}

inline Colouring colouring_of(std::initializer_list<std::pair<VertexId, Colour>> entries, int m) {
  Colouring c(m);
  for (const auto& [v, col] : entries) c.set(v, col);
  return c;
}

inline Colouring random_colouring(Rng& rng, const VertexSet& vertices, int m) {
  Colouring c(m);
  for (VertexId v : vertices) c.set(v, static_cast<Colour>(1 + rng.below(static_cast<std::uint64_t>(m))));
  return c;
}

}  // namespace wdcolor::testing

#endif  // WDCOLOR_TESTS_SUPPORT_HPP_
