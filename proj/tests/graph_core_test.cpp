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

#include <gtest/gtest.h>

#include "support.hpp"

namespace wdcolor {
namespace {

using testing::E;
using testing::Q;

TEST(LengthTest, InfinityAbsorbsAdditionAndDominates) {
  Length inf = Length::infinity();
  EXPECT_TRUE((inf + Length(3)).is_infinite());
  EXPECT_TRUE(Length(1000000) < inf);
  EXPECT_EQ(inf, Length::infinity());
  EXPECT_EQ(Length(Q("1/2")) + Length(Q("1/3")), Length(Q("5/6")));
}

TEST(LengthTest, ParsesAndPrintsExactly) {
  EXPECT_EQ(to_string(parse_length("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_length("inf")), "inf");
  EXPECT_EQ(to_string(parse_length("7")), "7");
  EXPECT_THROW(parse_length("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_length("x"), std::invalid_argument);
}

TEST(GraphTest, RejectsLoopsParallelEdgesAndNonpositiveWeights) {
  WeightedGraph g;
  g.add_edge(0, 1, Length(1));
  EXPECT_THROW(g.add_edge(1, 0, Length(2)), Error);
  EXPECT_THROW(g.add_edge(2, 2, Length(1)), Error);
  EXPECT_THROW(g.add_edge(2, 3, Length(0)), Error);
  EXPECT_THROW(g.add_edge(2, 3, Length(-1)), Error);
  EXPECT_EQ(g.num_edges(), 1u);
}

TEST(GraphTest, SparseIdsAndShape) {
  WeightedGraph g = testing::make_graph({{10, 700, Length(Q("1/2"))}}, {3});
  EXPECT_EQ(g.vertices(), (VertexSet{3, 10, 700}));
  WeightedGraph s = g.shape();
  EXPECT_EQ(*s.weight(10, 700), Length(1));
  EXPECT_EQ(*g.weight(700, 10), Length(Q("1/2")));
}

TEST(DistanceTest, PathDistances) {
  WeightedGraph g = testing::unit_path(3);
  DistanceMatrix d = all_pairs_distances(g);
  EXPECT_EQ(d(0, 2), Length(2));
  for (VertexId v : g.vertices()) EXPECT_EQ(d(v, v), Length(0));
}

TEST(DistanceTest, IsolatedVerticesAreInfinitelyFar) {
  WeightedGraph g;
  g.add_vertex(0);
  g.add_vertex(1);
  EXPECT_TRUE(all_pairs_distances(g)(0, 1).is_infinite());
}

TEST(DistanceTest, InfiniteEdgesAreUsableButInfinite) {
  WeightedGraph g = testing::make_graph({{0, 1, Length::infinity()}, {1, 2, Length(1)}});
  DistanceMatrix d = all_pairs_distances(g);
  EXPECT_TRUE(d(0, 2).is_infinite());
  EXPECT_EQ(d(1, 2), Length(1));
}

TEST(DistanceTest, MatchesFloydWarshallOnRandomRationalGraphs) {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    WeightedGraph g = testing::random_weighted_graph(rng, 1 + rng.below(12), 1, 3, true);
    DistanceMatrix d = all_pairs_distances(g);
    auto oracle = testing::floyd_warshall(g);
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
      for (std::size_t j = 0; j < g.num_vertices(); ++j) {
        ASSERT_EQ(d.at(i, j), oracle[i][j]);
        ASSERT_EQ(d.at(i, j), d.at(j, i));
        for (std::size_t k = 0; k < g.num_vertices(); ++k) {
          ASSERT_LE(d.at(i, j), d.at(i, k) + d.at(k, j));
        }
      }
    }
  }
}

TEST(DistanceTest, ShortestPathTreeReproducesDistances) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    WeightedGraph g = testing::random_weighted_graph(rng, 2 + rng.below(10), 1, 4, false);
    VertexId source = g.vertices()[rng.below(g.num_vertices())];
    ShortestPathTree tree = shortest_path_tree(g, source);
    DistanceMatrix d = all_pairs_distances(g);
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
      Length along(0);
      std::size_t at = i;
      while (tree.parent[at]) {
        along += *g.weight(g.id_at(at), g.id_at(*tree.parent[at]));
        at = *tree.parent[at];
      }
      EXPECT_EQ(g.id_at(at), source);
      EXPECT_EQ(along, d(source, g.id_at(i)));
      EXPECT_EQ(tree.dist[i], along);
    }
  }
}

TEST(NeighborhoodTest, Examples) {
  WeightedGraph g = testing::unit_path(3);
  DistanceMatrix d = all_pairs_distances(g);
  EXPECT_EQ(neighborhood(d, {0, 2}, 0), (VertexSet{0, 2}));
  EXPECT_EQ(neighborhood(d, {0}, 1), (VertexSet{0, 1}));
  EXPECT_EQ(neighborhood(d, g.vertices(), Q("7/3")), g.vertices());
}

TEST(NeighborhoodTest, MonotoneInRadius) {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    WeightedGraph g = testing::random_weighted_graph(rng, 2 + rng.below(9), 1, 3, true);
    DistanceMatrix d = all_pairs_distances(g);
    VertexSet s{g.vertices()[rng.below(g.num_vertices())]};
    VertexSet prev;
    for (const char* r : {"0", "1/2", "1", "2", "7/2", "10"}) {
      VertexSet now = neighborhood(d, s, Q(r));
      EXPECT_TRUE(is_subset(prev, now));
      prev = now;
    }
  }
}

TEST(WeakDiameterTest, Examples) {
  WeightedGraph g = testing::unit_path(3);
  DistanceMatrix d = all_pairs_distances(g);
  EXPECT_EQ(weak_diameter(d, {1}), Length(0));
  EXPECT_EQ(weak_diameter(d, {0, 2}), Length(2));
  EXPECT_THROW(weak_diameter(d, {}), Error);
  WeightedGraph two = testing::make_graph({{0, 1}}, {5});
  EXPECT_TRUE(weak_diameter(all_pairs_distances(two), {0, 5}).is_infinite());
}

TEST(RadiusTest, Examples) {
  WeightedGraph one;
  one.add_vertex(4);
  RadiusCenter single = radius_and_center(all_pairs_distances(one));
  EXPECT_EQ(single.radius, Length(0));
  EXPECT_EQ(single.center, 4u);

  RadiusCenter path = radius_and_center(all_pairs_distances(testing::unit_path(3)));
  EXPECT_EQ(path.radius, Length(1));
  EXPECT_EQ(path.center, 1u);

  // Every vertex of the 4-cycle has eccentricity 2.
  RadiusCenter cycle = radius_and_center(all_pairs_distances(testing::unit_cycle(4)));
  EXPECT_EQ(cycle.radius, Length(2));
  EXPECT_EQ(cycle.center, 0u);

  EXPECT_THROW(radius_and_center(DistanceMatrix{}), Error);
}

TEST(PowerAdjacencyTest, Examples) {
  DistanceMatrix d = all_pairs_distances(testing::unit_path(3));
  using P = std::vector<std::pair<VertexId, VertexId>>;
  EXPECT_EQ(power_adjacency(d, 1), (P{{0, 1}, {1, 2}}));
  EXPECT_EQ(power_adjacency(d, 2), (P{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(power_adjacency(d, Q("1/2")), P{});
}

TEST(PowerAdjacencyTest, MonotoneInRadius) {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    WeightedGraph g = testing::random_weighted_graph(rng, 2 + rng.below(9), 1, 3, false);
    DistanceMatrix d = all_pairs_distances(g);
    auto small = power_adjacency(d, Q("3/2"));
    auto big = power_adjacency(d, 3);
    EXPECT_TRUE(std::includes(big.begin(), big.end(), small.begin(), small.end()));
  }
}

TEST(TightTest, Examples) {
  WeightedGraph tri = testing::make_graph({{0, 1}, {1, 2}, {0, 2}});
  EXPECT_TRUE(is_tight(tri, tri).tight);
  WeightedGraph cut = testing::make_graph({{0, 1}, {1, 2}});
  TightnessReport report = is_tight(cut, tri);
  EXPECT_FALSE(report.tight);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(*report.witness, std::make_pair(VertexId{0}, VertexId{2}));
  EXPECT_EQ(report.sub_distance, Length(2));
  EXPECT_EQ(report.host_distance, Length(1));
  WeightedGraph other;
  other.add_vertex(9);
  EXPECT_THROW(is_tight(other, tri), Error);
}

TEST(TightTest, InfiniteEdgesNeverShortenDistances) {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    WeightedGraph g = testing::random_weighted_graph(rng, 2 + rng.below(9), 1, 4, false);
    WeightedGraph more = g;
    for (VertexId u : g.vertices()) {
      for (VertexId v : g.vertices()) {
        if (u < v && !g.has_edge(u, v) && rng.chance(1, 2)) more.add_edge(u, v, Length::infinity());
      }
    }
    EXPECT_TRUE(is_tight(more, g).tight);
    EXPECT_TRUE(is_tight(g, more).tight);
  }
}

TEST(RWalkTest, Examples) {
  DistanceMatrix d = all_pairs_distances(testing::unit_path(3));
  EXPECT_TRUE(is_r_walk(d, {1}, 1));
  EXPECT_TRUE(is_r_walk(d, {0, 0, 1}, 1));
  EXPECT_FALSE(is_r_walk(d, {0, 2}, 1));
  EXPECT_TRUE(is_r_walk(d, {0, 2}, 2));
}

}  // namespace
}  // namespace wdcolor
