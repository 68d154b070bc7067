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

#include "instances.hpp"
#include "wdcolor/colorer.hpp"
#include "wdcolor/reductions.hpp"

namespace wdcolor {
namespace {

using testing::Q;

// a x b unit grid, vertex i*b + j.
WeightedGraph rect_grid(VertexId a, VertexId b) {
  WeightedGraph g;
  for (VertexId v = 0; v < a * b; ++v) g.add_vertex(v);
  for (VertexId i = 0; i < a; ++i) {
    for (VertexId j = 0; j < b; ++j) {
      if (j + 1 < b) g.add_edge(i * b + j, i * b + j + 1, Length(1));
      if (i + 1 < a) g.add_edge(i * b + j, (i + 1) * b + j, Length(1));
    }
  }
  return g;
}

WeightedGraph reweighted(const WeightedGraph& g, const Length& w) {
  WeightedGraph out;
  for (VertexId v : g.vertices()) out.add_vertex(v);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v, w);
  return out;
}

ScalingMap identity_map(const WeightedGraph& g, const Rational& alpha, const Rational& beta) {
  ScalingMap map;
  for (VertexId v : g.vertices()) map.iota[v] = v;
  map.alpha = alpha;
  map.beta = beta;
  return map;
}

TEST(ScalingTest, ReportsTheViolatingPair) {
  WeightedGraph h = testing::unit_path(3);
  WeightedGraph g = testing::make_graph({{0, 1}, {1, 2, Length(3)}});
  SandwichReport report =
      verify_scaling(all_pairs_distances(h), all_pairs_distances(g), identity_map(h, 2, 1));
  EXPECT_FALSE(report.pass);
  ASSERT_TRUE(report.violating_pair.has_value());
  EXPECT_EQ(*report.violating_pair, std::make_pair(VertexId{1}, VertexId{2}));
  EXPECT_EQ(report.h_distance, Length(1));
  EXPECT_EQ(report.g_distance, Length(3));
  EXPECT_TRUE(verify_scaling(all_pairs_distances(h), all_pairs_distances(g), identity_map(h, 3, 1))
                  .pass);
}

TEST(PullbackTest, TightSubgraphKeepsTheBound) {
  WeightedGraph g = testing::unit_cycle(6);
  WeightedGraph h = testing::unit_path(4);
  DistanceMatrix dg = all_pairs_distances(g);
  ColourResult c = colour_bounded_treewidth(g, dg, nullptr, 2, 1);
  CertifiedColouring out =
      pullback_colouring(all_pairs_distances(h), dg, identity_map(h, 1, 1), c.colouring, c.bound, 1);
  EXPECT_EQ(out.bound, c.bound);
  for (VertexId v : h.vertices()) EXPECT_EQ(out.colouring.at(v), c.colouring.at(v));
}

TEST(PullbackTest, DoubledWeightsHalveTheBound) {
  WeightedGraph h = testing::unit_path(12);
  WeightedGraph g = reweighted(h, Length(2));
  DistanceMatrix dh = all_pairs_distances(h);
  DistanceMatrix dg = all_pairs_distances(g);
  for (const char* rs : {"1", "5/2"}) {
    Rational r = Q(rs);
    TreeDecomposition td = forest_decomposition(g);
    ColourResult c = colour_bounded_treewidth(g, dg, &td, 1, Rational(2 * r));
    CertifiedColouring out = pullback_colouring(dh, dg, identity_map(h, 2, 2), c.colouring, c.bound, r);
    EXPECT_EQ(out.bound, Length(1180 * r));
    EXPECT_TRUE(verify_mrd(dh, out.colouring, r, out.bound).pass);
  }
}

TEST(PullbackTest, SingleVertex) {
  WeightedGraph h = testing::make_graph({}, {0});
  WeightedGraph g = testing::unit_path(3);
  ScalingMap map;
  map.iota[0] = 2;
  Colouring c = testing::colouring_of({{0, 1}, {1, 2}, {2, 2}}, 2);
  CertifiedColouring out =
      pullback_colouring(all_pairs_distances(h), all_pairs_distances(g), map, c, Length(2), 1);
  EXPECT_EQ(out.colouring.at(0), 2);
  EXPECT_EQ(verify_mrd(all_pairs_distances(h), out.colouring, 1, Length(0)).report.max_weak_diameter,
            Length(0));
}

TEST(PullbackTest, SandwichFailureNamesThePair) {
  WeightedGraph h = testing::unit_path(3);
  WeightedGraph g = reweighted(h, Length(2));
  Colouring c = constant_colouring(g.vertices(), 1, 2);
  try {
    pullback_colouring(all_pairs_distances(h), all_pairs_distances(g), identity_map(h, 1, 1), c,
                       Length(100), 1);
    FAIL() << "expected a sandwich failure";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("0-1"), std::string::npos);
  }
  EXPECT_THROW(pullback_colouring(all_pairs_distances(h), all_pairs_distances(g),
                                  identity_map(h, 2, 0), c, Length(100), 1),
               Error);
}

TEST(ModelTest, Examples) {
  WeightedGraph g = testing::unit_cycle(5);
  MinorModel singletons;
  for (VertexId v : g.vertices()) {
    singletons.parts[v] = {v};
    singletons.map[v] = v;
  }
  EXPECT_TRUE(verify_model(g, g.shape(), singletons).pass);

  // Path 0-1-2-3 as a minor of the 5-cycle: part 3 holds {3, 4}.
  MinorModel path;
  path.parts = {{0, {0}}, {1, {1}}, {2, {2}}, {3, {3, 4}}};
  path.map = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  EXPECT_TRUE(verify_model(g, testing::unit_path(4), path).pass);

  MinorModel overlap = path;
  overlap.parts[2] = {2, 3};
  ModelReport report = verify_model(g, testing::unit_path(4), overlap);
  EXPECT_FALSE(report.pass);
  EXPECT_NE(report.violation.find("disjointness"), std::string::npos);

  MinorModel split = path;
  split.parts[3] = {0, 3};
  split.parts[0] = {4};
  EXPECT_FALSE(verify_model(testing::unit_path(5), testing::unit_path(4), split).pass);

  MinorModel unmapped = path;
  unmapped.map.erase(3);
  EXPECT_NE(verify_model(g, testing::unit_path(4), unmapped).violation.find("bijection"),
            std::string::npos);

  WeightedGraph chorded = testing::make_graph({{0, 1}, {1, 2}, {2, 3}, {0, 2}});
  EXPECT_NE(verify_model(g, chorded, path).violation.find("isomorphism"),
            std::string::npos);
}

TEST(MinorWeightingTest, SingleEdge) {
  WeightedGraph g = testing::make_graph({{0, 1}});
  MinorModel model;
  model.parts = {{0, {0}}, {1, {1}}};
  model.map = {{0, 0}, {1, 1}};
  MinorWeighting out = minor_weighting(g, g, model, Q("1/2"));
  EXPECT_EQ(out.weighted, g);
  EXPECT_EQ(all_pairs_distances(out.weighted)(0, 1), Length(1));
}

TEST(MinorWeightingTest, SubdividedPathOfThree) {
  WeightedGraph h = testing::unit_path(3);
  Blowup blowup = subdivision_blowup(reweighted(h, Length(2)));
  EXPECT_EQ(blowup.graph.num_edges(), 4u);
  MinorModel model = subdivision_model(h, blowup);
  ASSERT_TRUE(verify_model(blowup.graph, h, model).pass);
  MinorWeighting out = minor_weighting(blowup.graph, h, model, Q("1/2"));
  std::size_t quarter = 0;
  for (const Edge& e : out.weighted.edges()) {
    if (e.weight == Length(Q("1/4"))) {
      ++quarter;
    } else {
      EXPECT_EQ(e.weight, Length(1));
    }
  }
  EXPECT_EQ(quarter, 2u);
  EXPECT_EQ(out.map.alpha, Q("3/2"));
  EXPECT_EQ(out.map.beta, 1);
  DistanceMatrix dh = all_pairs_distances(h);
  DistanceMatrix dg = all_pairs_distances(out.weighted);
  for (VertexId u : h.vertices()) {
    for (VertexId v : h.vertices()) {
      Length got = dg(out.map.iota.at(u), out.map.iota.at(v));
      EXPECT_LE(dh(u, v), got);
      EXPECT_LE(got, Length(Q("3/2") * dh(u, v).value()));
    }
  }
}

TEST(MinorWeightingTest, ExtraEdgesAreHeavyAndUnused) {
  WeightedGraph h = testing::unit_path(3);
  WeightedGraph g = testing::unit_cycle(5);
  MinorModel model;
  model.parts = {{0, {0}}, {1, {1}}, {2, {2, 3}}};
  model.map = {{0, 0}, {1, 1}, {2, 2}};
  MinorWeighting out = minor_weighting(g, h, model, Q("1/2"));
  EXPECT_EQ(*out.weighted.weight(0, 4), Length(4));
  EXPECT_EQ(*out.weighted.weight(3, 4), Length(4));
  EXPECT_EQ(*out.weighted.weight(2, 3), Length(Q("1/2")));
  DistanceMatrix dg = all_pairs_distances(out.weighted);
  EXPECT_EQ(dg(0, 2), Length(2));
}

TEST(MinorWeightingTest, Errors) {
  WeightedGraph h = testing::make_graph({}, {0, 1});
  WeightedGraph g = testing::make_graph({{0, 1}});
  MinorModel model;
  model.parts = {{0, {0}}, {1, {1}}};
  model.map = {{0, 0}, {1, 1}};
  EXPECT_THROW(minor_weighting(g, h, model, 1), Error);
  EXPECT_THROW(minor_weighting(g, g, model, 0), Error);
  model.parts[1] = {0};
  EXPECT_THROW(minor_weighting(g, g, model, 1), Error);
}

TEST(MinorWeightingTest, RandomSubdivisionsSatisfyTheSandwich) {
  Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    WeightedGraph h = random_connected_graph(2 + rng.below(6), 1, 2, rng);
    WeightedGraph heavy;
    for (VertexId v : h.vertices()) heavy.add_vertex(v);
    for (const Edge& e : h.edges()) heavy.add_edge(e.u, e.v, Length(1 + long(rng.below(3))));
    Blowup blowup = subdivision_blowup(heavy);
    MinorModel model = subdivision_model(h, blowup);
    Rational eps = testing::pick(rng, {"1/2", "1/3", "2"});
    MinorWeighting out = minor_weighting(blowup.graph, h, model, eps);
    EXPECT_TRUE(verify_scaling(all_pairs_distances(h), all_pairs_distances(out.weighted), out.map)
                    .pass);
  }
}

TEST(IntegerizeTest, Examples) {
  Integerized a = integerize(testing::make_graph({{0, 1, Length(Q("1/2"))}, {1, 2, Length(Q("3/4"))}}));
  EXPECT_EQ(a.scale, 4);
  EXPECT_EQ(a.weighted, testing::make_graph({{0, 1, Length(2)}, {1, 2, Length(3)}}));

  WeightedGraph ints = testing::make_graph({{0, 1, Length(2)}, {1, 2, Length(5)}});
  Integerized b = integerize(ints);
  EXPECT_EQ(b.scale, 1);
  EXPECT_EQ(b.weighted, ints);

  Integerized c = integerize(testing::make_graph({{0, 1, Length(Q("1/3"))}}));
  EXPECT_EQ(c.scale, 3);
  EXPECT_EQ(*c.weighted.weight(0, 1), Length(1));

  EXPECT_THROW(integerize(testing::make_graph({{0, 1, Length::infinity()}})), Error);
}

TEST(IntegerizeTest, ScalesEveryDistance) {
  Rng rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    WeightedGraph g = testing::random_weighted_graph(rng, 1 + rng.below(9), 1, 3, false);
    Integerized out = integerize(g);
    DistanceMatrix d = all_pairs_distances(g);
    DistanceMatrix dk = all_pairs_distances(out.weighted);
    for (VertexId u : g.vertices()) {
      for (VertexId v : g.vertices()) EXPECT_EQ(dk(u, v).value(), out.scale * d(u, v).value());
    }
  }
}

TEST(BlowupTest, Examples) {
  WeightedGraph g = testing::unit_cycle(4);
  Blowup unit = subdivision_blowup(g);
  EXPECT_EQ(unit.graph, g);

  Blowup edge = subdivision_blowup(testing::make_graph({{0, 1, Length(3)}}));
  EXPECT_EQ(edge.graph.num_vertices(), 4u);
  EXPECT_EQ(edge.graph.num_edges(), 3u);
  EXPECT_EQ(edge.paths.at({0, 1}), (std::vector<VertexId>{2, 3}));

  WeightedGraph tri = testing::make_graph({{0, 1, Length(1)}, {1, 2, Length(2)}, {0, 2, Length(3)}});
  Blowup t = subdivision_blowup(tri);
  // 3 branch vertices plus (1-1) + (2-1) + (3-1) internal ones.
  EXPECT_EQ(t.graph.num_vertices(), 6u);
  EXPECT_TRUE(is_tight(tri, t.graph).tight);

  EXPECT_THROW(subdivision_blowup(testing::make_graph({{0, 1, Length(Q("3/2"))}})), Error);
}

TEST(BlowupTest, RandomIntegerWeightsAreTight) {
  Rng rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    WeightedGraph shape = random_connected_graph(2 + rng.below(7), 1, 2, rng);
    WeightedGraph g;
    for (VertexId v : shape.vertices()) g.add_vertex(v);
    std::size_t extra = 0;
    for (const Edge& e : shape.edges()) {
      unsigned long w = 1 + rng.below(4);
      extra += w - 1;
      g.add_edge(e.u, e.v, Length(long(w)));
    }
    Blowup out = subdivision_blowup(g);
    EXPECT_EQ(out.graph.num_vertices(), g.num_vertices() + extra);
    EXPECT_TRUE(is_tight(g, out.graph).tight);
    TreeDecomposition td = decomposition_from_order(g, treewidth_exact(g).order);
    TdReport report = validate_td(out.graph, extend_decomposition(g, td, out));
    EXPECT_TRUE(report.valid) << report.violation;
    EXPECT_LE(report.width, std::max(treewidth_exact(g).width, 2L));
  }
}

TEST(ExponentialGridTest, Examples) {
  WeightedGraph one = exponential_grid_weighting(1, 0);
  EXPECT_EQ(one.num_vertices(), 1u);
  EXPECT_EQ(one.num_edges(), 0u);

  WeightedGraph two = exponential_grid_weighting(2, 0);
  EXPECT_EQ(*two.weight(0, 1), Length(1));
  EXPECT_EQ(*two.weight(0, 2), Length(1));
  EXPECT_EQ(*two.weight(1, 3), Length(2));
  EXPECT_EQ(*two.weight(2, 3), Length(2));

  WeightedGraph four = exponential_grid_weighting(4, 5);
  EXPECT_EQ(*four.weight(5, 6), Length(1));
  EXPECT_EQ(*four.weight(14, 15), Length(8));
  EXPECT_THROW(exponential_grid_weighting(3, 9), Error);
  EXPECT_THROW(exponential_grid_weighting(0, 0), Error);
}

TEST(ExponentialGridTest, PowerComponentsAreSmall) {
  for (int m = 2; m <= 5; ++m) {
    WeightedGraph g = exponential_grid_weighting(m, 0);
    DistanceMatrix d = all_pairs_distances(g);
    for (long r = 1; r <= 64; r *= 2) {
      Colouring one = constant_colouring(g.vertices(), 1, 1);
      EXPECT_LE(testing::oracle_max_diameter(g, one, r), Length(4 * r)) << "m=" << m << " r=" << r;
    }
  }
}

TEST(ChainTest, GridThroughTheBlownUpHost) {
  const Rational eps = Q("1/2");
  const Rational r = 1;
  for (VertexId b : {2, 3}) {
    WeightedGraph h = rect_grid(2, b);
    DistanceMatrix dh = all_pairs_distances(h);
    Blowup host = subdivision_blowup(reweighted(h, Length(3)));
    MinorModel model = subdivision_model(h, host);
    MinorWeighting weighting = minor_weighting(host.graph, h, model, eps);
    Integerized ints = integerize(weighting.weighted);
    Blowup flat = subdivision_blowup(ints.weighted);

    TreeDecomposition td_h = decomposition_from_order(h, treewidth_exact(h).order);
    TreeDecomposition td_host = extend_decomposition(reweighted(h, Length(3)), td_h, host);
    TreeDecomposition td_flat = extend_decomposition(ints.weighted, td_host, flat);
    long width = validate_td(flat.graph, td_flat).width;
    ASSERT_LE(width, 2);

    ScalingMap map = weighting.map;
    map.alpha = weighting.map.alpha * ints.scale;
    map.beta = ints.scale;
    DistanceMatrix d_flat = all_pairs_distances(flat.graph);
    ColourResult c = colour_bounded_treewidth(flat.graph, d_flat, &td_flat, 2, map.alpha * r);
    CertifiedColouring out = pullback_colouring(dh, d_flat, map, c.colouring, c.bound, r);
    EXPECT_EQ(out.bound, Length(c.ladder.at(2).f * (1 + eps) * r));
    EXPECT_LE(testing::oracle_max_diameter(h, out.colouring, r), out.bound);
  }
}

}  // namespace
}  // namespace wdcolor
