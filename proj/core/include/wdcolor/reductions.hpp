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

// Moving colourings between graphs: pullbacks along bi-Lipschitz maps,
// reweighting a host so a minor embeds almost isometrically, clearing
// denominators, and subdividing integer weights away.

#ifndef WDCOLOR_REDUCTIONS_HPP_
#define WDCOLOR_REDUCTIONS_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wdcolor/colouring.hpp"
#include "wdcolor/decomposition.hpp"
#include "wdcolor/rerouting.hpp"

namespace wdcolor {

// beta * dist_H(u, v) <= dist_G(iota u, iota v) <= alpha * dist_H(u, v).
struct ScalingMap {
  std::map<VertexId, VertexId> iota;
  Rational alpha{1};
  Rational beta{1};
};

struct SandwichReport {
  bool pass = true;
  std::optional<std::pair<VertexId, VertexId>> violating_pair;
  Length h_distance;
  Length g_distance;
};

SandwichReport verify_scaling(const DistanceMatrix& dist_h, const DistanceMatrix& dist_g,
                              const ScalingMap& map);

// c_H(v) = c_G(iota v). Given c_G certified at (alpha r, g_bound), the result
// is certified at g_bound / beta. Throws Error when the sandwich fails (the
// pair is named) or, in test mode, when either certificate fails.
CertifiedColouring pullback_colouring(const DistanceMatrix& dist_h, const DistanceMatrix& dist_g,
                                      const ScalingMap& map, const Colouring& c_g,
                                      const Length& g_bound, const Rational& r,
                                      Mode mode = Mode::kTest);

// Disjoint parts of G indexed by part id, and the part id -> H vertex map.
// The modelled subgraph A holds every edge inside a part and every edge
// between two parts whose images are adjacent in H.
struct MinorModel {
  std::map<VertexId, VertexSet> parts;
  std::map<VertexId, VertexId> map;
};

struct ModelReport {
  bool pass = true;
  std::string violation;
};

// Disjointness, connectivity of each part, a bijection onto V(H), and an
// edge of G between the parts of every edge of H.
ModelReport verify_model(const WeightedGraph& g, const WeightedGraph& h, const MinorModel& model);

struct MinorWeighting {
  WeightedGraph weighted;  // G with the new weights
  ScalingMap map;          // iota(x) = smallest vertex of P_x, alpha = 1 + eps, beta = 1
};

// Weights 1 between parts, eps/p inside parts (p = max(#intra-part edges, 1))
// and (1 + eps) diam(H) + 1 elsewhere. The sandwich is verified before
// returning. Throws Error for a disconnected H, an invalid model or
// eps <= 0.
MinorWeighting minor_weighting(const WeightedGraph& g, const WeightedGraph& h,
                               const MinorModel& model, const Rational& epsilon);

struct Integerized {
  WeightedGraph weighted;
  Rational scale;  // lcm of the weight denominators
};

// Multiplies every weight by the lcm of their denominators. Throws Error on
// an infinite weight.
Integerized integerize(const WeightedGraph& g);

struct Blowup {
  WeightedGraph graph;  // unit weights
  // Internal vertices of each edge (u, v), u < v, listed from u to v.
  std::map<std::pair<VertexId, VertexId>, std::vector<VertexId>> paths;
};

// Replaces each edge of weight w by a path with w - 1 new vertices, numbered
// upwards from max id + 1 in edge order. Original vertices keep their ids.
// Throws Error on a non-integer or infinite weight.
Blowup subdivision_blowup(const WeightedGraph& g);

// Extends a decomposition of G to the blow-up by hanging a chain of bags
// {u, s1, v}, {s1, s2, v}, ... off a bag holding u and v. Width grows to at
// most max(width, 2).
TreeDecomposition extend_decomposition(const WeightedGraph& g, const TreeDecomposition& td,
                                       const Blowup& blowup);

// Model of the shape of G in its blow-up: each branch vertex together with
// the internal vertices of edges to larger neighbours. Part id = branch id.
MinorModel subdivision_model(const WeightedGraph& g, const Blowup& blowup);

// m x m unit grid (vertex i*m + j) reweighted by w(uv) = 2^h, h the smaller
// hop distance from the root to u or v in the unweighted grid.
WeightedGraph exponential_grid_weighting(int m, VertexId root);

}  // namespace wdcolor

#endif  // WDCOLOR_REDUCTIONS_HPP_
