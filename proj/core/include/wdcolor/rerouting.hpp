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

// Walk rerouting through a small centre, and the colouring tools built on it:
// extension over centred sets, barrier colourings around a separator, and
// gluing colourings of the sides of several separations.

#ifndef WDCOLOR_REROUTING_HPP_
#define WDCOLOR_REROUTING_HPP_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wdcolor/colouring.hpp"
#include "wdcolor/graph.hpp"
#include "wdcolor/metric.hpp"

namespace wdcolor {

using Walk = std::vector<VertexId>;

// A vertex set within distance `ell` of at most `k` centre vertices, with a
// chosen centre for every member.
struct CentredSet {
  VertexSet members;
  VertexSet centre;
  int k = 0;
  Rational ell;
  std::map<VertexId, VertexId> iota;
};

// Assigns each member its nearest centre (ties: smallest id). Throws Error if
// |centre| > k or a member is farther than ell from every centre.
CentredSet make_centred_set(const DistanceMatrix& dist, VertexSet members, VertexSet centre, int k,
                            const Rational& ell);

bool is_valid_centred_set(const DistanceMatrix& dist, const CentredSet& cs);

// Replaces an r-walk from x to y by x, iota(v_1), ..., iota(v_n), y where v_i
// are the walk's vertices in `through`. The result is a (d + 2r + 2ell)-walk
// whose interior lies in the image of iota, provided
//   dist(v, iota(v)) <= ell for v in `through`, and
//   every maximal stretch of the walk outside `through` has weak diameter <= d.
// Both conditions are checked; a violation throws Error naming the offending
// stretch.
Walk reroute(const DistanceMatrix& dist, const Walk& walk, const Rational& r,
             const VertexSet& through, const std::map<VertexId, VertexId>& iota,
             const Rational& ell, const Length& d);

struct CentredPathCheck {
  bool pass = true;
  Length bound;
  std::optional<std::pair<VertexId, VertexId>> violating_pair;
};

// Checks dist(x, y) <= (k+1)(2r + 2ell) for every x, y joined by an r-path
// inside the centred set.
CentredPathCheck check_centred_rpath_bound(const DistanceMatrix& dist, const CentredSet& cs,
                                           const Rational& r);

struct CertifiedColouring {
  Colouring colouring;
  Length bound;
};

// Combines an (m, r, d)-colouring of G - Z with any colouring of the centred
// set Z; the union is certified at (k+1)(d + 4r + 2ell). `minus_dist` is the
// metric of G - Z (computed when absent and needed). In test mode the
// precondition and the result are verified.
CertifiedColouring extend_colouring_centred(const WeightedGraph& graph,
                                            const DistanceMatrix& dist, const CentredSet& cs,
                                            const Colouring& outside, const Colouring& inside,
                                            const Rational& r, const Length& d,
                                            Mode mode = Mode::kTest,
                                            const DistanceMatrix* minus_dist = nullptr);

struct BarrierColouring {
  VertexSet domain;
  Colouring colouring;
  Colour alpha = 1;
  Colour beta = 2;
};

// Extends `seed` (a colouring of S) to `domain`, which must contain
// N^{3r}(S): vertices within r of S copy their nearest S-vertex (ties:
// smallest id), the annulus (r, 2r] gets alpha = 1, (2r, 3r] gets beta = 2,
// everything else colour 1. An empty `domain` means N^{3r}(S).
BarrierColouring build_barrier_colouring(const DistanceMatrix& dist, const VertexSet& separator,
                                         const Rational& r, const Colouring& seed, int m,
                                         const VertexSet& domain = {});

struct BarrierCheck {
  bool near_ok = true;     // every v within r of S shares a colour with some s within r
  bool annuli_ok = true;   // the two annuli are monochromatic in distinct colours
  bool ok() const { return near_ok && annuli_ok; }
};

BarrierCheck check_barrier(const DistanceMatrix& dist, const VertexSet& separator,
                           const Rational& r, const Colouring& colouring);

struct GluePiece {
  VertexSet vertices;   // induces a tight subgraph of G
  VertexSet separator;  // V(G_i) intersected with the other pieces
  VertexSet centres;    // at most k vertices with separator within ell
  Colouring colouring;
};

struct GlueParams {
  Rational r;
  Rational ell;
  int k = 1;
  int m = 2;
  Length d;        // bound of the core colouring at the coarse radius
  Length d_bound;  // target bound, at least d + 2 r'
};

// Coarse radius r' = 2r + 2(k+1)(6r + 2 ell) at which the core must be coloured.
Rational glue_core_radius(const Rational& r, const Rational& ell, int k);

// Union of the core colouring and the piece colourings, an (m, r, d_bound)-
// colouring of G. In test mode every hypothesis is checked (the failing one is
// named in the thrown Error) and the result is verified.
Colouring glue_colourings(const WeightedGraph& graph, const DistanceMatrix& dist,
                          const VertexSet& core, const Colouring& core_colouring,
                          const std::vector<GluePiece>& pieces, const GlueParams& params,
                          Mode mode = Mode::kTest);

}  // namespace wdcolor

#endif  // WDCOLOR_REROUTING_HPP_
