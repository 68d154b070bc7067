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

// The recursive colorer for strong-constructions, its control-function
// ladder, and the partition and treewidth pipelines built on it.

#ifndef WDCOLOR_COLORER_HPP_
#define WDCOLOR_COLORER_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "wdcolor/colouring.hpp"
#include "wdcolor/decomposition.hpp"
#include "wdcolor/rerouting.hpp"

namespace wdcolor {

// f(r) = slope * r, guaranteed for r >= ell.
struct ControlFunction {
  Rational slope;
  Rational ell;

  Rational operator()(const Rational& r) const { return slope * r; }
};

// Slopes of the level-k functions. Level 0 only sets f.
struct LadderLevel {
  Rational g_prime;
  Rational g_star;
  Rational f_star;
  Rational f_sharp;
  Rational f;
};

struct LadderCoefficients {
  std::vector<LadderLevel> levels;  // 0..k

  int top() const { return static_cast<int>(levels.size()) - 1; }
  const LadderLevel& at(int k) const { return levels.at(static_cast<std::size_t>(k)); }
};

//   g'_k = 8(k+1)        g*_k = 2 g'_k + 2      f*_k = f_{k-1} g*_k
//   f#_k = (k+1)(f*_k + 4 g*_k + 12)            f_k = f#_k + 2 g*_k
// with f_0 the base slope.
LadderCoefficients ladder(int k, const ControlFunction& base);

struct BaseInput {
  const WeightedGraph& torso;
  const DistanceMatrix& dist;  // metric of the torso
  VertexSet centres;           // centres of the torso's vertex set
  Rational r;
  int colours;                 // colours {1..colours} available
};

// A colorer for the bag class: (dimension + 1)-colourings certified at
// control(r) whenever r >= control.ell.
struct BaseColorer {
  int dimension = 0;
  ControlFunction control;
  std::function<Colouring(const BaseInput&)> colour;
};

// Graphs whose vertex set is (k+1, ell)-centred, coloured constantly; the
// r-paths bound gives (k+2)(2r + 2 ell) <= 4(k+2) r.
BaseColorer centred_base_colorer(int k, const Rational& ell);

// Constant colouring of a (k+1, ell)-centred graph, certified at 4(k+2) r.
// Centres are searched for when not supplied. Throws Error if none exist
// or r < ell.
CertifiedColouring colour_centred(const WeightedGraph& graph, const DistanceMatrix& dist, int k,
                                  const Rational& ell, const Rational& r,
                                  const VertexSet* centres = nullptr, Mode mode = Mode::kTest);

struct ColourResult {
  Colouring colouring;
  Length bound;
  LadderCoefficients ladder;
  int k = 0;
  int m = 2;
};

// Extends c_z (a colouring of the parts meeting N^{3r}(union of sp), where
// sp is a set of at most k part ids in the bag of q) to an
// (n'+1, r, f_k(r))-colouring of the graph, n' = max(n, 1).
Colouring strong_construction_colour(const WeightedGraph& graph, const DistanceMatrix& dist,
                                     const StrongConstruction& sc, const BaseColorer& base,
                                     const Rational& r, std::optional<NodeId> q,
                                     const VertexSet& sp, const Colouring& c_z,
                                     Mode mode = Mode::kFast);

// Top-level entry: empty sp and c_z. Throws Error if r < ell or the
// construction is invalid.
ColourResult strong_construction_colour(const WeightedGraph& graph, const DistanceMatrix& dist,
                                        const StrongConstruction& sc, const BaseColorer& base,
                                        const Rational& r, Mode mode = Mode::kFast);

// 2-colouring from a (k, ell)-partition and a decomposition of its quotient,
// certified at f_k(r) with base slope 4(k+2).
ColourResult colour_partitioned(const WeightedGraph& graph, const DistanceMatrix& dist,
                                const Partition& partition, const TreeDecomposition& td, int k,
                                const Rational& ell, const Rational& r, Mode mode = Mode::kFast);

// Singleton partition with ell = 0. Without a decomposition one is computed
// by the exact oracle (small graphs only).
ColourResult colour_bounded_treewidth(const WeightedGraph& graph, const DistanceMatrix& dist,
                                      const TreeDecomposition* td, int k, const Rational& r,
                                      Mode mode = Mode::kFast);

}  // namespace wdcolor

#endif  // WDCOLOR_COLORER_HPP_
