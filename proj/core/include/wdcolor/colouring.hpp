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

#ifndef WDCOLOR_COLOURING_HPP_
#define WDCOLOR_COLOURING_HPP_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wdcolor/graph.hpp"
#include "wdcolor/metric.hpp"

namespace wdcolor {

using Colour = int;

// kTest re-verifies every intermediate certificate; kFast trusts the proofs.
enum class Mode { kFast, kTest };

// Map vertex -> colour in {1..m}. Partial until it covers the host graph.
class Colouring {
 public:
  explicit Colouring(int num_colours = 1);

  int num_colours() const { return num_colours_; }
  void set_num_colours(int m);

  void set(VertexId v, Colour colour);
  bool has(VertexId v) const { return assignment_.count(v) != 0; }
  // Throws Error for uncoloured vertices.
  Colour at(VertexId v) const;
  std::size_t size() const { return assignment_.size(); }
  bool empty() const { return assignment_.empty(); }
  const std::map<VertexId, Colour>& assignment() const { return assignment_; }
  VertexSet domain() const;

  // Whether every vertex of the set is coloured.
  bool covers(const VertexSet& set) const;
  Colouring restrict(const VertexSet& set) const;
  // Adds the other colouring's entries; throws Error where they disagree.
  void merge(const Colouring& other);

  friend bool operator==(const Colouring&, const Colouring&) = default;

 private:
  int num_colours_;
  std::map<VertexId, Colour> assignment_;
};

// Constant colouring of a vertex set.
Colouring constant_colouring(const VertexSet& vertices, Colour colour, int num_colours);

struct Component {
  VertexSet vertices;
  Colour colour = 1;
  Length weak_diameter;
};

struct ComponentReport {
  // Ordered by smallest vertex.
  std::vector<Component> components;
  Length max_weak_diameter;
};

// Monochromatic r-components of the colouring, measured in `dist` (the metric
// of the host graph). Union-find over same-colour pairs at distance <= r.
ComponentReport monochromatic_components(const DistanceMatrix& dist, const Colouring& colouring,
                                         const Rational& r);

// Same partition computed by breadth-first search in the colour-restricted
// r-power graph; kept as an independent cross-check.
ComponentReport monochromatic_components_bfs(const DistanceMatrix& dist,
                                             const Colouring& colouring, const Rational& r);

struct MrdResult {
  bool pass = true;
  ComponentReport report;
  std::optional<std::size_t> violating_component;
  std::optional<std::pair<VertexId, VertexId>> violating_pair;
};

// Whether the colouring is an (m, r, d)-colouring: every monochromatic
// r-component has weak diameter at most d.
MrdResult verify_mrd(const DistanceMatrix& dist, const Colouring& colouring, const Rational& r,
                     const Length& d);

struct SparseCover {
  std::vector<std::vector<VertexSet>> collections;
  Rational r;
  Length bound;
};

struct CoverCheck {
  bool covers = true;
  bool r_disjoint = true;
  bool bounded = true;
  bool ok() const { return covers && r_disjoint && bounded; }
};

// Collection i holds the vertex sets of the i-monochromatic r-components.
SparseCover colouring_to_cover(const DistanceMatrix& dist, const Colouring& colouring,
                               const Rational& r);

CoverCheck check_cover(const DistanceMatrix& dist, const SparseCover& cover);

// Colours each vertex by the smallest index of a collection containing it.
// Throws Error when the cover misses a vertex.
Colouring cover_to_colouring(const VertexSet& vertices, const SparseCover& cover);

// Minimum over all m-colourings of the largest monochromatic r-component weak
// diameter. Enumerates colourings up to permutation of the colours. Throws
// Error above `limit` vertices.
Length brute_force_optimal_d(const DistanceMatrix& dist, int m, const Rational& r,
                             std::size_t limit = 9);

}  // namespace wdcolor

#endif  // WDCOLOR_COLOURING_HPP_
