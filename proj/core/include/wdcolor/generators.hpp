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

// Deterministic instance generators: grids, random trees and connected
// graphs, and small exhaustive families.

#ifndef WDCOLOR_GENERATORS_HPP_
#define WDCOLOR_GENERATORS_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "wdcolor/decomposition.hpp"
#include "wdcolor/graph.hpp"

namespace wdcolor {

// mt19937_64 with a rejection-sampled bounded draw, so sequences do not
// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n). Precondition: n > 0.
  std::uint64_t below(std::uint64_t n);
  // True with probability num / den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

// (d, m)-grid with unit weights. Vertex ids are mixed-radix: coordinate i
// contributes x_i * m^i.
WeightedGraph grid_graph(int d, int m);

// Vertex i > 0 joins a uniform earlier vertex. Unit weights.
WeightedGraph random_tree(std::size_t n, Rng& rng);

// Random tree plus each remaining pair with probability num / den.
WeightedGraph random_connected_graph(std::size_t n, std::uint64_t num, std::uint64_t den,
                                     Rng& rng);

// Width-1 decomposition of a forest: node v with bag {parent(v), v}; roots
// get bag {v} and are chained together. Throws Error on a cycle.
TreeDecomposition forest_decomposition(const WeightedGraph& forest);

// Rows of the m x m grid (row i holds i*m .. i*m + m - 1), keyed by i.
Partition grid_row_partition(int m);

// Path decomposition of the row quotient: node i has bag {i, i+1}.
TreeDecomposition grid_row_decomposition(int m);

// Every connected labelled graph on vertices 0..n-1, unit weights.
std::vector<WeightedGraph> connected_graphs(std::size_t n);

}  // namespace wdcolor

#endif  // WDCOLOR_GENERATORS_HPP_
