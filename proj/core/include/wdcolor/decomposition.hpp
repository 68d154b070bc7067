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

// Tree-decompositions, weighted torsos and completions, shallow partitions
// and their quotients, and strong-constructions (a shallow partition plus a
// decomposition of its quotient).

#ifndef WDCOLOR_DECOMPOSITION_HPP_
#define WDCOLOR_DECOMPOSITION_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wdcolor/graph.hpp"
#include "wdcolor/metric.hpp"

namespace wdcolor {

using NodeId = std::uint64_t;

// A tree with a bag of host vertices per node. The host may be a graph or a
// quotient, in which case bags hold part ids.
class TreeDecomposition {
 public:
  void add_node(NodeId t, VertexSet bag);
  void add_edge(NodeId a, NodeId b);
  void set_bag(NodeId t, VertexSet bag);

  std::size_t num_nodes() const { return bags_.size(); }
  bool empty() const { return bags_.empty(); }
  bool has_node(NodeId t) const { return bags_.count(t) != 0; }
  std::vector<NodeId> nodes() const;
  // Throws Error for unknown nodes.
  const VertexSet& bag(NodeId t) const;
  const std::vector<NodeId>& neighbours(NodeId t) const;
  // (a, b) with a < b, sorted.
  std::vector<std::pair<NodeId, NodeId>> edges() const;
  const std::map<NodeId, VertexSet>& bags() const { return bags_; }

  // Restriction to a node subset, keeping the tree edges among them.
  TreeDecomposition induced(const std::vector<NodeId>& keep) const;

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;

 private:
  std::map<NodeId, VertexSet> bags_;
  std::map<NodeId, std::vector<NodeId>> adj_;
};

struct TdReport {
  bool valid = true;
  std::string violation;
  long width = -1;
  long adhesion = 0;
};

// Checks the tree and decomposition axioms against `graph`; width and
// adhesion are filled in either way.
TdReport validate_td(const WeightedGraph& graph, const TreeDecomposition& td);

// Contracts tree edges whose bags are nested until none remain. Afterwards
// adhesion < max bag size. The superset bag keeps its node id.
TreeDecomposition normalize_td(const TreeDecomposition& td);

// Weighted torso at node t: G[B_t] plus all pairs inside an adhesion set of
// t, every edge weighted by the distance in G.
WeightedGraph weighted_torso(const WeightedGraph& graph, const DistanceMatrix& dist,
                             const TreeDecomposition& td, NodeId t);

// Union of all weighted torsos.
WeightedGraph completion(const WeightedGraph& graph, const DistanceMatrix& dist,
                         const TreeDecomposition& td);

// Disjoint nonempty vertex sets keyed by part id.
class Partition {
 public:
  Partition() = default;

  // Throws Error on an empty part, a reused id or an overlap.
  void add_part(VertexId id, VertexSet vertices);

  const std::map<VertexId, VertexSet>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  VertexSet part_ids() const;
  const VertexSet& part(VertexId id) const;
  // Throws Error for uncovered vertices.
  VertexId part_of(VertexId v) const;
  bool covers(VertexId v) const { return owner_.count(v) != 0; }
  VertexSet vertices() const;
  // Ids of parts meeting the set (uncovered vertices are ignored).
  VertexSet parts_meeting(const VertexSet& set) const;
  // Union of the given parts.
  VertexSet union_of(const VertexSet& ids) const;
  // The parts lying inside `keep`, which must be a union of parts.
  Partition restrict(const VertexSet& keep) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::map<VertexId, VertexSet> parts_;
  std::map<VertexId, VertexId> owner_;
};

// Part id = vertex id.
Partition singleton_partition(const WeightedGraph& graph);

// Unit-weight graph on part ids, adjacent when some edge joins the parts.
// Throws Error if the parts do not cover V(G) or one induces a disconnected
// subgraph.
WeightedGraph quotient(const WeightedGraph& graph, const Partition& partition);

// Vertex-level decomposition: each bag of part ids replaced by the union of
// its parts.
TreeDecomposition expand(const Partition& partition, const TreeDecomposition& td);

// Radius of G[P].
Length part_radius(const WeightedGraph& graph, const VertexSet& part);

struct TreewidthResult {
  long width = -1;
  std::vector<VertexId> order;  // optimal elimination order
};

// Exact treewidth by dynamic programming over vertex subsets. Throws Error
// above `limit` vertices.
TreewidthResult treewidth_exact(const WeightedGraph& graph, std::size_t limit = 12);

// Decomposition whose width is the width of the elimination order. Node ids
// follow the position in the order.
TreeDecomposition decomposition_from_order(const WeightedGraph& graph,
                                           const std::vector<VertexId>& order);

struct PartitionReport {
  bool pass = true;
  std::string reason;
  long treewidth = -1;
  Length max_radius;
};

// Whether the partition is a (k, ell)-partition. Quotients of at most 12
// vertices use treewidth_exact; larger ones need `certificate`, a
// decomposition of the quotient whose width is read off. Throws Error when
// neither is available.
PartitionReport validate_partition(const WeightedGraph& graph, const Partition& partition, int k,
                                   const Rational& ell,
                                   const TreeDecomposition* certificate = nullptr);

// Parts P_s = vertices of N^r(S) whose nearest S-vertex is s (ties to the
// smallest id), keyed by s.
Partition neighborhood_partition(const DistanceMatrix& dist, const VertexSet& separator,
                                 const Rational& r);

// Bags J_s indexed by the separator vertices, over the pattern G[S].
struct RootedDecomposition {
  std::map<VertexId, VertexSet> bags;
};

struct SeparationCombination {
  Partition partition;    // part ids: the unique vertex of H in each part
  TreeDecomposition td;   // over those ids, same tree as the input
  long width_bound = 0;   // (t+1)(w+1) - 1
};

// For a separation (G, H) of the whole graph with separator S = V(G) & V(H),
// a partition of G with one S-vertex per part and a decomposition of its
// quotient, and a rooted G[S]-decomposition of H: the parts together with
// singletons of V(H) - S, and the bags K_t = union of Parts(J_s) over the
// S-vertices s in the parts of B_t. Throws Error naming a violated
// precondition.
SeparationCombination combine_separation_partition(const WeightedGraph& whole,
                                                   const WeightedGraph& g_side,
                                                   const WeightedGraph& h_side,
                                                   const Partition& partition,
                                                   const TreeDecomposition& td,
                                                   const RootedDecomposition& rd);

// Finds at most k centres within ell of every vertex of `vertices` in
// `dist`. With `centres` given only those are checked; otherwise candidate
// subsets are enumerated, which needs |vertices| <= limit (Error otherwise).
std::optional<VertexSet> find_centres(const DistanceMatrix& dist, const VertexSet& vertices, int k,
                                      const Rational& ell, const VertexSet* centres = nullptr,
                                      std::size_t limit = 15);

// A shallow partition with a decomposition of its quotient of adhesion at most
// k, where every bag's vertex set (and so every subset of it) is
// (centres, ell)-centred in the weighted torso.
struct StrongConstruction {
  Partition partition;
  TreeDecomposition td;  // over part ids
  int k = 0;
  Rational ell;
  int centres = 1;
  std::map<VertexId, VertexId> part_centre;  // central vertex of G[P]
};

struct ScReport {
  bool valid = true;
  std::string violation;
};

// Checks adhesion, shallowness and bag centredness. A part whose centre has
// eccentricity at most ell in G[P] keeps it in every torso subgraph holding
// P, since torso weights never exceed the original ones, so centredness of
// every sub-bag follows from the per-part check plus |bag| <= centres.
ScReport validate_strong_construction(const WeightedGraph& graph,
                                      const StrongConstruction& sc);

// Singleton partition, ell = 0, (k+1, 0)-centred bags. Throws Error when the
// decomposition is invalid, its adhesion exceeds k or a bag exceeds k+1.
StrongConstruction singleton_strong_construction(const WeightedGraph& graph,
                                                 const TreeDecomposition& td, int k);

// From a (k, ell)-partition and a decomposition of its quotient of width at
// most k: (k+1, ell)-centred bags, centred by one central vertex per part.
// The decomposition is normalized first. Throws Error on validation failure.
StrongConstruction partition_strong_construction(const WeightedGraph& graph,
                                                 const Partition& partition,
                                                 const TreeDecomposition& td, int k,
                                                 const Rational& ell);

// Any partition and quotient decomposition: k = adhesion, centres = largest
// bag, ell = the given bound on part radii (checked).
StrongConstruction general_strong_construction(const WeightedGraph& graph,
                                               const Partition& partition,
                                               const TreeDecomposition& td, const Rational& ell);

}  // namespace wdcolor

#endif  // WDCOLOR_DECOMPOSITION_HPP_
