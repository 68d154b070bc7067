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

#include "wdcolor/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <set>

namespace wdcolor {
namespace {

// Whether the vertex set induces a connected subgraph of the graph.
bool is_connected_in(const WeightedGraph& graph, const VertexSet& set) {
  if (set.empty()) return true;
  std::set<VertexId> seen{set.front()};
  std::deque<VertexId> queue{set.front()};
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (const auto& arc : graph.arcs(graph.index_of(u))) {
      VertexId v = graph.id_at(arc.to);
      if (contains(set, v) && seen.insert(v).second) queue.push_back(v);
    }
  }
  return seen.size() == set.size();
}

// Whether the node set induces a connected subtree.
bool nodes_connected(const TreeDecomposition& td, const std::vector<NodeId>& nodes) {
  if (nodes.empty()) return false;
  std::set<NodeId> want(nodes.begin(), nodes.end());
  std::set<NodeId> seen{nodes.front()};
  std::deque<NodeId> queue{nodes.front()};
  while (!queue.empty()) {
    NodeId t = queue.front();
    queue.pop_front();
    for (NodeId s : td.neighbours(t)) {
      if (want.count(s) && seen.insert(s).second) queue.push_back(s);
    }
  }
  return seen.size() == want.size();
}

std::string pair_name(VertexId u, VertexId v) {
  return std::to_string(u) + "-" + std::to_string(v);
}

}  // namespace

void TreeDecomposition::add_node(NodeId t, VertexSet bag) {
  if (has_node(t)) throw Error("duplicate tree node " + std::to_string(t));
  bags_[t] = make_vertex_set(std::move(bag));
  adj_[t];
}

void TreeDecomposition::add_edge(NodeId a, NodeId b) {
  if (!has_node(a) || !has_node(b)) throw Error("tree edge with unknown node");
  if (a == b) throw Error("tree loop at node " + std::to_string(a));
  auto& na = adj_[a];
  if (std::find(na.begin(), na.end(), b) != na.end()) {
    throw Error("duplicate tree edge " + pair_name(a, b));
  }
  na.insert(std::lower_bound(na.begin(), na.end(), b), b);
  auto& nb = adj_[b];
  nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
}

void TreeDecomposition::set_bag(NodeId t, VertexSet bag) {
  if (!has_node(t)) throw Error("unknown tree node " + std::to_string(t));
  bags_[t] = make_vertex_set(std::move(bag));
}

std::vector<NodeId> TreeDecomposition::nodes() const {
  std::vector<NodeId> out;
  out.reserve(bags_.size());
  for (const auto& [t, bag] : bags_) out.push_back(t);
  return out;
}

const VertexSet& TreeDecomposition::bag(NodeId t) const {
  auto it = bags_.find(t);
  if (it == bags_.end()) throw Error("unknown tree node " + std::to_string(t));
  return it->second;
}

const std::vector<NodeId>& TreeDecomposition::neighbours(NodeId t) const {
  auto it = adj_.find(t);
  if (it == adj_.end()) throw Error("unknown tree node " + std::to_string(t));
  return it->second;
}

std::vector<std::pair<NodeId, NodeId>> TreeDecomposition::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (const auto& [a, list] : adj_) {
    for (NodeId b : list) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

TreeDecomposition TreeDecomposition::induced(const std::vector<NodeId>& keep) const {
  TreeDecomposition out;
  std::set<NodeId> kept(keep.begin(), keep.end());
  for (NodeId t : kept) out.add_node(t, bag(t));
  for (const auto& [a, b] : edges()) {
    if (kept.count(a) && kept.count(b)) out.add_edge(a, b);
  }
  return out;
}

TdReport validate_td(const WeightedGraph& graph, const TreeDecomposition& td) {
  TdReport report;
  auto fail = [&](std::string why) {
    if (report.valid) {
      report.valid = false;
      report.violation = std::move(why);
    }
  };
  for (const auto& [t, bag] : td.bags()) {
    report.width = std::max<long>(report.width, static_cast<long>(bag.size()) - 1);
  }
  for (const auto& [a, b] : td.edges()) {
    long shared = static_cast<long>(set_intersection(td.bag(a), td.bag(b)).size());
    report.adhesion = std::max(report.adhesion, shared);
  }

  if (td.empty()) {
    if (!graph.empty()) fail("decomposition has no nodes");
    return report;
  }
  if (td.edges().size() + 1 != td.num_nodes() || !nodes_connected(td, td.nodes())) {
    fail("decomposition tree is not a tree");
  }
  std::map<VertexId, std::vector<NodeId>> occurrences;
  for (const auto& [t, bag] : td.bags()) {
    for (VertexId v : bag) {
      if (!graph.has_vertex(v)) {
        fail("bag " + std::to_string(t) + " holds unknown vertex " + std::to_string(v));
      }
      occurrences[v].push_back(t);
    }
  }
  for (VertexId v : graph.vertices()) {
    auto it = occurrences.find(v);
    if (it == occurrences.end()) {
      fail("vertex " + std::to_string(v) + " is in no bag");
    } else if (!nodes_connected(td, it->second)) {
      fail("bags holding vertex " + std::to_string(v) + " are not connected");
    }
  }
  for (const auto& e : graph.edges()) {
    const auto& a = occurrences[e.u];
    const auto& b = occurrences[e.v];
    bool shared = std::any_of(a.begin(), a.end(), [&](NodeId t) {
      return std::find(b.begin(), b.end(), t) != b.end();
    });
    if (!shared) fail("edge " + pair_name(e.u, e.v) + " is in no bag");
  }
  return report;
}

TreeDecomposition normalize_td(const TreeDecomposition& td) {
  TreeDecomposition cur = td;
  for (;;) {
    std::optional<std::pair<NodeId, NodeId>> merge;  // (removed, kept)
    for (const auto& [a, b] : cur.edges()) {
      if (is_subset(cur.bag(a), cur.bag(b))) {
        merge = std::make_pair(a, b);
      } else if (is_subset(cur.bag(b), cur.bag(a))) {
        merge = std::make_pair(b, a);
      }
      if (merge) break;
    }
    if (!merge) return cur;
    auto [gone, kept] = *merge;
    TreeDecomposition next;
    for (const auto& [t, bag] : cur.bags()) {
      if (t != gone) next.add_node(t, bag);
    }
    std::set<std::pair<NodeId, NodeId>> edges;
    for (auto [a, b] : cur.edges()) {
      if (a == gone) a = kept;
      if (b == gone) b = kept;
      if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
    }
    for (const auto& [a, b] : edges) next.add_edge(a, b);
    cur = std::move(next);
  }
}

WeightedGraph weighted_torso(const WeightedGraph& graph, const DistanceMatrix& dist,
                             const TreeDecomposition& td, NodeId t) {
  const VertexSet& bag = td.bag(t);
  WeightedGraph torso = graph.induced(bag);
  for (const auto& e : torso.edges()) torso.set_weight(e.u, e.v, dist(e.u, e.v));
  for (NodeId s : td.neighbours(t)) {
    VertexSet shared = set_intersection(bag, td.bag(s));
    for (std::size_t i = 0; i < shared.size(); ++i) {
      for (std::size_t j = i + 1; j < shared.size(); ++j) {
        torso.set_weight(shared[i], shared[j], dist(shared[i], shared[j]));
      }
    }
  }
  return torso;
}

WeightedGraph completion(const WeightedGraph& graph, const DistanceMatrix& dist,
                         const TreeDecomposition& td) {
  // Every edge of G lies in a bag, so the union of torsos is G reweighted by
  // distance plus the adhesion pairs.
  WeightedGraph out = graph;
  for (const auto& e : graph.edges()) {
    const Length& d = dist(e.u, e.v);
    if (d != e.weight) out.set_weight(e.u, e.v, d);
  }
  for (const auto& [a, b] : td.edges()) {
    VertexSet shared = set_intersection(td.bag(a), td.bag(b));
    for (std::size_t i = 0; i < shared.size(); ++i) {
      for (std::size_t j = i + 1; j < shared.size(); ++j) {
        if (!out.has_edge(shared[i], shared[j])) {
          out.add_edge(shared[i], shared[j], dist(shared[i], shared[j]));
        }
      }
    }
  }
  return out;
}

void Partition::add_part(VertexId id, VertexSet vertices) {
  vertices = make_vertex_set(std::move(vertices));
  if (vertices.empty()) throw Error("part " + std::to_string(id) + " is empty");
  if (parts_.count(id)) throw Error("duplicate part id " + std::to_string(id));
  for (VertexId v : vertices) {
    if (owner_.count(v)) {
      throw Error("vertex " + std::to_string(v) + " lies in parts " +
                  std::to_string(owner_[v]) + " and " + std::to_string(id));
    }
  }
  for (VertexId v : vertices) owner_[v] = id;
  parts_[id] = std::move(vertices);
}

VertexSet Partition::part_ids() const {
  VertexSet out;
  out.reserve(parts_.size());
  for (const auto& [id, part] : parts_) out.push_back(id);
  return out;
}

const VertexSet& Partition::part(VertexId id) const {
  auto it = parts_.find(id);
  if (it == parts_.end()) throw Error("unknown part " + std::to_string(id));
  return it->second;
}

VertexId Partition::part_of(VertexId v) const {
  auto it = owner_.find(v);
  if (it == owner_.end()) throw Error("vertex " + std::to_string(v) + " is in no part");
  return it->second;
}

VertexSet Partition::vertices() const {
  VertexSet out;
  out.reserve(owner_.size());
  for (const auto& [v, id] : owner_) out.push_back(v);
  return out;
}

VertexSet Partition::parts_meeting(const VertexSet& set) const {
  std::vector<VertexId> ids;
  for (VertexId v : set) {
    auto it = owner_.find(v);
    if (it != owner_.end()) ids.push_back(it->second);
  }
  return make_vertex_set(std::move(ids));
}

VertexSet Partition::union_of(const VertexSet& ids) const {
  std::vector<VertexId> out;
  for (VertexId id : ids) {
    const VertexSet& p = part(id);
    out.insert(out.end(), p.begin(), p.end());
  }
  return make_vertex_set(std::move(out));
}

Partition Partition::restrict(const VertexSet& keep) const {
  Partition out;
  for (VertexId id : parts_meeting(keep)) {
    const VertexSet& p = parts_.at(id);
    if (!is_subset(p, keep)) {
      throw Error("restriction splits part " + std::to_string(id));
    }
    out.add_part(id, p);
  }
  return out;
}

Partition singleton_partition(const WeightedGraph& graph) {
  Partition out;
  for (VertexId v : graph.vertices()) out.add_part(v, {v});
  return out;
}

WeightedGraph quotient(const WeightedGraph& graph, const Partition& partition) {
  if (partition.vertices() != graph.vertices()) {
    throw Error("partition does not cover exactly the vertices of the graph");
  }
  WeightedGraph out;
  for (const auto& [id, part] : partition.parts()) {
    if (!is_connected_in(graph, part)) {
      throw Error("part " + std::to_string(id) + " induces a disconnected subgraph");
    }
    out.add_vertex(id);
  }
  for (const auto& e : graph.edges()) {
    VertexId a = partition.part_of(e.u);
    VertexId b = partition.part_of(e.v);
    if (a != b && !out.has_edge(a, b)) out.add_edge(a, b, Length(1));
  }
  return out;
}

TreeDecomposition expand(const Partition& partition, const TreeDecomposition& td) {
  TreeDecomposition out;
  for (const auto& [t, bag] : td.bags()) out.add_node(t, partition.union_of(bag));
  for (const auto& [a, b] : td.edges()) out.add_edge(a, b);
  return out;
}

Length part_radius(const WeightedGraph& graph, const VertexSet& part) {
  return radius_and_center(all_pairs_distances(graph.induced(part))).radius;
}

TreewidthResult treewidth_exact(const WeightedGraph& graph, std::size_t limit) {
  const std::size_t n = graph.num_vertices();
  if (n > limit) {
    throw Error("treewidth oracle limit exceeded: " + std::to_string(n) + " vertices > limit " +
                std::to_string(limit));
  }
  TreewidthResult result;
  if (n == 0) return result;

  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& arc : graph.arcs(i)) adj[i] |= 1u << arc.to;
  }
  // |Q(S, v)|: vertices outside S + v reachable from v through S.
  auto q_size = [&](std::uint32_t s, std::size_t v) {
    std::uint32_t seen = 1u << v;
    std::uint32_t frontier = 1u << v;
    std::uint32_t outside = 0;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= ~seen;
      seen |= next;
      outside |= next & ~s;
      frontier = next & s;
    }
    return static_cast<long>(std::popcount(outside));
  };

  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<long> tw(std::size_t{1} << n, 0);
  std::vector<signed char> choice(std::size_t{1} << n, -1);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    long best = -1;
    bool first = true;
    for (std::uint32_t bits = s; bits; bits &= bits - 1) {
      std::size_t v = static_cast<std::size_t>(std::countr_zero(bits));
      std::uint32_t rest = s & ~(1u << v);
      long value = std::max(tw[rest], q_size(rest, v));
      if (first || value < best) {
        best = value;
        choice[s] = static_cast<signed char>(v);
        first = false;
      }
    }
    tw[s] = best;
  }
  result.width = tw[full];
  std::vector<VertexId> reversed;
  for (std::uint32_t s = full; s; s &= ~(1u << choice[s])) {
    reversed.push_back(graph.id_at(static_cast<std::size_t>(choice[s])));
  }
  result.order.assign(reversed.rbegin(), reversed.rend());
  return result;
}

TreeDecomposition decomposition_from_order(const WeightedGraph& graph,
                                           const std::vector<VertexId>& order) {
  if (make_vertex_set(order) != graph.vertices() || order.size() != graph.num_vertices()) {
    throw Error("elimination order is not a permutation of the vertices");
  }
  std::map<VertexId, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  std::map<VertexId, std::set<VertexId>> fill;
  for (const auto& e : graph.edges()) {
    fill[e.u].insert(e.v);
    fill[e.v].insert(e.u);
  }
  TreeDecomposition td;
  std::vector<std::optional<NodeId>> parent(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    VertexId v = order[i];
    std::vector<VertexId> later;
    for (VertexId u : fill[v]) {
      if (position[u] > i) later.push_back(u);
    }
    for (VertexId a : later) {
      for (VertexId b : later) {
        if (a != b) fill[a].insert(b);
      }
    }
    std::vector<VertexId> bag = later;
    bag.push_back(v);
    td.add_node(i, make_vertex_set(bag));
    std::optional<std::size_t> next;
    for (VertexId u : later) {
      if (!next || position[u] < *next) next = position[u];
    }
    if (next) parent[i] = *next;
  }
  const NodeId last = order.empty() ? 0 : order.size() - 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (parent[i]) {
      td.add_edge(i, *parent[i]);
    } else if (i != last) {
      td.add_edge(i, last);  // join the forest into one tree
    }
  }
  return td;
}

PartitionReport validate_partition(const WeightedGraph& graph, const Partition& partition, int k,
                                   const Rational& ell, const TreeDecomposition* certificate) {
  PartitionReport report;
  auto fail = [&](std::string why) {
    if (report.pass) {
      report.pass = false;
      report.reason = std::move(why);
    }
  };
  WeightedGraph quot;
  try {
    quot = quotient(graph, partition);
  } catch (const Error& e) {
    fail(e.what());
    return report;
  }
  report.max_radius = Length(0);
  for (const auto& [id, part] : partition.parts()) {
    Length rad = part_radius(graph, part);
    if (rad > report.max_radius) report.max_radius = rad;
    if (rad > Length(ell)) {
      fail("part " + std::to_string(id) + " has radius " + to_string(rad) + " > ell=" +
           to_string(ell));
    }
  }
  if (certificate != nullptr) {
    TdReport td = validate_td(quot, *certificate);
    if (!td.valid) {
      fail("quotient decomposition invalid: " + td.violation);
      return report;
    }
    report.treewidth = td.width;
  } else if (quot.num_vertices() <= 12) {
    report.treewidth = treewidth_exact(quot).width;
  } else {
    throw Error("quotient has " + std::to_string(quot.num_vertices()) +
                " vertices; exact treewidth needs at most 12, supply a decomposition");
  }
  if (report.treewidth > k) {
    fail("quotient treewidth " + std::to_string(report.treewidth) + " > k=" + std::to_string(k));
  }
  return report;
}

Partition neighborhood_partition(const DistanceMatrix& dist, const VertexSet& separator,
                                 const Rational& r) {
  if (separator.empty()) throw Error("neighbourhood partition needs a nonempty set");
  std::map<VertexId, std::vector<VertexId>> cells;
  const Length radius(r);
  for (VertexId v : dist.vertices()) {
    std::optional<VertexId> best;
    Length best_d = Length::infinity();
    for (VertexId s : separator) {
      const Length& d = dist(v, s);
      if (d < best_d) {
        best = s;
        best_d = d;
      }
    }
    if (best && best_d <= radius) cells[*best].push_back(v);
  }
  Partition out;
  for (auto& [s, cell] : cells) out.add_part(s, std::move(cell));
  return out;
}

SeparationCombination combine_separation_partition(const WeightedGraph& whole,
                                                   const WeightedGraph& g_side,
                                                   const WeightedGraph& h_side,
                                                   const Partition& partition,
                                                   const TreeDecomposition& td,
                                                   const RootedDecomposition& rd) {
  auto fail = [](const std::string& why) { throw Error("separation combination: " + why); };
  if (set_union(g_side.vertices(), h_side.vertices()) != whole.vertices()) {
    fail("the two sides do not cover the graph");
  }
  for (const auto& e : whole.edges()) {
    if (!g_side.has_edge(e.u, e.v) && !h_side.has_edge(e.u, e.v)) {
      fail("edge " + pair_name(e.u, e.v) + " lies on neither side");
    }
  }
  const VertexSet sep = set_intersection(g_side.vertices(), h_side.vertices());

  // (a) one separator vertex per part and a valid quotient decomposition.
  std::map<VertexId, VertexId> rep;  // part id -> its separator vertex
  for (const auto& [id, part] : partition.parts()) {
    VertexSet hit = set_intersection(part, sep);
    if (hit.size() != 1) {
      fail("part " + std::to_string(id) + " holds " + std::to_string(hit.size()) +
           " separator vertices");
    }
    rep[id] = hit.front();
  }
  TdReport td_report;
  try {
    td_report = validate_td(quotient(g_side, partition), td);
  } catch (const Error& e) {
    fail(e.what());
  }
  if (!td_report.valid) fail("quotient decomposition invalid: " + td_report.violation);

  // (b) rooted G[S]-decomposition of H.
  VertexSet keys;
  for (const auto& [s, bag] : rd.bags) keys.push_back(s);
  if (keys != sep) fail("rooted decomposition must have one bag per separator vertex");
  WeightedGraph pattern = g_side.induced(sep);
  long w = -1;
  std::map<VertexId, std::vector<VertexId>> holders;
  for (const auto& [s, bag] : rd.bags) {
    if (!contains(bag, s)) fail("bag J_" + std::to_string(s) + " is not rooted");
    if (!is_subset(bag, h_side.vertices())) {
      fail("bag J_" + std::to_string(s) + " leaves V(H)");
    }
    w = std::max<long>(w, static_cast<long>(bag.size()) - 1);
    for (VertexId h : bag) holders[h].push_back(s);
  }
  for (VertexId h : h_side.vertices()) {
    VertexSet who = make_vertex_set(holders[h]);
    if (who.empty() || !is_connected_in(pattern, who)) {
      fail("bags holding " + std::to_string(h) + " are not a nonempty connected set");
    }
  }
  for (const auto& e : h_side.edges()) {
    bool inside = std::any_of(rd.bags.begin(), rd.bags.end(), [&](const auto& kv) {
      return contains(kv.second, e.u) && contains(kv.second, e.v);
    });
    if (!inside) fail("edge " + pair_name(e.u, e.v) + " of H is in no bag J_s");
  }

  SeparationCombination out;
  for (const auto& [id, part] : partition.parts()) out.partition.add_part(rep[id], part);
  for (VertexId h : set_difference(h_side.vertices(), sep)) out.partition.add_part(h, {h});
  for (const auto& [t, bag] : td.bags()) {
    std::vector<VertexId> k_t;
    for (VertexId id : bag) {
      const VertexSet& j = rd.bags.at(rep.at(id));
      k_t.insert(k_t.end(), j.begin(), j.end());
    }
    out.td.add_node(t, make_vertex_set(std::move(k_t)));
  }
  for (const auto& [a, b] : td.edges()) out.td.add_edge(a, b);
  out.width_bound = (td_report.width + 1) * (w + 1) - 1;

  TdReport check = validate_td(quotient(whole, out.partition), out.td);
  if (!check.valid || check.width > out.width_bound) {
    throw Error("separation combination produced an invalid decomposition: " + check.violation);
  }
  return out;
}

std::optional<VertexSet> find_centres(const DistanceMatrix& dist, const VertexSet& vertices, int k,
                                      const Rational& ell, const VertexSet* centres,
                                      std::size_t limit) {
  const Length radius(ell);
  auto works = [&](const VertexSet& cand) {
    if (static_cast<int>(cand.size()) > k) return false;
    return std::all_of(vertices.begin(), vertices.end(), [&](VertexId v) {
      return std::any_of(cand.begin(), cand.end(),
                         [&](VertexId c) { return dist(v, c) <= radius; });
    });
  };
  if (centres != nullptr) {
    if (works(*centres)) return *centres;
    return std::nullopt;
  }
  if (vertices.empty()) return VertexSet{};
  if (vertices.size() > limit) {
    throw Error("centre search over " + std::to_string(vertices.size()) +
                " candidates exceeds the limit of " + std::to_string(limit));
  }
  const std::size_t n = vertices.size();
  const int max_size = std::min<int>(k, static_cast<int>(n));
  // Subsets by size, then lexicographically.
  VertexSet cand;
  std::optional<VertexSet> found;
  std::function<void(std::size_t, int)> search = [&](std::size_t from, int left) {
    if (found) return;
    if (left == 0) {
      if (works(cand)) found = cand;
      return;
    }
    for (std::size_t i = from; i < n && !found; ++i) {
      cand.push_back(vertices[i]);
      search(i + 1, left - 1);
      cand.pop_back();
    }
  };
  for (int size = 1; size <= max_size && !found; ++size) search(0, size);
  return found;
}

ScReport validate_strong_construction(const WeightedGraph& graph,
                                      const StrongConstruction& sc) {
  ScReport report;
  auto fail = [&](std::string why) {
    if (report.valid) {
      report.valid = false;
      report.violation = std::move(why);
    }
  };
  WeightedGraph quot;
  try {
    quot = quotient(graph, sc.partition);
  } catch (const Error& e) {
    fail(e.what());
    return report;
  }
  TdReport td = validate_td(quot, sc.td);
  if (!td.valid) fail("quotient decomposition invalid: " + td.violation);
  if (td.adhesion > sc.k) {
    fail("adhesion " + std::to_string(td.adhesion) + " > k=" + std::to_string(sc.k));
  }
  const Length radius(sc.ell);
  for (const auto& [id, part] : sc.partition.parts()) {
    auto it = sc.part_centre.find(id);
    if (it == sc.part_centre.end() || !contains(part, it->second)) {
      fail("part " + std::to_string(id) + " has no centre inside it");
      continue;
    }
    DistanceMatrix inner = all_pairs_distances(graph.induced(part));
    std::size_t c = inner.index_of(it->second);
    for (std::size_t j = 0; j < inner.size(); ++j) {
      if (inner.at(c, j) > radius) {
        fail("part " + std::to_string(id) + " is deeper than ell=" + to_string(sc.ell));
        break;
      }
    }
  }
  for (const auto& [t, bag] : sc.td.bags()) {
    if (static_cast<int>(bag.size()) > sc.centres) {
      fail("bag " + std::to_string(t) + " has " + std::to_string(bag.size()) +
           " parts, more than " + std::to_string(sc.centres) + " centres");
    }
  }
  return report;
}

StrongConstruction singleton_strong_construction(const WeightedGraph& graph,
                                                 const TreeDecomposition& td, int k) {
  TdReport report = validate_td(graph, td);
  if (!report.valid) throw Error("invalid decomposition: " + report.violation);
  if (report.adhesion > k) {
    throw Error("adhesion " + std::to_string(report.adhesion) + " exceeds k=" + std::to_string(k));
  }
  if (report.width > k) {
    throw Error("a bag of " + std::to_string(report.width + 1) + " vertices is not (" +
                std::to_string(k + 1) + ",0)-centred");
  }
  StrongConstruction sc;
  sc.partition = singleton_partition(graph);
  sc.td = td;
  sc.k = k;
  sc.ell = 0;
  sc.centres = k + 1;
  for (VertexId v : graph.vertices()) sc.part_centre[v] = v;
  return sc;
}

namespace {

std::map<VertexId, VertexId> central_vertices(const WeightedGraph& graph,
                                              const Partition& partition) {
  std::map<VertexId, VertexId> out;
  for (const auto& [id, part] : partition.parts()) {
    out[id] = radius_and_center(all_pairs_distances(graph.induced(part))).center;
  }
  return out;
}

}  // namespace

StrongConstruction partition_strong_construction(const WeightedGraph& graph,
                                                 const Partition& partition,
                                                 const TreeDecomposition& td, int k,
                                                 const Rational& ell) {
  PartitionReport report = validate_partition(graph, partition, k, ell, &td);
  if (!report.pass) throw Error("not a (k, ell)-partition: " + report.reason);
  StrongConstruction sc;
  sc.partition = partition;
  sc.td = normalize_td(td);
  sc.k = k;
  sc.ell = ell;
  sc.centres = k + 1;
  sc.part_centre = central_vertices(graph, partition);
  ScReport check = validate_strong_construction(graph, sc);
  if (!check.valid) throw Error("strong-construction invalid: " + check.violation);
  return sc;
}

StrongConstruction general_strong_construction(const WeightedGraph& graph,
                                               const Partition& partition,
                                               const TreeDecomposition& td, const Rational& ell) {
  TdReport report = validate_td(quotient(graph, partition), td);
  if (!report.valid) throw Error("quotient decomposition invalid: " + report.violation);
  StrongConstruction sc;
  sc.partition = partition;
  sc.td = normalize_td(td);
  sc.k = static_cast<int>(validate_td(quotient(graph, partition), sc.td).adhesion);
  sc.ell = ell;
  sc.centres = std::max(1, static_cast<int>(report.width + 1));
  sc.part_centre = central_vertices(graph, partition);
  ScReport check = validate_strong_construction(graph, sc);
  if (!check.valid) throw Error("strong-construction invalid: " + check.violation);
  return sc;
}

}  // namespace wdcolor
