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

#include "wdcolor/colorer.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace wdcolor {
namespace {

struct Context {
  const StrongConstruction& sc;
  const BaseColorer& base;
  LadderCoefficients lad;
  int m;
  Mode mode;
};

[[noreturn]] void step_failed(const std::string& step, const std::string& detail) {
  throw Error("colorer step '" + step + "': " + detail);
}

std::vector<VertexSet> connected_components(const WeightedGraph& graph) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(graph.num_vertices(), false);
  for (std::size_t start = 0; start < graph.num_vertices(); ++start) {
    if (seen[start]) continue;
    std::vector<VertexId> comp;
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      comp.push_back(graph.id_at(u));
      for (const auto& arc : graph.arcs(u)) {
        if (!seen[arc.to]) {
          seen[arc.to] = true;
          queue.push_back(arc.to);
        }
      }
    }
    out.push_back(make_vertex_set(std::move(comp)));
  }
  return out;
}

NodeId first_node_holding(const TreeDecomposition& td, VertexId part) {
  for (const auto& [t, bag] : td.bags()) {
    if (contains(bag, part)) return t;
  }
  throw Error("part " + std::to_string(part) + " is in no bag");
}

VertexId central_vertex(const WeightedGraph& graph, const VertexSet& part) {
  return radius_and_center(all_pairs_distances(graph.induced(part))).center;
}

VertexSet bag_union(const TreeDecomposition& td, const std::vector<NodeId>& nodes) {
  std::vector<VertexId> out;
  for (NodeId t : nodes) out.insert(out.end(), td.bag(t).begin(), td.bag(t).end());
  return make_vertex_set(std::move(out));
}

Colouring colour_level(const Context& ctx, const WeightedGraph& graph, const DistanceMatrix& dist,
                       const Partition& partition, const TreeDecomposition& td, int k,
                       const Rational& r, VertexSet sp, Colouring c_z);

// Level 0: every component sits inside one bag; colour its weighted torso.
Colouring colour_base_level(const Context& ctx, const WeightedGraph& graph,
                            const DistanceMatrix& dist, const Partition& partition,
                            const TreeDecomposition& td, const Rational& r) {
  Colouring out(ctx.m);
  TreeDecomposition vtd = expand(partition, td);
  for (const VertexSet& comp : connected_components(graph)) {
    NodeId t = first_node_holding(td, partition.part_of(comp.front()));
    const VertexSet& bag = vtd.bag(t);
    if (!is_subset(comp, bag)) step_failed("base", "a component spans several bags");
    WeightedGraph torso = weighted_torso(graph, dist, vtd, t);
    DistanceMatrix torso_dist = dist.restrict(bag);
    if (ctx.mode == Mode::kTest &&
        !is_tight(all_pairs_distances(torso), torso_dist).tight) {
      step_failed("base", "weighted torso is not tight");
    }
    std::vector<VertexId> centres;
    for (VertexId pid : td.bag(t)) centres.push_back(ctx.sc.part_centre.at(pid));
    Colouring c = ctx.base.colour(
        BaseInput{torso, torso_dist, make_vertex_set(std::move(centres)), r, ctx.m});
    out.merge(c.restrict(comp));
  }
  out.set_num_colours(ctx.m);
  if (ctx.mode == Mode::kTest) {
    Length bound(ctx.lad.at(0).f * r);
    if (!verify_mrd(dist, out, r, bound).pass) step_failed("base", "colouring exceeds f_0(r)");
  }
  return out;
}

struct PieceSpec {
  NodeId q_e;
  NodeId t;  // endpoint of the boundary edge inside T'
  std::vector<NodeId> nodes;
};

Colouring colour_level(const Context& ctx, const WeightedGraph& graph, const DistanceMatrix& dist,
                       const Partition& partition, const TreeDecomposition& td, int k,
                       const Rational& r, VertexSet sp, Colouring c_z) {
  if (graph.empty()) return Colouring(ctx.m);
  if (k == 0) {
    if (!sp.empty()) step_failed("base", "separator parts given at level 0");
    return colour_base_level(ctx, graph, dist, partition, td, r);
  }
  if (static_cast<int>(sp.size()) > k) step_failed("input", "more than k separator parts");

  // (1) Work in the completion; distances are unchanged.
  WeightedGraph hat = completion(graph, dist, expand(partition, td));
  if (ctx.mode == Mode::kTest && !is_tight(all_pairs_distances(hat), dist).tight) {
    step_failed("completion", "completion changed a distance");
  }

  // (2) Seed with the part of the smallest vertex when no separator is given.
  bool seeded = false;
  if (sp.empty()) {
    VertexId pid = partition.part_of(graph.vertices().front());
    first_node_holding(td, pid);
    sp = {pid};
    seeded = true;
  }
  const VertexSet s = partition.union_of(sp);
  const VertexSet z_parts = partition.parts_meeting(neighborhood(dist, s, 3 * r));
  const VertexSet z = partition.union_of(z_parts);
  if (seeded) {
    c_z = constant_colouring(z, 1, ctx.m);
  } else if (!c_z.covers(z)) {
    step_failed("input", "c_Z does not colour every part near the separator");
  }

  // (3) T', the core G', and the pieces beyond the boundary edges.
  std::vector<NodeId> t_prime;
  std::set<NodeId> in_t_prime;
  for (const auto& [t, bag] : td.bags()) {
    if (!set_intersection(bag, z_parts).empty()) {
      t_prime.push_back(t);
      in_t_prime.insert(t);
    }
  }
  const VertexSet v_prime = partition.union_of(bag_union(td, t_prime));
  const WeightedGraph g_prime = hat.induced(v_prime);
  const DistanceMatrix d_prime = dist.restrict(v_prime);

  std::vector<PieceSpec> pieces;
  for (NodeId t : t_prime) {
    for (NodeId u : td.neighbours(t)) {
      if (in_t_prime.count(u)) continue;
      PieceSpec piece{u, t, {}};
      std::set<NodeId> seen{u};
      std::deque<NodeId> queue{u};
      while (!queue.empty()) {
        NodeId x = queue.front();
        queue.pop_front();
        piece.nodes.push_back(x);
        for (NodeId y : td.neighbours(x)) {
          if (!in_t_prime.count(y) && seen.insert(y).second) queue.push_back(y);
        }
      }
      std::sort(piece.nodes.begin(), piece.nodes.end());
      pieces.push_back(std::move(piece));
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const PieceSpec& a, const PieceSpec& b) { return a.q_e < b.q_e; });

  // (4) Core: G' - Z one level down at radius g*_k(r).
  const LadderLevel& level = ctx.lad.at(k);
  const Rational r_core = level.g_star * r;
  const VertexSet v_core = set_difference(v_prime, z);
  const WeightedGraph g_core = hat.induced(v_core);
  const DistanceMatrix d_core = all_pairs_distances(g_core);
  TreeDecomposition td_core = td.induced(t_prime);
  for (NodeId t : t_prime) td_core.set_bag(t, set_difference(td.bag(t), z_parts));
  Colouring c_core = colour_level(ctx, g_core, d_core, partition.restrict(v_core), td_core, k - 1,
                                  r_core, {}, Colouring(ctx.m));

  // (5) Z is (k, 6r)-centred in G' by one central vertex per separator part.
  std::vector<VertexId> s_star;
  for (VertexId pid : sp) s_star.push_back(central_vertex(hat, partition.part(pid)));
  CentredSet cs = make_centred_set(d_prime, z, make_vertex_set(std::move(s_star)), k, 6 * r);
  CertifiedColouring c_prime =
      extend_colouring_centred(g_prime, d_prime, cs, c_core, c_z.restrict(z), r_core,
                               Length(level.f_star * r), ctx.mode, &d_core);
  if (c_prime.bound != Length(level.f_sharp * r)) {
    step_failed("extend", "certified bound differs from f#_k(r)");
  }

  // (6) Pieces: barrier around the separator, then recurse at level k.
  std::vector<GluePiece> glue;
  for (const PieceSpec& piece : pieces) {
    const VertexSet v_e = partition.union_of(bag_union(td, piece.nodes));
    const VertexSet sep_parts = set_intersection(td.bag(piece.t), td.bag(piece.q_e));
    const VertexSet s_e = partition.union_of(sep_parts);
    const DistanceMatrix d_e = dist.restrict(v_e);
    const Partition p_e = partition.restrict(v_e);
    VertexSet z_e;
    if (!s_e.empty()) z_e = p_e.union_of(p_e.parts_meeting(neighborhood(d_e, s_e, 3 * r)));
    BarrierColouring barrier =
        build_barrier_colouring(d_e, s_e, r, c_prime.colouring.restrict(s_e), ctx.m, z_e);
    Colouring c_e = colour_level(ctx, hat.induced(v_e), d_e, p_e, td.induced(piece.nodes), k, r,
                                 sep_parts, barrier.colouring);
    std::vector<VertexId> centres;
    for (VertexId pid : sep_parts) centres.push_back(central_vertex(hat, partition.part(pid)));
    glue.push_back(GluePiece{v_e, s_e, make_vertex_set(std::move(centres)), std::move(c_e)});
  }

  // (7) Glue with ell := r, d = f#_k(r), D = f_k(r).
  GlueParams params;
  params.r = r;
  params.ell = r;
  params.k = k;
  params.m = ctx.m;
  params.d = Length(level.f_sharp * r);
  params.d_bound = Length(level.f * r);
  Colouring out = glue_colourings(hat, dist, v_prime, c_prime.colouring, glue, params, ctx.mode);
  if (ctx.mode == Mode::kTest) {
    for (const auto& [v, c] : c_z.assignment()) {
      if (out.at(v) != c) step_failed("glue", "output does not extend c_Z");
    }
  }
  return out;
}

void check_radius(const StrongConstruction& sc, const BaseColorer& base, const Rational& r) {
  if (r <= 0) throw Error("r must be positive");
  if (r < sc.ell || r < base.control.ell) {
    throw Error("r=" + to_string(r) + " is below the ell-almost threshold ell=" +
                to_string(std::max<Rational>(sc.ell, base.control.ell)));
  }
}

}  // namespace

LadderCoefficients ladder(int k, const ControlFunction& base) {
  if (k < 0) throw Error("ladder level must be nonnegative");
  LadderCoefficients out;
  LadderLevel zero;
  zero.f = base.slope;
  out.levels.push_back(zero);
  for (int i = 1; i <= k; ++i) {
    LadderLevel lv;
    lv.g_prime = 8 * Rational(i + 1);
    lv.g_star = 2 * lv.g_prime + 2;
    lv.f_star = out.levels.back().f * lv.g_star;
    lv.f_sharp = Rational(i + 1) * (lv.f_star + 4 * lv.g_star + 12);
    lv.f = lv.f_sharp + 2 * lv.g_star;
    out.levels.push_back(lv);
  }
  return out;
}

BaseColorer centred_base_colorer(int k, const Rational& ell) {
  BaseColorer base;
  base.dimension = 0;
  base.control = ControlFunction{Rational(4 * (k + 2)), ell};
  base.colour = [](const BaseInput& in) {
    return constant_colouring(in.torso.vertices(), 1, in.colours);
  };
  return base;
}

CertifiedColouring colour_centred(const WeightedGraph& graph, const DistanceMatrix& dist, int k,
                                  const Rational& ell, const Rational& r,
                                  const VertexSet* centres, Mode mode) {
  if (r < ell) throw Error("r is below the ell-almost threshold");
  std::optional<VertexSet> found = find_centres(dist, graph.vertices(), k + 1, ell, centres);
  if (!found) throw Error("vertex set is not (k+1, ell)-centred");
  CertifiedColouring out{constant_colouring(graph.vertices(), 1, 1),
                         Length(Rational(4 * (k + 2)) * r)};
  if (mode == Mode::kTest && !graph.empty()) {
    CentredSet cs = make_centred_set(dist, graph.vertices(), *found, k + 1, ell);
    if (!check_centred_rpath_bound(dist, cs, r).pass) {
      throw Error("centred r-path bound violated (defect)");
    }
    if (!verify_mrd(dist, out.colouring, r, out.bound).pass) {
      throw Error("centred colouring exceeds 4(k+2)r (defect)");
    }
  }
  return out;
}

Colouring strong_construction_colour(const WeightedGraph& graph, const DistanceMatrix& dist,
                                     const StrongConstruction& sc, const BaseColorer& base,
                                     const Rational& r, std::optional<NodeId> q,
                                     const VertexSet& sp, const Colouring& c_z, Mode mode) {
  check_radius(sc, base, r);
  if (q && !is_subset(sp, sc.td.bag(*q))) {
    throw Error("separator parts are not inside the bag of q");
  }
  Context ctx{sc, base, ladder(sc.k, base.control), std::max(base.dimension, 1) + 1, mode};
  return colour_level(ctx, graph, dist, sc.partition, sc.td, sc.k, r, sp, c_z);
}

ColourResult strong_construction_colour(const WeightedGraph& graph, const DistanceMatrix& dist,
                                        const StrongConstruction& sc, const BaseColorer& base,
                                        const Rational& r, Mode mode) {
  check_radius(sc, base, r);
  if (mode == Mode::kTest) {
    ScReport report = validate_strong_construction(graph, sc);
    if (!report.valid) throw Error("invalid strong-construction: " + report.violation);
  }
  ColourResult out;
  out.ladder = ladder(sc.k, base.control);
  out.k = sc.k;
  out.m = std::max(base.dimension, 1) + 1;
  out.bound = Length(out.ladder.at(sc.k).f * r);
  out.colouring =
      strong_construction_colour(graph, dist, sc, base, r, std::nullopt, {}, Colouring(out.m), mode);
  out.colouring.set_num_colours(out.m);
  if (mode == Mode::kTest && !verify_mrd(dist, out.colouring, r, out.bound).pass) {
    throw Error("certified bound exceeded (defect)");
  }
  return out;
}

ColourResult colour_partitioned(const WeightedGraph& graph, const DistanceMatrix& dist,
                                const Partition& partition, const TreeDecomposition& td, int k,
                                const Rational& ell, const Rational& r, Mode mode) {
  if (r < ell) throw Error("r=" + to_string(r) + " is below the ell-almost threshold ell=" +
                           to_string(ell));
  StrongConstruction sc = partition_strong_construction(graph, partition, td, k, ell);
  return strong_construction_colour(graph, dist, sc, centred_base_colorer(k, ell), r, mode);
}

ColourResult colour_bounded_treewidth(const WeightedGraph& graph, const DistanceMatrix& dist,
                                      const TreeDecomposition* td, int k, const Rational& r,
                                      Mode mode) {
  TreeDecomposition computed;
  if (td == nullptr) {
    TreewidthResult tw = treewidth_exact(graph.shape());
    computed = decomposition_from_order(graph, tw.order);
    td = &computed;
  }
  TdReport report = validate_td(graph, *td);
  if (!report.valid) throw Error("invalid decomposition: " + report.violation);
  if (report.width > k) {
    throw Error("decomposition width " + std::to_string(report.width) + " exceeds k=" +
                std::to_string(k));
  }
  return colour_partitioned(graph, dist, singleton_partition(graph), *td, k, 0, r, mode);
}

}  // namespace wdcolor
