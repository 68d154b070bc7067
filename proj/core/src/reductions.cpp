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

#include "wdcolor/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

namespace wdcolor {
namespace {

Length scaled(const Rational& factor, const Length& x) {
  if (x.is_infinite()) return x;
  return Length(Rational(factor * x.value()));
}

bool connected_in(const WeightedGraph& g, const VertexSet& set) {
  if (set.empty()) return false;
  std::set<VertexId> seen{set.front()};
  std::deque<VertexId> queue{set.front()};
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (const auto& arc : g.arcs(g.index_of(u))) {
      VertexId v = g.id_at(arc.to);
      if (contains(set, v) && seen.insert(v).second) queue.push_back(v);
    }
  }
  return seen.size() == set.size();
}

}  // namespace

SandwichReport verify_scaling(const DistanceMatrix& dist_h, const DistanceMatrix& dist_g,
                              const ScalingMap& map) {
  SandwichReport report;
  const VertexSet& hv = dist_h.vertices();
  std::vector<std::size_t> image(hv.size());
  for (std::size_t i = 0; i < hv.size(); ++i) {
    auto it = map.iota.find(hv[i]);
    if (it == map.iota.end()) throw Error("iota undefined at " + std::to_string(hv[i]));
    image[i] = dist_g.index_of(it->second);
  }
  for (std::size_t i = 0; i < hv.size() && report.pass; ++i) {
    for (std::size_t j = i + 1; j < hv.size(); ++j) {
      const Length& dh = dist_h.at(i, j);
      const Length& dg = dist_g.at(image[i], image[j]);
      bool lower = scaled(map.beta, dh) <= dg;
      bool upper = dg <= scaled(map.alpha, dh);
      if (!lower || !upper) {
        report.pass = false;
        report.violating_pair = std::make_pair(hv[i], hv[j]);
        report.h_distance = dh;
        report.g_distance = dg;
        break;
      }
    }
  }
  return report;
}

CertifiedColouring pullback_colouring(const DistanceMatrix& dist_h, const DistanceMatrix& dist_g,
                                      const ScalingMap& map, const Colouring& c_g,
                                      const Length& g_bound, const Rational& r, Mode mode) {
  if (map.alpha <= 0 || map.beta <= 0) throw Error("scaling constants must be positive");
  SandwichReport sandwich = verify_scaling(dist_h, dist_g, map);
  if (!sandwich.pass) {
    throw Error("scaling sandwich fails at pair " + std::to_string(sandwich.violating_pair->first) +
                "-" + std::to_string(sandwich.violating_pair->second) + ": dist_H=" +
                to_string(sandwich.h_distance) + ", dist_G=" + to_string(sandwich.g_distance));
  }
  if (mode == Mode::kTest && !verify_mrd(dist_g, c_g, map.alpha * r, g_bound).pass) {
    throw Error("colouring of G is not certified at (alpha r, f(alpha r))");
  }
  CertifiedColouring out{Colouring(c_g.num_colours()), scaled(Rational(1 / map.beta), g_bound)};
  for (VertexId v : dist_h.vertices()) out.colouring.set(v, c_g.at(map.iota.at(v)));
  if (mode == Mode::kTest && !verify_mrd(dist_h, out.colouring, r, out.bound).pass) {
    throw Error("pulled-back colouring exceeds f(alpha r)/beta (defect)");
  }
  return out;
}

ModelReport verify_model(const WeightedGraph& g, const WeightedGraph& h, const MinorModel& model) {
  ModelReport report;
  auto fail = [&](std::string why) {
    report.pass = false;
    report.violation = std::move(why);
    return report;
  };
  std::map<VertexId, VertexId> owner;
  for (const auto& [id, part] : model.parts) {
    if (part.empty()) return fail("part " + std::to_string(id) + " is empty");
    for (VertexId v : part) {
      if (!g.has_vertex(v)) {
        return fail("part " + std::to_string(id) + " holds unknown vertex " + std::to_string(v));
      }
      if (!owner.emplace(v, id).second) {
        return fail("disjointness: vertex " + std::to_string(v) + " is in parts " +
                    std::to_string(owner[v]) + " and " + std::to_string(id));
      }
    }
    if (!connected_in(g, part)) {
      return fail("connectivity: part " + std::to_string(id) + " is disconnected");
    }
  }
  std::set<VertexId> images;
  for (const auto& [id, part] : model.parts) {
    auto it = model.map.find(id);
    if (it == model.map.end()) return fail("bijection: part " + std::to_string(id) + " unmapped");
    if (!h.has_vertex(it->second)) {
      return fail("bijection: part " + std::to_string(id) + " maps outside V(H)");
    }
    if (!images.insert(it->second).second) {
      return fail("bijection: two parts map to " + std::to_string(it->second));
    }
  }
  if (model.map.size() != model.parts.size() || images.size() != h.num_vertices()) {
    return fail("bijection: parts and V(H) differ in size");
  }
  std::map<VertexId, VertexId> part_of_h;
  for (const auto& [id, x] : model.map) part_of_h[x] = id;
  std::set<std::pair<VertexId, VertexId>> joined;  // pairs of H vertices
  for (const auto& e : g.edges()) {
    auto a = owner.find(e.u);
    auto b = owner.find(e.v);
    if (a == owner.end() || b == owner.end() || a->second == b->second) continue;
    VertexId x = model.map.at(a->second);
    VertexId y = model.map.at(b->second);
    joined.insert({std::min(x, y), std::max(x, y)});
  }
  for (const auto& e : h.edges()) {
    if (!joined.count({e.u, e.v})) {
      return fail("isomorphism: no edge of G joins the parts of " + std::to_string(e.u) + "-" +
                  std::to_string(e.v));
    }
  }
  return report;
}

MinorWeighting minor_weighting(const WeightedGraph& g, const WeightedGraph& h,
                               const MinorModel& model, const Rational& epsilon) {
  if (epsilon <= 0) throw Error("epsilon must be positive");
  if (h.empty()) throw Error("minor must have at least one vertex");
  ModelReport check = verify_model(g, h, model);
  if (!check.pass) throw Error("invalid model: " + check.violation);
  const DistanceMatrix dist_h = all_pairs_distances(h.shape());
  const Length diam = weak_diameter(dist_h, h.vertices());
  if (diam.is_infinite()) throw Error("minor is disconnected");

  std::map<VertexId, VertexId> owner;
  for (const auto& [id, part] : model.parts) {
    for (VertexId v : part) owner[v] = id;
  }
  enum class Kind { kBetween, kInside, kOther };
  std::vector<Kind> kinds;
  std::size_t inside = 0;
  const std::vector<Edge> edges = g.edges();
  for (const auto& e : edges) {
    auto a = owner.find(e.u);
    auto b = owner.find(e.v);
    Kind kind = Kind::kOther;
    if (a != owner.end() && b != owner.end()) {
      if (a->second == b->second) {
        kind = Kind::kInside;
        ++inside;
      } else if (h.has_edge(model.map.at(a->second), model.map.at(b->second))) {
        kind = Kind::kBetween;
      }
    }
    kinds.push_back(kind);
  }
  const Rational p(static_cast<long>(std::max<std::size_t>(inside, 1)));
  const Rational far = (1 + epsilon) * diam.value() + 1;

  MinorWeighting out;
  for (VertexId v : g.vertices()) out.weighted.add_vertex(v);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Rational w = kinds[i] == Kind::kBetween ? Rational(1)
                 : kinds[i] == Kind::kInside ? Rational(epsilon / p)
                                             : far;
    out.weighted.add_edge(edges[i].u, edges[i].v, Length(w));
  }
  out.map.alpha = 1 + epsilon;
  out.map.beta = 1;
  for (const auto& [id, x] : model.map) out.map.iota[x] = model.parts.at(id).front();

  SandwichReport sandwich = verify_scaling(dist_h, all_pairs_distances(out.weighted), out.map);
  if (!sandwich.pass) throw Error("minor weighting sandwich failed (defect)");
  return out;
}

Integerized integerize(const WeightedGraph& g) {
  mpz_class k = 1;
  for (const auto& e : g.edges()) {
    if (e.weight.is_infinite()) throw Error("cannot integerize an infinite weight");
    k = lcm(k, e.weight.value().get_den());
  }
  Integerized out;
  out.scale = Rational(k);
  for (VertexId v : g.vertices()) out.weighted.add_vertex(v);
  for (const auto& e : g.edges()) {
    out.weighted.add_edge(e.u, e.v, Length(Rational(out.scale * e.weight.value())));
  }
  return out;
}

Blowup subdivision_blowup(const WeightedGraph& g) {
  Blowup out;
  VertexId next = g.empty() ? 0 : g.vertices().back() + 1;
  for (VertexId v : g.vertices()) out.graph.add_vertex(v);
  for (const auto& e : g.edges()) {
    if (e.weight.is_infinite() || e.weight.value().get_den() != 1) {
      throw Error("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                  " has non-integer weight " + to_string(e.weight));
    }
    const mpz_class& w = e.weight.value().get_num();
    if (!w.fits_ulong_p()) throw Error("edge weight too large to subdivide");
    unsigned long len = w.get_ui();
    std::vector<VertexId> inner;
    VertexId prev = e.u;
    for (unsigned long i = 1; i < len; ++i) {
      VertexId s = next++;
      inner.push_back(s);
      out.graph.add_edge(prev, s, Length(1));
      prev = s;
    }
    out.graph.add_edge(prev, e.v, Length(1));
    out.paths[{e.u, e.v}] = std::move(inner);
  }
  return out;
}

TreeDecomposition extend_decomposition(const WeightedGraph& g, const TreeDecomposition& td,
                                       const Blowup& blowup) {
  TreeDecomposition out = td;
  NodeId next = td.empty() ? 0 : td.nodes().back() + 1;
  for (const auto& e : g.edges()) {
    const auto& inner = blowup.paths.at({e.u, e.v});
    if (inner.empty()) continue;
    std::optional<NodeId> host;
    for (const auto& [t, bag] : td.bags()) {
      if (contains(bag, e.u) && contains(bag, e.v)) {
        host = t;
        break;
      }
    }
    if (!host) throw Error("decomposition misses edge " + std::to_string(e.u) + "-" +
                           std::to_string(e.v));
    NodeId prev = *host;
    VertexId behind = e.u;
    for (VertexId s : inner) {
      out.add_node(next, {behind, s, e.v});
      out.add_edge(prev, next);
      prev = next++;
      behind = s;
    }
  }
  return out;
}

MinorModel subdivision_model(const WeightedGraph& g, const Blowup& blowup) {
  MinorModel model;
  for (VertexId v : g.vertices()) {
    model.parts[v] = {v};
    model.map[v] = v;
  }
  for (const auto& [edge, inner] : blowup.paths) {
    VertexSet& part = model.parts[edge.first];
    part = set_union(part, make_vertex_set(inner));
  }
  return model;
}

WeightedGraph exponential_grid_weighting(int m, VertexId root) {
  if (m < 1) throw Error("grid side must be at least 1");
  const VertexId side = static_cast<VertexId>(m);
  if (root >= side * side) throw Error("root is not a grid vertex");
  const long ri = static_cast<long>(root / side);
  const long rj = static_cast<long>(root % side);
  auto hops = [&](VertexId v) {
    return static_cast<unsigned long>(std::labs(static_cast<long>(v / side) - ri) +
                                      std::labs(static_cast<long>(v % side) - rj));
  };
  auto weight = [&](VertexId u, VertexId v) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, std::min(hops(u), hops(v)));
    return Length(Rational(p));
  };
  WeightedGraph g;
  for (VertexId v = 0; v < side * side; ++v) g.add_vertex(v);
  for (VertexId i = 0; i < side; ++i) {
    for (VertexId j = 0; j < side; ++j) {
      VertexId v = i * side + j;
      if (j + 1 < side) g.add_edge(v, v + 1, weight(v, v + 1));
      if (i + 1 < side) g.add_edge(v, v + side, weight(v, v + side));
    }
  }
  return g;
}

}  // namespace wdcolor
