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

#include "wdcolor/rerouting.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wdcolor {
namespace {

std::string describe(const std::vector<VertexId>& vs) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
  os << ")";
  return os.str();
}

// Nearest vertex of `set` to v, ties broken by smallest id. `set` nonempty.
std::pair<VertexId, Length> nearest(const DistanceMatrix& dist, VertexId v, const VertexSet& set) {
  std::size_t i = dist.index_of(v);
  VertexId best = set.front();
  Length best_d = dist.at(i, dist.index_of(best));
  for (VertexId s : set) {
    const Length& d = dist.at(i, dist.index_of(s));
    if (d < best_d) {
      best = s;
      best_d = d;
    }
  }
  return {best, best_d};
}

[[noreturn]] void hypothesis_failed(const std::string& which, const std::string& detail) {
  throw Error("glue hypothesis " + which + " failed: " + detail);
}

}  // namespace

CentredSet make_centred_set(const DistanceMatrix& dist, VertexSet members, VertexSet centre, int k,
                            const Rational& ell) {
  if (static_cast<int>(centre.size()) > k) {
    throw Error("centre has " + std::to_string(centre.size()) + " vertices, more than k=" +
                std::to_string(k));
  }
  CentredSet cs{std::move(members), std::move(centre), k, ell, {}};
  const Length limit(ell);
  for (VertexId z : cs.members) {
    if (cs.centre.empty()) throw Error("nonempty set with an empty centre");
    auto [s, d] = nearest(dist, z, cs.centre);
    if (d > limit) {
      throw Error("vertex " + std::to_string(z) + " is at distance " + to_string(d) +
                  " from the centre, more than ell=" + to_string(ell));
    }
    cs.iota[z] = s;
  }
  return cs;
}

bool is_valid_centred_set(const DistanceMatrix& dist, const CentredSet& cs) {
  if (static_cast<int>(cs.centre.size()) > cs.k) return false;
  const Length limit(cs.ell);
  for (VertexId z : cs.members) {
    auto it = cs.iota.find(z);
    if (it == cs.iota.end() || !contains(cs.centre, it->second)) return false;
    if (dist(z, it->second) > limit) return false;
  }
  return true;
}

Walk reroute(const DistanceMatrix& dist, const Walk& walk, const Rational& r,
             const VertexSet& through, const std::map<VertexId, VertexId>& iota,
             const Rational& ell, const Length& d) {
  if (walk.empty()) throw Error("reroute: empty walk");
  if (!is_r_walk(dist, walk, r)) throw Error("reroute: input is not an r-walk " + describe(walk));
  const Length limit(ell);
  for (VertexId v : through) {
    auto it = iota.find(v);
    if (it == iota.end()) throw Error("reroute: iota undefined at " + std::to_string(v));
    if (dist(v, it->second) > limit) {
      throw Error("reroute: dist(" + std::to_string(v) + ", iota) exceeds ell");
    }
  }
  // Maximal stretches outside `through`; any substretch has smaller weak
  // diameter, so these are the only ones to check.
  Walk stretch;
  auto flush = [&]() {
    if (stretch.empty()) return;
    if (weak_diameter(dist, make_vertex_set(stretch)) > d) {
      throw Error("reroute: stretch " + describe(stretch) + " outside Z has weak diameter above d");
    }
    stretch.clear();
  };
  for (VertexId v : walk) {
    if (contains(through, v)) {
      flush();
    } else {
      stretch.push_back(v);
    }
  }
  flush();

  Walk out{walk.front()};
  for (VertexId v : walk) {
    if (contains(through, v)) out.push_back(iota.at(v));
  }
  out.push_back(walk.back());
  return out;
}

CentredPathCheck check_centred_rpath_bound(const DistanceMatrix& dist, const CentredSet& cs,
                                           const Rational& r) {
  CentredPathCheck check;
  check.bound = Length(Rational(cs.k + 1) * (2 * r + 2 * cs.ell));
  if (cs.members.empty()) return check;
  DistanceMatrix view = dist.restrict(cs.members);
  ComponentReport report =
      monochromatic_components(view, constant_colouring(cs.members, 1, 1), r);
  for (const auto& comp : report.components) {
    if (comp.weak_diameter <= check.bound) continue;
    check.pass = false;
    for (VertexId x : comp.vertices) {
      for (VertexId y : comp.vertices) {
        if (!check.violating_pair && dist(x, y) == comp.weak_diameter) {
          check.violating_pair = std::make_pair(x, y);
        }
      }
    }
    break;
  }
  return check;
}

CertifiedColouring extend_colouring_centred(const WeightedGraph& graph,
                                            const DistanceMatrix& dist, const CentredSet& cs,
                                            const Colouring& outside, const Colouring& inside,
                                            const Rational& r, const Length& d, Mode mode,
                                            const DistanceMatrix* minus_dist) {
  const VertexSet rest = set_difference(graph.vertices(), cs.members);
  if (!outside.covers(rest)) throw Error("extend: colouring of G - Z is not total");
  if (!inside.covers(cs.members)) throw Error("extend: colouring of Z is not total");

  Colouring result = outside.restrict(rest);
  result.merge(inside.restrict(cs.members));

  CertifiedColouring out{std::move(result), Length::infinity()};
  if (d.is_finite()) {
    out.bound = Length(Rational(cs.k + 1) * (d.value() + 4 * r + 2 * cs.ell));
  }

  if (mode == Mode::kTest) {
    if (!is_valid_centred_set(dist, cs)) throw Error("extend: Z is not a valid centred set");
    DistanceMatrix computed;
    if (minus_dist == nullptr) {
      computed = all_pairs_distances(graph.without(cs.members));
      minus_dist = &computed;
    }
    MrdResult pre = verify_mrd(*minus_dist, outside.restrict(rest), r, d);
    if (!pre.pass) {
      throw Error("extend: colouring of G - Z is not an (m, r, d)-colouring");
    }
    MrdResult post = verify_mrd(dist, out.colouring, r, out.bound);
    if (!post.pass) throw Error("extend: certified bound exceeded (defect)");
  }
  return out;
}

BarrierColouring build_barrier_colouring(const DistanceMatrix& dist, const VertexSet& separator,
                                         const Rational& r, const Colouring& seed, int m,
                                         const VertexSet& domain) {
  if (m < 2) throw Error("a barrier needs at least two colours");
  if (!seed.covers(separator)) throw Error("barrier seed does not colour the whole separator");

  const VertexSet reach = separator.empty() ? VertexSet{} : neighborhood(dist, separator, 3 * r);
  BarrierColouring out;
  out.domain = domain.empty() ? reach : domain;
  if (!is_subset(reach, out.domain)) {
    throw Error("barrier domain must contain the 3r-neighbourhood of the separator");
  }
  out.colouring = Colouring(m);
  const Length r1(r);
  const Length r2(2 * r);
  const Length r3(3 * r);
  for (VertexId v : out.domain) {
    if (contains(separator, v)) {
      out.colouring.set(v, seed.at(v));
      continue;
    }
    if (separator.empty()) {
      out.colouring.set(v, 1);
      continue;
    }
    auto [s, d] = nearest(dist, v, separator);
    if (d <= r1) {
      out.colouring.set(v, seed.at(s));
    } else if (d <= r2) {
      out.colouring.set(v, out.alpha);
    } else if (d <= r3) {
      out.colouring.set(v, out.beta);
    } else {
      out.colouring.set(v, 1);
    }
  }
  return out;
}

BarrierCheck check_barrier(const DistanceMatrix& dist, const VertexSet& separator,
                           const Rational& r, const Colouring& colouring) {
  BarrierCheck check;
  if (separator.empty()) return check;
  const Length r1(r);
  const Length r2(2 * r);
  const Length r3(3 * r);
  std::set<Colour> second;
  std::set<Colour> third;
  for (VertexId v : dist.vertices()) {
    if (contains(separator, v)) continue;
    Length d = distance_to_set(dist, v, separator);
    if (d <= r1) {
      bool matched = std::any_of(separator.begin(), separator.end(), [&](VertexId s) {
        return dist(v, s) <= r1 && colouring.at(s) == colouring.at(v);
      });
      if (!matched) check.near_ok = false;
    } else if (d <= r2) {
      second.insert(colouring.at(v));
    } else if (d <= r3) {
      third.insert(colouring.at(v));
    }
  }
  if (second.size() > 1 || third.size() > 1) check.annuli_ok = false;
  if (second.size() == 1 && third.size() == 1 && *second.begin() == *third.begin()) {
    check.annuli_ok = false;
  }
  return check;
}

Rational glue_core_radius(const Rational& r, const Rational& ell, int k) {
  Rational ell_prime = Rational(k + 1) * (6 * r + 2 * ell);
  return 2 * r + 2 * ell_prime;
}

Colouring glue_colourings(const WeightedGraph& graph, const DistanceMatrix& dist,
                          const VertexSet& core, const Colouring& core_colouring,
                          const std::vector<GluePiece>& pieces, const GlueParams& params,
                          Mode mode) {
  const Rational r_prime = glue_core_radius(params.r, params.ell, params.k);

  if (mode == Mode::kTest) {
    if (params.k < 1) hypothesis_failed("(k)", "k must be at least 1");
    if (!pieces.empty() && params.m < 2) hypothesis_failed("(m)", "m must be at least 2");
    Length needed = params.d + Length(2 * r_prime);
    if (params.d_bound < needed) {
      hypothesis_failed("(D)", "D=" + to_string(params.d_bound) + " < d + 2r' = " +
                                   to_string(needed));
    }

    // (a) the pieces and the core cover G, including every edge.
    std::vector<const VertexSet*> all{&core};
    for (const auto& piece : pieces) all.push_back(&piece.vertices);
    VertexSet covered;
    for (const VertexSet* vs : all) covered = set_union(covered, *vs);
    if (covered != graph.vertices()) hypothesis_failed("(a)", "pieces do not cover V(G)");
    for (const auto& e : graph.edges()) {
      bool inside = std::any_of(all.begin(), all.end(), [&](const VertexSet* vs) {
        return contains(*vs, e.u) && contains(*vs, e.v);
      });
      if (!inside) {
        hypothesis_failed("(a)", "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                     " lies in no piece");
      }
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      TightnessReport tight = is_tight(all_pairs_distances(graph.induced(*all[i])),
                                       dist.restrict(*all[i]));
      if (!tight.tight) {
        hypothesis_failed("(tight)", "piece " + std::to_string(i) + " is not tight in G");
      }
    }

    // (b) separators sit in the core and are (k, ell)-centred.
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      VertexSet others = core;
      for (std::size_t j = 0; j < pieces.size(); ++j) {
        if (j != i) others = set_union(others, pieces[j].vertices);
      }
      VertexSet sep = set_intersection(pieces[i].vertices, others);
      if (sep != pieces[i].separator) {
        hypothesis_failed("(b)", "piece " + std::to_string(i + 1) + " separator mismatch");
      }
      if (!is_subset(sep, core)) {
        hypothesis_failed("(b)(i)", "separator of piece " + std::to_string(i + 1) +
                                        " leaves the core");
      }
      if (static_cast<int>(pieces[i].centres.size()) > params.k ||
          (!sep.empty() && neighborhood(dist, pieces[i].centres, params.ell) !=
                               set_union(neighborhood(dist, pieces[i].centres, params.ell), sep))) {
        hypothesis_failed("(b)(ii)", "separator of piece " + std::to_string(i + 1) +
                                         " is not (k, ell)-centred");
      }
    }

    // (c) the core colouring at the coarse radius.
    MrdResult core_check = verify_mrd(dist.restrict(core), core_colouring, r_prime, params.d);
    if (!core_check.pass) {
      hypothesis_failed("(c)", "core colouring is not an (m, r', d)-colouring");
    }

    // (d) piece colourings.
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const GluePiece& piece = pieces[i];
      const std::string name = "piece " + std::to_string(i + 1);
      DistanceMatrix local = dist.restrict(piece.vertices);
      if (!verify_mrd(local, piece.colouring, params.r, params.d_bound).pass) {
        hypothesis_failed("(d)(i)", name + " colouring exceeds D");
      }
      for (VertexId s : piece.separator) {
        if (piece.colouring.at(s) != core_colouring.at(s)) {
          hypothesis_failed("(d)(ii)", name + " disagrees with the core at " + std::to_string(s));
        }
      }
      if (!check_barrier(local, piece.separator, params.r, piece.colouring).ok()) {
        hypothesis_failed("(d)(iii)", name + " has no barrier around its separator");
      }
    }
  }

  Colouring out = core_colouring.restrict(core);
  for (const auto& piece : pieces) out.merge(piece.colouring.restrict(piece.vertices));
  out.set_num_colours(std::max(out.num_colours(), params.m));

  if (mode == Mode::kTest && !verify_mrd(dist, out, params.r, params.d_bound).pass) {
    throw Error("glue: certified bound exceeded (defect)");
  }
  return out;
}

}  // namespace wdcolor
