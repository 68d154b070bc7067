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

#include "wdcolor/colouring.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace wdcolor {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // The smaller root wins, so roots are minimal indices.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<Colour> colours_by_index(const DistanceMatrix& dist, const Colouring& colouring) {
  std::vector<Colour> out(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) out[i] = colouring.at(dist.vertices()[i]);
  return out;
}

ComponentReport report_from_labels(const DistanceMatrix& dist, const std::vector<Colour>& colour,
                                   const std::vector<std::size_t>& label) {
  // Labels are arbitrary; group by label in order of first appearance, which
  // is the order of the smallest member because indices follow id order.
  std::vector<std::size_t> slot(dist.size(), SIZE_MAX);
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    std::size_t& s = slot[label[i]];
    if (s == SIZE_MAX) {
      s = groups.size();
      groups.emplace_back();
    }
    groups[s].push_back(i);
  }
  ComponentReport report;
  report.max_weak_diameter = Length(0);
  for (const auto& group : groups) {
    Component comp;
    comp.colour = colour[group.front()];
    Length diam(0);
    for (std::size_t a = 0; a < group.size(); ++a) {
      comp.vertices.push_back(dist.vertices()[group[a]]);
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        const Length& d = dist.at(group[a], group[b]);
        if (d > diam) diam = d;
      }
    }
    comp.weak_diameter = diam;
    if (diam > report.max_weak_diameter) report.max_weak_diameter = diam;
    report.components.push_back(std::move(comp));
  }
  return report;
}

}  // namespace

Colouring::Colouring(int num_colours) : num_colours_(num_colours) {
  if (num_colours < 1) throw Error("a colouring needs at least one colour");
}

void Colouring::set_num_colours(int m) {
  if (m < 1) throw Error("a colouring needs at least one colour");
  for (const auto& [v, c] : assignment_) {
    if (c > m) throw Error("colour " + std::to_string(c) + " out of range for m=" + std::to_string(m));
  }
  num_colours_ = m;
}

void Colouring::set(VertexId v, Colour colour) {
  if (colour < 1 || colour > num_colours_) {
    throw Error("colour " + std::to_string(colour) + " outside {1.." + std::to_string(num_colours_) +
                "}");
  }
  assignment_[v] = colour;
}

Colour Colouring::at(VertexId v) const {
  auto it = assignment_.find(v);
  if (it == assignment_.end()) throw Error("vertex " + std::to_string(v) + " is not coloured");
  return it->second;
}

VertexSet Colouring::domain() const {
  VertexSet out;
  out.reserve(assignment_.size());
  for (const auto& [v, c] : assignment_) out.push_back(v);
  return out;
}

bool Colouring::covers(const VertexSet& set) const {
  return std::all_of(set.begin(), set.end(), [&](VertexId v) { return has(v); });
}

Colouring Colouring::restrict(const VertexSet& set) const {
  Colouring out(num_colours_);
  for (VertexId v : set) out.assignment_[v] = at(v);
  return out;
}

void Colouring::merge(const Colouring& other) {
  if (other.num_colours_ > num_colours_) num_colours_ = other.num_colours_;
  for (const auto& [v, c] : other.assignment_) {
    auto [it, inserted] = assignment_.emplace(v, c);
    if (!inserted && it->second != c) {
      throw Error("colourings disagree at vertex " + std::to_string(v));
    }
  }
}

Colouring constant_colouring(const VertexSet& vertices, Colour colour, int num_colours) {
  Colouring out(num_colours);
  for (VertexId v : vertices) out.set(v, colour);
  return out;
}

ComponentReport monochromatic_components(const DistanceMatrix& dist, const Colouring& colouring,
                                         const Rational& r) {
  std::vector<Colour> colour = colours_by_index(dist, colouring);
  const Length radius(r);
  DisjointSets sets(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) {
    for (std::size_t j = i + 1; j < dist.size(); ++j) {
      if (colour[i] == colour[j] && dist.at(i, j) <= radius) sets.unite(i, j);
    }
  }
  std::vector<std::size_t> label(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) label[i] = sets.find(i);
  return report_from_labels(dist, colour, label);
}

ComponentReport monochromatic_components_bfs(const DistanceMatrix& dist,
                                             const Colouring& colouring, const Rational& r) {
  std::vector<Colour> colour = colours_by_index(dist, colouring);
  const Length radius(r);
  std::vector<std::size_t> label(dist.size(), SIZE_MAX);
  for (std::size_t start = 0; start < dist.size(); ++start) {
    if (label[start] != SIZE_MAX) continue;
    label[start] = start;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < dist.size(); ++v) {
        if (label[v] == SIZE_MAX && colour[v] == colour[start] && dist.at(u, v) <= radius) {
          label[v] = start;
          queue.push_back(v);
        }
      }
    }
  }
  return report_from_labels(dist, colour, label);
}

MrdResult verify_mrd(const DistanceMatrix& dist, const Colouring& colouring, const Rational& r,
                     const Length& d) {
  MrdResult result;
  result.report = monochromatic_components(dist, colouring, r);
  for (std::size_t c = 0; c < result.report.components.size(); ++c) {
    const Component& comp = result.report.components[c];
    if (comp.weak_diameter <= d) continue;
    result.pass = false;
    result.violating_component = c;
    for (std::size_t a = 0; a < comp.vertices.size() && !result.violating_pair; ++a) {
      for (std::size_t b = a + 1; b < comp.vertices.size(); ++b) {
        if (dist(comp.vertices[a], comp.vertices[b]) == comp.weak_diameter) {
          result.violating_pair = std::make_pair(comp.vertices[a], comp.vertices[b]);
          break;
        }
      }
    }
    break;
  }
  return result;
}

SparseCover colouring_to_cover(const DistanceMatrix& dist, const Colouring& colouring,
                               const Rational& r) {
  ComponentReport report = monochromatic_components(dist, colouring, r);
  SparseCover cover;
  cover.collections.resize(static_cast<std::size_t>(colouring.num_colours()));
  cover.r = r;
  cover.bound = report.max_weak_diameter;
  for (auto& comp : report.components) {
    cover.collections[static_cast<std::size_t>(comp.colour - 1)].push_back(std::move(comp.vertices));
  }
  return cover;
}

CoverCheck check_cover(const DistanceMatrix& dist, const SparseCover& cover) {
  CoverCheck check;
  VertexSet covered;
  const Length radius(cover.r);
  for (const auto& collection : cover.collections) {
    for (const auto& set : collection) {
      covered = set_union(covered, set);
      if (!set.empty() && weak_diameter(dist, set) > cover.bound) check.bounded = false;
    }
    for (std::size_t a = 0; a < collection.size(); ++a) {
      for (std::size_t b = a + 1; b < collection.size(); ++b) {
        for (VertexId u : collection[a]) {
          for (VertexId v : collection[b]) {
            if (dist(u, v) <= radius) check.r_disjoint = false;
          }
        }
      }
    }
  }
  check.covers = is_subset(dist.vertices(), covered);
  return check;
}

Colouring cover_to_colouring(const VertexSet& vertices, const SparseCover& cover) {
  Colouring out(std::max<int>(1, static_cast<int>(cover.collections.size())));
  for (VertexId v : vertices) {
    bool found = false;
    for (std::size_t i = 0; i < cover.collections.size() && !found; ++i) {
      for (const auto& set : cover.collections[i]) {
        if (contains(set, v)) {
          out.set(v, static_cast<Colour>(i + 1));
          found = true;
          break;
        }
      }
    }
    if (!found) throw Error("cover misses vertex " + std::to_string(v));
  }
  return out;
}

Length brute_force_optimal_d(const DistanceMatrix& dist, int m, const Rational& r,
                             std::size_t limit) {
  const std::size_t n = dist.size();
  if (n > limit) {
    throw Error("oracle limit exceeded: " + std::to_string(n) + " vertices > limit " +
                std::to_string(limit));
  }
  if (m < 1) throw Error("oracle needs m >= 1");
  if (n == 0) return Length(0);

  const Length radius(r);
  std::vector<std::vector<bool>> close(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) close[i][j] = dist.at(i, j) <= radius;
  }

  auto evaluate = [&](const std::vector<int>& colour) {
    DisjointSets sets(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (colour[i] == colour[j] && close[i][j]) sets.unite(i, j);
      }
    }
    Length worst(0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (sets.find(i) == sets.find(j) && dist.at(i, j) > worst) worst = dist.at(i, j);
      }
    }
    return worst;
  };

  // Restricted growth strings: vertex i uses a colour at most one above the
  // largest colour used before it, which fixes one representative per
  // permutation class (vertex 0 always gets colour 0).
  std::optional<Length> best;
  std::vector<int> colour(n, 0);
  std::vector<int> prefix_max(n, 0);
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (best && best->is_finite() && best->value() == 0) return;
    if (i == n) {
      Length value = evaluate(colour);
      if (!best || value < *best) best = value;
      return;
    }
    int upper = std::min(m - 1, prefix_max[i - 1] + 1);
    for (int c = 0; c <= upper; ++c) {
      colour[i] = c;
      prefix_max[i] = std::max(prefix_max[i - 1], c);
      assign(i + 1);
    }
  };
  colour[0] = 0;
  prefix_max[0] = 0;
  assign(1);
  return *best;
}

}  // namespace wdcolor
