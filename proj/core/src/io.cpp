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

#include "wdcolor/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace wdcolor {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Nonblank lines split on whitespace, skipping those starting with `comment`.
std::vector<Line> tokenize(std::istream& in, char comment, std::vector<std::string>* comments) {
  std::vector<Line> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    std::istringstream words(text);
    Line line{number, {}};
    std::string w;
    while (words >> w) line.tokens.push_back(w);
    if (line.tokens.empty()) continue;
    if (line.tokens[0][0] == comment) {
      if (comments) comments->push_back(text);
      continue;
    }
    out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void bad_line(const Line& line, const std::string& why) {
  throw Error("line " + std::to_string(line.number) + ": " + why);
}

std::uint64_t parse_id(const Line& line, const std::string& text) {
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    bad_line(line, "expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

VertexSet parse_ids(const Line& line, std::size_t from) {
  std::vector<VertexId> ids;
  for (std::size_t i = from; i < line.tokens.size(); ++i) {
    ids.push_back(parse_id(line, line.tokens[i]));
  }
  VertexSet set = make_vertex_set(ids);
  if (set.size() != ids.size()) bad_line(line, "repeated vertex");
  return set;
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n) {
    bad_line(line, "expected " + std::to_string(n) + " fields, got " +
                       std::to_string(line.tokens.size()));
  }
}

// Runs `body`, rethrowing library errors with the line number attached.
template <typename F>
void at_line(const Line& line, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    bad_line(line, e.what());
  } catch (const std::invalid_argument& e) {
    bad_line(line, e.what());
  }
}

void write_ids(std::ostream& out, const VertexSet& ids) {
  for (VertexId v : ids) out << ' ' << v;
}

}  // namespace

WeightedGraph read_graph(std::istream& in) {
  WeightedGraph g;
  for (const Line& line : tokenize(in, '#', nullptr)) {
    const std::string& tag = line.tokens[0];
    if (tag == "v") {
      expect_arity(line, 2);
      g.add_vertex(parse_id(line, line.tokens[1]));
    } else if (tag == "e") {
      expect_arity(line, 4);
      VertexId u = parse_id(line, line.tokens[1]);
      VertexId v = parse_id(line, line.tokens[2]);
      at_line(line, [&] { g.add_edge(u, v, parse_length(line.tokens[3])); });
    } else {
      bad_line(line, "unknown record '" + tag + "'");
    }
  }
  return g;
}

void write_graph(std::ostream& out, const WeightedGraph& graph) {
  out << "# vertices " << graph.num_vertices() << " edges " << graph.num_edges() << '\n';
  for (VertexId v : graph.vertices()) out << "v " << v << '\n';
  for (const Edge& e : graph.edges()) {
    out << "e " << e.u << ' ' << e.v << ' ' << to_string(e.weight) << '\n';
  }
}

Colouring read_colouring(std::istream& in) {
  std::vector<std::string> comments;
  std::vector<Line> lines = tokenize(in, '#', &comments);
  int declared = 0;
  for (const std::string& text : comments) {
    std::istringstream words(text);
    std::string hash, key;
    int m = 0;
    if (words >> hash >> key >> m && hash == "#" && key == "colours") declared = m;
  }
  Colouring c;
  int largest = 1;
  std::vector<std::pair<VertexId, Colour>> entries;
  for (const Line& line : lines) {
    expect_arity(line, 2);
    VertexId v = parse_id(line, line.tokens[0]);
    std::uint64_t colour = parse_id(line, line.tokens[1]);
    if (colour < 1 || colour > 1000000) bad_line(line, "colour out of range");
    if (c.has(v)) bad_line(line, "vertex " + std::to_string(v) + " coloured twice");
    largest = std::max(largest, static_cast<int>(colour));
    if (declared > 0 && static_cast<int>(colour) > declared) {
      bad_line(line, "colour exceeds the declared " + std::to_string(declared));
    }
    c.set_num_colours(std::max(largest, declared));
    c.set(v, static_cast<Colour>(colour));
  }
  c.set_num_colours(std::max(largest, declared));
  return c;
}

void write_colouring(std::ostream& out, const Colouring& colouring) {
  out << "# colours " << colouring.num_colours() << '\n';
  for (const auto& [v, colour] : colouring.assignment()) out << v << ' ' << colour << '\n';
}

TreeDecomposition read_decomposition(std::istream& in) {
  std::vector<Line> lines = tokenize(in, 'c', nullptr);
  if (lines.empty() || lines[0].tokens[0] != "s") {
    throw Error("decomposition must start with an 's td' header");
  }
  const Line& header = lines[0];
  expect_arity(header, 5);
  if (header.tokens[1] != "td") bad_line(header, "expected 's td'");
  const std::uint64_t num_bags = parse_id(header, header.tokens[2]);
  const std::uint64_t max_bag = parse_id(header, header.tokens[3]);
  TreeDecomposition td;
  std::uint64_t largest = 0;
  std::vector<const Line*> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] == "b") {
      if (line.tokens.size() < 2) bad_line(line, "bag line needs an id");
      NodeId t = parse_id(line, line.tokens[1]);
      VertexSet bag = parse_ids(line, 2);
      largest = std::max<std::uint64_t>(largest, bag.size());
      at_line(line, [&] { td.add_node(t, std::move(bag)); });
    } else if (line.tokens[0] == "s") {
      bad_line(line, "second header");
    } else {
      expect_arity(line, 2);
      edges.push_back(&line);
    }
  }
  for (const Line* line : edges) {
    NodeId a = parse_id(*line, line->tokens[0]);
    NodeId b = parse_id(*line, line->tokens[1]);
    at_line(*line, [&] { td.add_edge(a, b); });
  }
  if (td.num_nodes() != num_bags) {
    bad_line(header, "header declares " + std::to_string(num_bags) + " bags, found " +
                         std::to_string(td.num_nodes()));
  }
  if (largest > max_bag) bad_line(header, "a bag exceeds the declared maximum size");
  return td;
}

void write_decomposition(std::ostream& out, const TreeDecomposition& td) {
  std::set<VertexId> seen;
  std::size_t largest = 0;
  for (const auto& [t, bag] : td.bags()) {
    seen.insert(bag.begin(), bag.end());
    largest = std::max(largest, bag.size());
  }
  out << "s td " << td.num_nodes() << ' ' << largest << ' ' << seen.size() << '\n';
  for (const auto& [t, bag] : td.bags()) {
    out << "b " << t;
    write_ids(out, bag);
    out << '\n';
  }
  for (const auto& [a, b] : td.edges()) out << a << ' ' << b << '\n';
}

Partition read_partition(std::istream& in) {
  Partition p;
  for (const Line& line : tokenize(in, '#', nullptr)) {
    if (line.tokens[0] != "p" || line.tokens.size() < 3) bad_line(line, "expected 'p <id> <v...>'");
    VertexId id = parse_id(line, line.tokens[1]);
    VertexSet part = parse_ids(line, 2);
    at_line(line, [&] { p.add_part(id, std::move(part)); });
  }
  return p;
}

void write_partition(std::ostream& out, const Partition& partition) {
  for (const auto& [id, part] : partition.parts()) {
    out << "p " << id;
    write_ids(out, part);
    out << '\n';
  }
}

MinorModel read_model(std::istream& in) {
  MinorModel model;
  for (const Line& line : tokenize(in, '#', nullptr)) {
    if (line.tokens[0] == "p") {
      if (line.tokens.size() < 3) bad_line(line, "expected 'p <id> <v...>'");
      VertexId id = parse_id(line, line.tokens[1]);
      if (!model.parts.emplace(id, parse_ids(line, 2)).second) bad_line(line, "repeated part id");
    } else if (line.tokens[0] == "map") {
      expect_arity(line, 3);
      VertexId id = parse_id(line, line.tokens[1]);
      if (!model.map.emplace(id, parse_id(line, line.tokens[2])).second) {
        bad_line(line, "part mapped twice");
      }
    } else {
      bad_line(line, "unknown record '" + line.tokens[0] + "'");
    }
  }
  return model;
}

void write_model(std::ostream& out, const MinorModel& model) {
  for (const auto& [id, part] : model.parts) {
    out << "p " << id;
    write_ids(out, part);
    out << '\n';
  }
  for (const auto& [id, x] : model.map) out << "map " << id << ' ' << x << '\n';
}

void write_component_csv(std::ostream& out, const ComponentReport& report) {
  out << "component_id,color,size,weak_diameter\n";
  for (std::size_t i = 0; i < report.components.size(); ++i) {
    const Component& c = report.components[i];
    out << i << ',' << c.colour << ',' << c.vertices.size() << ',' << to_string(c.weak_diameter)
        << '\n';
  }
}

void write_component_report(std::ostream& out, const ComponentReport& report, const Rational& r,
                            const Length& d, bool pass) {
  out << "r: " << to_string(r) << '\n'
      << "d: " << to_string(d) << '\n'
      << "components: " << report.components.size() << '\n'
      << "max_weak_diameter: " << to_string(report.max_weak_diameter) << '\n'
      << "result: " << (pass ? "pass" : "fail") << '\n';
  for (std::size_t i = 0; i < report.components.size(); ++i) {
    const Component& c = report.components[i];
    out << "component " << i << " colour " << c.colour << " diameter "
        << to_string(c.weak_diameter) << " vertices";
    write_ids(out, c.vertices);
    out << '\n';
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("cannot move " + tmp.string() + " into place: " + ec.message());
}

}  // namespace wdcolor
