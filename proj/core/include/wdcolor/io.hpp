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

// Line-oriented text formats for graphs, colourings, decompositions,
// partitions and minor models, plus component reports. Every reader throws
// Error naming the offending line; read(write(x)) == x.

#ifndef WDCOLOR_IO_HPP_
#define WDCOLOR_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "wdcolor/colouring.hpp"
#include "wdcolor/decomposition.hpp"
#include "wdcolor/reductions.hpp"

namespace wdcolor {

// `# comment`, `v <id>`, `e <u> <v> <weight>` with weight an integer, p/q
// or inf. Every vertex is written with a `v` line.
WeightedGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const WeightedGraph& graph);

// `# colours <m>` header, then `<vertex> <colour>` lines. Without the header
// m is the largest colour used.
Colouring read_colouring(std::istream& in);
void write_colouring(std::ostream& out, const Colouring& colouring);

// `s td <bags> <max bag size> <vertices>`, `b <id> <v...>`, `<id> <id>`
// tree edges; `c` starts a comment.
TreeDecomposition read_decomposition(std::istream& in);
void write_decomposition(std::ostream& out, const TreeDecomposition& td);

// `p <part id> <v...>`, `#` comments.
Partition read_partition(std::istream& in);
void write_partition(std::ostream& out, const Partition& partition);

// `p <part id> <v...>` and `map <part id> <H vertex>` lines.
MinorModel read_model(std::istream& in);
void write_model(std::ostream& out, const MinorModel& model);

// component_id,color,size,weak_diameter with a header row.
void write_component_csv(std::ostream& out, const ComponentReport& report);
// Human-readable summary of a verification run.
void write_component_report(std::ostream& out, const ComponentReport& report, const Rational& r,
                            const Length& d, bool pass);

std::string read_file(const std::filesystem::path& path);
// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace wdcolor

#endif  // WDCOLOR_IO_HPP_
