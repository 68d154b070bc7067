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

// Command-line front end: generators, colouring pipelines, verification,
// the brute-force oracle, benchmarks and reductions. Exit codes are 0 on
// success, 1 when a verification fails and 2 on bad input or a violated
// precondition.

#ifndef WDCOLOR_TOOLS_CLI_HPP_
#define WDCOLOR_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wdcolor/colouring.hpp"

namespace wdcolor::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kBadInput = 2;

struct RunConfig {
  std::string command;
  std::string graph;
  std::string td;
  std::string partition;
  std::string model;
  std::string host;
  std::string colouring;
  std::string out;
  std::string out_dir;
  std::vector<std::string> r;
  std::string d;
  std::string ell;
  std::string epsilon = "1/2";
  std::string density = "1/2";
  std::string kind;
  std::string pipeline = "treewidth";
  std::string family = "tree";
  std::string mode = "fast";
  int k = -1;  // -1: read off the decomposition
  int m = 2;
  int n = 10;
  int n_max = -1;
  int n_step = 10;
  int dim = 2;
  std::uint64_t root = 0;
  std::uint64_t seed = 1;
  int limit = -1;  // -1: the command's default
};

int cmd_gen(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_color(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_reduce(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (argv[0] is the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wdcolor::cli

#endif  // WDCOLOR_TOOLS_CLI_HPP_
