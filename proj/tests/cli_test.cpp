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

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "instances.hpp"
#include "wdcolor/io.hpp"

namespace wdcolor {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "wdcolor");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("wdcolor_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string put_graph(const std::string& name, const WeightedGraph& g) const {
    std::ostringstream text;
    write_graph(text, g);
    write_file_atomic(path(name), text.str());
    return path(name);
  }

  WeightedGraph graph_at(const std::string& p) const {
    std::istringstream in(read_file(p));
    return read_graph(in);
  }

  fs::path dir_;
};

TEST_F(CliTest, GenGridAndTree) {
  Outcome grid = run({"gen", "--kind", "grid", "--dim", "2", "--n", "3", "--out", path("g.txt")});
  ASSERT_EQ(grid.code, cli::kOk) << grid.err;
  WeightedGraph g = graph_at(path("g.txt"));
  EXPECT_EQ(g.num_vertices(), 9u);
  EXPECT_EQ(g.num_edges(), 12u);

  Outcome tree = run({"gen", "--kind", "tree", "--n", "1"});
  ASSERT_EQ(tree.code, cli::kOk);
  std::istringstream in(tree.out);
  EXPECT_EQ(read_graph(in).num_vertices(), 1u);

  EXPECT_EQ(run({"gen", "--kind", "moebius"}).code, cli::kBadInput);
  EXPECT_EQ(run({"gen"}).code, cli::kBadInput);
}

TEST_F(CliTest, GenSubdivideDelegates) {
  WeightedGraph g = testing::make_graph({{0, 1, Length(3)}, {1, 2, Length(1)}});
  std::string in = put_graph("w.txt", g);
  Outcome res = run({"gen", "--kind", "subdivide", "--graph", in, "--out", path("b.txt")});
  ASSERT_EQ(res.code, cli::kOk) << res.err;
  EXPECT_EQ(graph_at(path("b.txt")), subdivision_blowup(g).graph);
}

TEST_F(CliTest, ColorTreeThenVerify) {
  ASSERT_EQ(run({"gen", "--kind", "tree", "--n", "30", "--seed", "5", "--out", path("t.txt"),
                 "--td", path("t.td")})
                .code,
            cli::kOk);
  Outcome color = run({"color", "--graph", path("t.txt"), "--td", path("t.td"), "--r", "1",
                       "--r", "5/2", "--out-dir", path("out"), "--mode", "test"});
  ASSERT_EQ(color.code, cli::kOk) << color.err;
  std::string cert = read_file(path("out/certificate_r1.txt"));
  EXPECT_NE(cert.find("certified_d: 1180\n"), std::string::npos);
  EXPECT_NE(cert.find("verified: pass"), std::string::npos);
  EXPECT_NE(read_file(path("out/certificate_r5_2.txt")).find("certified_d: 2950\n"),
            std::string::npos);
  Outcome verify = run({"verify", "--graph", path("t.txt"), "--colouring",
                        path("out/colouring_r1.txt"), "--r", "1", "--d", "1180"});
  EXPECT_EQ(verify.code, cli::kOk) << verify.err;
  EXPECT_EQ(verify.out.rfind("component_id,color,size,weak_diameter\n", 0), 0u);
}

TEST_F(CliTest, ColorErrors) {
  std::string big = put_graph("p.txt", testing::unit_path(20));
  Outcome no_td = run({"color", "--graph", big, "--r", "1", "--out-dir", path("o")});
  EXPECT_EQ(no_td.code, cli::kBadInput);
  EXPECT_NE(no_td.err.find("limit"), std::string::npos);

  ASSERT_EQ(run({"gen", "--kind", "grid", "--n", "4", "--out", path("g.txt"), "--td",
                 path("g.td"), "--partition", path("g.part")})
                .code,
            cli::kOk);
  Outcome below = run({"color", "--graph", path("g.txt"), "--pipeline", "partition", "--partition",
                       path("g.part"), "--td", path("g.td"), "--ell", "3", "--r", "2",
                       "--out-dir", path("o")});
  EXPECT_EQ(below.code, cli::kBadInput);
  EXPECT_NE(below.err.find("ell-almost"), std::string::npos);

  Outcome ok = run({"color", "--graph", path("g.txt"), "--pipeline", "partition", "--partition",
                    path("g.part"), "--td", path("g.td"), "--ell", "3", "--r", "3", "--out-dir",
                    path("o")});
  EXPECT_EQ(ok.code, cli::kOk) << ok.err;
  EXPECT_EQ(run({"color", "--graph", path("missing.txt"), "--r", "1"}).code, cli::kBadInput);
}

TEST_F(CliTest, VerifyExitCodes) {
  std::string g = put_graph("p.txt", testing::unit_path(3));
  write_file_atomic(path("c.txt"), "# colours 2\n0 1\n1 1\n2 2\n");
  EXPECT_EQ(run({"verify", "--graph", g, "--colouring", path("c.txt"), "--r", "1", "--d", "1"}).code,
            cli::kOk);
  EXPECT_EQ(run({"verify", "--graph", g, "--colouring", path("c.txt"), "--r", "1", "--d", "0"}).code,
            cli::kVerifyFailed);
  EXPECT_EQ(run({"verify", "--graph", g, "--colouring", path("c.txt"), "--r", "0", "--d", "1"}).code,
            cli::kBadInput);
}

TEST_F(CliTest, Oracle) {
  std::string p3 = put_graph("p3.txt", testing::unit_path(3));
  Outcome two = run({"oracle", "--graph", p3, "--m", "2", "--r", "1"});
  ASSERT_EQ(two.code, cli::kOk) << two.err;
  EXPECT_EQ(two.out, "0\n");
  Outcome one = run({"oracle", "--graph", p3, "--m", "1", "--r", "1"});
  EXPECT_EQ(one.out, "2\n");
  std::string big = put_graph("p.txt", testing::unit_path(10));
  Outcome refused = run({"oracle", "--graph", big, "--m", "2", "--r", "1"});
  EXPECT_EQ(refused.code, cli::kBadInput);
  EXPECT_NE(refused.err.find("limit"), std::string::npos);
}

TEST_F(CliTest, BenchTrees) {
  Outcome res = run({"bench", "--family", "tree", "--seed", "3"});
  ASSERT_EQ(res.code, cli::kOk) << res.err;
  std::istringstream in(res.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "instance,r,certified_d,achieved_d,oracle_d");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> cells;
    std::stringstream fields(line);
    for (std::string cell; std::getline(fields, cell, ',');) cells.push_back(cell);
    ASSERT_GE(cells.size(), 4u);
    Rational r = parse_rational(cells[1]);
    Rational certified = parse_rational(cells[2]);
    EXPECT_LE(parse_rational(cells[3]), certified);
    EXPECT_EQ(certified / r, 1180);
  }
  EXPECT_EQ(rows, 15);
}

TEST_F(CliTest, Reduce) {
  WeightedGraph h = testing::unit_path(3);
  Blowup blowup = subdivision_blowup(testing::make_graph({{0, 1, Length(2)}, {1, 2, Length(2)}}));
  std::ostringstream model;
  write_model(model, subdivision_model(h, blowup));
  write_file_atomic(path("m.txt"), model.str());
  Outcome res = run({"reduce", "--graph", put_graph("h.txt", h), "--host",
                     put_graph("g.txt", blowup.graph), "--model", path("m.txt"), "--out-dir",
                     path("o")});
  ASSERT_EQ(res.code, cli::kOk) << res.err;
  EXPECT_NE(res.out.find("alpha: 3/2"), std::string::npos);
  EXPECT_NE(res.out.find("scale: 4"), std::string::npos);
  EXPECT_NE(res.out.find("tight: pass"), std::string::npos);
  EXPECT_TRUE(fs::exists(path("o/blowup.txt")));
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
  for (int round = 0; round < 2; ++round) {
    std::string tag = std::to_string(round);
    ASSERT_EQ(run({"gen", "--kind", "random-connected", "--n", "9", "--seed", "11", "--out",
                   path("g" + tag + ".txt")})
                  .code,
              cli::kOk);
    ASSERT_EQ(run({"color", "--graph", path("g" + tag + ".txt"), "--r", "1", "--r", "2",
                   "--out-dir", path("o" + tag)})
                  .code,
              cli::kOk);
  }
  EXPECT_EQ(read_file(path("g0.txt")), read_file(path("g1.txt")));
  for (const char* f : {"colouring_r1.txt", "certificate_r1.txt", "colouring_r2.txt"}) {
    EXPECT_EQ(read_file(path(std::string("o0/") + f)), read_file(path(std::string("o1/") + f)));
  }
  EXPECT_EQ(run({"bench", "--family", "random-connected", "--n", "6", "--n-max", "9", "--n-step",
                 "3"})
                .out,
            run({"bench", "--family", "random-connected", "--n", "6", "--n-max", "9", "--n-step",
                 "3"})
                .out);
}

}  // namespace
}  // namespace wdcolor
