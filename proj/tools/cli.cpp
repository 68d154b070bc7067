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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "wdcolor/colorer.hpp"
#include "wdcolor/generators.hpp"
#include "wdcolor/io.hpp"
#include "wdcolor/reductions.hpp"

namespace wdcolor::cli {
namespace {

// Input or precondition problem; maps to exit code 2.
class Usage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kTreewidthLimit = 12;
constexpr int kOracleLimit = 9;

template <typename T, typename F>
T parse(const std::string& path, F reader) {
  std::istringstream in(read_file(path));
  return reader(in);
}

WeightedGraph load_graph(const std::string& path) {
  if (path.empty()) throw Usage("--graph is required");
  return parse<WeightedGraph>(path, read_graph);
}

TreeDecomposition load_td(const std::string& path) {
  return parse<TreeDecomposition>(path, read_decomposition);
}

Rational positive_rational(const std::string& text, const std::string& flag) {
  Rational value;
  try {
    value = parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw Usage(flag + ": " + e.what());
  }
  if (value <= 0) throw Usage(flag + " must be positive, got " + text);
  return value;
}

std::vector<Rational> r_list(const RunConfig& config) {
  if (config.r.empty()) throw Usage("at least one --r is required");
  std::vector<Rational> out;
  for (const std::string& text : config.r) out.push_back(positive_rational(text, "--r"));
  return out;
}

Mode parse_mode(const std::string& text) {
  if (text == "fast") return Mode::kFast;
  if (text == "test") return Mode::kTest;
  throw Usage("--mode must be fast or test, got " + text);
}

std::string tag(const Rational& r) {
  std::string s = to_string(r);
  for (char& c : s) {
    if (c == '/') c = '_';
  }
  return s;
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    write_file_atomic(path, content);
  }
}

template <typename Writer, typename T>
std::string render(Writer writer, const T& value) {
  std::ostringstream s;
  writer(s, value);
  return s.str();
}

int limit_or(const RunConfig& config, int fallback) {
  if (config.limit == -1) return fallback;
  if (config.limit < 1) throw Usage("--limit must be at least 1");
  return config.limit;
}

// Decomposition of `graph` from --td, or from the exact oracle.
TreeDecomposition decomposition_for(const RunConfig& config, const WeightedGraph& graph,
                                    const std::string& what) {
  if (!config.td.empty()) return load_td(config.td);
  const int limit = limit_or(config, kTreewidthLimit);
  if (graph.num_vertices() > static_cast<std::size_t>(limit)) {
    throw Usage("no --td given and the " + what + " has " +
                std::to_string(graph.num_vertices()) +
                " vertices, above the treewidth oracle limit " + std::to_string(limit));
  }
  return decomposition_from_order(graph, treewidth_exact(graph.shape(), limit).order);
}

long checked_width(const WeightedGraph& graph, const TreeDecomposition& td) {
  TdReport report = validate_td(graph, td);
  if (!report.valid) throw Usage("invalid decomposition: " + report.violation);
  return report.width;
}

Rational ell_for(const RunConfig& config, const WeightedGraph& graph, const Partition& p) {
  if (!config.ell.empty()) {
    Rational ell = parse_rational(config.ell);
    if (ell < 0) throw Usage("--ell must be non-negative");
    return ell;
  }
  Length radius(0);
  for (const auto& [id, part] : p.parts()) radius = std::max(radius, part_radius(graph, part));
  if (radius.is_infinite()) throw Usage("a part induces a disconnected subgraph");
  return radius.value();
}

void write_certificate(std::ostream& out, const std::string& pipeline, const ColourResult& res,
                       const Rational& r, const Rational& ell, const MrdResult& check) {
  out << "pipeline: " << pipeline << '\n'
      << "m: " << res.m << '\n'
      << "r: " << to_string(r) << '\n'
      << "certified_d: " << to_string(res.bound) << '\n'
      << "k: " << res.k << '\n'
      << "ell: " << to_string(ell) << '\n'
      << "achieved_d: " << to_string(check.report.max_weak_diameter) << '\n'
      << "verified: " << (check.pass ? "pass" : "fail") << '\n'
      << "# level g_prime g_star f_star f_sharp f\n";
  for (int i = 0; i <= res.ladder.top(); ++i) {
    const LadderLevel& l = res.ladder.at(i);
    out << "slope " << i << ' ' << to_string(l.g_prime) << ' ' << to_string(l.g_star) << ' '
        << to_string(l.f_star) << ' ' << to_string(l.f_sharp) << ' ' << to_string(l.f) << '\n';
  }
}

// A loaded pipeline: colours the graph at any admissible r.
struct Pipeline {
  std::string name;
  std::function<ColourResult(const Rational&)> colour;
  Rational ell;
};

Pipeline build_pipeline(const RunConfig& config, const WeightedGraph& graph,
                        const DistanceMatrix& dist, Mode mode) {
  Pipeline p;
  p.name = config.pipeline;
  if (config.pipeline == "treewidth") {
    auto td = std::make_shared<TreeDecomposition>(decomposition_for(config, graph, "graph"));
    long width = checked_width(graph, *td);
    int k = config.k >= 0 ? config.k : static_cast<int>(std::max(width, 1L));
    p.colour = [&graph, &dist, td, k, mode](const Rational& r) {
      return colour_bounded_treewidth(graph, dist, td.get(), k, r, mode);
    };
    return p;
  }
  if (config.pipeline != "partition" && config.pipeline != "strong") {
    throw Usage("--pipeline must be treewidth, partition or strong, got " + config.pipeline);
  }
  Partition partition;
  if (!config.partition.empty()) {
    partition = parse<Partition>(config.partition, read_partition);
  } else if (config.pipeline == "strong") {
    partition = singleton_partition(graph);
  } else {
    throw Usage("the partition pipeline needs --partition");
  }
  WeightedGraph q = quotient(graph, partition);
  auto td = std::make_shared<TreeDecomposition>(decomposition_for(config, q, "quotient"));
  long width = checked_width(q, *td);
  p.ell = ell_for(config, graph, partition);
  const Rational ell = p.ell;
  if (config.pipeline == "partition") {
    int k = config.k >= 0 ? config.k : static_cast<int>(std::max(width, 1L));
    auto shared = std::make_shared<Partition>(std::move(partition));
    p.colour = [&graph, &dist, shared, td, k, ell, mode](const Rational& r) {
      return colour_partitioned(graph, dist, *shared, *td, k, ell, r, mode);
    };
    return p;
  }
  auto sc = std::make_shared<StrongConstruction>(
      general_strong_construction(graph, partition, *td, ell));
  p.colour = [&graph, &dist, sc, mode](const Rational& r) {
    return strong_construction_colour(graph, dist, *sc, centred_base_colorer(sc->centres - 1, sc->ell),
                                      r, mode);
  };
  return p;
}

struct BenchInstance {
  std::string name;
  WeightedGraph graph;
  TreeDecomposition td;
  Rational scale{1};  // r multiplier (row pipelines need r >= ell)
  std::optional<Partition> partition;
};

BenchInstance bench_instance(const RunConfig& config, int n) {
  BenchInstance inst;
  const std::string suffix = "-n" + std::to_string(n) + "-s" + std::to_string(config.seed);
  Rng rng(config.seed + static_cast<std::uint64_t>(n));
  if (config.family == "tree") {
    inst.name = "tree" + suffix;
    inst.graph = random_tree(static_cast<std::size_t>(n), rng);
    inst.td = forest_decomposition(inst.graph);
  } else if (config.family == "random-connected") {
    if (n > kTreewidthLimit) throw Usage("random-connected bench is limited to 12 vertices");
    inst.name = "random-connected" + suffix;
    Rational density = parse_rational(config.density);
    inst.graph = random_connected_graph(static_cast<std::size_t>(n), density.get_num().get_ui(),
                                        density.get_den().get_ui(), rng);
    inst.td = decomposition_from_order(inst.graph, treewidth_exact(inst.graph).order);
  } else if (config.family == "grid") {
    inst.name = "grid-m" + std::to_string(n);
    inst.graph = grid_graph(2, n);
    inst.td = grid_row_decomposition(n);
    inst.partition = grid_row_partition(n);
    inst.scale = std::max(n - 1, 1);
  } else {
    throw Usage("--family must be tree, random-connected or grid, got " + config.family);
  }
  return inst;
}

int gen(const RunConfig& config, std::ostream& out) {
  WeightedGraph g;
  if (config.kind != "subdivide" && config.n < 1) throw Usage("--n must be at least 1");
  if (config.kind == "grid") {
    if (config.dim < 1) throw Usage("--dim must be at least 1");
    g = grid_graph(config.dim, config.n);
    if (!config.partition.empty() || !config.td.empty()) {
      if (config.dim != 2) throw Usage("row partitions exist for 2-dimensional grids only");
      if (!config.partition.empty()) {
        write_file_atomic(config.partition, render(write_partition, grid_row_partition(config.n)));
      }
      if (!config.td.empty()) {
        write_file_atomic(config.td, render(write_decomposition, grid_row_decomposition(config.n)));
      }
    }
  } else if (config.kind == "tree") {
    Rng rng(config.seed);
    g = random_tree(static_cast<std::size_t>(config.n), rng);
    if (!config.td.empty()) {
      write_file_atomic(config.td, render(write_decomposition, forest_decomposition(g)));
    }
  } else if (config.kind == "random-connected") {
    Rational density = parse_rational(config.density);
    if (density < 0 || density > 1) throw Usage("--density must lie in [0, 1]");
    Rng rng(config.seed);
    g = random_connected_graph(static_cast<std::size_t>(config.n), density.get_num().get_ui(),
                               density.get_den().get_ui(), rng);
    if (!config.td.empty()) {
      write_file_atomic(config.td,
                        render(write_decomposition, decomposition_for(RunConfig{}, g, "graph")));
    }
  } else if (config.kind == "subdivide") {
    g = subdivision_blowup(load_graph(config.graph)).graph;
  } else if (config.kind == "exp-grid") {
    g = exponential_grid_weighting(config.n, config.root);
  } else {
    throw Usage("--kind must be grid, tree, random-connected, subdivide or exp-grid");
  }
  emit(config.out, render(write_graph, g), out);
  return kOk;
}

int color(const RunConfig& config, std::ostream& out) {
  const WeightedGraph graph = load_graph(config.graph);
  const DistanceMatrix dist = all_pairs_distances(graph);
  const Mode mode = parse_mode(config.mode);
  const std::vector<Rational> rs = r_list(config);
  Pipeline pipeline = build_pipeline(config, graph, dist, mode);
  for (const Rational& r : rs) {
    if (r < pipeline.ell) {
      throw Usage("r=" + to_string(r) + " is below the ell-almost threshold ell=" +
                  to_string(pipeline.ell));
    }
  }
  const std::filesystem::path dir = config.out_dir.empty() ? "." : config.out_dir;
  std::filesystem::create_directories(dir);
  int status = kOk;
  out << "r,m,certified_d,achieved_d,verified\n";
  for (const Rational& r : rs) {
    ColourResult res = pipeline.colour(r);
    MrdResult check = verify_mrd(dist, res.colouring, r, res.bound);
    if (!check.pass) status = kVerifyFailed;
    write_file_atomic(dir / ("colouring_r" + tag(r) + ".txt"),
                      render(write_colouring, res.colouring));
    std::ostringstream cert;
    write_certificate(cert, pipeline.name, res, r, pipeline.ell, check);
    write_file_atomic(dir / ("certificate_r" + tag(r) + ".txt"), cert.str());
    out << to_string(r) << ',' << res.m << ',' << to_string(res.bound) << ','
        << to_string(check.report.max_weak_diameter) << ',' << (check.pass ? "pass" : "fail")
        << '\n';
  }
  return status;
}

int verify(const RunConfig& config, std::ostream& out) {
  const WeightedGraph graph = load_graph(config.graph);
  if (config.colouring.empty()) throw Usage("--colouring is required");
  const Colouring c = parse<Colouring>(config.colouring, read_colouring);
  if (config.r.size() != 1) throw Usage("verify takes exactly one --r");
  const Rational r = positive_rational(config.r[0], "--r");
  if (config.d.empty()) throw Usage("--d is required");
  Length d;
  try {
    d = parse_length(config.d);
  } catch (const std::invalid_argument& e) {
    throw Usage(std::string("--d: ") + e.what());
  }
  if (!c.covers(graph.vertices())) throw Usage("the colouring misses vertices of the graph");
  const DistanceMatrix dist = all_pairs_distances(graph);
  MrdResult result = verify_mrd(dist, c.restrict(graph.vertices()), r, d);
  emit(config.out, render(write_component_csv, result.report), out);
  if (!config.out.empty()) {
    write_component_report(out, result.report, r, d, result.pass);
  }
  return result.pass ? kOk : kVerifyFailed;
}

int oracle(const RunConfig& config, std::ostream& out) {
  const WeightedGraph graph = load_graph(config.graph);
  if (config.m < 1) throw Usage("--m must be at least 1");
  if (config.r.size() != 1) throw Usage("oracle takes exactly one --r");
  const Rational r = positive_rational(config.r[0], "--r");
  const int limit = limit_or(config, kOracleLimit);
  if (graph.num_vertices() > static_cast<std::size_t>(limit)) {
    throw Usage("graph has " + std::to_string(graph.num_vertices()) +
                " vertices, above the oracle limit " + std::to_string(limit));
  }
  const DistanceMatrix dist = all_pairs_distances(graph);
  out << to_string(brute_force_optimal_d(dist, config.m, r, static_cast<std::size_t>(limit)))
      << '\n';
  return kOk;
}

int bench(const RunConfig& config, std::ostream& out) {
  std::vector<std::string> defaults{"1", "2", "5"};
  RunConfig effective = config;
  if (effective.r.empty()) effective.r = defaults;
  const std::vector<Rational> rs = r_list(effective);
  const int n_max = config.n_max < 0 ? 50 : config.n_max;
  if (config.n < 1 || config.n_step < 1 || n_max < config.n) {
    throw Usage("need 1 <= --n <= --n-max and --n-step >= 1");
  }
  const Mode mode = parse_mode(config.mode);
  const int limit = limit_or(config, kOracleLimit);
  std::ostringstream csv;
  csv << "instance,r,certified_d,achieved_d,oracle_d\n";
  int status = kOk;
  for (int n = config.n; n <= n_max; n += config.n_step) {
    BenchInstance inst = bench_instance(config, n);
    const DistanceMatrix dist = all_pairs_distances(inst.graph);
    for (const Rational& base_r : rs) {
      const Rational r = base_r * inst.scale;
      ColourResult res;
      if (inst.partition) {
        res = colour_partitioned(inst.graph, dist, *inst.partition, inst.td, 1, inst.scale, r, mode);
      } else {
        long width = std::max(validate_td(inst.graph, inst.td).width, 1L);
        res = colour_bounded_treewidth(inst.graph, dist, &inst.td, static_cast<int>(width), r, mode);
      }
      ComponentReport report = monochromatic_components(dist, res.colouring, r);
      if (report.max_weak_diameter > res.bound) status = kVerifyFailed;
      csv << inst.name << ',' << to_string(r) << ',' << to_string(res.bound) << ','
          << to_string(report.max_weak_diameter) << ',';
      if (inst.graph.num_vertices() <= static_cast<std::size_t>(limit)) {
        csv << to_string(brute_force_optimal_d(dist, res.m, r, static_cast<std::size_t>(limit)));
      }
      csv << '\n';
    }
  }
  emit(config.out, csv.str(), out);
  return status;
}

int reduce(const RunConfig& config, std::ostream& out) {
  const WeightedGraph h = load_graph(config.graph);
  if (config.host.empty() || config.model.empty()) throw Usage("--host and --model are required");
  const WeightedGraph host = load_graph(config.host);
  const MinorModel model = parse<MinorModel>(config.model, read_model);
  const Rational epsilon = positive_rational(config.epsilon, "--epsilon");
  ModelReport check = verify_model(host, h, model);
  if (!check.pass) throw Usage("invalid model: " + check.violation);

  MinorWeighting weighting = minor_weighting(host, h, model, epsilon);
  Integerized integer = integerize(weighting.weighted);
  Blowup blowup = subdivision_blowup(integer.weighted);
  TightnessReport tight = is_tight(integer.weighted, blowup.graph);

  const std::filesystem::path dir = config.out_dir.empty() ? "." : config.out_dir;
  std::filesystem::create_directories(dir);
  write_file_atomic(dir / "weighted.txt", render(write_graph, weighting.weighted));
  write_file_atomic(dir / "integer.txt", render(write_graph, integer.weighted));
  write_file_atomic(dir / "blowup.txt", render(write_graph, blowup.graph));

  out << "alpha: " << to_string(weighting.map.alpha) << '\n'
      << "beta: " << to_string(weighting.map.beta) << '\n'
      << "scale: " << to_string(integer.scale) << '\n'
      << "blowup_vertices: " << blowup.graph.num_vertices() << '\n'
      << "sandwich: pass\n"
      << "tight: " << (tight.tight ? "pass" : "fail") << '\n';
  int status = tight.tight ? kOk : kVerifyFailed;
  if (config.r.empty()) return status;

  // Colour the blow-up and pull the colouring back to H. The composite map
  // scales distances by [scale, (1 + eps) scale].
  if (config.td.empty()) throw Usage("colouring through the reduction needs --td for the host");
  const TreeDecomposition td = extend_decomposition(integer.weighted, load_td(config.td), blowup);
  const long width = std::max(checked_width(blowup.graph, td), 1L);
  const DistanceMatrix dist_blow = all_pairs_distances(blowup.graph);
  const DistanceMatrix dist_h = all_pairs_distances(h);
  ScalingMap composite{weighting.map.iota, weighting.map.alpha * integer.scale, integer.scale};
  const Mode mode = parse_mode(config.mode);
  out << "r,blowup_r,certified_d,achieved_d,verified\n";
  for (const Rational& r : r_list(config)) {
    const Rational blow_r = composite.alpha * r;
    ColourResult res = colour_bounded_treewidth(blowup.graph, dist_blow, &td,
                                                static_cast<int>(width), blow_r, mode);
    CertifiedColouring c_h =
        pullback_colouring(dist_h, dist_blow, composite, res.colouring, res.bound, r, mode);
    MrdResult mrd = verify_mrd(dist_h, c_h.colouring, r, c_h.bound);
    if (!mrd.pass) status = kVerifyFailed;
    write_file_atomic(dir / ("colouring_r" + tag(r) + ".txt"), render(write_colouring, c_h.colouring));
    out << to_string(r) << ',' << to_string(blow_r) << ',' << to_string(c_h.bound) << ','
        << to_string(mrd.report.max_weak_diameter) << ',' << (mrd.pass ? "pass" : "fail") << '\n';
  }
  return status;
}

template <typename F>
int guarded(F body, std::ostream& err) {
  try {
    return body();
  } catch (const Usage& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kBadInput;
}

}  // namespace

int cmd_gen(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded([&] { return gen(config, out); }, err);
}
int cmd_color(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded([&] { return color(config, out); }, err);
}
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded([&] { return verify(config, out); }, err);
}
int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded([&] { return oracle(config, out); }, err);
}
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded([&] { return bench(config, out); }, err);
}
int cmd_reduce(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded([&] { return reduce(config, out); }, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Weak-diameter colourings of weighted graphs"};
  app.require_subcommand(1);

  auto add_graph = [&](CLI::App* sub) { sub->add_option("--graph", config.graph, "Graph file"); };
  auto add_r = [&](CLI::App* sub) {
    sub->add_option("--r", config.r, "Scale r (repeatable, integer or p/q)");
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", config.out, "Output file (default stdout)");
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", config.mode, "fast or test (interior re-verification)");
  };
  auto add_limit = [&](CLI::App* sub) {
    sub->add_option("--limit", config.limit, "Vertex limit for exact oracles");
  };

  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a graph");
  gen_cmd->add_option("--kind", config.kind, "grid, tree, random-connected, subdivide, exp-grid")
      ->required();
  gen_cmd->add_option("--n", config.n, "Vertices, or grid side");
  gen_cmd->add_option("--dim", config.dim, "Grid dimension");
  gen_cmd->add_option("--seed", config.seed, "Random seed");
  gen_cmd->add_option("--density", config.density, "Extra edge probability p/q");
  gen_cmd->add_option("--root", config.root, "Root of the exponential grid");
  gen_cmd->add_option("--td", config.td, "Also write a decomposition here");
  gen_cmd->add_option("--partition", config.partition, "Also write the grid row partition here");
  add_graph(gen_cmd);
  add_out(gen_cmd);

  CLI::App* color_cmd = app.add_subcommand("color", "Colour with a certified pipeline");
  add_graph(color_cmd);
  color_cmd->add_option("--td", config.td, "Decomposition of the graph or of its quotient");
  color_cmd->add_option("--partition", config.partition, "Partition file");
  color_cmd->add_option("--pipeline", config.pipeline, "treewidth, partition or strong");
  color_cmd->add_option("--k", config.k, "Width or adhesion bound");
  color_cmd->add_option("--ell", config.ell, "Part radius bound");
  color_cmd->add_option("--out-dir", config.out_dir, "Directory for colourings and certificates");
  add_r(color_cmd);
  add_mode(color_cmd);
  add_limit(color_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check an (m, r, d)-colouring");
  add_graph(verify_cmd);
  verify_cmd->add_option("--colouring,--coloring", config.colouring, "Colouring file");
  verify_cmd->add_option("--d", config.d, "Weak diameter bound");
  add_r(verify_cmd);
  add_out(verify_cmd);

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Brute-force optimal d");
  add_graph(oracle_cmd);
  oracle_cmd->add_option("--m", config.m, "Colours");
  add_r(oracle_cmd);
  add_limit(oracle_cmd);

  CLI::App* bench_cmd = app.add_subcommand("bench", "Benchmark a family, CSV output");
  bench_cmd->add_option("--family", config.family, "tree, random-connected or grid");
  bench_cmd->add_option("--n", config.n, "Smallest size");
  bench_cmd->add_option("--n-max", config.n_max, "Largest size (default 50)");
  bench_cmd->add_option("--n-step", config.n_step, "Size step");
  bench_cmd->add_option("--seed", config.seed, "Random seed");
  bench_cmd->add_option("--density", config.density, "Extra edge probability p/q");
  add_r(bench_cmd);
  add_mode(bench_cmd);
  add_limit(bench_cmd);
  add_out(bench_cmd);

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "Minor reweighting and subdivision chain");
  reduce_cmd->add_option("--graph", config.graph, "The minor H")->required();
  reduce_cmd->add_option("--host", config.host, "The host graph G");
  reduce_cmd->add_option("--model", config.model, "Minor model of H in G");
  reduce_cmd->add_option("--epsilon", config.epsilon, "Positive rational");
  reduce_cmd->add_option("--td", config.td, "Decomposition of the host, to colour through the chain");
  reduce_cmd->add_option("--out-dir", config.out_dir, "Output directory");
  add_r(reduce_cmd);
  add_mode(reduce_cmd);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  if (gen_cmd->parsed()) return cmd_gen(config, out, err);
  if (color_cmd->parsed()) return cmd_color(config, out, err);
  if (verify_cmd->parsed()) return cmd_verify(config, out, err);
  if (oracle_cmd->parsed()) return cmd_oracle(config, out, err);
  if (bench_cmd->parsed()) return cmd_bench(config, out, err);
  return cmd_reduce(config, out, err);
}

}  // namespace wdcolor::cli
