/*
Copyright 2026 the skelbc authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skelbc/all_pairs.hpp"
#include "skelbc/brandes.hpp"
#include "skelbc/driver.hpp"
#include "skelbc/generate.hpp"
#include "skelbc/oracle.hpp"
#include "skelbc/partition.hpp"
#include "skelbc/skeleton.hpp"

namespace {

using namespace skelbc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

// Flag-combination problems, distinct from bad data in otherwise valid runs.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonFlags {
  std::string graph_path;
  std::string targets_path;
  std::string partition_path;
  std::int32_t auto_partition = 0;
  std::uint64_t seed = 1;
  double eps = kDefaultEps;
  int threads = 0;
  bool unordered = false;
  std::string out_path;
};

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return Graph::load_edge_list(in);
}

NodeSet load_targets_file(const std::string& path, const Graph& graph) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open targets file '" + path + "'");
  return NodeSet::load(in, graph);
}

Partition resolve_partition(const CommonFlags& flags, const Graph& graph) {
  if (!flags.partition_path.empty()) {
    std::ifstream in(flags.partition_path);
    if (!in)
      throw std::runtime_error("cannot open partition file '" + flags.partition_path + "'");
    return load_partition(in, graph);
  }
  if (flags.auto_partition > 0)
    return bfs_balanced_partition(graph, flags.auto_partition, flags.seed);
  throw UsageError("either --partition or --auto-partition is required");
}

std::string format_score(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%#.10g", x);
  return buf;
}

void write_scores(const Graph& graph, const CentralityVector& centrality,
                  bool unordered, const std::string& out_path) {
  std::vector<node_id> order(graph.node_count());
  for (node_id v = 0; v < graph.node_count(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](node_id a, node_id b) {
    return graph.label(a) < graph.label(b);
  });
  std::ostringstream body;
  body << "node,centrality\n";
  for (node_id v : order) {
    const double score = unordered ? centrality.score[v] * 0.5 : centrality.score[v];
    body << graph.label(v) << ',' << format_score(score) << '\n';
  }
  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
    out << body.str();
  }
}

void report_phase(const char* phase, double seconds) {
  std::fprintf(stderr, "%s,%.6f\n", phase, seconds);
}

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_targets,
                bool with_partition, bool with_threads = true) {
  cmd->add_option("--graph", flags.graph_path, "edge-list file (u v [w] lines)")
      ->required();
  if (with_targets)
    cmd->add_option("--targets", flags.targets_path, "target node file")->required();
  if (with_partition) {
    auto* part = cmd->add_option("--partition", flags.partition_path,
                                 "partition file (node part lines)");
    auto* autop = cmd->add_option("--auto-partition", flags.auto_partition,
                                  "build a BFS partition with this many parts");
    part->excludes(autop);
    cmd->add_option("--seed", flags.seed, "seed for --auto-partition");
  }
  cmd->add_option("--epsilon", flags.eps, "distance-equality tolerance");
  if (with_threads) cmd->add_option("--threads", flags.threads, "worker count (0 = all)");
  cmd->add_flag("--unordered-pairs", flags.unordered,
                "report half of the ordered-pair score");
  cmd->add_option("--out", flags.out_path, "write CSV here instead of stdout");
}

int run_exact(const CommonFlags& flags) {
  Graph graph = load_graph_file(flags.graph_path);
  NodeSet targets = load_targets_file(flags.targets_path, graph);
  Options options{flags.eps, flags.threads};
  const auto start = std::chrono::steady_clock::now();
  CentralityVector centrality = brandes(graph, targets, options);
  report_phase("total",
               std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                   .count());
  write_scores(graph, centrality, flags.unordered, flags.out_path);
  return kExitOk;
}

int run_skeleton(const CommonFlags& flags, const std::string& dump_path) {
  Graph graph = load_graph_file(flags.graph_path);
  NodeSet targets = load_targets_file(flags.targets_path, graph);
  Partition partition = resolve_partition(flags, graph);
  Options options{flags.eps, flags.threads};
  PhaseTimes times;
  CentralityVector centrality =
      betweenness_via_skeleton(graph, partition, targets, options, &times);
  if (!dump_path.empty()) {
    Partition refined = refine_with_targets(partition, targets);
    Skeleton skeleton = build_skeleton(graph, refined, targets, options);
    std::ofstream out(dump_path);
    if (!out) throw std::runtime_error("cannot open dump file '" + dump_path + "'");
    skeleton.dump(out, graph);
  }
  report_phase("build_sk", times.build_largest);
  report_phase("brandes_sk", times.brandes_sk);
  report_phase("finish", times.finish);
  report_phase("total", times.total);
  write_scores(graph, centrality, flags.unordered, flags.out_path);
  return kExitOk;
}

int run_all(const CommonFlags& flags) {
  Graph graph = load_graph_file(flags.graph_path);
  Partition partition = resolve_partition(flags, graph);
  Options options{flags.eps, flags.threads};
  PhaseTimes times;
  CentralityVector centrality = all_pairs_betweenness(graph, partition, options, &times);
  report_phase("build_sk", times.build_largest);
  report_phase("brandes_sk", times.brandes_sk);
  report_phase("finish", times.finish);
  report_phase("total", times.total);
  write_scores(graph, centrality, flags.unordered, flags.out_path);
  return kExitOk;
}

int run_oracle(const CommonFlags& flags) {
  Graph graph = load_graph_file(flags.graph_path);
  NodeSet targets = load_targets_file(flags.targets_path, graph);
  if (targets.size() < 2)
    throw std::runtime_error("target set must contain at least 2 nodes");
  const auto start = std::chrono::steady_clock::now();
  CentralityVector centrality = oracle_betweenness(graph, targets, flags.eps);
  report_phase("total",
               std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                   .count());
  write_scores(graph, centrality, flags.unordered, flags.out_path);
  return kExitOk;
}

int run_partition_cmd(const std::string& graph_path, std::int32_t parts,
                      std::uint64_t seed, const std::string& out_path) {
  Graph graph = load_graph_file(graph_path);
  Partition partition = bfs_balanced_partition(graph, parts, seed);
  std::ostringstream body;
  for (node_id v = 0; v < graph.node_count(); ++v)
    body << graph.label(v) << ' ' << partition.part_of[v] << '\n';
  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
    out << body.str();
  }
  return kExitOk;
}

struct GenFlags {
  std::string type;
  std::int32_t nodes = 0;
  double p = 0.0;
  std::int32_t communities = 0;
  std::int32_t community_size = 0;
  double p_in = 0.0;
  double p_out = 0.0;
  std::int32_t wmin = 1;
  std::int32_t wmax = 1;
  std::uint64_t seed = 1;
  std::string out_path;
  std::string emit_partition;
  std::int32_t emit_targets = 0;
  std::string targets_out;
};

int run_gen(const GenFlags& flags) {
  GeneratedGraph generated = [&] {
    if (flags.type == "planted")
      return gen_planted_partition(flags.communities, flags.community_size, flags.p_in,
                                   flags.p_out, flags.seed, flags.wmin, flags.wmax);
    if (flags.type == "erdos-renyi")
      return gen_erdos_renyi(flags.nodes, flags.p, flags.seed, flags.wmin, flags.wmax);
    if (flags.type == "path") return gen_path(flags.nodes);
    if (flags.type == "cycle") return gen_cycle(flags.nodes);
    if (flags.type == "star") return gen_star(flags.nodes);
    throw std::runtime_error("unknown generator '" + flags.type + "'");
  }();
  const Graph& graph = generated.graph;

  std::ostringstream body;
  graph.write_edge_list(body);
  if (flags.out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(flags.out_path);
    if (!out)
      throw std::runtime_error("cannot open output file '" + flags.out_path + "'");
    out << body.str();
  }

  if (!flags.emit_partition.empty()) {
    std::ofstream out(flags.emit_partition);
    if (!out)
      throw std::runtime_error("cannot open partition file '" + flags.emit_partition + "'");
    // Isolated nodes are absent from the edge list, so they must be absent
    // here too or the partition would not load back.
    for (node_id v = 0; v < graph.node_count(); ++v)
      if (graph.degree(v) > 0)
        out << graph.label(v) << ' ' << generated.partition.part_of[v] << '\n';
  }
  if (flags.emit_targets > 0) {
    if (flags.targets_out.empty())
      throw UsageError("--emit-targets needs --targets-out PATH");
    std::ofstream out(flags.targets_out);
    if (!out)
      throw std::runtime_error("cannot open targets file '" + flags.targets_out + "'");
    for (node_id v : sample_targets(graph, flags.emit_targets, flags.seed + 1))
      out << graph.label(v) << '\n';
  }
  return kExitOk;
}

struct BenchFlags {
  std::string graph_path;
  std::vector<std::string> partition_paths;
  std::int32_t auto_partition = 0;
  std::string targets_path;
  int reps = 3;
  double eps = kDefaultEps;
  int threads = 0;
  std::uint64_t seed = 1;
};

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

int run_bench(const BenchFlags& flags) {
  Graph graph = load_graph_file(flags.graph_path);
  NodeSet targets = load_targets_file(flags.targets_path, graph);
  Options options{flags.eps, flags.threads};
  if (flags.reps < 1) throw std::runtime_error("--reps must be at least 1");

  struct Entry {
    std::string name;
    std::vector<double> walls;
    PhaseTimes phases;  // from the fastest repetition
  };

  Entry baseline{"brandes", {}, {}};
  for (int r = 0; r < flags.reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    [[maybe_unused]] CentralityVector c = brandes(graph, targets, options);
    baseline.walls.push_back(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }

  std::vector<Entry> entries;
  std::vector<std::pair<std::string, Partition>> partitions;
  if (flags.partition_paths.empty() && flags.auto_partition > 0) {
    partitions.emplace_back("auto-" + std::to_string(flags.auto_partition),
                            bfs_balanced_partition(graph, flags.auto_partition, flags.seed));
  }
  for (const auto& path : flags.partition_paths) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open partition file '" + path + "'");
    partitions.emplace_back(path, load_partition(in, graph));
  }
  if (partitions.empty())
    throw UsageError("bench needs --partition or --auto-partition");

  for (auto& [name, partition] : partitions) {
    Entry entry{name, {}, {}};
    double best = kInf;
    for (int r = 0; r < flags.reps; ++r) {
      PhaseTimes times;
      CentralityVector c =
          betweenness_via_skeleton(graph, partition, targets, options, &times);
      entry.walls.push_back(times.total);
      if (times.total < best) {
        best = times.total;
        entry.phases = times;
      }
    }
    entries.push_back(std::move(entry));
  }

  const double base_min = *std::min_element(baseline.walls.begin(), baseline.walls.end());
  std::printf("algorithm,partition,wall_min,wall_median,build_sk,brandes_sk,finish,speedup\n");
  std::printf("brandes,-,%.6f,%.6f,-,-,-,1.00\n", base_min, median(baseline.walls));
  for (const auto& entry : entries) {
    const double wall_min = *std::min_element(entry.walls.begin(), entry.walls.end());
    std::printf("skeleton,%s,%.6f,%.6f,%.6f,%.6f,%.6f,%.2f\n", entry.name.c_str(),
                wall_min, median(entry.walls), entry.phases.build_largest,
                entry.phases.brandes_sk, entry.phases.finish, base_min / wall_min);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact betweenness centrality via graph partitioning"};
  app.require_subcommand(1);

  CommonFlags exact_flags, skeleton_flags, all_flags, oracle_flags;
  std::string dump_path;

  CLI::App* exact = app.add_subcommand("exact", "baseline exact betweenness");
  add_common(exact, exact_flags, /*targets=*/true, /*partition=*/false);

  CLI::App* skeleton =
      app.add_subcommand("skeleton", "divide-and-conquer exact betweenness");
  add_common(skeleton, skeleton_flags, /*targets=*/true, /*partition=*/true);
  skeleton->add_option("--dump-skeleton", dump_path,
                       "also write the skeleton as 'f q dist mult' lines");

  CLI::App* all = app.add_subcommand("all", "all-pairs exact betweenness");
  add_common(all, all_flags, /*targets=*/false, /*partition=*/true);

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force reference (n <= 200)");
  add_common(oracle, oracle_flags, /*targets=*/true, /*partition=*/false,
             /*threads=*/false);

  std::string part_graph, part_out;
  std::int32_t part_count = 0;
  std::uint64_t part_seed = 1;
  CLI::App* partition_cmd =
      app.add_subcommand("partition", "write a BFS-grown balanced partition");
  partition_cmd->add_option("--graph", part_graph)->required();
  partition_cmd->add_option("--parts", part_count, "number of parts")->required();
  partition_cmd->add_option("--seed", part_seed);
  partition_cmd->add_option("--out", part_out);

  GenFlags gen_flags;
  CLI::App* gen = app.add_subcommand("gen", "generate a synthetic graph");
  gen->add_option("--type", gen_flags.type,
                  "planted | erdos-renyi | path | cycle | star")
      ->required()
      ->check(CLI::IsMember({"planted", "erdos-renyi", "path", "cycle", "star"}));
  gen->add_option("--nodes", gen_flags.nodes, "node count (or leaves for star)");
  gen->add_option("--p", gen_flags.p, "edge probability (erdos-renyi)");
  gen->add_option("--communities", gen_flags.communities);
  gen->add_option("--community-size", gen_flags.community_size);
  gen->add_option("--p-in", gen_flags.p_in);
  gen->add_option("--p-out", gen_flags.p_out);
  gen->add_option("--wmin", gen_flags.wmin, "integer weight lower bound");
  gen->add_option("--wmax", gen_flags.wmax, "integer weight upper bound");
  gen->add_option("--seed", gen_flags.seed);
  gen->add_option("--out", gen_flags.out_path);
  gen->add_option("--emit-partition", gen_flags.emit_partition,
                  "also write the generating partition");
  gen->add_option("--emit-targets", gen_flags.emit_targets,
                  "also sample this many targets");
  gen->add_option("--targets-out", gen_flags.targets_out);

  BenchFlags bench_flags;
  CLI::App* bench = app.add_subcommand("bench", "compare baseline vs skeleton timing");
  bench->add_option("--graph", bench_flags.graph_path)->required();
  bench->add_option("--targets", bench_flags.targets_path)->required();
  bench->add_option("--partition", bench_flags.partition_paths);
  bench->add_option("--auto-partition", bench_flags.auto_partition);
  bench->add_option("--reps", bench_flags.reps);
  bench->add_option("--epsilon", bench_flags.eps);
  bench->add_option("--threads", bench_flags.threads);
  bench->add_option("--seed", bench_flags.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (exact->parsed()) return run_exact(exact_flags);
    if (skeleton->parsed()) return run_skeleton(skeleton_flags, dump_path);
    if (all->parsed()) return run_all(all_flags);
    if (oracle->parsed()) return run_oracle(oracle_flags);
    if (partition_cmd->parsed())
      return run_partition_cmd(part_graph, part_count, part_seed, part_out);
    if (gen->parsed()) return run_gen(gen_flags);
    if (bench->parsed()) return run_bench(bench_flags);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitData;
  }
  return kExitUsage;
}
