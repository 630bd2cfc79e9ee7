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

#include "skelbc/all_pairs.hpp"

#include <chrono>
#include <stdexcept>

#include "skelbc/finish.hpp"
#include "skelbc/skeleton_brandes.hpp"

namespace skelbc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_task(const Partition& partition, const PairTask& task) {
  if (task.i < 0 || task.i >= partition.part_count || task.j < 0 ||
      task.j >= partition.part_count)
    throw std::invalid_argument("pair task part id out of range");
}

}  // namespace

Skeleton refine_pair_skeleton(const Graph& graph, const Partition& partition,
                              const PairTask& task, const Options& options) {
  partition.validate();
  check_task(partition, task);
  std::vector<node_id> singleton_nodes;
  for (std::size_t v = 0; v < partition.part_of.size(); ++v)
    if (partition.part_of[v] == task.i || partition.part_of[v] == task.j)
      singleton_nodes.push_back(static_cast<node_id>(v));
  NodeSet targets(std::move(singleton_nodes), graph.node_count());
  Partition refined = refine_with_targets(partition, targets);
  return build_skeleton(graph, refined, targets, options);
}

CentralityVector all_pairs_betweenness(const Graph& graph, const Partition& partition,
                                       const Options& options, PhaseTimes* times) {
  partition.validate();
  const auto t_start = Clock::now();
  const node_id n = graph.node_count();
  const std::int32_t k = partition.part_count;

  BuildStats build_stats;
  const std::vector<PartData> parts =
      compute_part_data(graph, partition, options, &build_stats);
  const auto groups = partition.groups();

  CentralityVector result;
  result.score.assign(n, 0.0);
  double brandes_sk_seconds = 0.0;
  double finish_seconds = 0.0;

  for (std::int32_t i = 0; i < k; ++i) {
    for (std::int32_t j = 0; j < k; ++j) {
      const std::int32_t expand_one[] = {i, j};
      Skeleton skeleton = assemble_skeleton(
          graph, partition, parts,
          i == j ? std::span<const std::int32_t>(expand_one, 1)
                 : std::span<const std::int32_t>(expand_one, 2));

      std::vector<node_id> sources;
      for (node_id s : groups[i])
        if (skeleton.sk_index(s) >= 0) sources.push_back(s);
      NodeSet dests(std::vector<node_id>(groups[j]), n);

      const auto t_sk = Clock::now();
      std::vector<SkeletonSolution> solutions =
          brandes_sk(skeleton, sources, dests, options);
      brandes_sk_seconds += seconds_since(t_sk);

      const auto t_fin = Clock::now();
      CentralityVector pair_result =
          finish_centrality(solutions, skeleton, dests, options);
      finish_seconds += seconds_since(t_fin);

      for (node_id v = 0; v < n; ++v) result.score[v] += pair_result.score[v];
    }
  }

  if (times) {
    times->build_total = build_stats.total_seconds;
    times->build_largest = build_stats.largest_supernode_seconds;
    times->brandes_sk = brandes_sk_seconds;
    times->finish = finish_seconds;
    times->total = seconds_since(t_start);
  }
  return result;
}

}  // namespace skelbc
