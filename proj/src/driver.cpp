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

#include "skelbc/driver.hpp"

#include <chrono>
#include <stdexcept>

#include "skelbc/skeleton.hpp"
#include "skelbc/skeleton_brandes.hpp"

namespace skelbc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

CentralityVector betweenness_via_skeleton(const Graph& graph, const Partition& partition,
                                          const NodeSet& targets, const Options& options,
                                          PhaseTimes* times) {
  if (targets.size() < 2)
    throw std::invalid_argument("target set must contain at least 2 nodes");
  partition.validate();
  const auto t_start = Clock::now();

  Partition refined = refine_with_targets(partition, targets);
  BuildStats build_stats;
  Skeleton skeleton = build_skeleton(graph, refined, targets, options, &build_stats);

  // Isolated targets never appear in the skeleton; they can reach nothing
  // and nothing reaches them, so they simply contribute no sources or pairs.
  std::vector<node_id> sources;
  sources.reserve(targets.size());
  for (node_id t : targets.members())
    if (skeleton.sk_index(t) >= 0) sources.push_back(t);

  const auto t_sk = Clock::now();
  std::vector<SkeletonSolution> solutions =
      brandes_sk(skeleton, sources, targets, options);
  const double brandes_sk_seconds = seconds_since(t_sk);

  const auto t_finish = Clock::now();
  CentralityVector result = finish_centrality(solutions, skeleton, targets, options);
  const double finish_seconds = seconds_since(t_finish);

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
