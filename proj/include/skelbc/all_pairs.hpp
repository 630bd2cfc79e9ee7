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

#pragma once

#include "skelbc/driver.hpp"
#include "skelbc/graph.hpp"
#include "skelbc/options.hpp"
#include "skelbc/partition.hpp"
#include "skelbc/skeleton.hpp"

namespace skelbc {

/// One ordered supernode pair: shortest paths from P_i into P_j.
struct PairTask {
  std::int32_t i = 0;
  std::int32_t j = 0;
};

/// The skeleton for one pair task, built by literally refining the partition
/// so every node of P_i and P_j is a singleton part. The driver below gets
/// the same skeleton cheaper by reusing cached per-part data; this entry
/// point exists as the reference construction.
Skeleton refine_pair_skeleton(const Graph& graph, const Partition& partition,
                              const PairTask& task, const Options& options = {});

/// All-pairs exact betweenness: for every ordered pair (i, j) of parts, run
/// the skeleton machinery with sources P_i and destinations P_j and sum the
/// per-pair vectors in lexicographic task order. The k^2 tasks cover every
/// ordered node pair exactly once, so the result equals
/// brandes(graph, all nodes). Per-part build data is computed once and only
/// the two expanded parts change between tasks.
CentralityVector all_pairs_betweenness(const Graph& graph, const Partition& partition,
                                       const Options& options = {},
                                       PhaseTimes* times = nullptr);

}  // namespace skelbc
