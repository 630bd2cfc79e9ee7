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

#include <cstdint>
#include <vector>

#include "skelbc/graph.hpp"
#include "skelbc/partition.hpp"

namespace skelbc {

// Synthetic instances for tests and benchmarks. Node labels are the decimal
// strings "0".."n-1" in index order and all generators are reproducible from
// the seed alone (the random stream is hand-rolled, not the standard
// library's distribution objects, so output never depends on the platform).

struct GeneratedGraph {
  Graph graph;
  Partition partition;  // the planted community structure; trivial otherwise
};

/// Stochastic block model: `communities` blocks of `community_size` nodes,
/// edge probability p_in inside a block and p_out across blocks. Weights are
/// uniform integers in [weight_min, weight_max].
GeneratedGraph gen_planted_partition(std::int32_t communities,
                                     std::int32_t community_size, double p_in,
                                     double p_out, std::uint64_t seed,
                                     std::int32_t weight_min = 1,
                                     std::int32_t weight_max = 1);

GeneratedGraph gen_erdos_renyi(std::int32_t n, double p, std::uint64_t seed,
                               std::int32_t weight_min = 1, std::int32_t weight_max = 1);

GeneratedGraph gen_path(std::int32_t n);
GeneratedGraph gen_cycle(std::int32_t n);
/// Star with `leaves` + 1 nodes; node 0 is the center.
GeneratedGraph gen_star(std::int32_t leaves);

/// `count` distinct nodes drawn uniformly, ascending. Only nodes with at
/// least one edge are eligible (isolated nodes do not survive an edge-list
/// round trip, so files emitted alongside a graph must avoid them).
std::vector<node_id> sample_targets(const Graph& graph, std::int32_t count,
                                    std::uint64_t seed);

}  // namespace skelbc
