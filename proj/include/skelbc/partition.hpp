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
#include <istream>
#include <vector>

#include "skelbc/graph.hpp"

namespace skelbc {

/// Assignment of every node to exactly one part, part ids dense in
/// 0..part_count-1 with no empty part. Immutable once built.
struct Partition {
  std::vector<std::int32_t> part_of;
  std::int32_t part_count = 0;

  /// Throws std::runtime_error if any invariant is broken.
  void validate() const;

  /// Part id -> sorted member list.
  std::vector<std::vector<node_id>> groups() const;
};

/// Reads `node part_label` lines (`#` comments). Every graph node must be
/// assigned exactly once; part labels are opaque and mapped to dense ids in
/// first-appearance order.
Partition load_partition(std::istream& in, const Graph& graph);

/// Extracts every target into its own singleton part, keeping the grouping
/// of the remaining nodes and compacting away parts that become empty.
/// Surviving parts keep their relative order, then targets follow in
/// ascending node order. Idempotent for a fixed target set.
Partition refine_with_targets(const Partition& partition, const NodeSet& targets);

/// Convenience partitioner: grows k parts by breadth-first search from
/// spread-out seeds, always extending the currently smallest part. Parts are
/// connected whenever the graph is, and sizes stay within a factor two of
/// n/k when the structure allows it. Deterministic for a fixed seed.
Partition bfs_balanced_partition(const Graph& graph, std::int32_t k,
                                 std::uint64_t seed = 0);

}  // namespace skelbc
