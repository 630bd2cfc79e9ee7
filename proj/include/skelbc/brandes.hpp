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

#include <vector>

#include "skelbc/graph.hpp"
#include "skelbc/options.hpp"

namespace skelbc {

/// Single-source shortest-path state: distances, path counts, predecessor
/// sets on the shortest-path DAG, and the order nodes were settled in
/// (nondecreasing distance, ties by index). Unreachable nodes carry
/// dist=+inf, sigma=0 and an empty predecessor list.
struct SourceSolution {
  node_id source = 0;
  std::vector<double> dist;
  std::vector<double> sigma;
  std::vector<std::vector<node_id>> preds;
  std::vector<node_id> settle_order;
};

/// Weighted Dijkstra with shortest-path counting. Path-length ties are
/// resolved within eps; the queue breaks distance ties by node index so the
/// settle order is deterministic.
SourceSolution dijkstra_sssp(const Graph& graph, node_id source,
                             double eps = kDefaultEps);

/// Dependency accumulation over the shortest-path DAG in reverse settle
/// order:  delta(s|u) = sum over v with u in preds[v] of
/// sigma(u)/sigma(v) * ([v in targets] + delta(s|v)).
/// The source's own entry is zeroed (endpoints are excluded).
std::vector<double> accumulate_dependencies(const SourceSolution& solution,
                                            const NodeSet& targets);

enum class PairConvention { kOrderedPairs, kUnorderedPairs };

struct CentralityVector {
  std::vector<double> score;
  PairConvention convention = PairConvention::kOrderedPairs;

  /// Halves every score, turning the ordered-pair total into the unordered
  /// convention for undirected graphs.
  CentralityVector to_unordered() const;
};

/// Exact betweenness with respect to a target set: C(v) = sum over s in
/// targets of delta(s|v), over ordered pairs with endpoints excluded.
/// Requires |targets| >= 2. Per-source work may run on several threads; the
/// per-source vectors are always reduced in ascending source order, so the
/// result is identical for every thread count.
CentralityVector brandes(const Graph& graph, const NodeSet& targets,
                         const Options& options = {});

}  // namespace skelbc
