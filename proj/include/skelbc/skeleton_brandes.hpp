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

#include <span>
#include <vector>

#include "skelbc/graph.hpp"
#include "skelbc/options.hpp"
#include "skelbc/skeleton.hpp"

namespace skelbc {

/// Per-source state on the skeleton. Arc lengths are the tuple distances
/// and path counting multiplies the tuple multiplicities:
///   sigma(s,v) = sum over u in P_v of sigma(s,u) * mult(u,v)
/// so sigma matches the count of original-graph shortest paths.
///
/// The predecessor sets P_v are not materialized: u is a predecessor of v
/// exactly when dist(v) = dist(u) + arcdist(u, v) within eps, which both
/// sweeps test directly on the arcs (see skeleton_preds for the explicit
/// form).
struct SkeletonSolution {
  node_id source = 0;       // graph id
  std::int32_t source_sk = -1;
  std::vector<double> dist;     // indexed by skeleton node
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<std::int32_t> settle_order;
};

/// One source: multiplicity-weighted Dijkstra plus the dependency sweep
///   delta(s|u) += mult(u,v) * sigma(u)/sigma(v) * ([v in dests] + delta(s|v))
/// over predecessor arcs in reverse settle order. Throws if the source is
/// not a skeleton node.
SkeletonSolution skeleton_source_solution(const Skeleton& skeleton, node_id source,
                                          const NodeSet& dests,
                                          double eps = kDefaultEps);

/// The explicit predecessor set of v in the solution's shortest-path DAG,
/// as (skeleton node, arc multiplicity) pairs.
std::vector<std::pair<std::int32_t, double>> skeleton_preds(
    const Skeleton& skeleton, const SkeletonSolution& solution, std::int32_t v,
    double eps = kDefaultEps);

/// Runs skeleton_source_solution for every source, in parallel, returning
/// the solutions in source order. The (dist, sigma) tables are retained for
/// the interior finishing step.
std::vector<SkeletonSolution> brandes_sk(const Skeleton& skeleton,
                                         std::span<const node_id> sources,
                                         const NodeSet& dests,
                                         const Options& options = {});

}  // namespace skelbc
