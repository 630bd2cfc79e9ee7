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
#include <utility>
#include <vector>

#include "skelbc/brandes.hpp"
#include "skelbc/options.hpp"
#include "skelbc/skeleton.hpp"
#include "skelbc/skeleton_brandes.hpp"

namespace skelbc {

/// Distance and path count from the solution's source to an interior node,
/// assembled by concatenation over that node's frontiers:
///   d(s,v) = min over f of d(s,f) + d(f,v)
///   sigma(s,v) = sum over minimizing f of sigma(s,f) * sigma(f,v)
/// Returns (+inf, 0) when no frontier reaches v. `v` must be interior to
/// the given table.
std::pair<double, double> interior_source_values(const SkeletonSolution& solution,
                                                 const Skeleton::PartTable& table,
                                                 node_id v, double eps = kDefaultEps);

/// Completes a skeleton run into a full per-node centrality vector: skeleton
/// nodes take their dependency directly, and every interior node v gets
///   delta(s|v) = sum over shortest-path successor frontiers f of
///                sigma(s,v) * sigma(v,f) / sigma(s,f) * ([f in dests] + delta(s|f))
/// where f ranges over v's part frontiers with d(s,v) + d(v,f) = d(s,f).
/// Scores accumulate over solutions in the order given.
CentralityVector finish_centrality(std::span<const SkeletonSolution> solutions,
                                   const Skeleton& skeleton, const NodeSet& dests,
                                   const Options& options = {});

}  // namespace skelbc
