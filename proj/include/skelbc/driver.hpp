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

#include "skelbc/brandes.hpp"
#include "skelbc/finish.hpp"
#include "skelbc/graph.hpp"
#include "skelbc/options.hpp"
#include "skelbc/partition.hpp"

namespace skelbc {

/// Wall-clock decomposition of a skeleton-based run. `build_largest` is the
/// build share of the largest supernode, the quantity that bounds the build
/// phase when supernodes are processed fully in parallel.
struct PhaseTimes {
  double build_total = 0.0;
  double build_largest = 0.0;
  double brandes_sk = 0.0;
  double finish = 0.0;
  double total = 0.0;
};

/// Divide-and-conquer exact betweenness for a target set: refine the
/// partition so each target is a singleton, build the skeleton, run the
/// multiplicity-weighted Brandes over it, and push dependencies back to
/// interior nodes. The result matches brandes(graph, targets) exactly up to
/// floating-point roundoff. Requires |targets| >= 2.
CentralityVector betweenness_via_skeleton(const Graph& graph, const Partition& partition,
                                          const NodeSet& targets,
                                          const Options& options = {},
                                          PhaseTimes* times = nullptr);

}  // namespace skelbc
