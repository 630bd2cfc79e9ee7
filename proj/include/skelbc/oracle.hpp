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

#include "skelbc/brandes.hpp"
#include "skelbc/graph.hpp"
#include "skelbc/options.hpp"

namespace skelbc {

// Desk-scale ground truth. Everything here is written against the
// definitions directly — dense selection-based Dijkstra, pairwise dependency
// sums, exhaustive path listing — and shares no code with the fast paths it
// is used to check.

struct OracleSssp {
  std::vector<double> dist;
  std::vector<double> sigma;
};

/// O(n^2) single-source shortest paths with path counting, no heap.
OracleSssp oracle_sssp(const Graph& graph, node_id source, double eps = kDefaultEps);

/// Brute-force betweenness over ordered target pairs:
/// C(v) = sum over s != t of sigma(s,v) * sigma(v,t) / sigma(s,t), gated by
/// d(s,v) + d(v,t) = d(s,t), with v never an endpoint. Guarded to n <= 200.
CentralityVector oracle_betweenness(const Graph& graph, const NodeSet& targets,
                                    double eps = kDefaultEps);

/// Lists every shortest s-t path by bounded DFS; the list size equals
/// sigma(s,t). Guarded to n <= 12.
std::vector<std::vector<node_id>> enumerate_paths(const Graph& graph, node_id s,
                                                  node_id t, double eps = kDefaultEps);

}  // namespace skelbc
