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

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "skelbc/graph.hpp"
#include "skelbc/partition.hpp"

namespace skelbc::test {

inline Graph graph_from(const std::string& edge_list) {
  std::istringstream in(edge_list);
  return Graph::load_edge_list(in);
}

// Shared tiny fixtures. p3: a-b-c. c4: a-b-c-d-a. star5: center x, 4 leaves.
inline Graph p3() { return graph_from("a b\nb c\n"); }
inline Graph c4() { return graph_from("a b\nb c\nc d\nd a\n"); }
inline Graph star5() { return graph_from("x l1\nx l2\nx l3\nx l4\n"); }

inline NodeSet set_of(const Graph& g, const std::vector<std::string>& labels) {
  std::vector<node_id> ids;
  for (const auto& label : labels) ids.push_back(*g.find(label));
  return NodeSet(std::move(ids), g.node_count());
}

inline NodeSet all_nodes(const Graph& g) {
  std::vector<node_id> ids(g.node_count());
  for (node_id v = 0; v < g.node_count(); ++v) ids[v] = v;
  return NodeSet(std::move(ids), g.node_count());
}

inline Partition parts_of(const Graph& g,
                          const std::vector<std::vector<std::string>>& groups) {
  Partition p;
  p.part_of.assign(g.node_count(), -1);
  p.part_count = static_cast<std::int32_t>(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (const auto& label : groups[i]) p.part_of[*g.find(label)] = static_cast<std::int32_t>(i);
  p.validate();
  return p;
}

// Random instances for the equivalence suites; plain mt19937_64 so failures
// reproduce from the seed.
inline Graph random_graph(std::mt19937_64& rng, int n, double p, int wmax = 5) {
  Graph::Builder builder;
  for (int v = 0; v < n; ++v) builder.intern("n" + std::to_string(v));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p)
        builder.add_edge(u, v, 1.0 + static_cast<double>(rng() % wmax));
  return std::move(builder).build();
}

inline Partition random_partition(std::mt19937_64& rng, node_id n, std::int32_t k) {
  if (k > n) k = n;
  Partition p;
  p.part_of.assign(n, -1);
  // Seed each part once so none is empty, then assign the rest uniformly.
  std::vector<node_id> order(n);
  for (node_id v = 0; v < n; ++v) order[v] = v;
  for (std::int32_t i = 0; i < k; ++i)
    std::swap(order[i], order[i + static_cast<node_id>(rng() % (n - i))]);
  for (std::int32_t i = 0; i < k; ++i) p.part_of[order[i]] = i;
  for (node_id v = 0; v < n; ++v)
    if (p.part_of[v] == -1) p.part_of[v] = static_cast<std::int32_t>(rng() % k);
  p.part_count = k;
  p.validate();
  return p;
}

inline std::vector<node_id> random_subset(std::mt19937_64& rng, node_id n, int count) {
  std::vector<node_id> order(n);
  for (node_id v = 0; v < n; ++v) order[v] = v;
  for (int i = 0; i < count; ++i)
    std::swap(order[i], order[i + static_cast<node_id>(rng() % (n - i))]);
  order.resize(count);
  return order;
}

inline double rel_gap(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

inline double max_rel_gap(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, rel_gap(a[i], b[i]));
  return worst;
}

}  // namespace skelbc::test
