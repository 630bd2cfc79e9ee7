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

#include "skelbc/generate.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace skelbc {

namespace {

double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [lo, hi] by rejection; bias-free and stable across
// platforms, unlike std::uniform_int_distribution.
std::int64_t next_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

Graph::Builder builder_with_nodes(std::int32_t n) {
  Graph::Builder builder;
  for (std::int32_t v = 0; v < n; ++v) builder.intern(std::to_string(v));
  return builder;
}

double draw_weight(std::mt19937_64& rng, std::int32_t lo, std::int32_t hi) {
  if (lo == hi) return static_cast<double>(lo);
  return static_cast<double>(next_int(rng, lo, hi));
}

void check_weights(std::int32_t lo, std::int32_t hi) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("bad weight range");
}

Partition trivial_partition(std::int32_t n) {
  Partition p;
  p.part_of.assign(n, 0);
  p.part_count = n > 0 ? 1 : 0;
  return p;
}

}  // namespace

GeneratedGraph gen_planted_partition(std::int32_t communities,
                                     std::int32_t community_size, double p_in,
                                     double p_out, std::uint64_t seed,
                                     std::int32_t weight_min, std::int32_t weight_max) {
  if (communities < 1 || community_size < 1)
    throw std::invalid_argument("planted partition needs at least one non-empty community");
  if (p_in < 0 || p_in > 1 || p_out < 0 || p_out > 1)
    throw std::invalid_argument("edge probabilities must be in [0,1]");
  check_weights(weight_min, weight_max);
  const std::int32_t n = communities * community_size;
  std::mt19937_64 rng(seed);
  Graph::Builder builder = builder_with_nodes(n);
  for (std::int32_t u = 0; u < n; ++u) {
    for (std::int32_t v = u + 1; v < n; ++v) {
      const bool same = u / community_size == v / community_size;
      const double p = same ? p_in : p_out;
      if (p > 0 && next_unit(rng) < p)
        builder.add_edge(u, v, draw_weight(rng, weight_min, weight_max));
    }
  }
  GeneratedGraph out{std::move(builder).build(), {}};
  out.partition.part_of.resize(n);
  for (std::int32_t v = 0; v < n; ++v) out.partition.part_of[v] = v / community_size;
  out.partition.part_count = communities;
  return out;
}

GeneratedGraph gen_erdos_renyi(std::int32_t n, double p, std::uint64_t seed,
                               std::int32_t weight_min, std::int32_t weight_max) {
  if (n < 1) throw std::invalid_argument("graph needs at least one node");
  if (p < 0 || p > 1) throw std::invalid_argument("edge probability must be in [0,1]");
  check_weights(weight_min, weight_max);
  std::mt19937_64 rng(seed);
  Graph::Builder builder = builder_with_nodes(n);
  for (std::int32_t u = 0; u < n; ++u)
    for (std::int32_t v = u + 1; v < n; ++v)
      if (p > 0 && next_unit(rng) < p)
        builder.add_edge(u, v, draw_weight(rng, weight_min, weight_max));
  return {std::move(builder).build(), trivial_partition(n)};
}

GeneratedGraph gen_path(std::int32_t n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one node");
  Graph::Builder builder = builder_with_nodes(n);
  for (std::int32_t v = 0; v + 1 < n; ++v) builder.add_edge(v, v + 1, 1.0);
  return {std::move(builder).build(), trivial_partition(n)};
}

GeneratedGraph gen_cycle(std::int32_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three nodes");
  Graph::Builder builder = builder_with_nodes(n);
  for (std::int32_t v = 0; v + 1 < n; ++v) builder.add_edge(v, v + 1, 1.0);
  builder.add_edge(n - 1, 0, 1.0);
  return {std::move(builder).build(), trivial_partition(n)};
}

GeneratedGraph gen_star(std::int32_t leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
  Graph::Builder builder = builder_with_nodes(leaves + 1);
  for (std::int32_t v = 1; v <= leaves; ++v) builder.add_edge(0, v, 1.0);
  return {std::move(builder).build(), trivial_partition(leaves + 1)};
}

std::vector<node_id> sample_targets(const Graph& graph, std::int32_t count,
                                    std::uint64_t seed) {
  std::vector<node_id> eligible;
  for (node_id v = 0; v < graph.node_count(); ++v)
    if (graph.degree(v) > 0) eligible.push_back(v);
  if (count < 0 || static_cast<std::size_t>(count) > eligible.size())
    throw std::invalid_argument("cannot sample " + std::to_string(count) +
                                " targets from " + std::to_string(eligible.size()) +
                                " non-isolated nodes");
  std::mt19937_64 rng(seed);
  for (std::int32_t i = 0; i < count; ++i) {
    const auto j = next_int(rng, i, static_cast<std::int64_t>(eligible.size()) - 1);
    std::swap(eligible[i], eligible[j]);
  }
  eligible.resize(count);
  std::sort(eligible.begin(), eligible.end());
  return eligible;
}

}  // namespace skelbc
