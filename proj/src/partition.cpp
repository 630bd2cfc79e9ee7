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

#include "skelbc/partition.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace skelbc {

void Partition::validate() const {
  if (part_count <= 0 && !part_of.empty())
    throw std::runtime_error("partition has no parts");
  std::vector<std::size_t> sizes(part_count, 0);
  for (std::size_t v = 0; v < part_of.size(); ++v) {
    std::int32_t p = part_of[v];
    if (p < 0 || p >= part_count)
      throw std::runtime_error("node " + std::to_string(v) + " has part id " +
                               std::to_string(p) + " outside 0.." +
                               std::to_string(part_count - 1));
    ++sizes[p];
  }
  for (std::int32_t p = 0; p < part_count; ++p)
    if (sizes[p] == 0)
      throw std::runtime_error("part " + std::to_string(p) + " is empty");
}

std::vector<std::vector<node_id>> Partition::groups() const {
  std::vector<std::vector<node_id>> out(part_count);
  for (std::size_t v = 0; v < part_of.size(); ++v)
    out[part_of[v]].push_back(static_cast<node_id>(v));
  return out;
}

Partition load_partition(std::istream& in, const Graph& graph) {
  const node_id n = graph.node_count();
  Partition result;
  result.part_of.assign(n, -1);
  std::unordered_map<std::string, std::int32_t> part_ids;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos)
      view = view.substr(0, hash);

    std::string node_tok, part_tok, extra;
    {
      std::size_t i = 0;
      auto next = [&](std::string& out) {
        while (i < view.size() && (view[i] == ' ' || view[i] == '\t' || view[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < view.size() && view[i] != ' ' && view[i] != '\t' && view[i] != '\r') ++i;
        out.assign(view.substr(start, i - start));
      };
      next(node_tok);
      next(part_tok);
      next(extra);
    }
    if (node_tok.empty()) continue;
    if (part_tok.empty() || !extra.empty())
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": expected 'node part_label'");
    auto id = graph.find(node_tok);
    if (!id)
      throw std::runtime_error("line " + std::to_string(lineno) + ": unknown node '" +
                               node_tok + "'");
    auto [it, inserted] =
        part_ids.try_emplace(part_tok, static_cast<std::int32_t>(part_ids.size()));
    if (result.part_of[*id] != -1 && result.part_of[*id] != it->second)
      throw std::runtime_error("line " + std::to_string(lineno) + ": node '" + node_tok +
                               "' assigned to conflicting parts");
    result.part_of[*id] = it->second;
  }
  for (node_id v = 0; v < n; ++v)
    if (result.part_of[v] == -1)
      throw std::runtime_error("node '" + graph.label(v) + "' has no part assignment");
  result.part_count = static_cast<std::int32_t>(part_ids.size());
  result.validate();
  return result;
}

Partition refine_with_targets(const Partition& partition, const NodeSet& targets) {
  const std::size_t n = partition.part_of.size();
  Partition result;
  result.part_of.assign(n, -1);

  // Residual parts keep their relative order; emptied ones vanish.
  std::vector<char> survives(partition.part_count, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (!targets.contains(static_cast<node_id>(v))) survives[partition.part_of[v]] = 1;
  std::vector<std::int32_t> remap(partition.part_count, -1);
  std::int32_t next_id = 0;
  for (std::int32_t p = 0; p < partition.part_count; ++p)
    if (survives[p]) remap[p] = next_id++;
  for (std::size_t v = 0; v < n; ++v)
    if (!targets.contains(static_cast<node_id>(v)))
      result.part_of[v] = remap[partition.part_of[v]];
  for (node_id t : targets.members()) result.part_of[t] = next_id++;

  result.part_count = next_id;
  result.validate();
  return result;
}

Partition bfs_balanced_partition(const Graph& graph, std::int32_t k, std::uint64_t seed) {
  const node_id n = graph.node_count();
  if (k < 1 || k > n)
    throw std::invalid_argument("part count " + std::to_string(k) +
                                " out of range 1.." + std::to_string(n));
  Partition result;
  result.part_of.assign(n, -1);
  result.part_count = k;
  if (k == 1) {
    std::fill(result.part_of.begin(), result.part_of.end(), 0);
    return result;
  }

  // Farthest-first seeds over BFS hop distance; unreachable counts as
  // farthest so every component gets a seed while seeds last.
  std::mt19937_64 rng(seed);
  std::vector<node_id> seeds;
  seeds.push_back(static_cast<node_id>(rng() % static_cast<std::uint64_t>(n)));
  std::vector<std::int64_t> hop(n, -1);
  std::deque<node_id> queue;
  auto bfs_from = [&](node_id s) {
    hop[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      node_id u = queue.front();
      queue.pop_front();
      for (const Neighbor& nb : graph.neighbors(u)) {
        if (hop[nb.to] == -1 || hop[nb.to] > hop[u] + 1) {
          hop[nb.to] = hop[u] + 1;
          queue.push_back(nb.to);
        }
      }
    }
  };
  bfs_from(seeds[0]);
  std::vector<char> is_seed(n, 0);
  is_seed[seeds[0]] = 1;
  while (static_cast<std::int32_t>(seeds.size()) < k) {
    node_id best = -1;
    std::int64_t best_hop = -2;
    for (node_id v = 0; v < n; ++v) {
      if (is_seed[v]) continue;
      std::int64_t h = hop[v] == -1 ? std::numeric_limits<std::int64_t>::max() : hop[v];
      if (h > best_hop) {
        best_hop = h;
        best = v;
      }
    }
    seeds.push_back(best);
    is_seed[best] = 1;
    bfs_from(best);
    // hop[] now holds distance to the nearest seed: bfs_from relaxes only
    // improvements, so previous seeds' distances survive where smaller.
  }

  // Region growing: always extend the smallest part by one claimed node.
  std::vector<std::deque<node_id>> frontier(k);
  std::vector<std::size_t> size(k, 0);
  std::size_t assigned = 0;
  const std::size_t cap = (2 * static_cast<std::size_t>(n) + k - 1) / k;
  for (std::int32_t p = 0; p < k; ++p) {
    result.part_of[seeds[p]] = p;
    ++size[p];
    ++assigned;
    frontier[p].push_back(seeds[p]);
  }
  std::vector<char> exhausted(k, 0);
  while (assigned < static_cast<std::size_t>(n)) {
    std::int32_t pick = -1;
    for (std::int32_t p = 0; p < k; ++p) {
      if (exhausted[p] || size[p] >= cap) continue;
      if (pick == -1 || size[p] < size[pick]) pick = p;
    }
    if (pick == -1) break;  // all capped or stuck; leftovers handled below
    bool grew = false;
    while (!frontier[pick].empty()) {
      node_id u = frontier[pick].front();
      for (const Neighbor& nb : graph.neighbors(u)) {
        if (result.part_of[nb.to] == -1) {
          result.part_of[nb.to] = pick;
          ++size[pick];
          ++assigned;
          frontier[pick].push_back(nb.to);
          grew = true;
          break;
        }
      }
      if (grew) break;
      frontier[pick].pop_front();
    }
    if (!grew) exhausted[pick] = 1;
  }
  // Nodes in seedless components (or beyond caps): smallest part takes them.
  for (node_id v = 0; v < n; ++v) {
    if (result.part_of[v] != -1) continue;
    std::int32_t pick = 0;
    for (std::int32_t p = 1; p < k; ++p)
      if (size[p] < size[pick]) pick = p;
    result.part_of[v] = pick;
    ++size[pick];
  }
  result.validate();
  return result;
}

}  // namespace skelbc
