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

#include "skelbc/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace skelbc {

OracleSssp oracle_sssp(const Graph& graph, node_id source, double eps) {
  const node_id n = graph.node_count();
  if (source < 0 || source >= n) throw std::out_of_range("source node out of range");
  OracleSssp out;
  out.dist.assign(n, kInf);
  out.sigma.assign(n, 0.0);
  out.dist[source] = 0.0;
  out.sigma[source] = 1.0;
  std::vector<char> settled(n, 0);
  for (node_id round = 0; round < n; ++round) {
    node_id u = -1;
    for (node_id v = 0; v < n; ++v)
      if (!settled[v] && std::isfinite(out.dist[v]) && (u == -1 || out.dist[v] < out.dist[u]))
        u = v;
    if (u == -1) break;
    settled[u] = 1;
    for (const Neighbor& nb : graph.neighbors(u)) {
      if (settled[nb.to]) continue;
      const double cand = out.dist[u] + nb.weight;
      if (cand < out.dist[nb.to] - eps) {
        out.dist[nb.to] = cand;
        out.sigma[nb.to] = out.sigma[u];
      } else if (cand <= out.dist[nb.to] + eps) {
        out.sigma[nb.to] += out.sigma[u];
      }
    }
  }
  return out;
}

CentralityVector oracle_betweenness(const Graph& graph, const NodeSet& targets,
                                    double eps) {
  const node_id n = graph.node_count();
  if (n > 200)
    throw std::invalid_argument("oracle_betweenness is guarded to n <= 200");
  std::vector<OracleSssp> rows;
  rows.reserve(targets.size());
  for (node_id s : targets.members()) rows.push_back(oracle_sssp(graph, s, eps));

  CentralityVector result;
  result.score.assign(n, 0.0);
  const auto& members = targets.members();
  for (std::size_t si = 0; si < members.size(); ++si) {
    for (std::size_t ti = 0; ti < members.size(); ++ti) {
      if (si == ti) continue;
      const node_id s = members[si];
      const node_id t = members[ti];
      const double dst = rows[si].dist[t];
      if (!std::isfinite(dst)) continue;
      const double sigma_st = rows[si].sigma[t];
      for (node_id v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        if (std::abs(rows[si].dist[v] + rows[ti].dist[v] - dst) <= eps)
          result.score[v] += rows[si].sigma[v] * rows[ti].sigma[v] / sigma_st;
      }
    }
  }
  return result;
}

namespace {

void dfs_paths(const Graph& graph, node_id u, node_id t, double remaining,
               const std::vector<double>& dist_to_t, double eps,
               std::vector<node_id>& path, std::vector<std::vector<node_id>>& out) {
  if (u == t) {
    if (std::abs(remaining) <= eps) out.push_back(path);
    return;
  }
  for (const Neighbor& nb : graph.neighbors(u)) {
    const double rest = remaining - nb.weight;
    // Only continue where the suffix can still finish exactly on budget.
    if (rest < -eps || dist_to_t[nb.to] > rest + eps) continue;
    path.push_back(nb.to);
    dfs_paths(graph, nb.to, t, rest, dist_to_t, eps, path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<std::vector<node_id>> enumerate_paths(const Graph& graph, node_id s,
                                                  node_id t, double eps) {
  const node_id n = graph.node_count();
  if (n > 12) throw std::invalid_argument("enumerate_paths is guarded to n <= 12");
  if (s < 0 || s >= n || t < 0 || t >= n) throw std::out_of_range("endpoint out of range");
  std::vector<std::vector<node_id>> out;
  if (s == t) return out;
  OracleSssp from_t = oracle_sssp(graph, t, eps);
  if (!std::isfinite(from_t.dist[s])) return out;
  std::vector<node_id> path{s};
  dfs_paths(graph, s, t, from_t.dist[s], from_t.dist, eps, path, out);
  return out;
}

}  // namespace skelbc
