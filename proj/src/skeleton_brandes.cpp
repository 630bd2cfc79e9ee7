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

#include "skelbc/skeleton_brandes.hpp"

#include <cmath>
#include <algorithm>
#include <stdexcept>

#include "skelbc/parallel.hpp"

namespace skelbc {

SkeletonSolution skeleton_source_solution(const Skeleton& skeleton, node_id source,
                                          const NodeSet& dests, double eps) {
  const std::int32_t nsk = skeleton.sk_node_count();
  const std::int32_t s = source >= 0 && source < skeleton.graph_node_count()
                             ? skeleton.sk_index(source)
                             : -1;
  if (s < 0)
    throw std::invalid_argument("source node is not in the skeleton");

  SkeletonSolution out;
  out.source = source;
  out.source_sk = s;
  out.dist.assign(nsk, kInf);
  out.sigma.assign(nsk, 0.0);
  out.settle_order.reserve(nsk);
  out.dist[s] = 0.0;
  out.sigma[s] = 1.0;

  const auto to = skeleton.arc_to();
  const auto len = skeleton.arc_dist();
  const auto mult = skeleton.arc_mult();

  struct Entry {
    double dist;
    std::int32_t node;
    bool operator>(const Entry& o) const {
      if (dist != o.dist) return dist > o.dist;
      return node > o.node;
    }
  };
  thread_local std::vector<Entry> heap;
  thread_local std::vector<char> settled;
  heap.clear();
  settled.assign(nsk, 0);
  const auto cmp = std::greater<Entry>{};
  heap.push_back({0.0, s});
  while (!heap.empty()) {
    const auto [d, u] = heap.front();
    std::pop_heap(heap.begin(), heap.end(), cmp);
    heap.pop_back();
    if (settled[u]) continue;
    settled[u] = 1;
    out.settle_order.push_back(u);
    const auto [lo, hi] = skeleton.arc_range(u);
    for (std::size_t e = lo; e < hi; ++e) {
      const std::int32_t v = to[e];
      if (settled[v]) continue;
      const double cand = d + len[e];
      if (cand < out.dist[v] - eps) {
        out.dist[v] = cand;
        out.sigma[v] = out.sigma[u] * mult[e];
        heap.push_back({cand, v});
        std::push_heap(heap.begin(), heap.end(), cmp);
      } else if (cand <= out.dist[v] + eps) {
        out.sigma[v] += out.sigma[u] * mult[e];
      }
    }
  }

  // Dependency sweep in reverse settle order. Rather than storing
  // predecessor lists, each node gathers from its arcs: v is a shortest-path
  // successor of u exactly when dist(v) = dist(u) + len(u,v). Such a v is
  // strictly farther, so its coefficient is already final.
  out.delta.assign(nsk, 0.0);
  thread_local std::vector<double> coeff;
  coeff.assign(nsk, 0.0);
  for (auto it = out.settle_order.rbegin(); it != out.settle_order.rend(); ++it) {
    const std::int32_t u = *it;
    const double du = out.dist[u];
    double acc = 0.0;
    const auto [lo, hi] = skeleton.arc_range(u);
    for (std::size_t e = lo; e < hi; ++e) {
      const std::int32_t v = to[e];
      if (std::abs(out.dist[v] - du - len[e]) <= eps) acc += mult[e] * coeff[v];
    }
    out.delta[u] = acc * out.sigma[u];
    coeff[u] = ((dests.contains(skeleton.graph_node(u)) ? 1.0 : 0.0) + out.delta[u]) /
               out.sigma[u];
  }
  out.delta[s] = 0.0;
  return out;
}

std::vector<std::pair<std::int32_t, double>> skeleton_preds(
    const Skeleton& skeleton, const SkeletonSolution& solution, std::int32_t v,
    double eps) {
  std::vector<std::pair<std::int32_t, double>> preds;
  if (!std::isfinite(solution.dist[v])) return preds;
  const auto to = skeleton.arc_to();
  const auto len = skeleton.arc_dist();
  const auto mult = skeleton.arc_mult();
  const auto [lo, hi] = skeleton.arc_range(v);
  for (std::size_t e = lo; e < hi; ++e)
    if (std::isfinite(solution.dist[to[e]]) &&
        std::abs(solution.dist[v] - solution.dist[to[e]] - len[e]) <= eps)
      preds.emplace_back(to[e], mult[e]);
  return preds;
}

std::vector<SkeletonSolution> brandes_sk(const Skeleton& skeleton,
                                         std::span<const node_id> sources,
                                         const NodeSet& dests, const Options& options) {
  std::vector<SkeletonSolution> solutions(sources.size());
  parallel_for(sources.size(), options.threads, [&](std::size_t i) {
    solutions[i] = skeleton_source_solution(skeleton, sources[i], dests, options.eps);
  });
  return solutions;
}

}  // namespace skelbc
