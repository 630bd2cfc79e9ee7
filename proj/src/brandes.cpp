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

#include "skelbc/brandes.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "skelbc/parallel.hpp"

namespace skelbc {

namespace {

struct QueueEntry {
  double dist;
  node_id node;
  bool operator>(const QueueEntry& other) const {
    if (dist != other.dist) return dist > other.dist;
    return node > other.node;
  }
};

// Lazy-deletion binary heap on reused thread-local storage.
void dijkstra_into(const Graph& graph, node_id source, double eps,
                   SourceSolution& out) {
  const node_id n = graph.node_count();
  out.source = source;
  out.dist.assign(n, kInf);
  out.sigma.assign(n, 0.0);
  if (out.preds.size() != static_cast<std::size_t>(n)) out.preds.resize(n);
  for (auto& p : out.preds) p.clear();
  out.settle_order.clear();
  out.settle_order.reserve(n);

  thread_local std::vector<char> settled;
  thread_local std::vector<QueueEntry> heap;
  settled.assign(n, 0);
  heap.clear();

  const auto cmp = std::greater<QueueEntry>{};
  auto push = [&](double d, node_id v) {
    heap.push_back({d, v});
    std::push_heap(heap.begin(), heap.end(), cmp);
  };
  out.dist[source] = 0.0;
  out.sigma[source] = 1.0;
  push(0.0, source);
  while (!heap.empty()) {
    const auto [d, u] = heap.front();
    std::pop_heap(heap.begin(), heap.end(), cmp);
    heap.pop_back();
    if (settled[u]) continue;
    settled[u] = 1;
    out.settle_order.push_back(u);
    for (const Neighbor& nb : graph.neighbors(u)) {
      const node_id v = nb.to;
      if (settled[v]) continue;
      const double cand = d + nb.weight;
      if (cand < out.dist[v] - eps) {
        out.dist[v] = cand;
        out.sigma[v] = out.sigma[u];
        out.preds[v].assign(1, u);
        push(cand, v);
      } else if (cand <= out.dist[v] + eps) {
        out.sigma[v] += out.sigma[u];
        out.preds[v].push_back(u);
      }
    }
  }
}

void accumulate_into(const SourceSolution& solution, const NodeSet& targets,
                     std::vector<double>& delta) {
  delta.assign(solution.dist.size(), 0.0);
  for (auto it = solution.settle_order.rbegin(); it != solution.settle_order.rend();
       ++it) {
    const node_id v = *it;
    if (solution.preds[v].empty()) continue;
    const double coeff =
        ((targets.contains(v) ? 1.0 : 0.0) + delta[v]) / solution.sigma[v];
    for (node_id u : solution.preds[v]) delta[u] += solution.sigma[u] * coeff;
  }
  delta[solution.source] = 0.0;
}

}  // namespace

SourceSolution dijkstra_sssp(const Graph& graph, node_id source, double eps) {
  if (source < 0 || source >= graph.node_count())
    throw std::out_of_range("source node out of range");
  SourceSolution out;
  dijkstra_into(graph, source, eps, out);
  return out;
}

std::vector<double> accumulate_dependencies(const SourceSolution& solution,
                                            const NodeSet& targets) {
  std::vector<double> delta;
  accumulate_into(solution, targets, delta);
  return delta;
}

CentralityVector CentralityVector::to_unordered() const {
  CentralityVector out;
  out.convention = PairConvention::kUnorderedPairs;
  out.score.reserve(score.size());
  for (double s : score) out.score.push_back(s * 0.5);
  return out;
}

CentralityVector brandes(const Graph& graph, const NodeSet& targets,
                         const Options& options) {
  if (targets.size() < 2)
    throw std::invalid_argument("target set must contain at least 2 nodes");
  const node_id n = graph.node_count();
  CentralityVector result;
  result.score.assign(n, 0.0);

  struct Slot {
    SourceSolution solution;
    std::vector<double> delta;
  };
  parallel_ordered_reduce<Slot>(
      targets.size(), options.threads,
      [&](std::size_t i, Slot& slot) {
        dijkstra_into(graph, targets.members()[i], options.eps, slot.solution);
        accumulate_into(slot.solution, targets, slot.delta);
      },
      [&](std::size_t, Slot& slot) {
        for (node_id v = 0; v < n; ++v) result.score[v] += slot.delta[v];
      });
  return result;
}

}  // namespace skelbc
