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

#include "skelbc/finish.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "skelbc/parallel.hpp"

namespace skelbc {

namespace {

struct FrontierView {
  std::vector<double> dist;   // d(s,f)
  std::vector<double> sigma;  // sigma(s,f)
  std::vector<double> push;   // ([f in dests] + delta(s|f)) / sigma(s,f)
  bool any_reachable = false;

  void gather(const SkeletonSolution& sol, const Skeleton::PartTable& table,
              const NodeSet& dests) {
    const std::size_t fcount = table.frontiers.size();
    dist.resize(fcount);
    sigma.resize(fcount);
    push.resize(fcount);
    any_reachable = false;
    for (std::size_t fi = 0; fi < fcount; ++fi) {
      const std::int32_t sk = table.frontier_sk[fi];
      dist[fi] = sol.dist[sk];
      sigma[fi] = sol.sigma[sk];
      if (std::isfinite(dist[fi])) {
        any_reachable = true;
        push[fi] = ((dests.contains(table.frontiers[fi]) ? 1.0 : 0.0) + sol.delta[sk]) /
                   sigma[fi];
      } else {
        push[fi] = 0.0;
      }
    }
  }
};

std::pair<double, double> interior_values_row(const FrontierView& view,
                                              const double* row_dist,
                                              const double* row_sigma,
                                              std::size_t fcount, double eps) {
  double best = kInf;
  for (std::size_t fi = 0; fi < fcount; ++fi) {
    const double d = view.dist[fi] + row_dist[fi];
    if (d < best) best = d;
  }
  if (!std::isfinite(best)) return {kInf, 0.0};
  double sigma = 0.0;
  for (std::size_t fi = 0; fi < fcount; ++fi)
    if (view.dist[fi] + row_dist[fi] <= best + eps)
      sigma += view.sigma[fi] * row_sigma[fi];
  return {best, sigma};
}

void finish_one(const SkeletonSolution& sol, const Skeleton& skeleton,
                const NodeSet& dests, double eps, std::vector<double>& contrib) {
  contrib.assign(skeleton.graph_node_count(), 0.0);
  for (std::int32_t sk = 0; sk < skeleton.sk_node_count(); ++sk)
    contrib[skeleton.graph_node(sk)] = sol.delta[sk];

  FrontierView view;
  for (const auto& table : skeleton.tables()) {
    view.gather(sol, table, dests);
    if (!view.any_reachable) continue;  // whole part is unreachable from s
    const std::size_t fcount = table.frontiers.size();
    const double* fd = view.dist.data();
    const double* fs = view.sigma.data();
    const double* fpush = view.push.data();
    for (std::size_t vi = 0; vi < table.interior.size(); ++vi) {
      const double* row_dist = table.dist.data() + vi * fcount;
      const double* row_sigma = table.sigma.data() + vi * fcount;
      double best = kInf;
      for (std::size_t fi = 0; fi < fcount; ++fi) {
        const double d = fd[fi] + row_dist[fi];
        if (d < best) best = d;
      }
      if (!std::isfinite(best)) continue;
      // One fused pass: entry frontiers build sigma(s,v), successor
      // frontiers (those on a shortest continuation from v) push their
      // dependency share.
      double sigma_sv = 0.0;
      double pushed = 0.0;
      for (std::size_t fi = 0; fi < fcount; ++fi) {
        if (fd[fi] + row_dist[fi] <= best + eps) sigma_sv += fs[fi] * row_sigma[fi];
        if (std::abs(best + row_dist[fi] - fd[fi]) <= eps)
          pushed += row_sigma[fi] * fpush[fi];
      }
      contrib[table.interior[vi]] = sigma_sv * pushed;
    }
  }
}

}  // namespace

std::pair<double, double> interior_source_values(const SkeletonSolution& solution,
                                                 const Skeleton::PartTable& table,
                                                 node_id v, double eps) {
  auto it = std::lower_bound(table.interior.begin(), table.interior.end(), v);
  if (it == table.interior.end() || *it != v)
    throw std::invalid_argument("node is not interior to this part");
  const std::size_t vi = it - table.interior.begin();
  FrontierView view;
  // The push values need a destination set; distances and counts do not.
  view.gather(solution, table, NodeSet{});
  const std::size_t fcount = table.frontiers.size();
  return interior_values_row(view, table.dist.data() + vi * fcount,
                             table.sigma.data() + vi * fcount, fcount, eps);
}

CentralityVector finish_centrality(std::span<const SkeletonSolution> solutions,
                                   const Skeleton& skeleton, const NodeSet& dests,
                                   const Options& options) {
  const node_id n = skeleton.graph_node_count();
  CentralityVector result;
  result.score.assign(n, 0.0);
  parallel_ordered_reduce<std::vector<double>>(
      solutions.size(), options.threads,
      [&](std::size_t i, std::vector<double>& contrib) {
        finish_one(solutions[i], skeleton, dests, options.eps, contrib);
      },
      [&](std::size_t, const std::vector<double>& contrib) {
        for (node_id v = 0; v < n; ++v) result.score[v] += contrib[v];
      });
  return result;
}

}  // namespace skelbc
