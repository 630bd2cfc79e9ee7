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

#include "skelbc/skeleton.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "skelbc/parallel.hpp"

namespace skelbc {

namespace {

std::string compact(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

struct QueueEntry {
  double dist;
  std::int32_t node;
  bool operator>(const QueueEntry& o) const {
    if (dist != o.dist) return dist > o.dist;
    return node > o.node;
  }
};
using MinQueue =
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<QueueEntry>>;

void dijkstra_sk_into(const Supernode& sn, std::int32_t source_local, double eps,
                      SupernodeSolution& out, std::vector<char>& settled,
                      MinQueue& queue) {
  const std::int32_t size = sn.size();
  out.dist.assign(size, kInf);
  out.sigma.assign(size, 0.0);
  settled.assign(size, 0);
  out.dist[source_local] = 0.0;
  out.sigma[source_local] = 1.0;
  queue.push({0.0, source_local});
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    // Frontiers other than the source are settled but never expanded, so no
    // counted connection has a frontier as a strict intermediate.
    if (sn.frontier_mask[u] && u != source_local) continue;
    for (const Neighbor& nb : sn.adj(u)) {
      const std::int32_t v = nb.to;
      if (settled[v]) continue;
      const double cand = d + nb.weight;
      if (cand < out.dist[v] - eps) {
        out.dist[v] = cand;
        out.sigma[v] = out.sigma[u];
        queue.push({cand, v});
      } else if (cand <= out.dist[v] + eps) {
        out.sigma[v] += out.sigma[u];
      }
    }
  }
}

}  // namespace

Supernode Supernode::from_edges(std::int32_t n,
                                const std::vector<std::tuple<int, int, double>>& edges,
                                std::vector<char> frontier_mask) {
  Supernode sn;
  sn.nodes.resize(n);
  for (std::int32_t i = 0; i < n; ++i) sn.nodes[i] = i;
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [u, v, w] : edges) {
    ++degree[u];
    ++degree[v];
  }
  sn.offsets.assign(n + 1, 0);
  for (std::int32_t i = 0; i < n; ++i) sn.offsets[i + 1] = sn.offsets[i] + degree[i];
  sn.arcs.resize(sn.offsets[n]);
  std::vector<std::size_t> cursor(sn.offsets.begin(), sn.offsets.end() - 1);
  for (const auto& [u, v, w] : edges) {
    sn.arcs[cursor[u]++] = {v, w};
    sn.arcs[cursor[v]++] = {u, w};
  }
  sn.frontier_mask = std::move(frontier_mask);
  for (std::int32_t i = 0; i < n; ++i)
    if (sn.frontier_mask[i]) sn.frontier_locals.push_back(i);
  return sn;
}

std::vector<Supernode> find_frontiers(const Graph& graph, const Partition& partition) {
  const node_id n = graph.node_count();
  std::vector<Supernode> supernodes(partition.part_count);
  std::vector<std::int32_t> local_of(n, -1);
  for (std::int32_t p = 0; p < partition.part_count; ++p) supernodes[p].part = p;
  for (node_id v = 0; v < n; ++v) {
    Supernode& sn = supernodes[partition.part_of[v]];
    local_of[v] = static_cast<std::int32_t>(sn.nodes.size());
    sn.nodes.push_back(v);
  }
  for (auto& sn : supernodes) {
    sn.offsets.assign(sn.nodes.size() + 1, 0);
    sn.frontier_mask.assign(sn.nodes.size(), 0);
  }
  // Two passes: count intra-part degrees, then fill the local CSR rows.
  for (node_id v = 0; v < n; ++v) {
    const std::int32_t p = partition.part_of[v];
    Supernode& sn = supernodes[p];
    for (const Neighbor& nb : graph.neighbors(v)) {
      if (partition.part_of[nb.to] == p)
        ++sn.offsets[local_of[v] + 1];
      else
        sn.frontier_mask[local_of[v]] = 1;
    }
  }
  for (auto& sn : supernodes) {
    for (std::size_t i = 1; i < sn.offsets.size(); ++i) sn.offsets[i] += sn.offsets[i - 1];
    sn.arcs.resize(sn.offsets.back());
  }
  std::vector<std::size_t> cursor(n, 0);
  for (node_id v = 0; v < n; ++v) {
    const std::int32_t p = partition.part_of[v];
    Supernode& sn = supernodes[p];
    std::size_t at = sn.offsets[local_of[v]];
    for (const Neighbor& nb : graph.neighbors(v))
      if (partition.part_of[nb.to] == p) sn.arcs[at++] = {local_of[nb.to], nb.weight};
  }
  for (auto& sn : supernodes)
    for (std::int32_t i = 0; i < sn.size(); ++i)
      if (sn.frontier_mask[i]) sn.frontier_locals.push_back(i);
  return supernodes;
}

SupernodeSolution dijkstra_sk(const Supernode& supernode, std::int32_t source_local,
                              double eps) {
  if (source_local < 0 || source_local >= supernode.size() ||
      !supernode.frontier_mask[source_local])
    throw std::invalid_argument("dijkstra_sk source must be a frontier of the supernode");
  SupernodeSolution out;
  std::vector<char> settled;
  MinQueue queue;
  dijkstra_sk_into(supernode, source_local, eps, out, settled, queue);
  return out;
}

std::vector<PartData> compute_part_data(const Graph& graph, const Partition& partition,
                                        const Options& options, BuildStats* stats) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Supernode> supernodes = find_frontiers(graph, partition);
  const std::int32_t k = partition.part_count;

  std::vector<PartData> parts(k);
  std::vector<double> part_seconds(k, 0.0);

  // One worker per supernode; buffers are reused across that supernode's
  // frontier runs.
  parallel_for(k, options.threads, [&](std::size_t pi) {
    const auto start = std::chrono::steady_clock::now();
    const Supernode& sn = supernodes[pi];
    PartData& pd = parts[pi];
    pd.part = static_cast<std::int32_t>(pi);
    for (std::int32_t local : sn.frontier_locals) pd.frontiers.push_back(sn.nodes[local]);
    std::vector<std::int32_t> interior_locals;
    for (std::int32_t i = 0; i < sn.size(); ++i)
      if (!sn.frontier_mask[i]) {
        interior_locals.push_back(i);
        pd.interior.push_back(sn.nodes[i]);
      }
    const std::int32_t fcount = static_cast<std::int32_t>(pd.frontiers.size());
    pd.interior_dist.assign(pd.interior.size() * fcount, kInf);
    pd.interior_sigma.assign(pd.interior.size() * fcount, 0.0);

    SupernodeSolution sol;
    std::vector<char> settled;
    MinQueue queue;
    for (std::int32_t fa = 0; fa < fcount; ++fa) {
      dijkstra_sk_into(sn, sn.frontier_locals[fa], options.eps, sol, settled, queue);
      for (std::int32_t fb = fa + 1; fb < fcount; ++fb) {
        const double d = sol.dist[sn.frontier_locals[fb]];
        if (std::isfinite(d))
          pd.tuples.push_back({fa, fb, d, sol.sigma[sn.frontier_locals[fb]]});
      }
      for (std::size_t vi = 0; vi < interior_locals.size(); ++vi) {
        pd.interior_dist[vi * fcount + fa] = sol.dist[interior_locals[vi]];
        pd.interior_sigma[vi * fcount + fa] = sol.sigma[interior_locals[vi]];
      }
    }
    part_seconds[pi] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });

  if (stats) {
    stats->total_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    stats->largest_part = -1;
    stats->largest_part_nodes = 0;
    for (std::int32_t p = 0; p < k; ++p) {
      if (supernodes[p].nodes.size() > stats->largest_part_nodes) {
        stats->largest_part_nodes = supernodes[p].nodes.size();
        stats->largest_part = p;
      }
    }
    stats->largest_supernode_seconds =
        stats->largest_part >= 0 ? part_seconds[stats->largest_part] : 0.0;
  }
  return parts;
}

Skeleton assemble_skeleton(const Graph& graph, const Partition& partition,
                           std::span<const PartData> parts,
                           std::span<const std::int32_t> expand) {
  const node_id n = graph.node_count();
  std::vector<char> expanded(partition.part_count, 0);
  for (std::int32_t p : expand) expanded[p] = 1;

  Skeleton sk;
  sk.graph_to_sk_.assign(n, -1);
  for (const PartData& pd : parts)
    if (!expanded[pd.part])
      for (node_id f : pd.frontiers) sk.sk_to_graph_.push_back(f);
  for (node_id v = 0; v < n; ++v)
    if (expanded[partition.part_of[v]] && graph.degree(v) > 0)
      sk.sk_to_graph_.push_back(v);
  std::sort(sk.sk_to_graph_.begin(), sk.sk_to_graph_.end());
  for (std::size_t i = 0; i < sk.sk_to_graph_.size(); ++i)
    sk.graph_to_sk_[sk.sk_to_graph_[i]] = static_cast<std::int32_t>(i);

  const std::int32_t nsk = sk.sk_node_count();

  // Counting pass, then a fill pass into the CSR arrays.
  std::vector<std::size_t> degree(nsk, 0);
  auto is_cross = [&](node_id u, node_id v) {
    const std::int32_t pu = partition.part_of[u];
    return pu != partition.part_of[v] || expanded[pu];
  };
  for (node_id u = 0; u < n; ++u)
    for (const Neighbor& nb : graph.neighbors(u))
      if (nb.to > u && is_cross(u, nb.to)) {
        ++degree[sk.graph_to_sk_[u]];
        ++degree[sk.graph_to_sk_[nb.to]];
      }
  for (const PartData& pd : parts) {
    if (expanded[pd.part]) continue;
    for (const auto& tuple : pd.tuples) {
      ++degree[sk.graph_to_sk_[pd.frontiers[tuple.a]]];
      ++degree[sk.graph_to_sk_[pd.frontiers[tuple.b]]];
    }
  }
  sk.offsets_.assign(nsk + 1, 0);
  for (std::int32_t v = 0; v < nsk; ++v) sk.offsets_[v + 1] = sk.offsets_[v] + degree[v];
  const std::size_t arc_count = sk.offsets_[nsk];
  sk.arc_to_.resize(arc_count);
  sk.arc_dist_.resize(arc_count);
  sk.arc_mult_.resize(arc_count);

  std::vector<std::size_t> cursor(sk.offsets_.begin(), sk.offsets_.end() - 1);
  auto put = [&](std::int32_t a, std::int32_t b, double dist, double mult) {
    sk.arc_to_[cursor[a]] = b;
    sk.arc_dist_[cursor[a]] = dist;
    sk.arc_mult_[cursor[a]] = mult;
    ++cursor[a];
  };
  for (node_id u = 0; u < n; ++u)
    for (const Neighbor& nb : graph.neighbors(u))
      if (nb.to > u && is_cross(u, nb.to)) {
        put(sk.graph_to_sk_[u], sk.graph_to_sk_[nb.to], nb.weight, 1.0);
        put(sk.graph_to_sk_[nb.to], sk.graph_to_sk_[u], nb.weight, 1.0);
      }
  for (const PartData& pd : parts) {
    if (expanded[pd.part]) continue;
    for (const auto& tuple : pd.tuples) {
      const std::int32_t sa = sk.graph_to_sk_[pd.frontiers[tuple.a]];
      const std::int32_t sb = sk.graph_to_sk_[pd.frontiers[tuple.b]];
      put(sa, sb, tuple.dist, tuple.mult);
      put(sb, sa, tuple.dist, tuple.mult);
    }
  }
  // Sort each row by target for deterministic iteration order.
  std::vector<std::int32_t> perm;
  std::vector<std::int32_t> tmp_to;
  std::vector<double> tmp_d, tmp_m;
  for (std::int32_t v = 0; v < nsk; ++v) {
    const std::size_t lo = sk.offsets_[v], hi = sk.offsets_[v + 1];
    const std::size_t len = hi - lo;
    if (len < 2) continue;
    perm.resize(len);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::int32_t x, std::int32_t y) {
      return sk.arc_to_[lo + x] < sk.arc_to_[lo + y];
    });
    tmp_to.assign(sk.arc_to_.begin() + lo, sk.arc_to_.begin() + hi);
    tmp_d.assign(sk.arc_dist_.begin() + lo, sk.arc_dist_.begin() + hi);
    tmp_m.assign(sk.arc_mult_.begin() + lo, sk.arc_mult_.begin() + hi);
    for (std::size_t i = 0; i < len; ++i) {
      sk.arc_to_[lo + i] = tmp_to[perm[i]];
      sk.arc_dist_[lo + i] = tmp_d[perm[i]];
      sk.arc_mult_[lo + i] = tmp_m[perm[i]];
    }
  }

  for (const PartData& pd : parts) {
    if (expanded[pd.part] || pd.interior.empty()) continue;
    Skeleton::PartTable table;
    table.part = pd.part;
    table.frontiers = pd.frontiers;
    table.interior = pd.interior;
    table.dist = pd.interior_dist;
    table.sigma = pd.interior_sigma;
    for (node_id f : pd.frontiers) table.frontier_sk.push_back(sk.graph_to_sk_[f]);
    sk.tables_.push_back(std::move(table));
  }
  return sk;
}

Skeleton build_skeleton(const Graph& graph, const Partition& partition,
                        const NodeSet& targets, const Options& options,
                        BuildStats* stats) {
  partition.validate();
  std::vector<std::size_t> part_size(partition.part_count, 0);
  for (std::int32_t p : partition.part_of) ++part_size[p];
  for (node_id t : targets.members())
    if (part_size[partition.part_of[t]] != 1)
      throw std::logic_error("target '" + graph.label(t) +
                             "' is not a singleton part; refine the partition first");
  std::vector<PartData> parts = compute_part_data(graph, partition, options, stats);
  return assemble_skeleton(graph, partition, parts);
}

void Skeleton::dump(std::ostream& out, const Graph& graph) const {
  std::vector<std::string> lines;
  for (std::int32_t u = 0; u < sk_node_count(); ++u) {
    const auto [lo, hi] = arc_range(u);
    for (std::size_t e = lo; e < hi; ++e) {
      if (arc_to_[e] < u) continue;
      std::string a = graph.label(sk_to_graph_[u]);
      std::string b = graph.label(sk_to_graph_[arc_to_[e]]);
      if (b < a) std::swap(a, b);
      lines.push_back(a + " " + b + " " + compact(arc_dist_[e]) + " " +
                      compact(arc_mult_[e]));
    }
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& line : lines) out << line << '\n';
}

Skeleton Skeleton::from_arcs(node_id graph_nodes, const std::vector<ArcSpec>& arcs) {
  Skeleton sk;
  sk.graph_to_sk_.assign(graph_nodes, -1);
  for (const ArcSpec& a : arcs) {
    sk.sk_to_graph_.push_back(a.u);
    sk.sk_to_graph_.push_back(a.v);
  }
  std::sort(sk.sk_to_graph_.begin(), sk.sk_to_graph_.end());
  sk.sk_to_graph_.erase(std::unique(sk.sk_to_graph_.begin(), sk.sk_to_graph_.end()),
                        sk.sk_to_graph_.end());
  for (std::size_t i = 0; i < sk.sk_to_graph_.size(); ++i)
    sk.graph_to_sk_[sk.sk_to_graph_[i]] = static_cast<std::int32_t>(i);
  const std::int32_t nsk = sk.sk_node_count();
  std::vector<std::vector<std::tuple<std::int32_t, double, double>>> rows(nsk);
  for (const ArcSpec& a : arcs) {
    rows[sk.graph_to_sk_[a.u]].emplace_back(sk.graph_to_sk_[a.v], a.dist, a.mult);
    rows[sk.graph_to_sk_[a.v]].emplace_back(sk.graph_to_sk_[a.u], a.dist, a.mult);
  }
  sk.offsets_.assign(nsk + 1, 0);
  for (std::int32_t v = 0; v < nsk; ++v) {
    std::sort(rows[v].begin(), rows[v].end());
    sk.offsets_[v + 1] = sk.offsets_[v] + rows[v].size();
    for (const auto& [to, d, m] : rows[v]) {
      sk.arc_to_.push_back(to);
      sk.arc_dist_.push_back(d);
      sk.arc_mult_.push_back(m);
    }
  }
  return sk;
}

void validate_skeleton(const Skeleton& skeleton, const Graph& graph,
                       const Partition& partition, double eps) {
  const node_id n = graph.node_count();
  auto fail = [](const std::string& what) { throw std::runtime_error("skeleton: " + what); };

  // V_sk must be exactly the frontier set.
  std::vector<char> frontier(n, 0);
  for (node_id u = 0; u < n; ++u)
    for (const Neighbor& nb : graph.neighbors(u))
      if (partition.part_of[u] != partition.part_of[nb.to]) frontier[u] = 1;
  std::size_t frontier_count = 0;
  for (node_id u = 0; u < n; ++u) {
    if (frontier[u]) ++frontier_count;
    const bool in_sk = skeleton.sk_index(u) >= 0;
    if (in_sk != (frontier[u] != 0))
      fail("node '" + graph.label(u) + "' frontier membership mismatch");
  }
  if (frontier_count != static_cast<std::size_t>(skeleton.sk_node_count()))
    fail("node count mismatch");

  std::size_t cross_edges = 0;
  std::vector<std::size_t> frontier_per_part(partition.part_count, 0);
  for (node_id u = 0; u < n; ++u) {
    if (frontier[u]) ++frontier_per_part[partition.part_of[u]];
    for (const Neighbor& nb : graph.neighbors(u))
      if (nb.to > u && partition.part_of[u] != partition.part_of[nb.to]) ++cross_edges;
  }
  std::size_t max_edges = cross_edges;
  for (std::size_t f : frontier_per_part) max_edges += f * (f - 1) / 2;
  if (skeleton.sk_edge_count() > max_edges)
    fail("edge count exceeds |R| + sum of clique bounds");

  const auto to = skeleton.arc_to();
  const auto dist = skeleton.arc_dist();
  const auto mult = skeleton.arc_mult();
  for (std::int32_t su = 0; su < skeleton.sk_node_count(); ++su) {
    const node_id u = skeleton.graph_node(su);
    const auto [lo, hi] = skeleton.arc_range(su);
    std::int32_t prev = -1;
    for (std::size_t e = lo; e < hi; ++e) {
      if (to[e] <= prev) fail("adjacency row not strictly increasing (duplicate arc?)");
      prev = to[e];
      const node_id v = skeleton.graph_node(to[e]);
      if (!(dist[e] > 0.0)) fail("non-positive tuple distance");
      if (!(mult[e] >= 1.0)) fail("tuple multiplicity below 1");
      if (partition.part_of[u] != partition.part_of[v]) {
        bool found = false;
        for (const Neighbor& nb : graph.neighbors(u))
          if (nb.to == v && std::abs(nb.weight - dist[e]) <= eps && mult[e] == 1.0)
            found = true;
        if (!found) fail("cross-part arc does not match an original edge");
      }
      // The mirror arc must exist with the same tuple.
      bool mirrored = false;
      const auto [blo, bhi] = skeleton.arc_range(to[e]);
      for (std::size_t b = blo; b < bhi; ++b)
        if (to[b] == su && dist[b] == dist[e] && mult[b] == mult[e]) mirrored = true;
      if (!mirrored) fail("asymmetric arc");
    }
  }

  for (const auto& table : skeleton.tables()) {
    if (!std::is_sorted(table.frontiers.begin(), table.frontiers.end()))
      fail("table frontiers not sorted");
    if (!std::is_sorted(table.interior.begin(), table.interior.end()))
      fail("table interior not sorted");
    for (std::size_t i = 0; i < table.frontiers.size(); ++i)
      if (skeleton.sk_index(table.frontiers[i]) != table.frontier_sk[i])
        fail("table frontier_sk mismatch");
    for (node_id v : table.interior) {
      if (frontier[v]) fail("interior node is a frontier");
      if (partition.part_of[v] != table.part) fail("interior node in wrong part");
    }
    const std::size_t fcount = table.frontiers.size();
    for (std::size_t vi = 0; vi < table.interior.size(); ++vi) {
      for (std::size_t fi = 0; fi < fcount; ++fi) {
        const double d = table.dist[vi * fcount + fi];
        const double s = table.sigma[vi * fcount + fi];
        if (std::isfinite(d) != (s >= 1.0)) fail("table dist/sigma disagree");
        if (std::isfinite(d) && !(d > 0.0)) fail("non-positive interior distance");
      }
    }
  }
}

}  // namespace skelbc
