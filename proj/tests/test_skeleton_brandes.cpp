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

#include <cmath>

#include "doctest.h"
#include "skelbc/brandes.hpp"
#include "skelbc/skeleton_brandes.hpp"
#include "test_helpers.hpp"

using namespace skelbc;
using namespace skelbc::test;

TEST_CASE("multiplicity-weighted source solutions on hand-built skeletons") {
  SUBCASE("one arc with multiplicity two") {
    Skeleton sk = Skeleton::from_arcs(2, {{0, 1, 2.0, 2.0}});
    NodeSet dests({1}, 2);
    SkeletonSolution sol = skeleton_source_solution(sk, 0, dests);
    CHECK(sol.sigma[sk.sk_index(1)] == 2.0);
    CHECK(sol.dist[sk.sk_index(1)] == 2.0);
    CHECK(sol.delta[sk.sk_index(1)] == 0.0);  // endpoints carry nothing
    CHECK(sol.delta[sk.sk_index(0)] == 0.0);  // the source entry is dropped
  }
  SUBCASE("a relay node collects the downstream multiplicity") {
    // s --<1,1>-- f --<1,3>-- t: all three s-t paths pass f.
    Skeleton sk = Skeleton::from_arcs(3, {{0, 1, 1.0, 1.0}, {1, 2, 1.0, 3.0}});
    NodeSet dests({2}, 3);
    SkeletonSolution sol = skeleton_source_solution(sk, 0, dests);
    CHECK(sol.sigma[sk.sk_index(2)] == 3.0);
    CHECK(sol.delta[sk.sk_index(1)] == doctest::Approx(1.0));
  }
  SUBCASE("a tied direct arc halves the relay's share") {
    Skeleton sk = Skeleton::from_arcs(
        3, {{0, 1, 1.0, 1.0}, {1, 2, 1.0, 1.0}, {0, 2, 2.0, 1.0}});
    NodeSet dests({2}, 3);
    SkeletonSolution sol = skeleton_source_solution(sk, 0, dests);
    CHECK(sol.sigma[sk.sk_index(2)] == 2.0);
    CHECK(sol.delta[sk.sk_index(1)] == doctest::Approx(0.5));
  }
  SUBCASE("unknown source") {
    Skeleton sk = Skeleton::from_arcs(4, {{0, 1, 1.0, 1.0}});
    CHECK_THROWS_AS(skeleton_source_solution(sk, 3, NodeSet({1}, 4)),
                    std::invalid_argument);
  }
}

TEST_CASE("on an all-singleton skeleton the sweep equals plain dependency accumulation") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 16);
    Graph g = random_graph(rng, n, 0.3);
    NodeSet targets(random_subset(rng, n, std::min(4, n)), n);
    Partition singles = refine_with_targets(
        Partition{std::vector<std::int32_t>(n, 0), 1}, all_nodes(g));
    Skeleton sk = build_skeleton(g, singles, all_nodes(g));

    for (node_id s : targets.members()) {
      if (sk.sk_index(s) < 0) continue;  // isolated
      SkeletonSolution on_sk = skeleton_source_solution(sk, s, targets);
      SourceSolution on_g = dijkstra_sssp(g, s);
      auto delta = accumulate_dependencies(on_g, targets);
      for (node_id v = 0; v < n; ++v) {
        if (sk.sk_index(v) < 0) continue;
        CHECK(on_sk.delta[sk.sk_index(v)] == doctest::Approx(delta[v]).epsilon(1e-12));
        CHECK(on_sk.sigma[sk.sk_index(v)] == on_g.sigma[v]);
      }
    }
  }
}

TEST_CASE("skeleton dependencies equal full-graph dependencies at frontier nodes") {
  // The heart of the scheme: for any partition, a frontier node's dependency
  // computed on the skeleton must equal the one computed on the whole graph.
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 36);
    Graph g = random_graph(rng, n, 0.2);
    Partition base = random_partition(rng, n, 1 + static_cast<std::int32_t>(rng() % 6));
    const int want = 2 + static_cast<int>(rng() % 9);
    NodeSet targets(random_subset(rng, n, std::min(want, n)), n);
    Partition refined = refine_with_targets(base, targets);
    Skeleton sk = build_skeleton(g, refined, targets);

    for (node_id s : targets.members()) {
      if (sk.sk_index(s) < 0) continue;
      SkeletonSolution on_sk = skeleton_source_solution(sk, s, targets);
      SourceSolution on_g = dijkstra_sssp(g, s);
      auto delta = accumulate_dependencies(on_g, targets);
      for (std::int32_t sv = 0; sv < sk.sk_node_count(); ++sv) {
        CHECK(rel_gap(on_sk.delta[sv], delta[sk.graph_node(sv)]) < 1e-9);
        CHECK(on_sk.sigma[sv] == doctest::Approx(on_g.sigma[sk.graph_node(sv)]));
      }
    }
  }
}

TEST_CASE("path counts satisfy the predecessor recursion") {
  std::mt19937_64 rng(111);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 8 + static_cast<int>(rng() % 20);
    Graph g = random_graph(rng, n, 0.3);
    Partition p = random_partition(rng, n, 2 + static_cast<std::int32_t>(rng() % 3));
    Skeleton sk = build_skeleton(g, p, {});
    if (sk.sk_node_count() == 0) continue;
    const node_id s = sk.graph_node(static_cast<std::int32_t>(
        rng() % static_cast<std::uint64_t>(sk.sk_node_count())));
    NodeSet dests({s}, n);
    SkeletonSolution sol = skeleton_source_solution(sk, s, dests);
    for (std::int32_t v = 0; v < sk.sk_node_count(); ++v) {
      if (v == sol.source_sk || !std::isfinite(sol.dist[v])) continue;
      double from_preds = 0.0;
      for (const auto& [u, mult] : skeleton_preds(sk, sol, v)) {
        CHECK(sol.dist[u] < sol.dist[v]);
        from_preds += sol.sigma[u] * mult;
      }
      CHECK(sol.sigma[v] == doctest::Approx(from_preds).epsilon(1e-12));
    }
  }
}

TEST_CASE("brandes_sk returns solutions in source order across thread counts") {
  std::mt19937_64 rng(61);
  Graph g = random_graph(rng, 24, 0.25);
  Partition refined = refine_with_targets(random_partition(rng, 24, 3),
                                          NodeSet({0, 5, 9, 17}, 24));
  NodeSet targets({0, 5, 9, 17}, 24);
  Skeleton sk = build_skeleton(g, refined, targets);
  std::vector<node_id> sources;
  for (node_id t : targets.members())
    if (sk.sk_index(t) >= 0) sources.push_back(t);

  auto one = brandes_sk(sk, sources, targets, Options{kDefaultEps, 1});
  auto four = brandes_sk(sk, sources, targets, Options{kDefaultEps, 4});
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].source == sources[i]);
    CHECK(one[i].delta == four[i].delta);
    CHECK(one[i].sigma == four[i].sigma);
  }
}
