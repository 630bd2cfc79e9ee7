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

#include "doctest.h"
#include "skelbc/brandes.hpp"
#include "skelbc/oracle.hpp"
#include "test_helpers.hpp"

using namespace skelbc;
using namespace skelbc::test;

TEST_CASE("oracle betweenness on fixtures") {
  Graph p = p3();
  CHECK(oracle_betweenness(p, set_of(p, {"a", "c"})).score ==
        std::vector<double>{0, 2, 0});

  // Complete graph: every pair is adjacent, nothing is interior.
  Graph k4 = graph_from("a b\na c\na d\nb c\nb d\nc d\n");
  for (double s : oracle_betweenness(k4, all_nodes(k4)).score) CHECK(s == 0.0);

  Graph cy = c4();
  for (double s : oracle_betweenness(cy, all_nodes(cy)).score)
    CHECK(s == doctest::Approx(1.0));
}

TEST_CASE("oracle size guard") {
  std::string big;
  for (int i = 0; i + 1 < 201; ++i)
    big += "v" + std::to_string(i) + " v" + std::to_string(i + 1) + "\n";
  Graph g = graph_from(big);
  CHECK_THROWS_AS(oracle_betweenness(g, all_nodes(g)), std::invalid_argument);
}

TEST_CASE("path enumeration on fixtures") {
  Graph cy = c4();
  auto two = enumerate_paths(cy, *cy.find("a"), *cy.find("c"));
  CHECK(two.size() == 2);
  for (const auto& path : two) {
    CHECK(path.size() == 3);
    CHECK(path.front() == *cy.find("a"));
    CHECK(path.back() == *cy.find("c"));
  }

  Graph p = p3();
  CHECK(enumerate_paths(p, 0, 2).size() == 1);

  Graph split = graph_from("a b\nc d\n");
  CHECK(enumerate_paths(split, *split.find("a"), *split.find("c")).empty());

  Graph big = graph_from("a b\nb c\nc d\nd e\ne f\nf g\ng h\nh i\ni j\nj k\nk l\nl m\n");
  CHECK_THROWS_AS(enumerate_paths(big, 0, 1), std::invalid_argument);
}

TEST_CASE("the two oracles agree on sigma for graphs up to 12 nodes") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 10);
    Graph g = random_graph(rng, n, 0.35, 3);
    const node_id s = static_cast<node_id>(rng() % n);
    const node_id t = static_cast<node_id>(rng() % n);
    if (s == t) continue;
    OracleSssp sssp = oracle_sssp(g, s);
    CHECK(static_cast<double>(enumerate_paths(g, s, t).size()) == sssp.sigma[t]);
  }
}

TEST_CASE("oracle sssp agrees with the production dijkstra") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 30);
    Graph g = random_graph(rng, n, 0.25);
    const node_id s = static_cast<node_id>(rng() % n);
    OracleSssp slow = oracle_sssp(g, s);
    SourceSolution fast = dijkstra_sssp(g, s);
    CHECK(slow.dist == fast.dist);
    CHECK(slow.sigma == fast.sigma);
  }
}
