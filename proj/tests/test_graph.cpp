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

#include <sstream>

#include "doctest.h"
#include "skelbc/graph.hpp"
#include "test_helpers.hpp"

using namespace skelbc;
using namespace skelbc::test;

TEST_CASE("edge list loading maps labels in first-appearance order") {
  Graph g = graph_from("a b\nb c\n");
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.label(0) == "a");
  CHECK(g.label(1) == "b");
  CHECK(g.label(2) == "c");
  for (node_id v = 0; v < 3; ++v)
    for (const Neighbor& nb : g.neighbors(v)) CHECK(nb.weight == 1.0);
}

TEST_CASE("duplicate undirected edges collapse to the minimum weight") {
  Graph g = graph_from("a b 2\nb a 3\n");
  CHECK(g.edge_count() == 1);
  CHECK(g.neighbors(0)[0].weight == 2.0);
  CHECK(g.neighbors(1)[0].weight == 2.0);
}

TEST_CASE("load rejects bad input with the line number") {
  CHECK_THROWS_WITH_AS(graph_from("a a 1\n"), doctest::Contains("line 1"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(graph_from("a b 1\nb c 0\n"), doctest::Contains("line 2"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(graph_from("a b 1\nc d -2\n"), doctest::Contains("line 2"),
                       std::runtime_error);
  CHECK_THROWS_AS(graph_from("a b c d\n"), std::runtime_error);
  CHECK_THROWS_AS(graph_from("a b notanumber\n"), std::runtime_error);
}

TEST_CASE("comments and blank lines are ignored") {
  Graph g = graph_from("# header\n\na b 2 # trailing\n");
  CHECK(g.node_count() == 2);
  CHECK(g.neighbors(0)[0].weight == 2.0);
}

TEST_CASE("degree and neighbors") {
  Graph p = p3();
  CHECK(p.degree(1) == 2);
  CHECK(p.neighbors(1)[0].to == 0);
  CHECK(p.neighbors(1)[1].to == 2);

  Graph s = star5();
  CHECK(s.degree(*s.find("x")) == 4);

  CHECK_THROWS_AS(p.degree(5), std::out_of_range);
  CHECK_THROWS_AS(p.neighbors(-1), std::out_of_range);
}

TEST_CASE("adjacency is symmetric after load") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 20), 0.3);
    for (node_id u = 0; u < g.node_count(); ++u) {
      for (const Neighbor& nb : g.neighbors(u)) {
        bool mirrored = false;
        for (const Neighbor& back : g.neighbors(nb.to))
          if (back.to == u && back.weight == nb.weight) mirrored = true;
        CHECK(mirrored);
      }
    }
  }
}

TEST_CASE("write/reload round trip is exact for loaded graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    // Loaded graphs never contain isolated nodes, which is what makes the
    // edge-list format lossless for them.
    std::ostringstream text;
    random_graph(rng, 2 + static_cast<int>(rng() % 25), 0.25).write_edge_list(text);
    if (text.str().empty()) continue;
    std::istringstream first_in(text.str());
    Graph loaded = Graph::load_edge_list(first_in);

    std::ostringstream out;
    loaded.write_edge_list(out);
    std::istringstream in(out.str());
    Graph reloaded = Graph::load_edge_list(in);
    CHECK(loaded == reloaded);
  }
}

TEST_CASE("fractional weights survive the round trip") {
  Graph g = graph_from("a b 0.1\nb c 2.5e-3\n");
  std::ostringstream out;
  g.write_edge_list(out);
  std::istringstream in(out.str());
  CHECK(g == Graph::load_edge_list(in));
}

TEST_CASE("node set loading resolves labels") {
  Graph g = p3();
  std::istringstream in("a\nc # pick ends\n");
  NodeSet s = NodeSet::load(in, g);
  CHECK(s.size() == 2);
  CHECK(s.contains(*g.find("a")));
  CHECK(!s.contains(*g.find("b")));

  std::istringstream bad("a\nzzz\n");
  CHECK_THROWS_AS(NodeSet::load(bad, g), std::runtime_error);
}

TEST_CASE("node set deduplicates and validates range") {
  NodeSet s({2, 0, 2}, 3);
  CHECK(s.size() == 2);
  CHECK(s.members() == std::vector<node_id>{0, 2});
  CHECK_THROWS_AS(NodeSet({3}, 3), std::out_of_range);
}
