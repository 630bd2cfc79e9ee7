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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "skelbc/all_pairs.hpp"
#include "skelbc/brandes.hpp"
#include "skelbc/driver.hpp"
#include "skelbc/generate.hpp"
#include "skelbc/oracle.hpp"
#include "skelbc/partition.hpp"
#include "skelbc/skeleton.hpp"

namespace py = pybind11;
using namespace skelbc;

namespace {

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return Graph::load_edge_list(in);
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return Graph::load_edge_list(in);
}

NodeSet to_node_set(const Graph& graph, const std::vector<std::string>& labels) {
  std::vector<node_id> ids;
  ids.reserve(labels.size());
  for (const auto& label : labels) {
    auto id = graph.find(label);
    if (!id) throw std::invalid_argument("unknown node '" + label + "'");
    ids.push_back(*id);
  }
  return NodeSet(std::move(ids), graph.node_count());
}

py::dict scores_to_dict(const Graph& graph, const CentralityVector& centrality,
                        bool unordered) {
  py::dict out;
  for (node_id v = 0; v < graph.node_count(); ++v)
    out[py::str(graph.label(v))] =
        unordered ? centrality.score[v] * 0.5 : centrality.score[v];
  return out;
}

}  // namespace

PYBIND11_MODULE(_skelbc, m) {
  m.doc() = "Exact betweenness centrality via graph partitioning";

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("labels",
           [](const Graph& g) {
             std::vector<std::string> out;
             for (node_id v = 0; v < g.node_count(); ++v) out.push_back(g.label(v));
             return out;
           })
      .def("degree",
           [](const Graph& g, const std::string& label) {
             auto id = g.find(label);
             if (!id) throw std::invalid_argument("unknown node '" + label + "'");
             return g.degree(*id);
           })
      .def("neighbors",
           [](const Graph& g, const std::string& label) {
             auto id = g.find(label);
             if (!id) throw std::invalid_argument("unknown node '" + label + "'");
             std::vector<std::pair<std::string, double>> out;
             for (const Neighbor& nb : g.neighbors(*id))
               out.emplace_back(g.label(nb.to), nb.weight);
             return out;
           })
      .def("edge_list", [](const Graph& g) {
        std::ostringstream out;
        g.write_edge_list(out);
        return out.str();
      });

  py::class_<Partition>(m, "Partition")
      .def_property_readonly("part_count",
                             [](const Partition& p) { return p.part_count; });

  m.def("load_graph", &load_graph, py::arg("path"));
  m.def("parse_graph", &parse_graph, py::arg("text"));

  m.def(
      "load_partition",
      [](const std::string& path, const Graph& graph) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open partition file '" + path + "'");
        return load_partition(in, graph);
      },
      py::arg("path"), py::arg("graph"));
  m.def(
      "parse_partition",
      [](const std::string& text, const Graph& graph) {
        std::istringstream in(text);
        return load_partition(in, graph);
      },
      py::arg("text"), py::arg("graph"));
  m.def(
      "auto_partition",
      [](const Graph& graph, std::int32_t parts, std::uint64_t seed) {
        return bfs_balanced_partition(graph, parts, seed);
      },
      py::arg("graph"), py::arg("parts"), py::arg("seed") = 0);
  m.def(
      "refine_with_targets",
      [](const Partition& partition, const Graph& graph,
         const std::vector<std::string>& targets) {
        return refine_with_targets(partition, to_node_set(graph, targets));
      },
      py::arg("partition"), py::arg("graph"), py::arg("targets"));
  m.def(
      "partition_assignments",
      [](const Partition& partition, const Graph& graph) {
        py::dict out;
        for (node_id v = 0; v < graph.node_count(); ++v)
          out[py::str(graph.label(v))] = partition.part_of[v];
        return out;
      },
      py::arg("partition"), py::arg("graph"));

  m.def(
      "brandes",
      [](const Graph& graph, const std::vector<std::string>& targets, double eps,
         int threads, bool unordered) {
        NodeSet target_set = to_node_set(graph, targets);
        CentralityVector c;
        {
          py::gil_scoped_release release;
          c = brandes(graph, target_set, Options{eps, threads});
        }
        return scores_to_dict(graph, c, unordered);
      },
      py::arg("graph"), py::arg("targets"), py::arg("eps") = kDefaultEps,
      py::arg("threads") = 0, py::arg("unordered") = false);

  m.def(
      "skeleton_betweenness",
      [](const Graph& graph, const Partition& partition,
         const std::vector<std::string>& targets, double eps, int threads,
         bool unordered) {
        NodeSet target_set = to_node_set(graph, targets);
        CentralityVector c;
        {
          py::gil_scoped_release release;
          c = betweenness_via_skeleton(graph, partition, target_set,
                                       Options{eps, threads});
        }
        return scores_to_dict(graph, c, unordered);
      },
      py::arg("graph"), py::arg("partition"), py::arg("targets"),
      py::arg("eps") = kDefaultEps, py::arg("threads") = 0,
      py::arg("unordered") = false);

  m.def(
      "all_pairs_betweenness",
      [](const Graph& graph, const Partition& partition, double eps, int threads,
         bool unordered) {
        CentralityVector c;
        {
          py::gil_scoped_release release;
          c = all_pairs_betweenness(graph, partition, Options{eps, threads});
        }
        return scores_to_dict(graph, c, unordered);
      },
      py::arg("graph"), py::arg("partition"), py::arg("eps") = kDefaultEps,
      py::arg("threads") = 0, py::arg("unordered") = false);

  m.def(
      "oracle_betweenness",
      [](const Graph& graph, const std::vector<std::string>& targets, double eps,
         bool unordered) {
        NodeSet target_set = to_node_set(graph, targets);
        CentralityVector c;
        {
          py::gil_scoped_release release;
          c = oracle_betweenness(graph, target_set, eps);
        }
        return scores_to_dict(graph, c, unordered);
      },
      py::arg("graph"), py::arg("targets"), py::arg("eps") = kDefaultEps,
      py::arg("unordered") = false);

  m.def(
      "skeleton_edge_list",
      [](const Graph& graph, const Partition& partition,
         const std::vector<std::string>& targets, double eps) {
        NodeSet target_set = to_node_set(graph, targets);
        Partition refined = refine_with_targets(partition, target_set);
        Skeleton sk = build_skeleton(graph, refined, target_set, Options{eps, 0});
        std::ostringstream out;
        sk.dump(out, graph);
        return out.str();
      },
      py::arg("graph"), py::arg("partition"),
      py::arg("targets") = std::vector<std::string>{}, py::arg("eps") = kDefaultEps,
      "The skeleton for a partition (refined with the given targets) as "
      "'f q dist mult' lines.");

  m.def(
      "gen_planted_partition",
      [](std::int32_t communities, std::int32_t community_size, double p_in,
         double p_out, std::uint64_t seed, std::int32_t weight_min,
         std::int32_t weight_max) {
        GeneratedGraph g = gen_planted_partition(communities, community_size, p_in,
                                                 p_out, seed, weight_min, weight_max);
        return py::make_tuple(std::move(g.graph), std::move(g.partition));
      },
      py::arg("communities"), py::arg("community_size"), py::arg("p_in"),
      py::arg("p_out"), py::arg("seed") = 1, py::arg("weight_min") = 1,
      py::arg("weight_max") = 1);
  m.def(
      "gen_erdos_renyi",
      [](std::int32_t n, double p, std::uint64_t seed, std::int32_t weight_min,
         std::int32_t weight_max) {
        return gen_erdos_renyi(n, p, seed, weight_min, weight_max).graph;
      },
      py::arg("n"), py::arg("p"), py::arg("seed") = 1, py::arg("weight_min") = 1,
      py::arg("weight_max") = 1);
  m.def("gen_path", [](std::int32_t n) { return gen_path(n).graph; }, py::arg("n"));
  m.def("gen_cycle", [](std::int32_t n) { return gen_cycle(n).graph; }, py::arg("n"));
  m.def("gen_star", [](std::int32_t leaves) { return gen_star(leaves).graph; },
        py::arg("leaves"));
  m.def(
      "sample_targets",
      [](const Graph& graph, std::int32_t count, std::uint64_t seed) {
        std::vector<std::string> out;
        for (node_id v : sample_targets(graph, count, seed)) out.push_back(graph.label(v));
        return out;
      },
      py::arg("graph"), py::arg("count"), py::arg("seed") = 1);
}
