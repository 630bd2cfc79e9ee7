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

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "skelbc/graph.hpp"
#include "skelbc/options.hpp"
#include "skelbc/partition.hpp"

namespace skelbc {

/// One part of the partition viewed as a subgraph: its nodes, the induced
/// edges (CSR in local index space), and the frontier (nodes with at least
/// one neighbor in another part).
struct Supernode {
  std::int32_t part = 0;
  std::vector<node_id> nodes;                 // graph ids, ascending
  std::vector<std::size_t> offsets;           // local CSR
  std::vector<Neighbor> arcs;                 // local indices
  std::vector<char> frontier_mask;            // by local index
  std::vector<std::int32_t> frontier_locals;  // ascending

  std::int32_t size() const { return static_cast<std::int32_t>(nodes.size()); }
  std::span<const Neighbor> adj(std::int32_t local) const {
    return {arcs.data() + offsets[local], arcs.data() + offsets[local + 1]};
  }

  /// Fixture helper: local nodes 0..n-1 as graph ids, undirected edge list.
  static Supernode from_edges(std::int32_t n,
                              const std::vector<std::tuple<int, int, double>>& edges,
                              std::vector<char> frontier_mask);
};

/// Populates every supernode from one O(m) adjacency scan.
std::vector<Supernode> find_frontiers(const Graph& graph, const Partition& partition);

/// Distances and path counts from one frontier, restricted to paths whose
/// strict intermediates are all non-frontier. Frontier nodes other than the
/// source are settled but never expanded; the source itself always expands.
struct SupernodeSolution {
  std::vector<double> dist;   // local index space
  std::vector<double> sigma;
};
SupernodeSolution dijkstra_sk(const Supernode& supernode, std::int32_t source_local,
                              double eps = kDefaultEps);

/// `dist`: length of the shortest frontier-free connection, `mult`: how many
/// such connections exist.
struct CharTuple {
  double dist = 0.0;
  double mult = 0.0;
};

/// Per-part data produced by the frontier-restricted Dijkstra runs; the
/// reusable half of skeleton construction (the arcs between other parts are
/// cheap to reassemble, these are not).
struct PartData {
  std::int32_t part = 0;
  std::vector<node_id> frontiers;  // graph ids, ascending
  std::vector<node_id> interior;   // graph ids, ascending
  struct Tuple {
    std::int32_t a;  // indices into `frontiers`
    std::int32_t b;
    double dist;
    double mult;
  };
  std::vector<Tuple> tuples;
  std::vector<double> interior_dist;   // interior-major, like PartTable
  std::vector<double> interior_sigma;
};

/// The frontier graph: every frontier node of every supernode, connected by
/// the original cross-part edges (dist = edge weight, mult = 1) and by one
/// clique edge per same-part frontier pair that has a frontier-free
/// connection. Also carries, per supernode, the frontier-to-interior
/// distance/count tables needed to push dependencies back to interior nodes.
/// Arc attributes are kept as parallel arrays; the sweeps stream them.
class Skeleton {
 public:
  struct PartTable {
    std::int32_t part = 0;
    std::vector<node_id> frontiers;          // graph ids, ascending
    std::vector<std::int32_t> frontier_sk;   // parallel skeleton indices
    std::vector<node_id> interior;           // graph ids, ascending
    // Interior-major layout: entry [vi * frontiers.size() + fi] describes
    // the frontier-free connection between interior[vi] and frontiers[fi].
    std::vector<double> dist;
    std::vector<double> sigma;
  };

  std::int32_t sk_node_count() const { return static_cast<std::int32_t>(sk_to_graph_.size()); }
  std::size_t sk_edge_count() const { return arc_to_.size() / 2; }
  node_id graph_node_count() const { return static_cast<node_id>(graph_to_sk_.size()); }

  node_id graph_node(std::int32_t sk) const { return sk_to_graph_[sk]; }
  /// -1 when the graph node is not a frontier.
  std::int32_t sk_index(node_id v) const { return graph_to_sk_[v]; }

  std::pair<std::size_t, std::size_t> arc_range(std::int32_t sk) const {
    return {offsets_[sk], offsets_[sk + 1]};
  }
  std::span<const std::int32_t> arc_to() const { return arc_to_; }
  std::span<const double> arc_dist() const { return arc_dist_; }
  std::span<const double> arc_mult() const { return arc_mult_; }

  /// The characteristic tuple on the arc between two skeleton nodes, if any.
  std::optional<CharTuple> tuple_between(std::int32_t a, std::int32_t b) const {
    const auto [lo, hi] = arc_range(a);
    for (std::size_t e = lo; e < hi; ++e)
      if (arc_to_[e] == b) return CharTuple{arc_dist_[e], arc_mult_[e]};
    return std::nullopt;
  }

  std::span<const PartTable> tables() const { return tables_; }

  /// Annotated edge list `f q dist mult`, one line per undirected edge,
  /// sorted by external labels.
  void dump(std::ostream& out, const Graph& graph) const;

  /// Assembles a skeleton directly from an arc list; no interior tables.
  /// Meant for tests and experiments with hand-built fixtures.
  struct ArcSpec {
    node_id u;
    node_id v;
    double dist;
    double mult;
  };
  static Skeleton from_arcs(node_id graph_nodes, const std::vector<ArcSpec>& arcs);

 private:
  friend Skeleton assemble_skeleton(const Graph& graph, const Partition& partition,
                                    std::span<const PartData> parts,
                                    std::span<const std::int32_t> expand);
  std::vector<node_id> sk_to_graph_;
  std::vector<std::int32_t> graph_to_sk_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::int32_t> arc_to_;
  std::vector<double> arc_dist_;
  std::vector<double> arc_mult_;
  std::vector<PartTable> tables_;
};

struct BuildStats {
  double total_seconds = 0.0;
  /// Time spent inside the largest supernode (by node count, ties to the
  /// smaller part id).
  double largest_supernode_seconds = 0.0;
  std::int32_t largest_part = -1;
  std::size_t largest_part_nodes = 0;
};

/// Runs dijkstra_sk from every frontier of every supernode. Supernodes are
/// processed in parallel, each on one worker.
std::vector<PartData> compute_part_data(const Graph& graph, const Partition& partition,
                                        const Options& options = {},
                                        BuildStats* stats = nullptr);

/// Builds the full skeleton for a partition already refined so that every
/// target is a singleton part (throws otherwise). Pass an empty target set
/// when there is none.
Skeleton build_skeleton(const Graph& graph, const Partition& partition,
                        const NodeSet& targets, const Options& options = {},
                        BuildStats* stats = nullptr);

/// Assembles a skeleton from precomputed part data, expanding the parts
/// listed in `expand` into singletons (their tuples are dropped and their
/// internal edges become plain weight-1-multiplicity arcs). With an empty
/// `expand` this is exactly the skeleton of the partition itself.
Skeleton assemble_skeleton(const Graph& graph, const Partition& partition,
                           std::span<const PartData> parts,
                           std::span<const std::int32_t> expand = {});

/// Checks every structural skeleton invariant against the graph and
/// partition; throws std::runtime_error describing the first violation.
void validate_skeleton(const Skeleton& skeleton, const Graph& graph,
                       const Partition& partition, double eps = kDefaultEps);

}  // namespace skelbc
