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
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace skelbc {

using node_id = std::int32_t;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Neighbor {
  node_id to;
  double weight;
};

/// Immutable weighted undirected graph over dense node indices 0..n-1.
///
/// Nodes are identified externally by opaque string labels; the label <->
/// index bijection is kept so results can be reported in input terms.
/// Adjacency is CSR with neighbor entries sorted by index, weights are
/// strictly positive, and there are no self-loops or duplicate edges.
/// Instances are immutable after construction and safe for concurrent reads.
class Graph {
 public:
  /// Incremental construction helper. Duplicate undirected edges collapse
  /// to the minimum weight; self-loops and non-positive weights are rejected.
  class Builder {
   public:
    /// Returns the dense index for a label, adding it in first-appearance
    /// order if new.
    node_id intern(std::string_view label);
    void add_edge(node_id u, node_id v, double weight);
    Graph build() &&;

   private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, node_id> index_;
    std::unordered_map<std::uint64_t, double> edges_;  // key packs (min,max)
  };

  Graph() = default;

  /// Parses whitespace-separated `u v [w]` lines; `#` starts a comment and
  /// a missing weight defaults to 1. Throws std::runtime_error with the
  /// offending line number on self-loops, non-positive weights, or
  /// malformed lines.
  static Graph load_edge_list(std::istream& in);

  node_id node_count() const { return static_cast<node_id>(offsets_.size()) - 1; }
  std::size_t edge_count() const { return adj_.size() / 2; }

  std::span<const Neighbor> neighbors(node_id v) const {
    check_node(v);
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  node_id degree(node_id v) const {
    check_node(v);
    return static_cast<node_id>(offsets_[v + 1] - offsets_[v]);
  }

  const std::string& label(node_id v) const {
    check_node(v);
    return labels_[v];
  }
  std::optional<node_id> find(std::string_view label) const;

  /// Writes `u v w` lines with u in index order; reloading the output
  /// reproduces this graph exactly, including the label order.
  void write_edge_list(std::ostream& out) const;

  bool operator==(const Graph& other) const;

 private:
  friend class Builder;
  void check_node(node_id v) const;

  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adj_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, node_id> index_;
};

/// A set of dense node indices with O(1) membership.
class NodeSet {
 public:
  NodeSet() = default;
  /// Members are deduplicated and kept sorted. Throws if any index is out
  /// of range for a graph of n nodes.
  NodeSet(std::vector<node_id> members, node_id n);

  /// Reads whitespace-separated node labels (`#` comments allowed) and
  /// resolves them against the graph. Unknown labels are an error.
  static NodeSet load(std::istream& in, const Graph& graph);

  bool contains(node_id v) const {
    return v >= 0 && static_cast<std::size_t>(v) < mask_.size() && mask_[v] != 0;
  }
  const std::vector<node_id>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

 private:
  std::vector<node_id> members_;
  std::vector<char> mask_;
};

}  // namespace skelbc
