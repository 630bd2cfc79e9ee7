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

#include "skelbc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace skelbc {

namespace {

std::uint64_t edge_key(node_id u, node_id v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

node_id Graph::Builder::intern(std::string_view label) {
  auto it = index_.find(std::string(label));
  if (it != index_.end()) return it->second;
  node_id id = static_cast<node_id>(labels_.size());
  labels_.emplace_back(label);
  index_.emplace(labels_.back(), id);
  return id;
}

void Graph::Builder::add_edge(node_id u, node_id v, double weight) {
  if (u == v) throw std::runtime_error("self-loop on node '" + labels_.at(u) + "'");
  if (!(weight > 0.0))
    throw std::runtime_error("non-positive edge weight " + format_double(weight));
  auto [it, inserted] = edges_.try_emplace(edge_key(u, v), weight);
  if (!inserted && weight < it->second) it->second = weight;
}

Graph Graph::Builder::build() && {
  Graph g;
  g.labels_ = std::move(labels_);
  g.index_ = std::move(index_);
  const node_id n = static_cast<node_id>(g.labels_.size());

  std::vector<std::size_t> deg(n, 0);
  for (const auto& [key, w] : edges_) {
    ++deg[static_cast<node_id>(key >> 32)];
    ++deg[static_cast<node_id>(key & 0xffffffffu)];
  }
  g.offsets_.assign(n + 1, 0);
  for (node_id v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adj_.resize(g.offsets_[n]);

  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [key, w] : edges_) {
    node_id u = static_cast<node_id>(key >> 32);
    node_id v = static_cast<node_id>(key & 0xffffffffu);
    g.adj_[cursor[u]++] = Neighbor{v, w};
    g.adj_[cursor[v]++] = Neighbor{u, w};
  }
  for (node_id v = 0; v < n; ++v) {
    std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1],
              [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
  }
  return g;
}

Graph Graph::load_edge_list(std::istream& in) {
  Builder builder;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos)
      view = view.substr(0, hash);
    auto tokens = split_tokens(view);
    if (tokens.empty()) continue;
    if (tokens.size() != 2 && tokens.size() != 3)
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": expected 'u v [w]', got " +
                               std::to_string(tokens.size()) + " fields");
    double w = 1.0;
    if (tokens.size() == 3) {
      const auto& t = tokens[2];
      auto res = std::from_chars(t.data(), t.data() + t.size(), w);
      if (res.ec != std::errc{} || res.ptr != t.data() + t.size())
        throw std::runtime_error("line " + std::to_string(lineno) +
                                 ": bad weight '" + std::string(t) + "'");
    }
    node_id u = builder.intern(tokens[0]);
    node_id v = builder.intern(tokens[1]);
    try {
      builder.add_edge(u, v, w);
    } catch (const std::runtime_error& e) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return std::move(builder).build();
}

std::optional<node_id> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Graph::write_edge_list(std::ostream& out) const {
  const node_id n = node_count();
  for (node_id u = 0; u < n; ++u) {
    for (const Neighbor& nb : neighbors(u)) {
      if (nb.to <= u) continue;
      out << labels_[u] << ' ' << labels_[nb.to] << ' ' << format_double(nb.weight)
          << '\n';
    }
  }
}

// Equality is over labeled adjacency: reloading a written edge list may
// permute the dense indices, but the graph seen through labels must match.
bool Graph::operator==(const Graph& other) const {
  if (node_count() != other.node_count() || adj_.size() != other.adj_.size())
    return false;
  for (node_id u = 0; u < node_count(); ++u) {
    auto mapped = other.find(labels_[u]);
    if (!mapped) return false;
    auto mine = neighbors(u);
    auto theirs = other.neighbors(*mapped);
    if (mine.size() != theirs.size()) return false;
    std::vector<std::pair<std::string_view, double>> a, b;
    for (const Neighbor& nb : mine) a.emplace_back(labels_[nb.to], nb.weight);
    for (const Neighbor& nb : theirs) b.emplace_back(other.labels_[nb.to], nb.weight);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  return true;
}

void Graph::check_node(node_id v) const {
  if (v < 0 || v >= node_count())
    throw std::out_of_range("node index " + std::to_string(v) + " out of range, n=" +
                            std::to_string(node_count()));
}

NodeSet::NodeSet(std::vector<node_id> members, node_id n) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && (members_.front() < 0 || members_.back() >= n))
    throw std::out_of_range("node set member out of range");
  mask_.assign(n, 0);
  for (node_id v : members_) mask_[v] = 1;
}

NodeSet NodeSet::load(std::istream& in, const Graph& graph) {
  std::vector<node_id> members;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos)
      view = view.substr(0, hash);
    for (std::string_view token : split_tokens(view)) {
      auto id = graph.find(token);
      if (!id)
        throw std::runtime_error("line " + std::to_string(lineno) +
                                 ": unknown node '" + std::string(token) + "'");
      members.push_back(*id);
    }
  }
  return NodeSet(std::move(members), graph.node_count());
}

}  // namespace skelbc
