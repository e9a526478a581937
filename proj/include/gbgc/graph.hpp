// Copyright 2026 The gbgc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gbgc {

using NodeId = std::uint32_t;
using EdgeCount = std::uint64_t;

struct Edge {
  NodeId u;
  NodeId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable undirected simple graph in CSR form.
///
/// Adjacency lists are sorted ascending. Every traversal in the library
/// derives its order from that, so results never depend on input order.
class Graph {
 public:
  Graph() = default;

  NodeId node_count() const noexcept { return static_cast<NodeId>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  EdgeCount edge_count() const noexcept { return targets_.size() / 2; }
  bool empty() const noexcept { return node_count() == 0; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(NodeId v) const noexcept {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::vector<std::uint32_t> degrees() const;

  /// Each undirected edge once, as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool has_edge(NodeId u, NodeId v) const noexcept;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph from_edge_list(NodeId, std::span<const Edge>);
  friend Graph from_sorted_csr(std::vector<EdgeCount>, std::vector<NodeId>);

  std::vector<EdgeCount> offsets_;
  std::vector<NodeId> targets_;
};

/// Builds a graph from raw pairs. Self-loops are dropped, duplicates merged
/// and the symmetric closure taken. Throws ValidationError naming the first
/// pair with an index outside [0, node_count).
Graph from_edge_list(NodeId node_count, std::span<const Edge> edge_pairs);

// Internal fast path: offsets/targets must already describe a symmetric,
// sorted, loop-free adjacency structure.
Graph from_sorted_csr(std::vector<EdgeCount> offsets, std::vector<NodeId> targets);

struct InducedSubgraph {
  Graph graph;
  /// local index -> global index, ascending.
  std::vector<NodeId> to_global;
};

/// Subgraph induced by `nodes` (any order, duplicates ignored). Local indices
/// follow ascending global order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

struct BfsLayering {
  NodeId source = 0;
  std::vector<std::vector<NodeId>> layers;

  std::vector<NodeId> visited() const;
};

/// BFS from `source`, optionally restricted to `allowed` (a per-node mask of
/// length node_count). Nodes inside a layer are listed in ascending order.
BfsLayering bfs_layers(const Graph& g, NodeId source,
                       std::optional<std::span<const std::uint8_t>> allowed = std::nullopt);

struct TriangleWedgeCounts {
  /// sum over ordered distinct (i, j, k) of A_ij A_jk A_ki, i.e. 6 x triangles.
  std::uint64_t ordered_triangles = 0;
  /// sum over ordered distinct (i, j, k) of A_ij A_ik, i.e. sum deg(deg - 1).
  std::uint64_t ordered_wedges = 0;

  friend bool operator==(const TriangleWedgeCounts&, const TriangleWedgeCounts&) = default;
};

TriangleWedgeCounts count_ordered_triangles_and_wedges(const Graph& g);

/// Maximal connected node sets, each sorted, ordered by smallest member.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

}  // namespace gbgc
