// Copyright 2026 The gbgc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "gbgc/engine.hpp"
#include "gbgc/graph.hpp"

namespace gbgc {

/// Sparse encoding of the binary N x N̄ projection matrix C: row i has its
/// single 1 in column column_of[i].
struct ProjectionMap {
  NodeId rows = 0;
  BallIndex cols = 0;
  std::vector<BallIndex> column_of;

  /// Diagonal of CᵀC.
  std::vector<std::uint32_t> column_sizes() const;

  friend bool operator==(const ProjectionMap&, const ProjectionMap&) = default;
};

/// Throws ValidationError unless `p` is a valid partition of n nodes.
ProjectionMap build_projection(const Partition& p, NodeId n);

struct WeightedSuperedge {
  BallIndex a;  // a < b
  BallIndex b;
  /// Number of original edges running between the two balls.
  std::int64_t weight;

  friend bool operator==(const WeightedSuperedge&, const WeightedSuperedge&) = default;
};

/// The coarsened graph. The projected Laplacian CᵀLC is kept in exact
/// integer form: off-diagonal entries are -weight of the matching superedge,
/// diagonal entries are the cut size of each ball.
struct CoarsenedGraph {
  BallIndex supernode_count = 0;
  /// Unweighted superedges, (a, b) with a < b, sorted.
  std::vector<Edge> superedges;
  std::vector<WeightedSuperedge> weighted_superedges;
  std::vector<std::int64_t> laplacian_diagonal;

  /// Superedges as an unweighted simple graph.
  Graph superedge_graph() const;

  /// Dense row-major copy of CᵀLC.
  std::vector<double> dense_projected_laplacian() const;
};

/// Builds superedges (one per pair of balls joined by any original edge) and
/// the projected Laplacian CᵀLC in integer arithmetic.
CoarsenedGraph build_coarse_graph(const Graph& g, const ProjectionMap& c);

}  // namespace gbgc
