// Copyright 2026 The gbgc Authors
// SPDX-License-Identifier: Apache-2.0

#include "gbgc/coarse.hpp"

#include <algorithm>
#include <string>

#include "gbgc/error.hpp"

namespace gbgc {

std::vector<std::uint32_t> ProjectionMap::column_sizes() const {
  std::vector<std::uint32_t> sizes(cols, 0);
  for (BallIndex c : column_of) ++sizes[c];
  return sizes;
}

ProjectionMap build_projection(const Partition& p, NodeId n) {
  if (!is_valid_partition(p, n)) {
    throw ValidationError("partition is not a disjoint cover of " + std::to_string(n) + " nodes");
  }
  ProjectionMap c;
  c.rows = n;
  c.cols = static_cast<BallIndex>(p.ball_count());
  c.column_of = p.assignment;
  return c;
}

Graph CoarsenedGraph::superedge_graph() const { return from_edge_list(supernode_count, superedges); }

std::vector<double> CoarsenedGraph::dense_projected_laplacian() const {
  const std::size_t m = supernode_count;
  std::vector<double> dense(m * m, 0.0);
  for (std::size_t a = 0; a < m; ++a) dense[a * m + a] = static_cast<double>(laplacian_diagonal[a]);
  for (const auto& e : weighted_superedges) {
    dense[e.a * m + e.b] = -static_cast<double>(e.weight);
    dense[e.b * m + e.a] = -static_cast<double>(e.weight);
  }
  return dense;
}

CoarsenedGraph build_coarse_graph(const Graph& g, const ProjectionMap& c) {
  if (c.rows != g.node_count() || c.column_of.size() != g.node_count()) {
    throw ValidationError("projection map does not match the graph's node count");
  }
  CoarsenedGraph cg;
  cg.supernode_count = c.cols;
  cg.laplacian_diagonal.assign(c.cols, 0);

  std::vector<Edge> cross;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const BallIndex a = c.column_of[u];
    if (a >= c.cols) throw ValidationError("projection column out of range");
    for (NodeId v : g.neighbors(u)) {
      if (v <= u) continue;
      const BallIndex b = c.column_of[v];
      if (a == b) continue;
      // (CᵀLC)[a][a] = sum of L over rows and columns in a = cut edges of a.
      ++cg.laplacian_diagonal[a];
      ++cg.laplacian_diagonal[b];
      cross.push_back({std::min(a, b), std::max(a, b)});
    }
  }
  std::sort(cross.begin(), cross.end());
  for (std::size_t i = 0; i < cross.size();) {
    std::size_t j = i;
    while (j < cross.size() && cross[j] == cross[i]) ++j;
    cg.superedges.push_back(cross[i]);
    cg.weighted_superedges.push_back({cross[i].u, cross[i].v, static_cast<std::int64_t>(j - i)});
    i = j;
  }
  return cg;
}

}  // namespace gbgc
