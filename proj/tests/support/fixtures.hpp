// Copyright 2026 The gbgc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "gbgc/graph.hpp"

namespace gbgc::testing {

inline Graph complete(NodeId n) {
  std::vector<Edge> e;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) e.push_back({u, v});
  return from_edge_list(n, e);
}

inline Graph path(NodeId n) {
  std::vector<Edge> e;
  for (NodeId u = 0; u + 1 < n; ++u) e.push_back({u, u + 1});
  return from_edge_list(n, e);
}

/// Node 0 is the hub.
inline Graph star(NodeId leaves) {
  std::vector<Edge> e;
  for (NodeId v = 1; v <= leaves; ++v) e.push_back({0, v});
  return from_edge_list(leaves + 1, e);
}

/// Triangles {0,1,2} and {3,4,5} joined by the bridge 2-3.
inline Graph barbell() {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}};
  return from_edge_list(6, e);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  for (const Edge& x : b.edges()) e.push_back({x.u + a.node_count(), x.v + a.node_count()});
  return from_edge_list(a.node_count() + b.node_count(), e);
}

}  // namespace gbgc::testing
