// Copyright 2026 The gbgc Authors
// SPDX-License-Identifier: Apache-2.0

#include "gbgc/graph.hpp"

#include <algorithm>
#include <string>

#include "gbgc/error.hpp"

namespace gbgc {

std::vector<std::uint32_t> Graph::degrees() const {
  std::vector<std::uint32_t> out(node_count());
  for (NodeId v = 0; v < node_count(); ++v) out[v] = degree(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
  if (u >= node_count() || v >= node_count()) return false;
  auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

Graph from_sorted_csr(std::vector<EdgeCount> offsets, std::vector<NodeId> targets) {
  Graph g;
  g.offsets_ = std::move(offsets);
  g.targets_ = std::move(targets);
  return g;
}

Graph from_edge_list(NodeId node_count, std::span<const Edge> edge_pairs) {
  std::vector<Edge> arcs;
  arcs.reserve(edge_pairs.size() * 2);
  for (const Edge& e : edge_pairs) {
    if (e.u >= node_count || e.v >= node_count) {
      throw ValidationError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                            ") has an index out of range for " + std::to_string(node_count) +
                            " nodes");
    }
    if (e.u == e.v) continue;
    arcs.push_back({e.u, e.v});
    arcs.push_back({e.v, e.u});
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  std::vector<EdgeCount> offsets(static_cast<std::size_t>(node_count) + 1, 0);
  std::vector<NodeId> targets;
  targets.reserve(arcs.size());
  for (const Edge& a : arcs) {
    ++offsets[a.u + 1];
    targets.push_back(a.v);
  }
  for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
  return from_sorted_csr(std::move(offsets), std::move(targets));
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  InducedSubgraph out;
  out.to_global.assign(nodes.begin(), nodes.end());
  std::sort(out.to_global.begin(), out.to_global.end());
  out.to_global.erase(std::unique(out.to_global.begin(), out.to_global.end()), out.to_global.end());

  // Local lookup by binary search keeps the cost proportional to the
  // members' adjacency, with no O(N) scratch per call.
  const auto& members = out.to_global;
  std::vector<EdgeCount> offsets(members.size() + 1, 0);
  std::vector<NodeId> targets;
  for (std::size_t i = 0; i < members.size(); ++i) {
    auto adj = g.neighbors(members[i]);
    auto it = members.begin();
    // Both sequences are sorted, so a galloping merge suffices.
    for (NodeId w : adj) {
      it = std::lower_bound(it, members.end(), w);
      if (it == members.end()) break;
      if (*it == w) targets.push_back(static_cast<NodeId>(it - members.begin()));
    }
    offsets[i + 1] = targets.size();
  }
  out.graph = from_sorted_csr(std::move(offsets), std::move(targets));
  return out;
}

std::vector<NodeId> BfsLayering::visited() const {
  std::vector<NodeId> out;
  for (const auto& layer : layers) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

BfsLayering bfs_layers(const Graph& g, NodeId source,
                       std::optional<std::span<const std::uint8_t>> allowed) {
  if (source >= g.node_count()) throw ValidationError("bfs source out of range");
  if (allowed && (allowed->size() != g.node_count() || !(*allowed)[source])) {
    throw ValidationError("bfs source not in the allowed set");
  }
  BfsLayering out;
  out.source = source;
  std::vector<std::uint8_t> seen(g.node_count(), 0);
  seen[source] = 1;
  out.layers.push_back({source});
  while (true) {
    std::vector<NodeId> next;
    for (NodeId u : out.layers.back()) {
      for (NodeId w : g.neighbors(u)) {
        if (seen[w] || (allowed && !(*allowed)[w])) continue;
        seen[w] = 1;
        next.push_back(w);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    out.layers.push_back(std::move(next));
  }
  return out;
}

TriangleWedgeCounts count_ordered_triangles_and_wedges(const Graph& g) {
  const NodeId n = g.node_count();
  TriangleWedgeCounts counts;
  for (NodeId v = 0; v < n; ++v) {
    const std::uint64_t d = g.degree(v);
    counts.ordered_wedges += d * (d - (d > 0 ? 1 : 0));
  }

  // Orient each edge toward the endpoint of higher (degree, index) rank; every
  // triangle is then found exactly once from its lowest-ranked corner.
  auto ranks_below = [&](NodeId a, NodeId b) {
    const auto da = g.degree(a), db = g.degree(b);
    return da < db || (da == db && a < b);
  };
  std::vector<EdgeCount> offsets(static_cast<std::size_t>(n) + 1, 0);
  std::vector<NodeId> forward;
  forward.reserve(g.edge_count());
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId w : g.neighbors(u)) {
      if (ranks_below(u, w)) forward.push_back(w);
    }
    offsets[u + 1] = forward.size();
  }

  std::uint64_t triangles = 0;
  for (NodeId u = 0; u < n; ++u) {
    const NodeId* ub = forward.data() + offsets[u];
    const NodeId* ue = forward.data() + offsets[u + 1];
    for (const NodeId* pv = ub; pv != ue; ++pv) {
      const NodeId* a = ub;
      const NodeId* b = forward.data() + offsets[*pv];
      const NodeId* be = forward.data() + offsets[*pv + 1];
      while (a != ue && b != be) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++triangles;
          ++a;
          ++b;
        }
      }
    }
  }
  counts.ordered_triangles = 6 * triangles;
  return counts;
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
  std::vector<std::vector<NodeId>> out;
  std::vector<std::uint8_t> seen(g.node_count(), 0);
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (seen[s]) continue;
    std::vector<NodeId> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (NodeId w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace gbgc
