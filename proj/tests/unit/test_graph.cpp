// Copyright 2026 The gbgc Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "gbgc/error.hpp"
#include "gbgc/generate.hpp"
#include "gbgc/graph.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace gbgc;
using namespace gbgc::testing;

TEST_CASE("from_edge_list builds K3") {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}};
  const Graph g = from_edge_list(3, e);
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.degrees() == std::vector<std::uint32_t>{2, 2, 2});
}

TEST_CASE("from_edge_list drops loops and duplicates") {
  const std::vector<Edge> e{{0, 1}, {1, 0}, {0, 0}};
  const Graph g = from_edge_list(2, e);
  CHECK(g.edge_count() == 1);
  CHECK(g.degrees() == std::vector<std::uint32_t>{1, 1});
}

TEST_CASE("from_edge_list rejects out-of-range indices") {
  const std::vector<Edge> e{{0, 5}};
  CHECK_THROWS_AS(from_edge_list(3, e), ValidationError);
  try {
    from_edge_list(3, e);
  } catch (const ValidationError& err) {
    CHECK(std::string(err.what()).find("(0, 5)") != std::string::npos);
  }
}

TEST_CASE("graph invariants hold on random inputs and re-feeding is idempotent") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    DeterministicRng rng(seed);
    const NodeId n = 1 + static_cast<NodeId>(rng.below(40));
    std::vector<Edge> raw;
    for (int i = 0; i < 80; ++i) raw.push_back({static_cast<NodeId>(rng.below(n)), static_cast<NodeId>(rng.below(n))});
    const Graph g = from_edge_list(n, raw);
    std::uint64_t degree_sum = 0;
    for (NodeId v = 0; v < n; ++v) {
      auto adj = g.neighbors(v);
      degree_sum += adj.size();
      CHECK(std::is_sorted(adj.begin(), adj.end()));
      CHECK(std::adjacent_find(adj.begin(), adj.end()) == adj.end());
      for (NodeId w : adj) {
        CHECK(w != v);
        CHECK(g.has_edge(w, v));
      }
    }
    CHECK(degree_sum == 2 * g.edge_count());
    const auto edges = g.edges();
    CHECK(from_edge_list(n, edges) == g);
  }
}

TEST_CASE("induced_subgraph") {
  SUBCASE("K3 on two nodes is K2") {
    const std::vector<NodeId> nodes{0, 1};
    const auto sub = induced_subgraph(complete(3), nodes);
    CHECK(sub.graph.node_count() == 2);
    CHECK(sub.graph.edge_count() == 1);
  }
  SUBCASE("path endpoints are disconnected") {
    const std::vector<NodeId> nodes{2, 0};
    const auto sub = induced_subgraph(path(3), nodes);
    CHECK(sub.graph.node_count() == 2);
    CHECK(sub.graph.edge_count() == 0);
    CHECK(sub.to_global == std::vector<NodeId>{0, 2});
  }
  SUBCASE("all nodes gives an identical graph") {
    const Graph g = erdos_renyi(50, 4.0, 7);
    std::vector<NodeId> all(50);
    for (NodeId v = 0; v < 50; ++v) all[v] = v;
    const auto sub = induced_subgraph(g, all);
    CHECK(sub.graph == g);
    CHECK(sub.graph.degrees() == g.degrees());
  }
  SUBCASE("empty node set") {
    const auto sub = induced_subgraph(complete(3), std::vector<NodeId>{});
    CHECK(sub.graph.node_count() == 0);
  }
}

TEST_CASE("bfs_layers") {
  CHECK(bfs_layers(path(4), 0).layers == std::vector<std::vector<NodeId>>{{0}, {1}, {2}, {3}});
  CHECK(bfs_layers(complete(3), 1).layers == std::vector<std::vector<NodeId>>{{1}, {0, 2}});
  const std::vector<std::uint8_t> allowed{1, 0, 1};
  CHECK(bfs_layers(path(3), 0, allowed).layers == std::vector<std::vector<NodeId>>{{0}});
  CHECK_THROWS_AS(bfs_layers(path(3), 1, allowed), ValidationError);
}

TEST_CASE("bfs_layers visits each reachable node once with valid layering") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = erdos_renyi(60, 2.0, seed);
    const auto bfs = bfs_layers(g, 0);
    auto visited = bfs.visited();
    std::sort(visited.begin(), visited.end());
    CHECK(std::adjacent_find(visited.begin(), visited.end()) == visited.end());
    const auto dist = distances_within(g, [&] {
      std::vector<NodeId> all(60);
      for (NodeId v = 0; v < 60; ++v) all[v] = v;
      return all;
    }(), 0);
    std::size_t reachable = 0;
    for (auto d : dist) reachable += d != std::numeric_limits<std::uint32_t>::max();
    CHECK(visited.size() == reachable);
    for (std::size_t i = 0; i < bfs.layers.size(); ++i) {
      CHECK(std::is_sorted(bfs.layers[i].begin(), bfs.layers[i].end()));
      for (NodeId v : bfs.layers[i]) CHECK(dist[v] == i);
    }
  }
}

TEST_CASE("ordered triangle and wedge counts") {
  CHECK(count_ordered_triangles_and_wedges(complete(3)) == TriangleWedgeCounts{6, 6});
  CHECK(count_ordered_triangles_and_wedges(path(3)) == TriangleWedgeCounts{0, 2});
  CHECK(count_ordered_triangles_and_wedges(barbell()) == TriangleWedgeCounts{12, 20});
  CHECK(count_ordered_triangles_and_wedges(Graph{}) == TriangleWedgeCounts{0, 0});
}

TEST_CASE("triangle counts match brute force on every graph up to 6 nodes") {
  std::size_t checked = 0;
  for (NodeId n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const auto [tri, wedge] = brute_triangles_wedges(dense_adjacency(g));
      const auto counts = count_ordered_triangles_and_wedges(g);
      REQUIRE(counts.ordered_triangles == tri);
      REQUIRE(counts.ordered_wedges == wedge);
      ++checked;
    }
  }
  CHECK(checked == 1 + 2 + 8 + 64 + 1024 + 32768);
}

TEST_CASE("connected_components") {
  CHECK(connected_components(complete(3)).size() == 1);
  CHECK(connected_components(from_edge_list(2, std::vector<Edge>{})).size() == 2);
  const auto comps = connected_components(disjoint_union(complete(3), complete(2)));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<NodeId>{0, 1, 2});
  CHECK(comps[1] == std::vector<NodeId>{3, 4});
}
