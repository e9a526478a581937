// Copyright 2026 The gbgc Authors
// SPDX-License-Identifier: Apache-2.0

#include "gbgc/generate.hpp"

#include <algorithm>
#include <cmath>

namespace gbgc {

std::uint64_t DeterministicRng::below(std::uint64_t bound) {
  // 128-bit multiply-shift with rejection of the biased low region.
  unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(engine_()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

Graph erdos_renyi(NodeId n, double mean_degree, std::uint64_t seed) {
  std::vector<Edge> edges;
  if (n < 2 || mean_degree <= 0.0) return from_edge_list(n, edges);
  const double p = std::min(1.0, mean_degree / static_cast<double>(n - 1));
  DeterministicRng rng(seed);
  edges.reserve(static_cast<std::size_t>(mean_degree * n / 2.0 * 1.1) + 16);

  if (p >= 1.0) {
    for (NodeId v = 1; v < n; ++v) {
      for (NodeId w = 0; w < v; ++w) edges.push_back({w, v});
    }
    return from_edge_list(n, edges);
  }

  // Batagelj-Brandes: walk the lower triangle (v > w) in row order, jumping
  // geometric gaps between successive edges.
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  while (v < static_cast<std::int64_t>(n)) {
    const double r = 1.0 - rng.uniform();  // (0, 1]
    w += 1 + static_cast<std::int64_t>(std::floor(std::log(r) / log_q));
    while (w >= v && v < static_cast<std::int64_t>(n)) {
      w -= v;
      ++v;
    }
    if (v < static_cast<std::int64_t>(n)) edges.push_back({static_cast<NodeId>(w), static_cast<NodeId>(v)});
  }
  return from_edge_list(n, edges);
}

}  // namespace gbgc
