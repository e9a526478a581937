// Copyright 2026 The gbgc Authors
// SPDX-License-Identifier: Apache-2.0

#include "gbgc/engine.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <queue>
#include <string>

#include "gbgc/error.hpp"

namespace gbgc {
namespace {

// A ball together with its induced subgraph. Local index i of `induced`
// corresponds to ball.members[i]; children are carved out of `induced`, so
// splitting never looks at edges that leave the parent.
struct WorkBall {
  GranularBall ball;
  Graph induced;
};

WorkBall make_work_ball(std::vector<NodeId> members, Graph induced) {
  WorkBall wb;
  wb.ball.members = std::move(members);
  wb.ball.internal_edge_count = induced.edge_count();
  wb.ball.quality = ball_quality(induced);
  wb.induced = std::move(induced);
  return wb;
}

WorkBall work_ball_from(const Graph& g, std::span<const NodeId> members) {
  InducedSubgraph sub = induced_subgraph(g, members);
  return make_work_ball(std::move(sub.to_global), std::move(sub.graph));
}

Partition to_partition(std::vector<GranularBall> balls, NodeId n) {
  std::sort(balls.begin(), balls.end(),
            [](const GranularBall& a, const GranularBall& b) { return a.members.front() < b.members.front(); });
  Partition p;
  p.assignment.assign(n, 0);
  for (BallIndex b = 0; b < balls.size(); ++b) {
    for (NodeId v : balls[b].members) p.assignment[v] = b;
  }
  p.balls = std::move(balls);
  return p;
}

Partition to_partition(std::vector<WorkBall> work, NodeId n) {
  std::vector<GranularBall> balls;
  balls.reserve(work.size());
  for (auto& wb : work) balls.push_back(std::move(wb.ball));
  return to_partition(std::move(balls), n);
}

std::vector<WorkBall> init_work_balls(const Graph& g, std::uint32_t target, WorkStats* stats) {
  const NodeId n = g.node_count();
  if (n == 0) throw ValidationError("cannot initialize balls on an empty graph");
  if (target == 0) throw ValidationError("init target must be positive");

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });

  std::vector<std::uint8_t> removed(n, 0);
  std::vector<WorkBall> out;
  std::size_t cursor = 0;
  std::vector<NodeId> layer, next, members;
  while (true) {
    while (cursor < n && removed[order[cursor]]) ++cursor;
    if (cursor == n) break;
    const NodeId center = order[cursor];

    members.assign({center});
    layer.assign({center});
    removed[center] = 1;
    if (stats) ++stats->node_visits;
    while (layer.size() <= target) {
      next.clear();
      for (NodeId u : layer) {
        auto adj = g.neighbors(u);
        if (stats) stats->edge_scans += adj.size();
        for (NodeId w : adj) {
          if (removed[w]) continue;
          removed[w] = 1;
          next.push_back(w);
        }
      }
      if (next.empty()) break;
      if (stats) stats->node_visits += next.size();
      members.insert(members.end(), next.begin(), next.end());
      layer.swap(next);
    }
    out.push_back(work_ball_from(g, members));
  }
  return out;
}

std::pair<WorkBall, WorkBall> split_work_ball(const WorkBall& parent, WorkStats* stats) {
  const Graph& local = parent.induced;
  const NodeId n = local.node_count();
  if (n < 2) throw NotSplittableError("a singleton ball cannot be split");

  // Local order matches global order, so the lowest local index wins ties.
  NodeId center_a = 0;
  for (NodeId v = 1; v < n; ++v) {
    if (local.degree(v) > local.degree(center_a)) center_a = v;
  }
  NodeId center_b = center_a == 0 ? 1 : 0;
  for (NodeId v = 0; v < n; ++v) {
    if (v != center_a && local.degree(v) > local.degree(center_b)) center_b = v;
  }

  // FIFO two-source BFS seeded A before B: within every layer all of A's
  // nodes are dequeued before B's, so same-layer contention goes to A.
  constexpr std::uint8_t unowned = 0, owner_a = 1, owner_b = 2;
  std::vector<std::uint8_t> owner(n, unowned);
  std::vector<NodeId> queue;
  queue.reserve(n);
  owner[center_a] = owner_a;
  owner[center_b] = owner_b;
  queue.push_back(center_a);
  queue.push_back(center_b);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    auto adj = local.neighbors(u);
    if (stats) {
      ++stats->node_visits;
      stats->edge_scans += adj.size();
    }
    for (NodeId w : adj) {
      if (owner[w] != unowned) continue;
      owner[w] = owner[u];
      queue.push_back(w);
    }
  }

  std::vector<NodeId> local_a, local_b;
  for (NodeId v = 0; v < n; ++v) {
    // Unreachable members default to A.
    (owner[v] == owner_b ? local_b : local_a).push_back(v);
  }

  auto make_child = [&](const std::vector<NodeId>& locals) {
    InducedSubgraph sub = induced_subgraph(local, locals);
    std::vector<NodeId> global(locals.size());
    for (std::size_t i = 0; i < locals.size(); ++i) global[i] = parent.ball.members[locals[i]];
    return make_work_ball(std::move(global), std::move(sub.graph));
  };
  return {make_child(local_a), make_child(local_b)};
}

}  // namespace

std::uint32_t default_init_target(NodeId n) noexcept {
  if (n == 0) return 1;
  auto r = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(n)));
  while (static_cast<std::uint64_t>(r) * r > n) --r;
  while (static_cast<std::uint64_t>(r) * r < n) ++r;
  return std::max<std::uint32_t>(r, 1);
}

double ball_quality(const Graph& ball) {
  const NodeId n = ball.node_count();
  if (n == 0) throw ContractError("ball quality is undefined for an empty ball");
  const auto counts = count_ordered_triangles_and_wedges(ball);
  double q = static_cast<double>(ball.edge_count()) / static_cast<double>(n);
  if (counts.ordered_wedges > 0) {
    q += static_cast<double>(counts.ordered_triangles) / static_cast<double>(counts.ordered_wedges);
  }
  return q;
}

double ball_quality(const Graph& g, std::span<const NodeId> members) {
  if (members.empty()) throw ContractError("ball quality is undefined for an empty ball");
  for (NodeId v : members) {
    if (v >= g.node_count()) throw ValidationError("ball member out of range");
  }
  return ball_quality(induced_subgraph(g, members).graph);
}

Partition init_balls(const Graph& g, std::uint32_t target, WorkStats* stats) {
  return to_partition(init_work_balls(g, target, stats), g.node_count());
}

std::pair<GranularBall, GranularBall> split_ball(const Graph& g, const GranularBall& ball,
                                                 WorkStats* stats) {
  if (ball.members.size() < 2) throw NotSplittableError("a singleton ball cannot be split");
  WorkBall parent = work_ball_from(g, ball.members);
  auto [a, b] = split_work_ball(parent, stats);
  return {std::move(a.ball), std::move(b.ball)};
}

Partition adaptive_coarsen(const Graph& g, const CoarsenConfig& cfg, CoarsenTrace* trace) {
  if (!std::holds_alternative<AdaptiveMode>(cfg.mode)) {
    throw ValidationError("adaptive_coarsen requires adaptive mode");
  }
  const NodeId n = g.node_count();
  if (n == 0) throw ValidationError("cannot coarsen an empty graph");
  const std::uint32_t target = cfg.init_ball_target ? cfg.init_ball_target : default_init_target(n);

  std::deque<WorkBall> pending;
  if (cfg.ablation == Ablation::no_init) {
    std::vector<NodeId> all(n);
    std::iota(all.begin(), all.end(), NodeId{0});
    pending.push_back(make_work_ball(std::move(all), g));
  } else {
    for (auto& wb : init_work_balls(g, target, nullptr)) pending.push_back(std::move(wb));
  }
  if (trace) trace->initial_ball_count = pending.size();

  if (cfg.ablation == Ablation::no_split) {
    return to_partition(std::vector<WorkBall>(std::make_move_iterator(pending.begin()),
                                              std::make_move_iterator(pending.end())),
                        n);
  }

  std::vector<GranularBall> final_balls;
  while (!pending.empty()) {
    WorkBall current = std::move(pending.front());
    pending.pop_front();
    if (current.ball.size() < 2) {
      final_balls.push_back(std::move(current.ball));
      continue;
    }
    auto [a, b] = split_work_ball(current, nullptr);
    const bool accept = a.ball.quality + b.ball.quality > current.ball.quality;
    if (trace) {
      trace->decisions.push_back({current.ball.size(), current.ball.quality, a.ball.quality,
                                  b.ball.quality, accept});
    }
    if (accept) {
      pending.push_back(std::move(a));
      pending.push_back(std::move(b));
    } else {
      final_balls.push_back(std::move(current.ball));
    }
  }
  return to_partition(std::move(final_balls), n);
}

std::size_t ratio_target_count(double ratio, NodeId n) {
  const double exact = ratio * static_cast<double>(n);
  // Products like 0.3 * 10 land a hair above the integer; snap those back.
  const double k = std::ceil(exact - 1e-9 * std::max(1.0, exact));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::max(0.0, k)));
}

Partition ratio_coarsen(const Graph& g, double ratio, std::uint32_t init_target, CoarsenTrace* trace) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw ValidationError("ratio must lie strictly between 0 and 1, got " + std::to_string(ratio));
  }
  const NodeId n = g.node_count();
  if (n == 0) throw ValidationError("cannot coarsen an empty graph");
  const std::size_t k = ratio_target_count(ratio, n);
  const std::uint32_t target = init_target ? init_target : default_init_target(n);

  std::vector<WorkBall> initial = init_work_balls(g, target, nullptr);
  if (trace) trace->initial_ball_count = initial.size();
  if (initial.size() >= k) return to_partition(std::move(initial), n);

  struct Candidate {
    WorkBall parent;
    WorkBall child_a;
    WorkBall child_b;
    double gain;
  };
  std::vector<Candidate> storage;
  std::vector<GranularBall> done;
  // Best first: highest gain, then larger ball, then lower smallest member.
  auto worse = [&storage](std::size_t x, std::size_t y) {
    const Candidate& a = storage[x];
    const Candidate& b = storage[y];
    if (a.gain != b.gain) return a.gain < b.gain;
    if (a.parent.ball.size() != b.parent.ball.size()) return a.parent.ball.size() < b.parent.ball.size();
    return a.parent.ball.members.front() > b.parent.ball.members.front();
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)> heap(worse);

  auto offer = [&](WorkBall wb) {
    if (wb.ball.size() < 2) {
      done.push_back(std::move(wb.ball));
      return;
    }
    auto [a, b] = split_work_ball(wb, nullptr);
    const double gain = a.ball.quality + b.ball.quality - wb.ball.quality;
    storage.push_back({std::move(wb), std::move(a), std::move(b), gain});
    heap.push(storage.size() - 1);
  };
  for (auto& wb : initial) offer(std::move(wb));

  std::size_t count = initial.size();
  while (count < k && !heap.empty()) {
    const std::size_t best = heap.top();
    heap.pop();
    Candidate& c = storage[best];
    if (trace) {
      trace->decisions.push_back({c.parent.ball.size(), c.parent.ball.quality, c.child_a.ball.quality,
                                  c.child_b.ball.quality, true});
    }
    ++count;
    WorkBall a = std::move(c.child_a);
    WorkBall b = std::move(c.child_b);
    c.parent = WorkBall{};
    offer(std::move(a));
    offer(std::move(b));
  }
  while (!heap.empty()) {
    done.push_back(std::move(storage[heap.top()].parent.ball));
    heap.pop();
  }
  return to_partition(std::move(done), n);
}

Partition coarsen(const Graph& g, const CoarsenConfig& cfg, CoarsenTrace* trace) {
  if (const auto* r = std::get_if<RatioMode>(&cfg.mode)) {
    return ratio_coarsen(g, r->ratio, cfg.init_ball_target, trace);
  }
  return adaptive_coarsen(g, cfg, trace);
}

double achieved_ratio(const Partition& p, NodeId n) {
  if (n == 0) return 0.0;
  return static_cast<double>(p.ball_count()) / static_cast<double>(n);
}

Partition partition_from_assignment(const Graph& g, std::span<const BallIndex> assignment) {
  const NodeId n = g.node_count();
  if (assignment.size() != n) {
    throw ValidationError("assignment has " + std::to_string(assignment.size()) + " entries but the graph has " +
                          std::to_string(n) + " nodes");
  }
  BallIndex count = 0;
  for (BallIndex b : assignment) count = std::max<BallIndex>(count, b + 1);
  std::vector<std::vector<NodeId>> members(count);
  for (NodeId v = 0; v < n; ++v) members[assignment[v]].push_back(v);
  std::vector<GranularBall> balls;
  balls.reserve(count);
  for (BallIndex b = 0; b < count; ++b) {
    if (members[b].empty()) {
      throw ValidationError("supernode id " + std::to_string(b) + " has no members");
    }
    WorkBall wb = work_ball_from(g, members[b]);
    balls.push_back(std::move(wb.ball));
  }
  // Keep the caller's numbering rather than re-sorting.
  Partition p;
  p.balls = std::move(balls);
  p.assignment.assign(assignment.begin(), assignment.end());
  return p;
}

bool is_valid_partition(const Partition& p, NodeId n) {
  if (p.assignment.size() != n) return false;
  if (n > 0 && (p.balls.empty() || p.balls.size() > n)) return false;
  std::vector<std::uint8_t> seen(n, 0);
  for (BallIndex b = 0; b < p.balls.size(); ++b) {
    const auto& m = p.balls[b].members;
    if (m.empty()) return false;
    for (NodeId v : m) {
      if (v >= n || seen[v] || p.assignment[v] != b) return false;
      seen[v] = 1;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](std::uint8_t s) { return s != 0; });
}

}  // namespace gbgc
