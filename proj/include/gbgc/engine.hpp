// Copyright 2026 The gbgc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "gbgc/graph.hpp"

namespace gbgc {

/// A set of original nodes that becomes one supernode.
struct GranularBall {
  /// Global node indices, sorted ascending, nonempty.
  std::vector<NodeId> members;
  /// Average internal degree term plus transitivity of the induced subgraph.
  double quality = 0.0;
  EdgeCount internal_edge_count = 0;

  std::size_t size() const noexcept { return members.size(); }

  friend bool operator==(const GranularBall&, const GranularBall&) = default;
};

using BallIndex = std::uint32_t;

/// Disjoint cover of [0, N) by balls. Balls are ordered by smallest member;
/// `assignment[v]` is the index of the ball holding v.
struct Partition {
  std::vector<GranularBall> balls;
  std::vector<BallIndex> assignment;

  std::size_t ball_count() const noexcept { return balls.size(); }
  NodeId node_count() const noexcept { return static_cast<NodeId>(assignment.size()); }

  friend bool operator==(const Partition&, const Partition&) = default;
};

enum class Ablation { none, no_split, no_init };

struct AdaptiveMode {};
struct RatioMode {
  double ratio;
};

struct CoarsenConfig {
  std::variant<AdaptiveMode, RatioMode> mode = AdaptiveMode{};
  Ablation ablation = Ablation::none;
  /// Layer-size threshold for initialization; 0 means ceil(sqrt(N)).
  std::uint32_t init_ball_target = 0;
};

/// ceil(sqrt(n)) computed in integers.
std::uint32_t default_init_target(NodeId n) noexcept;

/// Quality of a ball whose induced subgraph is `ball`:
///   E/N + ordered_triangles / ordered_wedges  (second term 0 without wedges).
double ball_quality(const Graph& ball);

/// Quality of `members` in `g`. Throws ContractError on an empty set.
double ball_quality(const Graph& g, std::span<const NodeId> members);

/// Traversal counters used to check the linear-work claims in tests.
struct WorkStats {
  std::uint64_t node_visits = 0;
  std::uint64_t edge_scans = 0;
};

/// Degree-ranked BFS initialization. Each round grows a BFS from the
/// highest-degree remaining node until a layer holds more than `target`
/// nodes (or the reachable remainder runs out), takes every layer so far as
/// one ball and removes it.
Partition init_balls(const Graph& g, std::uint32_t target, WorkStats* stats = nullptr);

/// Splits a ball around its two highest internal-degree members using a
/// synchronized two-source BFS. Throws NotSplittableError for singletons.
std::pair<GranularBall, GranularBall> split_ball(const Graph& g, const GranularBall& ball,
                                                 WorkStats* stats = nullptr);

/// One tentative split decision of the adaptive loop.
struct SplitDecision {
  std::size_t parent_size = 0;
  double parent_quality = 0.0;
  double child_a_quality = 0.0;
  double child_b_quality = 0.0;
  bool accepted = false;
};

struct CoarsenTrace {
  std::vector<SplitDecision> decisions;
  std::size_t initial_ball_count = 0;
};

/// Quality-gated recursive splitting. Config must be in adaptive mode.
Partition adaptive_coarsen(const Graph& g, const CoarsenConfig& cfg = {},
                           CoarsenTrace* trace = nullptr);

/// Non-adaptive variant: greedy highest-gain splitting until the ball count
/// reaches max(1, ceil(ratio * N)). Throws ValidationError unless
/// 0 < ratio < 1.
Partition ratio_coarsen(const Graph& g, double ratio, std::uint32_t init_target = 0,
                        CoarsenTrace* trace = nullptr);

/// Dispatches on cfg.mode.
Partition coarsen(const Graph& g, const CoarsenConfig& cfg, CoarsenTrace* trace = nullptr);

/// max(1, ceil(ratio * n)) without floating-point surprises at exact products.
std::size_t ratio_target_count(double ratio, NodeId n);

double achieved_ratio(const Partition& p, NodeId n);

/// Rebuilds a Partition (with qualities) from a per-node ball assignment.
/// Throws ValidationError on length mismatch or non-dense ball ids.
Partition partition_from_assignment(const Graph& g, std::span<const BallIndex> assignment);

/// Checks disjointness, coverage and assignment consistency.
bool is_valid_partition(const Partition& p, NodeId n);

}  // namespace gbgc
