// Copyright 2026 The gbgc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gbgc/graph.hpp"

namespace gbgc {

/// std::mt19937_64 output is fixed by the standard, but the standard
/// distributions are not; these helpers keep generated data identical
/// across standard libraries.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound), bound > 0 (Lemire's rejection method).
  std::uint64_t below(std::uint64_t bound);

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Fisher-Yates with DeterministicRng::below.
template <typename T>
void deterministic_shuffle(std::vector<T>& values, DeterministicRng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = rng.below(i);
    std::swap(values[i - 1], values[j]);
  }
}

/// G(n, p) with p = mean_degree / (n - 1), sampled by geometric skipping so
/// the cost is linear in n + E.
Graph erdos_renyi(NodeId n, double mean_degree, std::uint64_t seed);

}  // namespace gbgc
