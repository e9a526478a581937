// Copyright 2026 The gbgc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gbgc/engine.hpp"
#include "gbgc/error.hpp"
#include "gbgc/io.hpp"
#include "gbgc/spectral.hpp"

namespace gbgc {

/// Bad flag combination; the CLI maps it to exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Subcommand { coarsen, evaluate, bench };
enum class InputFormat { tudataset, edgelist };
enum class ModeKind { adaptive, ratio };

struct CliInvocation {
  Subcommand subcommand = Subcommand::coarsen;
  std::filesystem::path input;
  InputFormat format = InputFormat::edgelist;
  /// TUDataset prefix; defaults to the input directory's name.
  std::string dataset_name;
  ModeKind mode = ModeKind::adaptive;
  std::optional<double> ratio;
  Ablation ablation = Ablation::none;
  LaplacianKind laplacian = LaplacianKind::combinatorial;
  SdMode sd_mode = SdMode::projected;
  std::filesystem::path output = "gbgc-out";
  /// evaluate only; defaults to <output>/mapping.jsonl.
  std::filesystem::path mapping;
  unsigned jobs = 1;
  bool skip_sd = false;
  /// bench only.
  std::vector<NodeId> bench_sizes = {1000, 5000, 10000, 50000};
};

/// Throws UsageError on inconsistent flags (ratio without ratio mode, ...).
void validate(const CliInvocation& inv);

CoarsenConfig to_config(const CliInvocation& inv);

/// `--jobs` default: GBGC_JOBS if set to a positive integer, else 1.
unsigned default_jobs();

/// Loads every graph named by the invocation's input and format.
DatasetBundle load_input(const CliInvocation& inv);

/// Coarsens one graph and, unless skip_sd, evaluates it.
CoarsenRecord coarsen_one(const Graph& g, std::size_t index, const CliInvocation& inv);

/// Control partition for SD comparisons: the same ball sizes as `like`, with
/// the nodes dealt out in a seeded shuffle.
Partition random_partition_like(const Graph& g, const Partition& like, std::uint64_t seed);

/// Each returns the process exit status: 0 on success, 1 when any graph or
/// input failed. Diagnostics go to `err`, the summary to `out`.
int run_coarsen(const CliInvocation& inv, std::ostream& out, std::ostream& err);
int run_evaluate(const CliInvocation& inv, std::ostream& out, std::ostream& err);
int run_bench(const CliInvocation& inv, std::ostream& out, std::ostream& err);

}  // namespace gbgc
