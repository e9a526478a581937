// Copyright 2026 The gbgc Authors
// SPDX-License-Identifier: Apache-2.0

// gbgc: granular-ball graph coarsening front end.
//
//   gbgc coarsen  --input <path> --format {tudataset,edgelist} [--mode adaptive|ratio --ratio r]
//   gbgc evaluate --input <path> --format ... --mapping <mapping.jsonl>
//   gbgc bench    [--sizes 1000,5000,...]
//
// Exit status: 0 success, 1 input or per-graph failure, 2 usage error.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "gbgc/pipeline.hpp"
#include "gbgc/simd/kernels.hpp"

namespace {

void add_common(CLI::App* cmd, gbgc::CliInvocation& inv, bool needs_input) {
  static const std::map<std::string, gbgc::InputFormat> formats{{"tudataset", gbgc::InputFormat::tudataset},
                                                                {"edgelist", gbgc::InputFormat::edgelist}};
  static const std::map<std::string, gbgc::ModeKind> modes{{"adaptive", gbgc::ModeKind::adaptive},
                                                           {"ratio", gbgc::ModeKind::ratio}};
  static const std::map<std::string, gbgc::Ablation> ablations{{"none", gbgc::Ablation::none},
                                                               {"no-init", gbgc::Ablation::no_init},
                                                               {"no-split", gbgc::Ablation::no_split}};
  static const std::map<std::string, gbgc::LaplacianKind> kinds{
      {"combinatorial", gbgc::LaplacianKind::combinatorial}, {"normalized", gbgc::LaplacianKind::normalized}};
  static const std::map<std::string, gbgc::SdMode> sd_modes{{"projected", gbgc::SdMode::projected},
                                                            {"unweighted", gbgc::SdMode::unweighted}};

  auto* input = cmd->add_option("--input", inv.input, "Edge-list file or TUDataset directory");
  if (needs_input) input->required();
  cmd->add_option("--format", inv.format, "Input format")->transform(CLI::CheckedTransformer(formats));
  cmd->add_option("--name", inv.dataset_name, "TUDataset file prefix (default: directory name)");
  cmd->add_option("--mode", inv.mode, "Coarsening mode")->transform(CLI::CheckedTransformer(modes));
  cmd->add_option("--ratio", inv.ratio, "Target supernode ratio in (0,1) for --mode ratio");
  cmd->add_option("--ablation", inv.ablation, "Ablation variant")->transform(CLI::CheckedTransformer(ablations));
  cmd->add_option("--laplacian", inv.laplacian, "Laplacian used for SD")->transform(CLI::CheckedTransformer(kinds));
  cmd->add_option("--sd-mode", inv.sd_mode, "Coarse Laplacian used for SD")
      ->transform(CLI::CheckedTransformer(sd_modes));
  cmd->add_option("--output", inv.output, "Output directory");
  cmd->add_option("--jobs", inv.jobs, "Parallel graphs (default: $GBGC_JOBS or 1)")->check(CLI::PositiveNumber);
  cmd->add_flag("--skip-sd", inv.skip_sd, "Skip spectral evaluation");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Granular-ball graph coarsening"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("gbgc 0.1.0 (kernels: ") +
                                        std::string(gbgc::simd::isa_name(gbgc::simd::active_kernels().isa)) + ")");

  gbgc::CliInvocation inv;
  inv.jobs = gbgc::default_jobs();

  auto* coarsen = app.add_subcommand("coarsen", "Coarsen every graph of the input");
  add_common(coarsen, inv, true);

  auto* evaluate = app.add_subcommand("evaluate", "Recompute SD and Rayleigh diagnostics for a mapping");
  add_common(evaluate, inv, true);
  evaluate->add_option("--mapping", inv.mapping, "mapping.jsonl from a prior coarsen run");

  auto* bench = app.add_subcommand("bench", "Time adaptive coarsening on synthetic Erdos-Renyi graphs");
  add_common(bench, inv, false);
  bench->add_option("--sizes", inv.bench_sizes, "Node counts to benchmark")->delimiter(',');
  inv.output.clear();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (coarsen->parsed()) inv.subcommand = gbgc::Subcommand::coarsen;
  if (evaluate->parsed()) inv.subcommand = gbgc::Subcommand::evaluate;
  if (bench->parsed()) inv.subcommand = gbgc::Subcommand::bench;
  if (inv.subcommand != gbgc::Subcommand::bench && inv.output.empty()) inv.output = "gbgc-out";

  try {
    gbgc::validate(inv);
  } catch (const gbgc::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }

  switch (inv.subcommand) {
    case gbgc::Subcommand::coarsen:
      return gbgc::run_coarsen(inv, std::cout, std::cerr);
    case gbgc::Subcommand::evaluate:
      return gbgc::run_evaluate(inv, std::cout, std::cerr);
    case gbgc::Subcommand::bench:
      return gbgc::run_bench(inv, std::cout, std::cerr);
  }
  return 2;
}
