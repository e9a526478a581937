// Copyright 2026 The gbgc Authors
// SPDX-License-Identifier: Apache-2.0

#include "gbgc/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <thread>

#include "gbgc/coarse.hpp"
#include "gbgc/generate.hpp"

namespace gbgc {
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t micros_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

// Runs task(i) for i in [0, count) on up to `jobs` threads. Each task writes
// only its own slot, so collection order is fixed by index.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    });
  }
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

struct Outcome {
  std::optional<CoarsenRecord> record;
  std::string error;
};

int write_or_report(const std::function<void()>& writer, std::ostream& err) {
  try {
    writer();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

void validate(const CliInvocation& inv) {
  if (inv.jobs == 0) throw UsageError("--jobs must be positive");
  if (inv.mode == ModeKind::ratio) {
    if (!inv.ratio) throw UsageError("--mode ratio requires --ratio");
    if (!(*inv.ratio > 0.0 && *inv.ratio < 1.0)) throw UsageError("--ratio must lie strictly between 0 and 1");
    if (inv.ablation != Ablation::none) throw UsageError("ablations apply to adaptive mode only");
  } else if (inv.ratio) {
    throw UsageError("--ratio is only valid with --mode ratio");
  }
  if (inv.subcommand != Subcommand::bench && inv.input.empty()) throw UsageError("--input is required");
  if (inv.subcommand == Subcommand::bench && inv.bench_sizes.empty()) throw UsageError("no bench sizes given");
}

CoarsenConfig to_config(const CliInvocation& inv) {
  CoarsenConfig cfg;
  if (inv.mode == ModeKind::ratio) cfg.mode = RatioMode{*inv.ratio};
  cfg.ablation = inv.ablation;
  return cfg;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("GBGC_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

DatasetBundle load_input(const CliInvocation& inv) {
  if (inv.format == InputFormat::edgelist) {
    DatasetBundle bundle;
    bundle.name = inv.input.stem().string();
    bundle.graphs.push_back(parse_edge_list(inv.input));
    return bundle;
  }
  fs::path dir = inv.input;
  std::string name = inv.dataset_name;
  if (name.empty()) {
    name = (dir.has_filename() ? dir.filename() : dir.parent_path().filename()).string();
  }
  return parse_tudataset(dir, name);
}

CoarsenRecord coarsen_one(const Graph& g, std::size_t index, const CliInvocation& inv) {
  CoarsenRecord rec;
  rec.graph_index = index;
  rec.edge_count = g.edge_count();

  const auto start = Clock::now();
  const Partition p = coarsen(g, to_config(inv));
  const ProjectionMap c = build_projection(p, g.node_count());
  const CoarsenedGraph cg = build_coarse_graph(g, c);
  rec.elapsed_micros = micros_since(start);

  rec.assignment = p.assignment;
  rec.supernode_count = static_cast<BallIndex>(p.ball_count());
  rec.superedges = cg.superedges;
  rec.r_a = achieved_ratio(p, g.node_count());
  if (!inv.skip_sd) {
    EvaluateConfig ecfg;
    ecfg.laplacian_kind = inv.laplacian;
    ecfg.sd_mode = inv.sd_mode;
    ecfg.rayleigh = false;
    rec.sd = evaluate(g, cg, p, ecfg).sd;
  }
  return rec;
}

Partition random_partition_like(const Graph& g, const Partition& like, std::uint64_t seed) {
  std::vector<NodeId> nodes(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) nodes[v] = v;
  DeterministicRng rng(seed);
  deterministic_shuffle(nodes, rng);

  std::vector<BallIndex> assignment(g.node_count());
  std::size_t cursor = 0;
  for (BallIndex b = 0; b < like.ball_count(); ++b) {
    for (std::size_t i = 0; i < like.balls[b].size(); ++i) assignment[nodes[cursor++]] = b;
  }
  return partition_from_assignment(g, assignment);
}

int run_coarsen(const CliInvocation& inv, std::ostream& out, std::ostream& err) {
  const auto wall = Clock::now();
  DatasetBundle bundle;
  try {
    bundle = load_input(inv);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  std::vector<Outcome> outcomes(bundle.graphs.size());
  parallel_for(bundle.graphs.size(), inv.jobs, [&](std::size_t i) {
    try {
      outcomes[i].record = coarsen_one(bundle.graphs[i], i, inv);
    } catch (const std::exception& e) {
      outcomes[i].error = e.what();
    }
  });

  std::vector<CoarsenRecord> records;
  int status = 0;
  double sum_ra = 0.0, sum_sd = 0.0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (!outcomes[i].record) {
      err << "error: graph " << i << ": " << outcomes[i].error << '\n';
      status = 1;
      continue;
    }
    sum_ra += outcomes[i].record->r_a;
    if (outcomes[i].record->sd) sum_sd += *outcomes[i].record->sd;
    records.push_back(std::move(*outcomes[i].record));
  }
  if (write_or_report([&] { write_results(records, inv.output); }, err) != 0) return 1;

  const double count = records.empty() ? 1.0 : static_cast<double>(records.size());
  out << "dataset=" << bundle.name << " graphs=" << records.size() << '/' << bundle.graphs.size()
      << " mean_r_a=" << fixed6(sum_ra / count);
  if (!inv.skip_sd) out << " mean_sd=" << fixed6(sum_sd / count);
  out << " wall_ms=" << micros_since(wall) / 1000 << '\n';
  return status;
}

int run_evaluate(const CliInvocation& inv, std::ostream& out, std::ostream& err) {
  DatasetBundle bundle;
  std::vector<MappingEntry> mapping;
  try {
    bundle = load_input(inv);
    mapping = read_mapping(inv.mapping.empty() ? inv.output / "mapping.jsonl" : inv.mapping);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  struct Evaluated {
    CoarsenRecord record;
    SpectralReport report;
  };
  std::vector<std::optional<Evaluated>> results(mapping.size());
  std::vector<std::string> errors(mapping.size());
  parallel_for(mapping.size(), inv.jobs, [&](std::size_t i) {
    try {
      const MappingEntry& m = mapping[i];
      if (m.graph_index >= bundle.graphs.size()) {
        throw ValidationError("mapping refers to graph " + std::to_string(m.graph_index) + " but the input has " +
                              std::to_string(bundle.graphs.size()));
      }
      const Graph& g = bundle.graphs[m.graph_index];
      const auto start = Clock::now();
      const Partition p = partition_from_assignment(g, m.assignment);
      if (p.ball_count() != m.supernode_count) {
        throw ValidationError("supernode_count " + std::to_string(m.supernode_count) + " does not match the " +
                              std::to_string(p.ball_count()) + " ids used by the assignment");
      }
      const ProjectionMap c = build_projection(p, g.node_count());
      const CoarsenedGraph cg = build_coarse_graph(g, c);
      EvaluateConfig ecfg;
      ecfg.laplacian_kind = inv.laplacian;
      ecfg.sd_mode = inv.sd_mode;
      Evaluated ev;
      ev.report = evaluate(g, cg, p, ecfg);
      ev.record.graph_index = m.graph_index;
      ev.record.edge_count = g.edge_count();
      ev.record.assignment = m.assignment;
      ev.record.supernode_count = m.supernode_count;
      ev.record.superedges = cg.superedges;
      ev.record.sd = ev.report.sd;
      ev.record.r_a = ev.report.r_a;
      ev.record.elapsed_micros = micros_since(start);
      results[i] = std::move(ev);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });

  int status = 0;
  std::vector<CoarsenRecord> records;
  std::vector<std::pair<std::size_t, RayleighSample>> samples;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i]) {
      err << "error: mapping line " << i + 1 << ": " << errors[i] << '\n';
      status = 1;
      continue;
    }
    for (const auto& s : results[i]->report.rayleigh_samples) samples.emplace_back(results[i]->record.graph_index, s);
    records.push_back(std::move(results[i]->record));
  }

  const int write_status = write_or_report(
      [&] {
        fs::create_directories(inv.output);
        write_report(records, inv.output / "report.csv");
        const fs::path rayleigh_file = inv.output / "rayleigh.csv";
        std::ofstream ray(rayleigh_file, std::ios::binary | std::ios::trunc);
        if (!ray) throw IoError("cannot write " + rayleigh_file.string());
        ray << "graph_index,r_o,r_c,relative_gap\n";
        char buf[128];
        for (const auto& [gi, s] : samples) {
          std::snprintf(buf, sizeof buf, "%zu,%.9g,%.9g,%.9g\n", gi, s.original, s.coarsened, s.relative_gap);
          ray << buf;
        }
        if (!ray) throw IoError("write failed for " + rayleigh_file.string());
      },
      err);
  if (write_status != 0) return 1;

  out << "evaluated=" << records.size() << '/' << mapping.size() << '\n';
  return status;
}

int run_bench(const CliInvocation& inv, std::ostream& out, std::ostream& err) {
  constexpr double kMeanDegree = 4.0;
  std::vector<NodeId> sizes = inv.bench_sizes;
  const NodeId control_size =
      std::find(sizes.begin(), sizes.end(), NodeId{1000}) != sizes.end() ? 1000 : *std::min_element(sizes.begin(), sizes.end());

  std::string csv = "n,e,n_bar,r_a,elapsed_micros\n";
  std::string sd_csv;
  for (NodeId n : sizes) {
    const Graph g = erdos_renyi(n, kMeanDegree, n);
    const auto start = Clock::now();
    const Partition p = coarsen(g, to_config(inv));
    const std::int64_t elapsed = micros_since(start);
    csv += std::to_string(n) + ',' + std::to_string(g.edge_count()) + ',' + std::to_string(p.ball_count()) + ',' +
           fixed6(achieved_ratio(p, n)) + ',' + std::to_string(elapsed) + '\n';

    if (n == control_size && !inv.skip_sd) {
      EvaluateConfig ecfg;
      ecfg.laplacian_kind = inv.laplacian;
      ecfg.sd_mode = SdMode::projected;
      ecfg.rayleigh = false;
      const CoarsenedGraph cg = build_coarse_graph(g, build_projection(p, n));
      const double gbgc_sd = evaluate(g, cg, p, ecfg).sd;
      const Partition control = random_partition_like(g, p, n);
      const CoarsenedGraph ccg = build_coarse_graph(g, build_projection(control, n));
      const double random_sd = evaluate(g, ccg, control, ecfg).sd;
      sd_csv = "n,gbgc_sd,random_sd\n" + std::to_string(n) + ',' + fixed6(gbgc_sd) + ',' + fixed6(random_sd) + '\n';
    }
  }

  out << csv;
  if (!sd_csv.empty()) out << sd_csv;
  if (!inv.output.empty()) {
    return write_or_report(
        [&] {
          fs::create_directories(inv.output);
          for (const auto& [name, body] : {std::pair{"bench.csv", &csv}, std::pair{"bench_sd.csv", &sd_csv}}) {
            if (body->empty()) continue;
            const fs::path file = inv.output / name;
            std::ofstream f(file, std::ios::binary | std::ios::trunc);
            f << *body;
            if (!f) throw IoError("cannot write " + file.string());
          }
        },
        err);
  }
  return 0;
}

}  // namespace gbgc
