// Copyright 2026 The gbgc Authors
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include "doctest.h"
#include "gbgc/generate.hpp"
#include "gbgc/pipeline.hpp"
#include "support/fixtures.hpp"
#include "support/tempdir.hpp"

using namespace gbgc;
using namespace gbgc::testing;

namespace {

CliInvocation edgelist_inv(const std::filesystem::path& input, const std::filesystem::path& output) {
  CliInvocation inv;
  inv.input = input;
  inv.format = InputFormat::edgelist;
  inv.output = output;
  return inv;
}

}  // namespace

TEST_CASE("validate rejects inconsistent flags") {
  CliInvocation inv;
  inv.input = "x";
  CHECK_NOTHROW(validate(inv));

  inv.mode = ModeKind::ratio;
  CHECK_THROWS_AS(validate(inv), UsageError);
  inv.ratio = 1.0;
  CHECK_THROWS_AS(validate(inv), UsageError);
  inv.ratio = 0.0;
  CHECK_THROWS_AS(validate(inv), UsageError);
  inv.ratio = 0.5;
  CHECK_NOTHROW(validate(inv));
  inv.ablation = Ablation::no_init;
  CHECK_THROWS_AS(validate(inv), UsageError);

  CliInvocation adaptive;
  adaptive.input = "x";
  adaptive.ratio = 0.5;
  CHECK_THROWS_AS(validate(adaptive), UsageError);

  CliInvocation zero_jobs;
  zero_jobs.input = "x";
  zero_jobs.jobs = 0;
  CHECK_THROWS_AS(validate(zero_jobs), UsageError);

  CliInvocation no_input;
  CHECK_THROWS_AS(validate(no_input), UsageError);
  no_input.subcommand = Subcommand::bench;
  CHECK_NOTHROW(validate(no_input));
}

TEST_CASE("run_coarsen on the barbell without init") {
  TempDir dir;
  CliInvocation inv = edgelist_inv(fixture_path("barbell.txt"), dir / "out");
  inv.ablation = Ablation::no_init;
  std::ostringstream out, err;
  REQUIRE(run_coarsen(inv, out, err) == 0);
  CHECK(err.str().empty());
  CHECK(out.str().find("mean_r_a=0.333333") != std::string::npos);
  const auto rows = read_report(dir / "out" / "report.csv");
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].n == 6);
  CHECK(rows[0].e == 7);
  CHECK(rows[0].n_bar == 2);
  CHECK(rows[0].e_bar == 1);
  CHECK(rows[0].r_a == 0.333333);
  const auto mapping = read_mapping(dir / "out" / "mapping.jsonl");
  REQUIRE(mapping.size() == 1);
  CHECK(mapping[0].assignment == std::vector<BallIndex>{0, 0, 0, 1, 1, 1});

  SUBCASE("evaluate reproduces the coarsen SD") {
    CliInvocation ev = inv;
    ev.subcommand = Subcommand::evaluate;
    ev.output = dir / "eval";
    ev.mapping = dir / "out" / "mapping.jsonl";
    REQUIRE(run_evaluate(ev, out, err) == 0);
    const auto eval_rows = read_report(dir / "eval" / "report.csv");
    REQUIRE(eval_rows.size() == 1);
    CHECK(eval_rows[0].sd == rows[0].sd);
    CHECK(eval_rows[0].sd == 5.809801);
    CHECK(std::filesystem::exists(dir / "eval" / "rayleigh.csv"));
  }
}

TEST_CASE("run_coarsen on the tiny TUDataset fixture") {
  TempDir dir;
  CliInvocation inv;
  inv.input = fixture_path("tiny_tud");
  inv.format = InputFormat::tudataset;
  inv.output = dir / "out";
  std::ostringstream out, err;
  CHECK(run_coarsen(inv, out, err) == 0);
  CHECK(read_report(dir / "out" / "report.csv").size() == 2);
  CHECK(out.str().find("dataset=tiny_tud graphs=2/2") != std::string::npos);
}

TEST_CASE("run_coarsen input failures exit 1") {
  TempDir dir;
  write_text(dir / "bad.txt", "0 x\n");
  std::ostringstream out, err;
  CHECK(run_coarsen(edgelist_inv(dir / "bad.txt", dir / "out"), out, err) == 1);
  CHECK(err.str().find("bad.txt:1") != std::string::npos);
}

TEST_CASE("run_evaluate") {
  TempDir dir;
  write_edge_list(complete(3), dir / "k3.txt");
  std::ostringstream out, err;

  SUBCASE("identity mapping over K3") {
    write_text(dir / "m.jsonl", R"({"graph_index":0,"assignment":[0,1,2],"supernode_count":3})" "\n");
    CliInvocation inv = edgelist_inv(dir / "k3.txt", dir / "out");
    inv.subcommand = Subcommand::evaluate;
    inv.mapping = dir / "m.jsonl";
    REQUIRE(run_evaluate(inv, out, err) == 0);
    const auto rows = read_report(dir / "out" / "report.csv");
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].sd == 0.0);
    CHECK(rows[0].r_a == 1.0);
  }
  SUBCASE("length mismatch") {
    write_text(dir / "m.jsonl", R"({"graph_index":0,"assignment":[0,1],"supernode_count":2})" "\n");
    CliInvocation inv = edgelist_inv(dir / "k3.txt", dir / "out");
    inv.subcommand = Subcommand::evaluate;
    inv.mapping = dir / "m.jsonl";
    CHECK(run_evaluate(inv, out, err) == 1);
    CHECK(err.str().find("mapping line 1") != std::string::npos);
  }
  SUBCASE("graph index out of range") {
    write_text(dir / "m.jsonl", R"({"graph_index":4,"assignment":[0,1,2],"supernode_count":3})" "\n");
    CliInvocation inv = edgelist_inv(dir / "k3.txt", dir / "out");
    inv.subcommand = Subcommand::evaluate;
    inv.mapping = dir / "m.jsonl";
    CHECK(run_evaluate(inv, out, err) == 1);
  }
}

TEST_CASE("jobs do not change mapping.jsonl") {
  TempDir dir;
  DatasetBundle bundle{"syn", {}, std::nullopt};
  for (std::uint64_t i = 0; i < 40; ++i) bundle.graphs.push_back(erdos_renyi(10 + static_cast<NodeId>(i), 3.0, i));
  write_tudataset(bundle, dir / "syn");

  std::string reference;
  for (unsigned jobs : {1u, 8u, 3u}) {
    CliInvocation inv;
    inv.input = dir / "syn";
    inv.format = InputFormat::tudataset;
    inv.output = dir / ("out" + std::to_string(jobs));
    inv.jobs = jobs;
    inv.skip_sd = true;
    std::ostringstream out, err;
    REQUIRE(run_coarsen(inv, out, err) == 0);
    const std::string text = read_text(inv.output / "mapping.jsonl");
    if (reference.empty()) {
      reference = text;
      CHECK(!reference.empty());
    } else {
      CHECK(text == reference);
    }
  }
}

TEST_CASE("random_partition_like keeps ball sizes") {
  const Graph g = erdos_renyi(80, 4.0, 2);
  const Partition p = adaptive_coarsen(g);
  const Partition r = random_partition_like(g, p, 9);
  CHECK(r.ball_count() == p.ball_count());
  CHECK(is_valid_partition(r, 80));
  std::vector<std::size_t> a, b;
  for (const auto& ball : p.balls) a.push_back(ball.size());
  for (const auto& ball : r.balls) b.push_back(ball.size());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
  CHECK(random_partition_like(g, p, 9).assignment == r.assignment);
}

TEST_CASE("run_bench on small sizes") {
  TempDir dir;
  CliInvocation inv;
  inv.subcommand = Subcommand::bench;
  inv.bench_sizes = {300, 200};
  inv.output = dir / "bench";
  std::ostringstream out1, out2, err;
  REQUIRE(run_bench(inv, out1, err) == 0);
  REQUIRE(run_bench(inv, out2, err) == 0);
  const std::string bench = read_text(dir / "bench" / "bench.csv");
  CHECK(bench.rfind("n,e,n_bar,r_a,elapsed_micros\n", 0) == 0);
  const std::string sd = read_text(dir / "bench" / "bench_sd.csv");
  CHECK(sd.rfind("n,gbgc_sd,random_sd\n200,", 0) == 0);

  // Everything but the elapsed column is reproducible.
  auto strip_times = [](const std::string& text) {
    std::istringstream in(text);
    std::string line, kept;
    while (std::getline(in, line)) kept += line.substr(0, line.rfind(',')) + '\n';
    return kept;
  };
  CHECK(strip_times(out1.str()) == strip_times(out2.str()));
}
