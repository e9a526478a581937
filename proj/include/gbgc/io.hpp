// Copyright 2026 The gbgc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gbgc/engine.hpp"
#include "gbgc/graph.hpp"

namespace gbgc {

struct DatasetBundle {
  std::string name;
  std::vector<Graph> graphs;
  /// One label per graph when `<name>_graph_labels.txt` exists.
  std::optional<std::vector<std::int64_t>> graph_labels;
};

/// Reads the TUDataset text layout from `directory`:
///   <name>_A.txt                comma-separated 1-based node pairs
///   <name>_graph_indicator.txt  1-based graph id per node
///   <name>_graph_labels.txt     optional, one integer per graph
/// Nodes are renumbered 0-based per graph in file order. Node/edge
/// attribute files are ignored with a notice on std::clog.
DatasetBundle parse_tudataset(const std::filesystem::path& directory, const std::string& name);

/// Whitespace separated "u v" pairs, 0-based, '#' comments, optional
/// "n <count>" header line.
Graph parse_edge_list(const std::filesystem::path& file);

/// Writes the format parse_edge_list reads, always with an "n" header.
void write_edge_list(const Graph& g, const std::filesystem::path& file);

/// Writes a bundle back out in TUDataset layout (used for synthetic sets).
void write_tudataset(const DatasetBundle& bundle, const std::filesystem::path& directory);

struct CoarsenRecord {
  std::size_t graph_index = 0;
  EdgeCount edge_count = 0;
  std::vector<BallIndex> assignment;
  BallIndex supernode_count = 0;
  std::vector<Edge> superedges;
  /// Empty when spectral evaluation was skipped; written as "nan".
  std::optional<double> sd;
  double r_a = 0.0;
  std::int64_t elapsed_micros = 0;
};

inline constexpr const char* kReportHeader = "graph_index,n,e,n_bar,e_bar,r_a,sd,elapsed_micros";

/// One report.csv line, without the trailing newline.
std::string report_row(const CoarsenRecord& record);

/// One mapping.jsonl line, without the trailing newline.
std::string mapping_line(const CoarsenRecord& record);

/// Emits mapping.jsonl, coarse_edges.txt and report.csv into out_dir
/// (created if missing). Throws IoError with the offending path.
void write_results(std::span<const CoarsenRecord> records, const std::filesystem::path& out_dir);

void write_report(std::span<const CoarsenRecord> records, const std::filesystem::path& file);

struct MappingEntry {
  std::size_t graph_index = 0;
  std::vector<BallIndex> assignment;
  BallIndex supernode_count = 0;
};

std::vector<MappingEntry> read_mapping(const std::filesystem::path& file);

struct ReportRow {
  std::size_t graph_index = 0;
  std::uint64_t n = 0;
  std::uint64_t e = 0;
  std::uint64_t n_bar = 0;
  std::uint64_t e_bar = 0;
  double r_a = 0.0;
  double sd = 0.0;
  std::int64_t elapsed_micros = 0;
};

std::vector<ReportRow> read_report(const std::filesystem::path& file);

}  // namespace gbgc
