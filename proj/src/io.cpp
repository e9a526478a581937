// Copyright 2026 The gbgc Authors
// SPDX-License-Identifier: Apache-2.0

#include "gbgc/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "gbgc/error.hpp"

namespace gbgc {
namespace fs = std::filesystem;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename Int>
std::optional<Int> parse_int(std::string_view token) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  Int value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) return std::nullopt;
  return value;
}

std::ifstream open_input(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open " + file.string());
  return in;
}

std::ofstream open_output(const fs::path& file) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + file.string());
  return out;
}

void finish(std::ofstream& out, const fs::path& file) {
  out.flush();
  if (!out) throw IoError("write failed for " + file.string());
}

std::vector<std::string> read_lines(const fs::path& file) {
  auto in = open_input(file);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  // Trailing blank lines are common in the published archives.
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  return lines;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

DatasetBundle parse_tudataset(const fs::path& directory, const std::string& name) {
  const fs::path indicator_file = directory / (name + "_graph_indicator.txt");
  const fs::path edges_file = directory / (name + "_A.txt");
  const fs::path labels_file = directory / (name + "_graph_labels.txt");
  for (const auto& f : {indicator_file, edges_file}) {
    if (!fs::exists(f)) throw IoError("missing mandatory file " + f.string());
  }
  for (const char* suffix : {"_node_labels.txt", "_node_attributes.txt", "_edge_labels.txt",
                             "_edge_attributes.txt", "_graph_attributes.txt"}) {
    const fs::path extra = directory / (name + suffix);
    if (fs::exists(extra)) std::clog << "note: ignoring " << extra.string() << " (structure only)\n";
  }

  // Node k (1-based in the files) belongs to graph_of[k-1] at local index local_of[k-1].
  const auto indicator = read_lines(indicator_file);
  std::vector<std::uint32_t> graph_of(indicator.size());
  std::vector<NodeId> local_of(indicator.size());
  std::vector<NodeId> graph_sizes;
  for (std::size_t i = 0; i < indicator.size(); ++i) {
    auto id = parse_int<std::int64_t>(indicator[i]);
    if (!id) throw ParseError(indicator_file.string(), i + 1, "expected an integer graph id");
    if (*id < 1) throw FormatError(indicator_file.string(), i + 1, "graph ids are 1-based");
    const auto g = static_cast<std::uint32_t>(*id - 1);
    if (g >= graph_sizes.size()) graph_sizes.resize(g + 1, 0);
    graph_of[i] = g;
    local_of[i] = graph_sizes[g]++;
  }
  for (std::size_t g = 0; g < graph_sizes.size(); ++g) {
    if (graph_sizes[g] == 0) {
      throw FormatError(indicator_file.string(), 0, "graph id " + std::to_string(g + 1) + " has no nodes");
    }
  }
  if (graph_sizes.empty()) throw FormatError(indicator_file.string(), 0, "dataset has no nodes");

  std::vector<std::vector<Edge>> per_graph(graph_sizes.size());
  const auto edge_lines = read_lines(edges_file);
  for (std::size_t i = 0; i < edge_lines.size(); ++i) {
    const std::string_view line = edge_lines[i];
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) throw ParseError(edges_file.string(), i + 1, "expected \"u, v\"");
    auto u = parse_int<std::int64_t>(line.substr(0, comma));
    auto v = parse_int<std::int64_t>(line.substr(comma + 1));
    if (!u || !v) throw ParseError(edges_file.string(), i + 1, "expected two integer node ids");
    const auto total = static_cast<std::int64_t>(indicator.size());
    if (*u < 1 || *v < 1 || *u > total || *v > total) {
      throw FormatError(edges_file.string(), i + 1, "node id out of range 1.." + std::to_string(total));
    }
    const auto gu = graph_of[*u - 1];
    const auto gv = graph_of[*v - 1];
    if (gu != gv) {
      throw FormatError(edges_file.string(), i + 1,
                        "edge (" + std::to_string(*u) + ", " + std::to_string(*v) + ") spans graphs " +
                            std::to_string(gu + 1) + " and " + std::to_string(gv + 1));
    }
    per_graph[gu].push_back({local_of[*u - 1], local_of[*v - 1]});
  }

  DatasetBundle bundle;
  bundle.name = name;
  bundle.graphs.reserve(graph_sizes.size());
  for (std::size_t g = 0; g < graph_sizes.size(); ++g) {
    bundle.graphs.push_back(from_edge_list(graph_sizes[g], per_graph[g]));
  }

  if (fs::exists(labels_file)) {
    const auto label_lines = read_lines(labels_file);
    std::vector<std::int64_t> labels;
    for (std::size_t i = 0; i < label_lines.size(); ++i) {
      auto label = parse_int<std::int64_t>(label_lines[i]);
      if (!label) throw ParseError(labels_file.string(), i + 1, "expected an integer label");
      labels.push_back(*label);
    }
    if (labels.size() != bundle.graphs.size()) {
      throw FormatError(labels_file.string(), label_lines.size(),
                        std::to_string(labels.size()) + " labels for " + std::to_string(bundle.graphs.size()) +
                            " graphs");
    }
    bundle.graph_labels = std::move(labels);
  }
  return bundle;
}

Graph parse_edge_list(const fs::path& file) {
  auto in = open_input(file);
  std::optional<NodeId> declared;
  std::vector<Edge> edges;
  NodeId max_index = 0;
  bool any = false;
  std::string raw;
  for (std::size_t line_no = 1; std::getline(in, raw); ++line_no) {
    std::string_view line = trim(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = trim(line.substr(0, hash));
    if (line.empty()) continue;

    std::istringstream tokens{std::string(line)};
    std::string first, second, extra;
    tokens >> first >> second;
    if (tokens >> extra) throw ParseError(file.string(), line_no, "expected exactly two tokens");
    if (first == "n") {
      auto count = parse_int<NodeId>(second);
      if (!count) throw ParseError(file.string(), line_no, "bad node count \"" + second + "\"");
      declared = *count;
      continue;
    }
    auto u = parse_int<NodeId>(first);
    auto v = parse_int<NodeId>(second);
    if (!u || !v) throw ParseError(file.string(), line_no, "expected two non-negative integers");
    edges.push_back({*u, *v});
    max_index = std::max({max_index, *u, *v});
    any = true;
  }
  const NodeId n = declared ? *declared : (any ? max_index + 1 : 0);
  try {
    return from_edge_list(n, edges);
  } catch (const ValidationError& e) {
    throw ParseError(file.string(), 0, e.what());
  }
}

void write_edge_list(const Graph& g, const fs::path& file) {
  auto out = open_output(file);
  out << "n " << g.node_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  finish(out, file);
}

void write_tudataset(const DatasetBundle& bundle, const fs::path& directory) {
  fs::create_directories(directory);
  const fs::path a_file = directory / (bundle.name + "_A.txt");
  const fs::path ind_file = directory / (bundle.name + "_graph_indicator.txt");
  auto a_out = open_output(a_file);
  auto ind_out = open_output(ind_file);
  std::uint64_t base = 1;
  for (std::size_t g = 0; g < bundle.graphs.size(); ++g) {
    const Graph& graph = bundle.graphs[g];
    for (NodeId v = 0; v < graph.node_count(); ++v) ind_out << (g + 1) << '\n';
    for (const Edge& e : graph.edges()) {
      a_out << base + e.u << ", " << base + e.v << '\n';
      a_out << base + e.v << ", " << base + e.u << '\n';
    }
    base += graph.node_count();
  }
  finish(a_out, a_file);
  finish(ind_out, ind_file);
  if (bundle.graph_labels) {
    const fs::path l_file = directory / (bundle.name + "_graph_labels.txt");
    auto l_out = open_output(l_file);
    for (auto label : *bundle.graph_labels) l_out << label << '\n';
    finish(l_out, l_file);
  }
}

std::string report_row(const CoarsenRecord& r) {
  std::string row = std::to_string(r.graph_index) + ',' + std::to_string(r.assignment.size()) + ',' +
                    std::to_string(r.edge_count) + ',' + std::to_string(r.supernode_count) + ',' +
                    std::to_string(r.superedges.size()) + ',' + fixed6(r.r_a) + ',' +
                    (r.sd ? fixed6(*r.sd) : std::string("nan")) + ',' + std::to_string(r.elapsed_micros);
  return row;
}

std::string mapping_line(const CoarsenRecord& r) {
  nlohmann::ordered_json j;
  j["graph_index"] = r.graph_index;
  j["assignment"] = r.assignment;
  j["supernode_count"] = r.supernode_count;
  return j.dump();
}

void write_report(std::span<const CoarsenRecord> records, const fs::path& file) {
  auto out = open_output(file);
  out << kReportHeader << '\n';
  for (const auto& r : records) out << report_row(r) << '\n';
  finish(out, file);
}

void write_results(std::span<const CoarsenRecord> records, const fs::path& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

  const fs::path mapping_file = out_dir / "mapping.jsonl";
  auto mapping = open_output(mapping_file);
  for (const auto& r : records) mapping << mapping_line(r) << '\n';
  finish(mapping, mapping_file);

  const fs::path edges_file = out_dir / "coarse_edges.txt";
  auto edges = open_output(edges_file);
  for (const auto& r : records) {
    edges << "graph " << r.graph_index << '\n';
    for (const Edge& e : r.superedges) edges << e.u << ' ' << e.v << '\n';
  }
  finish(edges, edges_file);

  write_report(records, out_dir / "report.csv");
}

std::vector<MappingEntry> read_mapping(const fs::path& file) {
  auto in = open_input(file);
  std::vector<MappingEntry> out;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (trim(line).empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      MappingEntry entry;
      entry.graph_index = j.at("graph_index").get<std::size_t>();
      entry.assignment = j.at("assignment").get<std::vector<BallIndex>>();
      entry.supernode_count = j.at("supernode_count").get<BallIndex>();
      out.push_back(std::move(entry));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(file.string(), line_no, e.what());
    }
  }
  return out;
}

std::vector<ReportRow> read_report(const fs::path& file) {
  const auto lines = read_lines(file);
  if (lines.empty() || trim(lines.front()) != kReportHeader) {
    throw ParseError(file.string(), 1, "missing report header");
  }
  std::vector<ReportRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> cells;
    std::stringstream ss(lines[i]);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 8) throw ParseError(file.string(), i + 1, "expected 8 columns");
    try {
      ReportRow row;
      row.graph_index = std::stoull(cells[0]);
      row.n = std::stoull(cells[1]);
      row.e = std::stoull(cells[2]);
      row.n_bar = std::stoull(cells[3]);
      row.e_bar = std::stoull(cells[4]);
      row.r_a = std::stod(cells[5]);
      row.sd = std::stod(cells[6]);
      row.elapsed_micros = std::stoll(cells[7]);
      rows.push_back(row);
    } catch (const std::exception&) {
      throw ParseError(file.string(), i + 1, "malformed report row");
    }
  }
  return rows;
}

}  // namespace gbgc
