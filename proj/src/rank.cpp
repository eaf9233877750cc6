// Copyright 2026 The scg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scg/rank.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <numeric>

#include "scg/centrality.hpp"
#include "scg/projection.hpp"

namespace scg {
namespace {

double parse_loc(const GraphNode& node) {
  auto text = property(node.properties, prop::kLoc);
  if (!text) return 0;
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text->data(), text->data() + text->size(), value);
  return ec == std::errc() && ptr == text->data() + text->size() ? static_cast<double>(value) : 0;
}

std::vector<double> to_vector(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6g", value);
  return buffer;
}

}  // namespace

std::string_view to_string(RankMetric metric) {
  switch (metric) {
    case RankMetric::Loc: return "loc";
    case RankMetric::OutDegree: return "out_degree";
    case RankMetric::InDegree: return "in_degree";
    case RankMetric::Eigenvector: return "eigenvector";
    case RankMetric::Katz: return "katz";
    case RankMetric::PageRank: return "pagerank";
    case RankMetric::Betweenness: return "betweenness";
    case RankMetric::Harmonic: return "harmonic";
  }
  return "";
}

std::optional<RankMetric> parse_rank_metric(std::string_view name) {
  for (RankMetric m : kAllRankMetrics) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::vector<double> scores(const SemanticCodeGraph& graph, RankMetric metric,
                           std::map<std::string, std::string>* notes) {
  const std::size_t n = graph.node_count();
  auto note = [&](const std::string& key, std::string value) {
    if (notes) (*notes)[key] = std::move(value);
  };
  switch (metric) {
    case RankMetric::Loc: {
      std::vector<double> s(n);
      for (std::size_t i = 0; i < n; ++i) s[i] = parse_loc(graph.node(i));
      note("missing", "nodes without loc score 0");
      return s;
    }
    case RankMetric::OutDegree:
    case RankMetric::InDegree: {
      std::vector<double> s(n);
      for (std::size_t i = 0; i < n; ++i) {
        s[i] = static_cast<double>(metric == RankMetric::OutDegree ? graph.out_edges(i).size()
                                                                   : graph.in_edges(i).size());
      }
      note("edges", "parallel edges counted");
      return s;
    }
    default: break;
  }
  const Adjacency out = directed_simple(graph);
  note("projection", "directed simple graph, self loops dropped");
  switch (metric) {
    case RankMetric::Eigenvector: {
      auto r = centrality::eigenvector(out);
      note("direction", "incoming");
      note("fallback", r.teleport_fallback ? "teleport" : "none");
      return to_vector(r.scores);
    }
    case RankMetric::Katz: {
      auto r = centrality::katz(out);
      note("direction", "incoming");
      note("alpha", format_double(r.alpha));
      note("spectralRadius", format_double(r.radius.value));
      return to_vector(r.scores);
    }
    case RankMetric::PageRank:
      note("damping", "0.85");
      return to_vector(centrality::pagerank(out));
    case RankMetric::Betweenness:
      note("normalized", "false");
      return to_vector(centrality::betweenness(out));
    case RankMetric::Harmonic:
      note("direction", "incoming");
      note("normalized", "1/(n-1)");
      return to_vector(centrality::harmonic(out));
    default: break;
  }
  return std::vector<double>(n, 0.0);
}

RankTable rank(const SemanticCodeGraph& graph, RankMetric metric, std::size_t k) {
  if (k < 1) throw InvalidRankRequest("k must be at least 1");
  RankTable table;
  table.metric = std::string(to_string(metric));
  table.k = k;
  const std::vector<double> s = scores(graph, metric, &table.notes);
  std::vector<std::size_t> order(graph.node_count());
  std::iota(order.begin(), order.end(), 0);
  const std::size_t take = std::min(k, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take), order.end(),
                    [&](std::size_t a, std::size_t b) {
                      if (s[a] != s[b]) return s[a] > s[b];
                      return graph.node(a).id < graph.node(b).id;
                    });
  for (std::size_t i = 0; i < take; ++i) {
    const GraphNode& node = graph.node(order[i]);
    table.entries.push_back({node.id, node.displayName, s[order[i]], 0});
  }
  return table;
}

RankTable combined_importance(const SemanticCodeGraph& graph, std::size_t depth) {
  std::vector<RankTable> tables;
  for (RankMetric m : kAllRankMetrics) tables.push_back(rank(graph, m, depth));
  return combined_importance(tables, depth);
}

RankTable combined_importance(std::span<const RankTable> tables, std::size_t depth) {
  if (depth < 1) throw InvalidRankRequest("depth must be at least 1");
  std::map<std::string, RankEntry> totals;
  for (const RankTable& table : tables) {
    const std::size_t take = std::min(depth, table.entries.size());
    for (std::size_t pos = 0; pos < take; ++pos) {
      const RankEntry& e = table.entries[pos];
      RankEntry& total = totals[e.id];
      total.id = e.id;
      total.displayName = e.displayName;
      total.score += static_cast<double>(depth - pos);
      ++total.appearances;
    }
  }
  RankTable result;
  result.metric = "combined";
  result.k = depth;
  result.notes["points"] = std::to_string(depth) + " for first place down to 1";
  for (auto& [id, entry] : totals) result.entries.push_back(std::move(entry));
  std::stable_sort(result.entries.begin(), result.entries.end(),
                   [](const RankEntry& a, const RankEntry& b) {
                     if (a.score != b.score) return a.score > b.score;
                     return a.appearances > b.appearances;
                   });
  return result;
}

}  // namespace scg
