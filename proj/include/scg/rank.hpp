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

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scg/graph.hpp"

namespace scg {

enum class RankMetric { Loc, OutDegree, InDegree, Eigenvector, Katz, PageRank, Betweenness, Harmonic };

inline constexpr std::array<RankMetric, 8> kAllRankMetrics = {
    RankMetric::Loc,      RankMetric::OutDegree,   RankMetric::InDegree, RankMetric::Eigenvector,
    RankMetric::Katz,     RankMetric::PageRank,    RankMetric::Betweenness, RankMetric::Harmonic};

std::string_view to_string(RankMetric metric);
std::optional<RankMetric> parse_rank_metric(std::string_view name);

struct RankEntry {
  std::string id;
  std::string displayName;
  double score = 0;
  // Combined importance only: number of base tables the node appeared in.
  std::size_t appearances = 0;

  friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

struct RankTable {
  std::string metric;  // a RankMetric name or "combined"
  std::size_t k = 0;
  std::vector<RankEntry> entries;  // score descending, then id ascending
  // Parameters and caveats (damping, Katz alpha, eigenvector fallback).
  std::map<std::string, std::string> notes;

  friend bool operator==(const RankTable&, const RankTable&) = default;
};

class InvalidRankRequest : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Score of every node, indexed like graph.nodes(). Degrees count parallel
// edges; centralities use the directed simple projection.
std::vector<double> scores(const SemanticCodeGraph& graph, RankMetric metric,
                           std::map<std::string, std::string>* notes = nullptr);

// Top-k nodes. Throws InvalidRankRequest for k < 1 and
// centrality::ConvergenceError when an iteration fails.
RankTable rank(const SemanticCodeGraph& graph, RankMetric metric, std::size_t k);

inline constexpr std::size_t kCombinedDepth = 20;

// Sums reverse positions (depth points for first place down to 1 point) over
// the top-depth lists of all eight metrics. Ties: more appearances first, then
// id. Nodes in no list are absent.
RankTable combined_importance(const SemanticCodeGraph& graph, std::size_t depth = kCombinedDepth);

// Same, from already computed tables; only their first depth entries count.
RankTable combined_importance(std::span<const RankTable> tables, std::size_t depth = kCombinedDepth);

}  // namespace scg
