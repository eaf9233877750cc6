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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "scg/derive.hpp"
#include "scg/graph.hpp"
#include "scg/metrics.hpp"
#include "scg/partition.hpp"
#include "scg/rank.hpp"
#include "scg/similar.hpp"

// Text and JSON renderings shared by the CLI and the query service. Every
// renderer is deterministic: same input, same bytes.
namespace scg::cli {

enum class OutputFormat { Text, Json };

// Four significant digits, printf %.4g.
std::string format_sig(double value);

nlohmann::json location_json(const std::optional<SourceLocation>& location);
nlohmann::json node_json(const GraphNode& node);

struct ViewSummary {
  GraphView view;
  ProjectSummary summary;
  DistributionReport distributions;
};

nlohmann::json summary_json(const ViewSummary& summary);
// Aligned table, one row per view, columns #LOC |V| LOC/|V| |E| D A_D
// sigma_ID IoD_ID sigma_OD IoD_OD ACC GCC DAC; then kind and type counts.
std::string summary_text(const std::vector<ViewSummary>& summaries);

nlohmann::json group_count_json(const std::vector<std::pair<std::string, std::size_t>>& groups);
std::string group_count_text(const std::vector<std::pair<std::string, std::size_t>>& groups);

nlohmann::json rank_json(const RankTable& table);
std::string rank_text(const RankTable& table);

// Pairs with both method nodes, locations included.
nlohmann::json similar_json(const std::vector<SimilarPair>& pairs, const SemanticCodeGraph& graph);
std::string similar_text(const std::vector<SimilarPair>& pairs);

nlohmann::json partition_json(const Partition& partition, const SemanticCodeGraph& graph);
std::string partition_text(const Partition& partition);

}  // namespace scg::cli
