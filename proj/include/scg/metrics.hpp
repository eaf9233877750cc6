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

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scg/graph.hpp"

namespace scg {

struct ProjectSummary {
  std::size_t n = 0;  // |V|
  std::size_t m = 0;  // |E|, with multiplicity
  long long totalLoc = 0;
  double locPerNode = 0;
  double density = 0;    // |E| / (|V|(|V|-1)), 0 when |V| < 2
  double avgDegree = 0;  // |E| / |V|, equal for in and out degree
  double stdInDegree = 0;
  double stdOutDegree = 0;
  double iodInDegree = 0;  // sigma^2 / avgDegree, 0 when avgDegree is 0
  double iodOutDegree = 0;
  // Clustering and assortativity use the undirected simple projection.
  double acc = 0;
  double gcc = 0;
  double dac = 0;  // 0 when undefined (no edges or constant degree)
  // How each figure was computed, for readers comparing against other tools.
  std::map<std::string, std::string> notes;
};

ProjectSummary summary(const SemanticCodeGraph& graph);

struct DistributionReport {
  std::map<std::size_t, std::size_t> in_degree;  // degree -> node count
  std::map<std::size_t, std::size_t> out_degree;
  std::map<std::string, std::size_t> node_kinds;
  std::map<std::string, std::size_t> edge_types;
};

DistributionReport distributions(const SemanticCodeGraph& graph);

enum class GroupKey { File, Package, Kind, IsLocal };

class UnknownGroupKey : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws UnknownGroupKey.
GroupKey parse_group_key(std::string_view name);
std::string_view to_string(GroupKey key);

// Conjunction of the set fields; an empty filter keeps every node.
struct NodeFilter {
  std::set<std::string, std::less<>> kinds;
  std::optional<bool> is_local;

  bool matches(const GraphNode& node) const;
};

// Split-apply-combine count of filtered nodes. Nodes lacking the grouping
// property are left out. Ordered by count descending, then group name.
std::vector<std::pair<std::string, std::size_t>> group_count(const SemanticCodeGraph& graph,
                                                             const NodeFilter& filter,
                                                             GroupKey key);

}  // namespace scg
