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
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "scg/graph.hpp"

namespace scg {

struct Community {
  std::size_t label = 0;
  std::size_t size = 0;
  std::string dominant_package;  // most frequent package property, "" if none
  std::size_t dominant_count = 0;

  friend bool operator==(const Community&, const Community&) = default;
};

struct Partition {
  // Community label per node, aligned with graph.nodes(). Labels are
  // numbered by the smallest node id they contain.
  std::vector<std::size_t> membership;
  double modularity = 0;
  double resolution = 1.0;
  std::uint64_t seed = 0;
  std::vector<Community> communities;  // by label

  std::map<std::string, std::string> notes;
};

// Undirected weighted projection used for partitioning. Direction is dropped,
// parallel edges add up, DECLARATION edges weigh kDeclarationWeight.
inline constexpr double kDeclarationWeight = 2.0;

struct WeightedGraph {
  // Neighbour lists without self loops, merged and sorted by neighbour.
  std::vector<std::vector<std::pair<std::size_t, double>>> adjacency;
  std::vector<double> loops;  // total self-loop weight per node

  std::size_t size() const { return adjacency.size(); }
  // Weighted degree; a loop counts twice.
  double degree(std::size_t node) const;
};

WeightedGraph weighted_projection(const SemanticCodeGraph& graph);

// Newman modularity with a resolution factor on the null-model term.
double modularity(const WeightedGraph& graph, const std::vector<std::size_t>& membership,
                  double resolution = 1.0);

// Two-phase greedy modularity maximisation (local moves, then community
// aggregation). The node visit order comes from structural colours hashed
// with the seed, so renaming nodes does not change the result.
Partition partition(const SemanticCodeGraph& graph, double resolution = 1.0,
                    std::uint64_t seed = 0);

}  // namespace scg
