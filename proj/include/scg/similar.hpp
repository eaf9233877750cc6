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
#include <stdexcept>
#include <string>
#include <vector>

#include "scg/graph.hpp"

namespace scg {

struct SimilarPair {
  std::string m1;  // m1 < m2
  std::string m2;
  std::size_t s = 0;  // shared successors
  int p1 = 0;         // percent of m1's successors that are shared
  int p2 = 0;

  friend bool operator==(const SimilarPair&, const SimilarPair&) = default;
};

struct SimilarityOptions {
  std::size_t s_min = 5;
  int s_min_p = 50;
};

// Integer percentage computed the way the reference heuristic does it:
// truncation of the double s / total * 100, so 29 of 100 gives 28.
int share_percent(std::size_t shared, std::size_t total);

// Pairs of METHOD nodes whose distinct successor sets (any edge type,
// unresolved targets included) share at least s_min nodes making up at least
// s_min_p percent of each set, and whose DECLARATION parents differ. Two
// methods without any parent count as different. Sorted by s descending,
// then m1, then m2. Throws std::invalid_argument when s_min is 0.
std::vector<SimilarPair> find_similar_methods(const SemanticCodeGraph& graph,
                                              SimilarityOptions options = {});

}  // namespace scg
