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
#include <random>
#include <string>
#include <vector>

#include "scg/graph.hpp"

// Seeded generators for property and oracle tests.
namespace scg::testing {

std::string node_name(std::size_t index);  // "r/n007#"

struct RandomGraphSpec {
  std::size_t nodes = 10;
  double edge_probability = 0.2;
  // Each selected ordered pair gets 1..max_multiplicity parallel edges.
  std::size_t max_multiplicity = 1;
  double self_loop_probability = 0.0;
  std::vector<std::string> edge_types = {"CALL"};
  std::vector<std::string> kinds = {"METHOD"};
};

SemanticCodeGraph random_graph(std::mt19937_64& rng, const RandomGraphSpec& spec);

// Acyclic: edges only go from lower to higher index.
SemanticCodeGraph random_dag(std::mt19937_64& rng, std::size_t nodes, double edge_probability);

// A file exercising every wire field: missing and zero locations, empty
// strings, unicode, large positions, maps, repeated edges.
SemanticGraphFile random_file(std::mt19937_64& rng, std::size_t index);

// Two groups of group_size nodes; each unordered pair is linked (random
// direction) with p_in inside a group and p_out across. truth[i] is 0 or 1.
SemanticCodeGraph planted_partition(std::mt19937_64& rng, std::size_t group_size, double p_in,
                                    double p_out, std::vector<int>& truth);

// Classes declaring methods whose successors are drawn from a small shared
// pool (so intersections are common), with some unresolved targets,
// parentless methods and constructors mixed in.
SemanticCodeGraph random_method_graph(std::mt19937_64& rng, std::size_t methods);

}  // namespace scg::testing
