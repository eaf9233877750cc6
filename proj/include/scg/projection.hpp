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
#include <vector>

#include "scg/graph.hpp"

namespace scg {

// Adjacency lists over node indices, each list sorted ascending.
using Adjacency = std::vector<std::vector<std::size_t>>;

// Directed simple graph: parallel edges collapsed, self loops dropped.
Adjacency directed_simple(const SemanticCodeGraph& graph);

// Reverses a directed adjacency (in-neighbours per node).
Adjacency transpose(const Adjacency& adjacency);

// Undirected simple graph: direction ignored, parallel edges collapsed,
// self loops dropped. Symmetric.
Adjacency undirected_simple(const SemanticCodeGraph& graph);

}  // namespace scg
