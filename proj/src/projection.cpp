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

#include "scg/projection.hpp"

#include <algorithm>

namespace scg {
namespace {

void sort_unique(Adjacency& adj) {
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

}  // namespace

Adjacency directed_simple(const SemanticCodeGraph& graph) {
  Adjacency adj(graph.node_count());
  for (const ResolvedEdge& e : graph.edges()) {
    if (e.from != e.to) adj[e.from].push_back(e.to);
  }
  sort_unique(adj);
  return adj;
}

Adjacency transpose(const Adjacency& adjacency) {
  Adjacency out(adjacency.size());
  for (std::size_t u = 0; u < adjacency.size(); ++u) {
    for (std::size_t v : adjacency[u]) out[v].push_back(u);
  }
  return out;  // u ascends, so lists are already sorted
}

Adjacency undirected_simple(const SemanticCodeGraph& graph) {
  Adjacency adj(graph.node_count());
  for (const ResolvedEdge& e : graph.edges()) {
    if (e.from == e.to) continue;
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  sort_unique(adj);
  return adj;
}

}  // namespace scg
