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

#include "scg/similar.hpp"

#include <algorithm>
#include <unordered_map>

namespace scg {
namespace {

struct Method {
  std::size_t node;
  std::vector<std::size_t> successors;  // interned target ids, sorted
  std::vector<std::string> parents;     // sorted
};

}  // namespace

int share_percent(std::size_t shared, std::size_t total) {
  if (shared == 0 || total == 0) return 0;
  return static_cast<int>(static_cast<double>(shared) / static_cast<double>(total) * 100.0);
}

std::vector<SimilarPair> find_similar_methods(const SemanticCodeGraph& graph,
                                              SimilarityOptions options) {
  if (options.s_min == 0) throw std::invalid_argument("s_min must be at least 1");

  std::unordered_map<std::string_view, std::size_t> interned;
  auto intern = [&](std::string_view id) {
    return interned.emplace(id, interned.size()).first->second;
  };

  std::vector<Method> methods;
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    const GraphNode& node = graph.node(i);
    if (node.kind != "METHOD") continue;
    Method m{i, {}, {}};
    for (const Edge& e : node.edges) m.successors.push_back(intern(e.to));
    std::sort(m.successors.begin(), m.successors.end());
    m.successors.erase(std::unique(m.successors.begin(), m.successors.end()), m.successors.end());
    if (m.successors.empty()) continue;
    for (std::size_t e : graph.in_edges(i, "DECLARATION")) {
      m.parents.push_back(graph.node(graph.edges()[e].from).id);
    }
    std::sort(m.parents.begin(), m.parents.end());
    m.parents.erase(std::unique(m.parents.begin(), m.parents.end()), m.parents.end());
    methods.push_back(std::move(m));
  }

  // Inverted index: successor -> methods reaching it, in method order.
  std::vector<std::vector<std::size_t>> postings(interned.size());
  for (std::size_t k = 0; k < methods.size(); ++k) {
    for (std::size_t t : methods[k].successors) postings[t].push_back(k);
  }

  std::vector<SimilarPair> result;
  std::vector<std::size_t> shared(methods.size(), 0);
  std::vector<std::size_t> touched;
  for (std::size_t a = 0; a < methods.size(); ++a) {
    touched.clear();
    for (std::size_t t : methods[a].successors) {
      for (auto it = std::upper_bound(postings[t].begin(), postings[t].end(), a);
           it != postings[t].end(); ++it) {
        if (shared[*it]++ == 0) touched.push_back(*it);
      }
    }
    for (std::size_t b : touched) {
      const std::size_t s = shared[b];
      shared[b] = 0;
      if (s < options.s_min) continue;
      int pa = share_percent(s, methods[a].successors.size());
      int pb = share_percent(s, methods[b].successors.size());
      if (pa < options.s_min_p || pb < options.s_min_p) continue;
      const auto& qa = methods[a].parents;
      const auto& qb = methods[b].parents;
      if (!qa.empty() && qa == qb) continue;
      std::string ida = graph.node(methods[a].node).id;
      std::string idb = graph.node(methods[b].node).id;
      if (idb < ida) {
        std::swap(ida, idb);
        std::swap(pa, pb);
      }
      result.push_back({std::move(ida), std::move(idb), s, pa, pb});
    }
  }
  std::sort(result.begin(), result.end(), [](const SimilarPair& x, const SimilarPair& y) {
    if (x.s != y.s) return x.s > y.s;
    if (x.m1 != y.m1) return x.m1 < y.m1;
    return x.m2 < y.m2;
  });
  return result;
}

}  // namespace scg
