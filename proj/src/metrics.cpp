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

#include "scg/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "scg/derive.hpp"
#include "scg/projection.hpp"

namespace scg {
namespace {

double population_std(const std::vector<std::size_t>& degrees, double mean) {
  double sum = 0;
  for (std::size_t d : degrees) {
    double diff = static_cast<double>(d) - mean;
    sum += diff * diff;
  }
  return std::sqrt(sum / static_cast<double>(degrees.size()));
}

// Triangles through each node of an undirected simple graph. Edges are
// oriented from lower to higher (degree, index) rank so every triangle is
// found once.
std::vector<std::size_t> triangles(const Adjacency& adj) {
  const std::size_t n = adj.size();
  auto before = [&](std::size_t a, std::size_t b) {
    return adj[a].size() != adj[b].size() ? adj[a].size() < adj[b].size() : a < b;
  };
  Adjacency forward(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v : adj[u]) {
      if (before(u, v)) forward[u].push_back(v);
    }
  }
  std::vector<std::size_t> count(n, 0);
  std::vector<std::size_t> mark(n, n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v : forward[u]) mark[v] = u;
    for (std::size_t v : forward[u]) {
      for (std::size_t w : forward[v]) {
        if (mark[w] == u) {
          ++count[u];
          ++count[v];
          ++count[w];
        }
      }
    }
  }
  return count;
}

double assortativity(const Adjacency& adj) {
  // Pearson correlation of endpoint degrees over both orientations of every
  // undirected edge.
  double edges = 0, sum = 0, sum_sq = 0, sum_prod = 0;
  for (std::size_t u = 0; u < adj.size(); ++u) {
    const double du = static_cast<double>(adj[u].size());
    for (std::size_t v : adj[u]) {
      const double dv = static_cast<double>(adj[v].size());
      edges += 1;
      sum += du;
      sum_sq += du * du;
      sum_prod += du * dv;
    }
  }
  if (edges == 0) return 0;
  const double mean = sum / edges;
  const double var = sum_sq / edges - mean * mean;
  if (var <= 1e-12 * std::max(1.0, mean * mean)) return 0;
  return (sum_prod / edges - mean * mean) / var;
}

}  // namespace

ProjectSummary summary(const SemanticCodeGraph& graph) {
  ProjectSummary s;
  s.n = graph.node_count();
  s.m = graph.edge_count();
  s.totalLoc = total_loc(graph);
  s.notes["multiEdges"] = "counted for |E|, degree, sigma and IoD";
  s.notes["clustering"] = "undirected simple projection, self loops dropped";
  s.notes["acc"] = "nodes with degree < 2 contribute 0";
  s.notes["dac"] = "Pearson correlation of endpoint degrees";
  s.notes["sigma"] = "population";
  if (s.n == 0) return s;

  const double n = static_cast<double>(s.n);
  const double m = static_cast<double>(s.m);
  s.locPerNode = static_cast<double>(s.totalLoc) / n;
  s.density = s.n < 2 ? 0 : m / (n * (n - 1));
  s.avgDegree = m / n;

  std::vector<std::size_t> in(s.n, 0), out(s.n, 0);
  for (const ResolvedEdge& e : graph.edges()) {
    ++out[e.from];
    ++in[e.to];
  }
  s.stdInDegree = population_std(in, s.avgDegree);
  s.stdOutDegree = population_std(out, s.avgDegree);
  if (s.avgDegree > 0) {
    s.iodInDegree = s.stdInDegree * s.stdInDegree / s.avgDegree;
    s.iodOutDegree = s.stdOutDegree * s.stdOutDegree / s.avgDegree;
  }

  const Adjacency adj = undirected_simple(graph);
  const std::vector<std::size_t> tri = triangles(adj);
  double local_sum = 0, closed = 0, triplets = 0;
  for (std::size_t i = 0; i < s.n; ++i) {
    const double d = static_cast<double>(adj[i].size());
    if (d >= 2) local_sum += 2.0 * static_cast<double>(tri[i]) / (d * (d - 1));
    closed += static_cast<double>(tri[i]);
    triplets += d * (d - 1) / 2;
  }
  s.acc = local_sum / n;
  // Each triangle is counted once per corner, i.e. 3 x triangles.
  s.gcc = triplets > 0 ? closed / triplets : 0;
  s.dac = assortativity(adj);
  return s;
}

DistributionReport distributions(const SemanticCodeGraph& graph) {
  DistributionReport r;
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    ++r.in_degree[graph.in_edges(i).size()];
    ++r.out_degree[graph.out_edges(i).size()];
    ++r.node_kinds[graph.node(i).kind];
  }
  for (const ResolvedEdge& e : graph.edges()) ++r.edge_types[graph.edge(e).type];
  return r;
}

GroupKey parse_group_key(std::string_view name) {
  if (name == "file") return GroupKey::File;
  if (name == "package") return GroupKey::Package;
  if (name == "kind") return GroupKey::Kind;
  if (name == "isLocal") return GroupKey::IsLocal;
  throw UnknownGroupKey("unknown group key '" + std::string(name) +
                        "' (expected file, package, kind or isLocal)");
}

std::string_view to_string(GroupKey key) {
  switch (key) {
    case GroupKey::File: return "file";
    case GroupKey::Package: return "package";
    case GroupKey::Kind: return "kind";
    case GroupKey::IsLocal: return "isLocal";
  }
  return "";
}

bool NodeFilter::matches(const GraphNode& node) const {
  if (!kinds.empty() && !kinds.contains(node.kind)) return false;
  if (is_local) {
    bool local = property(node.properties, prop::kIsLocal) == "true";
    if (local != *is_local) return false;
  }
  return true;
}

std::vector<std::pair<std::string, std::size_t>> group_count(const SemanticCodeGraph& graph,
                                                             const NodeFilter& filter,
                                                             GroupKey key) {
  std::map<std::string, std::size_t> counts;
  for (const GraphNode& node : graph.nodes()) {
    if (!filter.matches(node)) continue;
    std::optional<std::string_view> group;
    switch (key) {
      case GroupKey::File: group = property(node.properties, prop::kFile); break;
      case GroupKey::Package: group = property(node.properties, prop::kPackage); break;
      case GroupKey::Kind: group = node.kind; break;
      case GroupKey::IsLocal: group = property(node.properties, prop::kIsLocal); break;
    }
    if (group) ++counts[std::string(*group)];
  }
  std::vector<std::pair<std::string, std::size_t>> result(counts.begin(), counts.end());
  std::stable_sort(result.begin(), result.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return result;
}

}  // namespace scg
