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

#include "scg/partition.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace scg {
namespace {

std::uint64_t mix(std::uint64_t x) {
  // splitmix64 finaliser
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t combine(std::uint64_t h, std::uint64_t v) { return mix(h ^ mix(v)); }

// Weisfeiler-Lehman colour refinement over the weighted graph.
std::vector<std::uint64_t> structural_colours(const WeightedGraph& g, int rounds) {
  const std::size_t n = g.size();
  std::vector<std::uint64_t> colour(n);
  for (std::size_t i = 0; i < n; ++i) {
    colour[i] = combine(std::bit_cast<std::uint64_t>(g.degree(i)),
                        std::bit_cast<std::uint64_t>(g.loops[i]));
  }
  std::vector<std::uint64_t> next(n), signature;
  for (int r = 0; r < rounds; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      signature.clear();
      for (auto [j, w] : g.adjacency[i]) {
        signature.push_back(combine(colour[j], std::bit_cast<std::uint64_t>(w)));
      }
      std::sort(signature.begin(), signature.end());
      std::uint64_t h = colour[i];
      for (std::uint64_t s : signature) h = combine(h, s);
      next[i] = h;
    }
    colour.swap(next);
  }
  return colour;
}

// One level of local moving. Nodes are visited in index order; returns true
// if any node changed community.
bool local_moves(const WeightedGraph& g, double resolution, std::vector<std::size_t>& community) {
  const std::size_t n = g.size();
  std::vector<double> degree(n), total(n, 0.0);
  double two_m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    degree[i] = g.degree(i);
    total[community[i]] += degree[i];
    two_m += degree[i];
  }
  if (two_m <= 0) return false;

  std::vector<double> link(n, 0.0);
  std::vector<std::size_t> seen;
  bool moved_any = false;
  constexpr int kMaxPasses = 1000;
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    bool moved = false;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t own = community[i];
      seen.clear();
      for (auto [j, w] : g.adjacency[i]) {
        std::size_t c = community[j];
        if (link[c] == 0 && std::find(seen.begin(), seen.end(), c) == seen.end()) seen.push_back(c);
        link[c] += w;
      }
      total[own] -= degree[i];
      auto gain = [&](std::size_t c) { return link[c] - resolution * total[c] * degree[i] / two_m; };
      std::size_t best = own;
      double best_gain = gain(own);
      std::sort(seen.begin(), seen.end());
      for (std::size_t c : seen) {
        double value = gain(c);
        if (value > best_gain + 1e-12 * two_m) {
          best = c;
          best_gain = value;
        }
      }
      total[best] += degree[i];
      community[i] = best;
      if (best != own) moved = true;
      for (std::size_t c : seen) link[c] = 0;
      link[own] = 0;
    }
    if (!moved) break;
    moved_any = true;
  }
  return moved_any;
}

// Renumbers communities 0..k-1 in order of first occurrence.
std::size_t compact(std::vector<std::size_t>& community) {
  std::vector<std::size_t> remap(community.size(), static_cast<std::size_t>(-1));
  std::size_t next = 0;
  for (std::size_t& c : community) {
    if (remap[c] == static_cast<std::size_t>(-1)) remap[c] = next++;
    c = remap[c];
  }
  return next;
}

WeightedGraph aggregate(const WeightedGraph& g, const std::vector<std::size_t>& community,
                        std::size_t count) {
  WeightedGraph out;
  out.adjacency.resize(count);
  out.loops.assign(count, 0.0);
  std::vector<std::map<std::size_t, double>> links(count);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::size_t ci = community[i];
    out.loops[ci] += g.loops[i];
    for (auto [j, w] : g.adjacency[i]) {
      const std::size_t cj = community[j];
      if (ci == cj) {
        if (i < j) out.loops[ci] += w;
      } else {
        links[ci][cj] += w;
      }
    }
  }
  for (std::size_t c = 0; c < count; ++c) {
    out.adjacency[c].assign(links[c].begin(), links[c].end());
  }
  return out;
}

WeightedGraph permute(const WeightedGraph& g, const std::vector<std::size_t>& rank) {
  WeightedGraph out;
  out.adjacency.resize(g.size());
  out.loops.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.loops[rank[i]] = g.loops[i];
    for (auto [j, w] : g.adjacency[i]) out.adjacency[rank[i]].emplace_back(rank[j], w);
    std::sort(out.adjacency[rank[i]].begin(), out.adjacency[rank[i]].end());
  }
  return out;
}

}  // namespace

double WeightedGraph::degree(std::size_t node) const {
  double d = 2 * loops[node];
  for (const auto& [j, w] : adjacency[node]) d += w;
  return d;
}

WeightedGraph weighted_projection(const SemanticCodeGraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<std::map<std::size_t, double>> links(n);
  WeightedGraph g;
  g.loops.assign(n, 0.0);
  for (const ResolvedEdge& e : graph.edges()) {
    const double w = graph.edge(e).type == "DECLARATION" ? kDeclarationWeight : 1.0;
    if (e.from == e.to) {
      g.loops[e.from] += w;
    } else {
      links[e.from][e.to] += w;
      links[e.to][e.from] += w;
    }
  }
  g.adjacency.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.adjacency[i].assign(links[i].begin(), links[i].end());
  return g;
}

double modularity(const WeightedGraph& g, const std::vector<std::size_t>& membership,
                  double resolution) {
  const std::size_t n = g.size();
  std::map<std::size_t, double> inside, total;
  double two_m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = g.degree(i);
    two_m += d;
    total[membership[i]] += d;
    inside[membership[i]] += 2 * g.loops[i];
    for (auto [j, w] : g.adjacency[i]) {
      if (membership[j] == membership[i]) inside[membership[i]] += w;
    }
  }
  if (two_m <= 0) return 0;
  double q = 0;
  for (const auto& [c, tot] : total) {
    const double share = tot / two_m;
    q += inside[c] / two_m - resolution * share * share;
  }
  return q;
}

Partition partition(const SemanticCodeGraph& graph, double resolution, std::uint64_t seed) {
  Partition result;
  result.resolution = resolution;
  result.seed = seed;
  result.notes["quality"] = "modularity of the undirected weighted projection";
  result.notes["weights"] = "edge multiplicity, DECLARATION x2";
  const std::size_t n = graph.node_count();
  if (n == 0) return result;

  const WeightedGraph projected = weighted_projection(graph);

  // Visit order: seeded hash of structural colour, ties by index.
  const std::vector<std::uint64_t> colour = structural_colours(projected, 3);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::uint64_t> key(n);
  for (std::size_t i = 0; i < n; ++i) key[i] = combine(mix(seed), colour[i]);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;

  WeightedGraph level = permute(projected, rank);
  std::vector<std::size_t> assignment(n);  // by rank
  std::iota(assignment.begin(), assignment.end(), 0);
  while (true) {
    std::vector<std::size_t> community(level.size());
    std::iota(community.begin(), community.end(), 0);
    if (!local_moves(level, resolution, community)) break;
    const std::size_t count = compact(community);
    for (std::size_t& a : assignment) a = community[a];
    if (count == level.size()) break;
    level = aggregate(level, community, count);
  }

  // Canonical labels: communities numbered by their smallest node id.
  std::vector<std::size_t> by_id(n);
  std::iota(by_id.begin(), by_id.end(), 0);
  std::sort(by_id.begin(), by_id.end(),
            [&](std::size_t a, std::size_t b) { return graph.node(a).id < graph.node(b).id; });
  std::map<std::size_t, std::size_t> label;
  for (std::size_t i : by_id) label.emplace(assignment[rank[i]], label.size());
  result.membership.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.membership[i] = label.at(assignment[rank[i]]);
  result.modularity = modularity(projected, result.membership, resolution);

  std::vector<std::map<std::string, std::size_t>> packages(label.size());
  result.communities.resize(label.size());
  for (std::size_t i = 0; i < n; ++i) {
    Community& c = result.communities[result.membership[i]];
    c.label = result.membership[i];
    ++c.size;
    if (auto p = property(graph.node(i).properties, prop::kPackage)) {
      ++packages[c.label][std::string(*p)];
    }
  }
  for (Community& c : result.communities) {
    for (const auto& [name, count] : packages[c.label]) {
      if (count > c.dominant_count) {
        c.dominant_package = name;
        c.dominant_count = count;
      }
    }
  }
  return result;
}

}  // namespace scg
