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

#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "random_graphs.hpp"
#include "scg/centrality.hpp"
#include "scg/projection.hpp"
#include "scg/rank.hpp"

namespace scg {
namespace {

GraphNode n(std::string id, std::vector<std::string> to = {}, int loc = 1) {
  GraphNode node;
  node.id = std::move(id);
  node.kind = "METHOD";
  node.displayName = node.id;
  node.properties["loc"] = std::to_string(loc);
  for (auto& t : to) {
    Edge e;
    e.to = std::move(t);
    e.type = "CALL";
    node.edges.push_back(std::move(e));
  }
  return node;
}

double score_of(const RankTable& t, const std::string& id) {
  for (const auto& e : t.entries) {
    if (e.id == id) return e.score;
  }
  return -1;
}

TEST_CASE("metric names") {
  for (auto m : kAllRankMetrics) CHECK(parse_rank_metric(to_string(m)) == m);
  CHECK_FALSE(parse_rank_metric("closeness").has_value());
}

TEST_CASE("directed 3-cycle has uniform PageRank") {
  const auto g = SemanticCodeGraph::from_nodes({n("a", {"b"}), n("b", {"c"}), n("c", {"a"})});
  const auto t = rank(g, RankMetric::PageRank, 3);
  for (const auto& e : t.entries) CHECK(e.score == doctest::Approx(1.0 / 3).epsilon(1e-9));
  CHECK(t.entries[0].id == "a");
}

TEST_CASE("path betweenness") {
  const auto g = SemanticCodeGraph::from_nodes({n("a", {"b"}), n("b", {"c"}), n("c")});
  const auto t = rank(g, RankMetric::Betweenness, 3);
  CHECK(score_of(t, "b") == 1);
  CHECK(score_of(t, "a") == 0);
  CHECK(score_of(t, "c") == 0);
}

TEST_CASE("harmonic of an in-star hub") {
  const auto g = SemanticCodeGraph::from_nodes(
      {n("h"), n("a", {"h"}), n("b", {"h"}), n("c", {"h"}), n("d", {"h"})});
  CHECK(score_of(rank(g, RankMetric::Harmonic, 1), "h") == doctest::Approx(1.0));
}

TEST_CASE("invalid k") {
  const auto g = SemanticCodeGraph::from_nodes({n("a")});
  CHECK_THROWS_AS(rank(g, RankMetric::Loc, 0), InvalidRankRequest);
}

TEST_CASE("ties break by id and degrees count multiplicity") {
  const auto g = SemanticCodeGraph::from_nodes({n("b", {"c", "c"}), n("a", {"c"}), n("c")});
  const auto t = rank(g, RankMetric::InDegree, 3);
  CHECK(t.entries[0].id == "c");
  CHECK(t.entries[0].score == 3);
  CHECK(t.entries[1].id == "a");
  CHECK(t.entries[2].id == "b");
}

TEST_CASE("single node tops every metric") {
  const auto g = SemanticCodeGraph::from_nodes({n("only")});
  const auto c = combined_importance(g);
  REQUIRE(c.entries.size() == 1);
  CHECK(c.entries[0].score == 160);
  CHECK(c.entries[0].appearances == 8);
}

TEST_CASE("acyclic graphs fall back to the teleport eigenvector") {
  const auto g = SemanticCodeGraph::from_nodes({n("a", {"b"}), n("b", {"c"}), n("c")});
  std::map<std::string, std::string> notes;
  const auto s = scores(g, RankMetric::Eigenvector, &notes);
  bool fallback = false;
  const auto o = oracle::eigenvector(g, &fallback);
  CHECK(fallback);
  CHECK(oracle::close_relative(s, o, 1e-6));
  CHECK_FALSE(notes.empty());
}

TEST_CASE("property: centralities match dense oracles") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 25; ++round) {
    testing::RandomGraphSpec spec;
    spec.nodes = 1 + rng() % 25;
    spec.edge_probability = std::uniform_real_distribution<double>(0.03, 0.3)(rng);
    spec.max_multiplicity = 2;
    spec.self_loop_probability = 0.05;
    const auto g = round % 4 == 0 ? testing::random_dag(rng, spec.nodes, spec.edge_probability)
                                  : testing::random_graph(rng, spec);
    for (auto metric : kAllRankMetrics) {
      const std::string name(to_string(metric));
      INFO(name << " round " << round);
      CHECK(oracle::close_relative(scores(g, metric), oracle::scores(g, name), 1e-6));
    }
  }
}

TEST_CASE("property: PageRank sums to one, eigenvector has unit norm") {
  std::mt19937_64 rng(37);
  for (int round = 0; round < 20; ++round) {
    testing::RandomGraphSpec spec;
    spec.nodes = 2 + rng() % 40;
    spec.edge_probability = 0.1;
    const auto g = testing::random_graph(rng, spec);
    const auto pr = scores(g, RankMetric::PageRank);
    CHECK(std::accumulate(pr.begin(), pr.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-9));
    const auto ev = scores(g, RankMetric::Eigenvector);
    double norm = 0;
    for (double x : ev) norm += x * x;
    CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("property: betweenness on a directed path is the separated pair count") {
  for (std::size_t len : {2u, 5u, 9u}) {
    std::vector<GraphNode> nodes;
    for (std::size_t i = 0; i < len; ++i) {
      std::vector<std::string> to;
      if (i + 1 < len) to.push_back("v" + std::to_string(i + 1));
      nodes.push_back(n("v" + std::to_string(i), to));
    }
    // Ids v0..v9 sort lexicographically in path order for these lengths.
    const auto g = SemanticCodeGraph::from_nodes(nodes);
    const auto b = scores(g, RankMetric::Betweenness);
    for (std::size_t i = 0; i < len; ++i) {
      const auto k = *g.index_of("v" + std::to_string(i));
      CHECK(b[k] == static_cast<double>(i * (len - 1 - i)));
    }
  }
}

TEST_CASE("property: ranking is stable under loc scaling and disjoint duplication") {
  std::mt19937_64 rng(41);
  testing::RandomGraphSpec spec;
  spec.nodes = 15;
  spec.edge_probability = 0.2;
  const auto g = testing::random_graph(rng, spec);
  std::vector<GraphNode> scaled, doubled;
  for (auto node : g.nodes()) {
    auto copy = node;
    copy.properties["loc"] = std::to_string(std::stoi(node.properties.at("loc")) * 7);
    scaled.push_back(copy);
    doubled.push_back(node);
    auto twin = node;
    twin.id = "x" + node.id;
    for (auto& e : twin.edges) e.to = "x" + e.to;
    doubled.push_back(twin);
  }
  auto order = [](const RankTable& t) {
    std::vector<std::string> ids;
    for (const auto& e : t.entries) {
      if (e.id[0] != 'x') ids.push_back(e.id);
    }
    return ids;
  };
  const auto gs = SemanticCodeGraph::from_nodes(scaled);
  const auto gd = SemanticCodeGraph::from_nodes(doubled);
  CHECK(order(rank(g, RankMetric::Loc, 15)) == order(rank(gs, RankMetric::Loc, 15)));
  for (auto metric : {RankMetric::PageRank, RankMetric::Katz, RankMetric::InDegree,
                      RankMetric::Betweenness}) {
    auto a = rank(g, metric, 15);
    auto b = rank(gd, metric, 30);
    // Equal scores may reorder; compare the score sequence of the original copy.
    std::vector<double> sa, sb;
    for (const auto& e : a.entries) sa.push_back(e.score);
    for (const auto& e : b.entries) {
      if (e.id[0] != 'x') sb.push_back(e.score);
    }
    REQUIRE(sa.size() == sb.size());
    for (std::size_t i = 0; i + 1 < sb.size(); ++i) CHECK(sb[i] >= sb[i + 1]);
    CHECK(order(a).size() == order(b).size());
  }
}

TEST_CASE("property: combined importance depends only on the top lists") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 5; ++round) {
    testing::RandomGraphSpec spec;
    spec.nodes = 40;
    spec.edge_probability = 0.08;
    const auto g = testing::random_graph(rng, spec);
    std::vector<RankTable> tables;
    for (auto m : kAllRankMetrics) tables.push_back(rank(g, m, kCombinedDepth));
    const auto direct = combined_importance(g);
    CHECK(combined_importance(tables) == direct);
    const auto expected = oracle::combined(g);
    REQUIRE(direct.entries.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(direct.entries[i].id == expected[i].id);
      CHECK(direct.entries[i].score == expected[i].points);
      CHECK(direct.entries[i].appearances == expected[i].appearances);
    }
  }
}

}  // namespace
}  // namespace scg
