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

#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "random_graphs.hpp"
#include "scg/export.hpp"

namespace scg {
namespace {

SemanticCodeGraph sample() {
  GraphNode a;
  a.id = "p/A#";
  a.kind = "CLASS";
  a.displayName = "A, \"quoted\"";
  a.properties = {{"loc", "3"}, {"package", "p"}};
  Edge e;
  e.to = "p/A#m().";
  e.type = "DECLARATION";
  a.edges.push_back(e);
  GraphNode m;
  m.id = "p/A#m().";
  m.kind = "METHOD";
  m.displayName = "m";
  return SemanticCodeGraph::from_nodes({a, m});
}

TEST_CASE("format names") {
  CHECK(parse_export_format("graphml") == ExportFormat::GraphML);
  CHECK(parse_export_format("jsonl") == ExportFormat::Jsonl);
  CHECK_FALSE(parse_export_format("xml").has_value());
}

TEST_CASE("graphml carries extra attributes") {
  std::ostringstream out;
  write_graphml(sample(), out, {{"community", {{"p/A#", "0"}, {"p/A#m().", "1"}}}});
  const auto text = out.str();
  CHECK(text.find("<graphml") != std::string::npos);
  CHECK(text.find("community") != std::string::npos);
  CHECK(text.find("&quot;quoted&quot;") != std::string::npos);
  CHECK(text.find("DECLARATION") != std::string::npos);
}

TEST_CASE("dot and gdf mention every node") {
  std::ostringstream dot, gdf;
  write_dot(sample(), dot);
  write_gdf(sample(), gdf);
  for (const auto* s : {&dot, &gdf}) {
    CHECK(s->str().find("p/A#m().") != std::string::npos);
  }
  CHECK(dot.str().rfind("digraph", 0) == 0);
  CHECK(gdf.str().rfind("nodedef>", 0) == 0);
}

TEST_CASE("jsonl has one object per node") {
  std::ostringstream out;
  write_jsonl(sample(), out);
  std::istringstream in(out.str());
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.contains("id"));
    ++count;
  }
  CHECK(count == 2);
}

TEST_CASE("property: csv round trip keeps nodes and resolved edges") {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 10; ++round) {
    testing::RandomGraphSpec spec;
    spec.nodes = 15;
    spec.max_multiplicity = 2;
    spec.edge_types = {"CALL", "TYPE", "DECLARATION"};
    spec.kinds = {"METHOD", "CLASS"};
    const auto g = testing::random_graph(rng, spec);
    std::ostringstream nodes, edges;
    write_csv(g, nodes, edges);
    std::istringstream nin(nodes.str()), ein(edges.str());
    const auto back = import_csv(nin, ein);
    REQUIRE(back.node_count() == g.node_count());
    CHECK(back.edge_count() == g.edge_count());
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      CHECK(back.node(i).id == g.node(i).id);
      CHECK(back.node(i).kind == g.node(i).kind);
      CHECK(back.node(i).edges.size() == g.node(i).edges.size());
    }
  }
}

}  // namespace
}  // namespace scg
