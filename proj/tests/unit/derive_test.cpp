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
#include <set>
#include <tuple>

#include "doctest.h"
#include "golden.hpp"
#include "random_graphs.hpp"
#include "scg/derive.hpp"
#include "scg/extract/extractor.hpp"

namespace scg {
namespace {

using Triple = std::tuple<std::string, std::string, std::string>;

std::set<Triple> edges_of(const SemanticCodeGraph& g) {
  std::set<Triple> out;
  for (const auto& r : g.edges()) out.insert({g.node(r.from).id, g.edge(r).type, g.node(r.to).id});
  return out;
}

SemanticCodeGraph fixture(const char* name) {
  return assemble(extract::extract(testing::fixture_dir() / name / "src").files);
}

TEST_CASE("view names") {
  CHECK(parse_graph_view("CCN") == GraphView::CCN);
  CHECK(parse_graph_view("CG") == GraphView::CG);
  CHECK_FALSE(parse_graph_view("cg").has_value());
  CHECK_FALSE(parse_graph_view("XYZ").has_value());
  CHECK(to_string(GraphView::SCG) == "SCG");
}

TEST_CASE("class collaboration network of the coupling fixture") {
  const auto ccn = to_ccn(fixture("class_network"));
  CHECK(ccn.node_count() == 4);
  const std::set<Triple> expected = {{"p/B#", "INHERITANCE", "p/A#"},
                                     {"p/B#", "AGGREGATION", "p/D#"},
                                     {"p/B#", "REFERENCE", "p/C#"},
                                     {"p/B#", "REFERENCE", "p/D#"}};
  CHECK(edges_of(ccn) == expected);
  CHECK(ccn.edge_count() == 4);
  for (const auto& r : ccn.edges()) CHECK(ccn.edge(r).properties.count("witness") == 1);
  CHECK(ccn.metadata().at(std::string(meta::kView)) == "CCN");
}

TEST_CASE("graph without class-level nodes gives an empty network") {
  GraphNode m;
  m.id = "m().";
  m.kind = "METHOD";
  CHECK(to_ccn(SemanticCodeGraph::from_nodes({m})).node_count() == 0);
}

TEST_CASE("call graph keeps only CALL edges") {
  const auto cg = to_cg(fixture("default_package"));
  CHECK(edges_of(cg) == std::set<Triple>{{"B#bar().", "CALL", "A#foo()."}});
  CHECK(cg.node_count() == 2);
}

TEST_CASE("graph without calls gives an empty call graph") {
  CHECK(to_cg(fixture("interface_impl")).node_count() == 0);
}

TEST_CASE("derived views carry the project line count") {
  const auto g = fixture("project3");
  const auto loc = total_loc(g);
  CHECK(loc > 0);
  CHECK(total_loc(to_ccn(g)) == loc);
  CHECK(total_loc(to_cg(g)) == loc);
}

TEST_CASE("property: derivation invariants on random graphs") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 30; ++round) {
    testing::RandomGraphSpec spec;
    spec.nodes = 25;
    spec.edge_probability = 0.15;
    spec.max_multiplicity = 2;
    spec.self_loop_probability = 0.1;
    spec.edge_types = {"CALL", "TYPE", "EXTEND", "DECLARATION", "RETURN_TYPE", "PARAMETER"};
    spec.kinds = {"METHOD", "CLASS", "INTERFACE", "VARIABLE", "VALUE", "PARAM", "CONSTRUCTOR"};
    const auto g = testing::random_graph(rng, spec);

    const auto cg = to_cg(g);
    const auto input_calls = edges_of(g);
    for (const auto& r : cg.edges()) {
      CHECK(input_calls.count({cg.node(r.from).id, "CALL", cg.node(r.to).id}) == 1);
    }
    for (const auto& n : cg.nodes()) {
      CHECK((n.kind == "METHOD" || n.kind == "CONSTRUCTOR" || n.kind == "VALUE" ||
             n.kind == "VARIABLE"));
      const auto i = *cg.index_of(n.id);
      CHECK(cg.in_edges(i).size() + cg.out_edges(i).size() > 0);
    }
    CHECK(to_cg(cg) == cg);

    const auto ccn = to_ccn(g);
    std::set<std::string> class_level, vertices;
    for (const auto& n : g.nodes()) {
      if (is_class_level(n.kind)) class_level.insert(n.id);
    }
    for (const auto& n : ccn.nodes()) vertices.insert(n.id);
    CHECK(vertices == class_level);
    std::set<Triple> seen;
    for (const auto& r : ccn.edges()) {
      CHECK(r.from != r.to);
      CHECK(seen.insert({ccn.node(r.from).id, ccn.edge(r).type, ccn.node(r.to).id}).second);
      CHECK_FALSE(ccn.edge(r).properties.at("witness").empty());
    }
  }
}

}  // namespace
}  // namespace scg
