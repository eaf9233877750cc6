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

#include "scg/derive.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <tuple>

namespace scg {
namespace {

bool is_ownership(std::string_view type) {
  return type == "DECLARATION" || type == "PARAMETER" || type == "TYPE_PARAMETER";
}

long long parse_loc(const GraphNode& node) {
  auto text = property(node.properties, prop::kLoc);
  if (!text) return 0;
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text->data(), text->data() + text->size(), value);
  return ec == std::errc() ? value : 0;
}

std::optional<std::size_t> class_owner(const SemanticCodeGraph& g, std::size_t node) {
  std::size_t current = node;
  for (std::size_t steps = 0; steps <= g.node_count(); ++steps) {
    if (is_class_level(g.node(current).kind)) return current;
    auto owner = owner_of(g, current);
    if (!owner) return std::nullopt;
    current = *owner;
  }
  return std::nullopt;  // ownership cycle in hand-made data
}

GraphNode strip_edges(const GraphNode& node) {
  GraphNode copy = node;
  copy.edges.clear();
  return copy;
}

Properties derived_metadata(const SemanticCodeGraph& g, GraphView view) {
  Properties meta;
  meta[std::string(meta::kView)] = std::string(to_string(view));
  meta[std::string(meta::kTotalLoc)] = std::to_string(total_loc(g));
  return meta;
}

std::string witness(const SemanticCodeGraph& g, const ResolvedEdge& e) {
  return g.node(e.from).id + " -" + g.edge(e).type + "-> " + g.node(e.to).id;
}

}  // namespace

std::optional<GraphView> parse_graph_view(std::string_view name) {
  if (name == "SCG") return GraphView::SCG;
  if (name == "CCN") return GraphView::CCN;
  if (name == "CG") return GraphView::CG;
  return std::nullopt;
}

std::string_view to_string(GraphView view) {
  switch (view) {
    case GraphView::SCG: return "SCG";
    case GraphView::CCN: return "CCN";
    case GraphView::CG: return "CG";
  }
  return "";
}

long long total_loc(const SemanticCodeGraph& graph) {
  if (auto stored = property(graph.metadata(), meta::kTotalLoc)) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(stored->data(), stored->data() + stored->size(), value);
    if (ec == std::errc()) return value;
  }
  long long total = 0;
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    if (!owner_of(graph, i)) total += parse_loc(graph.node(i));
  }
  return total;
}

std::optional<std::size_t> owner_of(const SemanticCodeGraph& graph, std::size_t node) {
  for (std::size_t e : graph.in_edges(node)) {
    const ResolvedEdge& ref = graph.edges()[e];
    if (is_ownership(graph.edge(ref).type) && ref.from != node) return ref.from;
  }
  return std::nullopt;
}

SemanticCodeGraph to_ccn(const SemanticCodeGraph& g) {
  std::vector<GraphNode> nodes;
  std::vector<std::optional<std::size_t>> slot(g.node_count());
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (is_class_level(g.node(i).kind)) {
      slot[i] = nodes.size();
      nodes.push_back(strip_edges(g.node(i)));
    }
  }

  std::set<std::tuple<std::size_t, std::size_t, CcnEdgeType>> seen;
  auto add = [&](std::optional<std::size_t> from, std::size_t to, CcnEdgeType type,
                 const ResolvedEdge& why) {
    if (!from || *from == to || !slot[*from] || !slot[to]) return;
    if (!seen.emplace(*from, to, type).second) return;
    Edge e;
    e.to = g.node(to).id;
    e.type = std::string(to_string(type));
    e.location = g.edge(why).location;
    e.properties[std::string(prop::kWitness)] = witness(g, why);
    nodes[*slot[*from]].edges.push_back(std::move(e));
  };

  for (const ResolvedEdge& ref : g.edges()) {
    const std::string& type = g.edge(ref).type;
    const GraphNode& src = g.node(ref.from);
    if (type == "EXTEND") {
      if (is_class_level(src.kind)) add(ref.from, ref.to, CcnEdgeType::INHERITANCE, ref);
    } else if (type == "TYPE") {
      if (src.kind == "VALUE" || src.kind == "VARIABLE") {
        if (property(src.properties, prop::kIsLocal) == "true") continue;
        auto owner = owner_of(g, ref.from);
        if (owner && is_class_level(g.node(*owner).kind)) {
          add(owner, ref.to, CcnEdgeType::AGGREGATION, ref);
        }
      } else if (src.kind == "PARAM") {
        auto method = owner_of(g, ref.from);
        if (method && (g.node(*method).kind == "METHOD" || g.node(*method).kind == "CONSTRUCTOR")) {
          add(class_owner(g, *method), ref.to, CcnEdgeType::REFERENCE, ref);
        }
      }
    } else if (type == "RETURN_TYPE") {
      add(class_owner(g, ref.from), ref.to, CcnEdgeType::REFERENCE, ref);
    }
  }
  return SemanticCodeGraph::from_nodes(std::move(nodes), derived_metadata(g, GraphView::CCN));
}

SemanticCodeGraph to_cg(const SemanticCodeGraph& g) {
  auto callable = [&](std::size_t i) {
    const std::string& k = g.node(i).kind;
    return k == "METHOD" || k == "CONSTRUCTOR" || k == "VALUE" || k == "VARIABLE";
  };
  std::vector<std::vector<std::size_t>> kept(g.node_count());
  std::vector<bool> used(g.node_count(), false);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const ResolvedEdge& ref = g.edges()[e];
    if (g.edge(ref).type != "CALL" || !callable(ref.from) || !callable(ref.to)) continue;
    kept[ref.from].push_back(ref.slot);
    used[ref.from] = used[ref.to] = true;
  }
  std::vector<GraphNode> nodes;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (!used[i]) continue;
    GraphNode n = strip_edges(g.node(i));
    std::sort(kept[i].begin(), kept[i].end());
    for (std::size_t s : kept[i]) n.edges.push_back(g.node(i).edges[s]);
    nodes.push_back(std::move(n));
  }
  return SemanticCodeGraph::from_nodes(std::move(nodes), derived_metadata(g, GraphView::CG));
}

SemanticCodeGraph derive(const SemanticCodeGraph& graph, GraphView view) {
  switch (view) {
    case GraphView::SCG: return graph;
    case GraphView::CCN: return to_ccn(graph);
    case GraphView::CG: return to_cg(graph);
  }
  return graph;
}

}  // namespace scg
