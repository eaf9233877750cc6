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

#include "scg/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace scg {
namespace {

std::string describe(const std::optional<SourceLocation>& loc) {
  if (!loc) return "<no location>";
  std::ostringstream out;
  out << loc->uri << ':' << loc->startLine << ':' << loc->startCharacter;
  return out.str();
}

bool is_known_edge_type(std::string_view type) {
  return parse_edge_type(type).has_value() || parse_ccn_edge_type(type).has_value();
}

void check_location(const SourceLocation& loc, const std::string& node_id,
                    std::optional<std::size_t> slot, std::vector<Violation>& out) {
  if (loc.uri.empty()) {
    out.push_back({std::string(rule::kEmptyUri), node_id, slot, "location uri is empty"});
  } else if (loc.uri.find('\\') != std::string::npos || loc.uri.front() == '/') {
    out.push_back({std::string(rule::kUriSeparator), node_id, slot,
                   "location uri must be relative and use '/' separators: " + loc.uri});
  }
  if (loc.startLine < 0 || loc.startCharacter < 0 || loc.endLine < 0 || loc.endCharacter < 0) {
    out.push_back({std::string(rule::kNegativePosition), node_id, slot,
                   "location has a negative coordinate"});
  }
  if (std::pair(loc.startLine, loc.startCharacter) > std::pair(loc.endLine, loc.endCharacter)) {
    out.push_back({std::string(rule::kLocationOrder), node_id, slot,
                   "location ends before it starts"});
  }
}

}  // namespace

SemanticCodeGraph SemanticCodeGraph::from_nodes(std::vector<GraphNode> nodes,
                                                Properties metadata) {
  SemanticCodeGraph g;
  std::sort(nodes.begin(), nodes.end(),
            [](const GraphNode& a, const GraphNode& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (nodes[i - 1].id == nodes[i].id) {
      throw AssemblyError("duplicate node id " + nodes[i].id + " at " +
                          describe(nodes[i - 1].location) + " and " +
                          describe(nodes[i].location));
    }
  }
  g.nodes_ = std::move(nodes);
  g.metadata_ = std::move(metadata);
  g.out_.resize(g.nodes_.size());
  g.in_.resize(g.nodes_.size());
  for (std::size_t from = 0; from < g.nodes_.size(); ++from) {
    const auto& node = g.nodes_[from];
    for (std::size_t slot = 0; slot < node.edges.size(); ++slot) {
      const Edge& e = node.edges[slot];
      if (auto to = g.index_of(e.to)) {
        const std::size_t idx = g.edges_.size();
        g.edges_.push_back({from, *to, slot});
        g.out_[from].push_back(idx);
        g.in_[*to].push_back(idx);
      } else {
        g.dangling_.push_back({node.id, e});
      }
    }
  }
  return g;
}

std::optional<std::size_t> SemanticCodeGraph::index_of(std::string_view id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                             [](const GraphNode& n, std::string_view key) { return n.id < key; });
  if (it == nodes_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

const GraphNode* SemanticCodeGraph::find(std::string_view id) const {
  auto idx = index_of(id);
  return idx ? &nodes_[*idx] : nullptr;
}

std::vector<std::size_t> SemanticCodeGraph::out_edges(std::size_t node,
                                                      std::string_view type) const {
  std::vector<std::size_t> result;
  for (std::size_t e : out_[node]) {
    if (edge(e).type == type) result.push_back(e);
  }
  return result;
}

std::vector<std::size_t> SemanticCodeGraph::in_edges(std::size_t node,
                                                     std::string_view type) const {
  std::vector<std::size_t> result;
  for (std::size_t e : in_[node]) {
    if (edge(e).type == type) result.push_back(e);
  }
  return result;
}

std::vector<std::string> SemanticCodeGraph::dangling_targets() const {
  std::set<std::string> targets;
  for (const auto& d : dangling_) targets.insert(d.edge.to);
  return {targets.begin(), targets.end()};
}

SemanticCodeGraph assemble(std::vector<SemanticGraphFile> files) {
  std::sort(files.begin(), files.end());

  std::map<std::string, GraphNode, std::less<>> merged;
  for (auto& file : files) {
    for (auto& node : file.nodes) {
      auto it = merged.find(node.id);
      if (it == merged.end()) {
        merged.emplace(node.id, std::move(node));
        continue;
      }
      GraphNode& existing = it->second;
      if (existing.kind != node.kind || existing.location != node.location) {
        throw AssemblyError("conflicting declarations of " + node.id + ": " + existing.kind +
                            " at " + describe(existing.location) + " and " + node.kind + " at " +
                            describe(node.location));
      }
      existing.properties.insert(node.properties.begin(), node.properties.end());
      if (existing.displayName.empty()) existing.displayName = node.displayName;
      for (auto& e : node.edges) {
        if (std::find(existing.edges.begin(), existing.edges.end(), e) == existing.edges.end()) {
          existing.edges.push_back(std::move(e));
        }
      }
    }
  }

  std::vector<GraphNode> nodes;
  nodes.reserve(merged.size());
  for (auto& [id, node] : merged) nodes.push_back(std::move(node));
  return SemanticCodeGraph::from_nodes(std::move(nodes));
}

std::vector<Violation> validate(const SemanticCodeGraph& graph) {
  std::vector<Violation> out;
  for (const auto& node : graph.nodes()) {
    if (node.id.empty()) {
      out.push_back({std::string(rule::kEmptyId), node.id, std::nullopt, "node id is empty"});
    }
    if (!parse_node_kind(node.kind)) {
      out.push_back({std::string(rule::kUnknownNodeKind), node.id, std::nullopt,
                     "unknown node kind \"" + node.kind + "\""});
    }
    if (node.location) check_location(*node.location, node.id, std::nullopt, out);

    for (std::size_t slot = 0; slot < node.edges.size(); ++slot) {
      const Edge& e = node.edges[slot];
      if (!is_known_edge_type(e.type)) {
        out.push_back({std::string(rule::kUnknownEdgeType), node.id, slot,
                       "unknown edge type \"" + e.type + "\""});
      }
      if (e.location) check_location(*e.location, node.id, slot, out);
      if (e.type == to_string(EdgeType::DECLARATION) && e.to == node.id) {
        out.push_back({std::string(rule::kSelfDeclaration), node.id, slot,
                       "node declares itself"});
      }
    }
  }
  return out;
}

}  // namespace scg
