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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scg/model.hpp"

namespace scg {

// An edge whose source and target are both nodes of the graph. `slot` is the
// position of the edge inside nodes()[from].edges.
struct ResolvedEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t slot = 0;
};

// An edge whose target id is not declared by any node.
struct DanglingRef {
  std::string from;
  Edge edge;
};

class AssemblyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Immutable project graph. Nodes are kept sorted by id; adjacency indices are
// built once on construction and never change afterwards, so a graph can be
// shared freely between reader threads.
class SemanticCodeGraph {
 public:
  SemanticCodeGraph() = default;

  // Throws AssemblyError when two nodes share an id.
  static SemanticCodeGraph from_nodes(std::vector<GraphNode> nodes, Properties metadata = {});

  std::size_t node_count() const { return nodes_.size(); }
  // Resolved edges only, counted with multiplicity.
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return nodes_.empty(); }

  std::span<const GraphNode> nodes() const { return nodes_; }
  const GraphNode& node(std::size_t index) const { return nodes_[index]; }
  std::optional<std::size_t> index_of(std::string_view id) const;
  const GraphNode* find(std::string_view id) const;

  std::span<const ResolvedEdge> edges() const { return edges_; }
  const Edge& edge(const ResolvedEdge& ref) const { return nodes_[ref.from].edges[ref.slot]; }
  const Edge& edge(std::size_t edge_index) const { return edge(edges_[edge_index]); }

  // Indices into edges(), in ascending order.
  std::span<const std::size_t> out_edges(std::size_t node) const { return out_[node]; }
  std::span<const std::size_t> in_edges(std::size_t node) const { return in_[node]; }
  std::vector<std::size_t> out_edges(std::size_t node, std::string_view type) const;
  std::vector<std::size_t> in_edges(std::size_t node, std::string_view type) const;

  std::span<const DanglingRef> dangling() const { return dangling_; }
  // Distinct dangling target ids, sorted.
  std::vector<std::string> dangling_targets() const;

  // Free-form graph-level annotations (e.g. the view a derived graph came
  // from). Not part of the wire format.
  const Properties& metadata() const { return metadata_; }

  friend bool operator==(const SemanticCodeGraph& a, const SemanticCodeGraph& b) {
    return a.nodes_ == b.nodes_ && a.metadata_ == b.metadata_;
  }

 private:
  std::vector<GraphNode> nodes_;
  std::vector<ResolvedEdge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<DanglingRef> dangling_;
  Properties metadata_;
};

/// Merges per-file graphs into one project graph.
///
/// A node id that appears in several files is merged when kind and location
/// agree (properties are united, edges de-duplicated); any other repeat throws
/// AssemblyError naming both locations. Edges to undeclared ids are kept on
/// their source node and listed in dangling(). The result does not depend on
/// the order of `files`.
SemanticCodeGraph assemble(std::vector<SemanticGraphFile> files);

struct Violation {
  std::string rule;
  std::string node_id;
  std::optional<std::size_t> edge_slot;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Rule names reported by validate().
namespace rule {
inline constexpr std::string_view kEmptyId = "EmptyId";
inline constexpr std::string_view kUnknownNodeKind = "UnknownNodeKind";
inline constexpr std::string_view kUnknownEdgeType = "UnknownEdgeType";
inline constexpr std::string_view kEmptyUri = "EmptyUri";
inline constexpr std::string_view kUriSeparator = "UriSeparator";
inline constexpr std::string_view kNegativePosition = "NegativePosition";
inline constexpr std::string_view kLocationOrder = "LocationOrder";
inline constexpr std::string_view kSelfDeclaration = "SelfDeclaration";
}  // namespace rule

// Checks the model invariants; an empty result means the graph is well formed.
// Dangling references are not violations: they are recorded by assembly.
std::vector<Violation> validate(const SemanticCodeGraph& graph);

}  // namespace scg
