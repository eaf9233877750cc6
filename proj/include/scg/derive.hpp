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

#include <optional>
#include <string_view>

#include "scg/graph.hpp"

namespace scg {

enum class GraphView { SCG, CCN, CG };

std::optional<GraphView> parse_graph_view(std::string_view name);
std::string_view to_string(GraphView view);

// Metadata keys set on derived graphs.
namespace meta {
inline constexpr std::string_view kView = "view";
// Project lines of code, carried over from the full graph so per-node ratios
// of derived views use the same numerator.
inline constexpr std::string_view kTotalLoc = "totalLoc";
}  // namespace meta

// Sum of `loc` over the roots of the ownership forest (nodes nothing
// declares). Falls back to metadata totalLoc when present.
long long total_loc(const SemanticCodeGraph& graph);

// Owner of a node: the source of its incoming DECLARATION, PARAMETER or
// TYPE_PARAMETER edge, if any.
std::optional<std::size_t> owner_of(const SemanticCodeGraph& graph, std::size_t node);

// Class collaboration network. Vertices are the class-level nodes (CLASS,
// INTERFACE, ENUM, OBJECT, TRAIT) with their edges replaced by
//   EXTEND between class-level nodes      -> INHERITANCE
//   TYPE of a member field                -> AGGREGATION
//   TYPE of a method parameter, RETURN_TYPE -> REFERENCE
// Member edges are attributed to the nearest class-level owner. Derived
// edges are unique per (from, to, type), never self loops, and record the
// first justifying SCG edge in the `witness` property.
SemanticCodeGraph to_ccn(const SemanticCodeGraph& graph);

// Call graph: CALL edges among METHOD, CONSTRUCTOR, VALUE and VARIABLE nodes;
// vertices without any such edge are dropped.
SemanticCodeGraph to_cg(const SemanticCodeGraph& graph);

// Returns the requested view (SCG returns the graph unchanged).
SemanticCodeGraph derive(const SemanticCodeGraph& graph, GraphView view);

}  // namespace scg
