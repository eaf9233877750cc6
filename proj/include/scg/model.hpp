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

#include <compare>
#include <functional>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scg {

// Node kinds. OBJECT, TRAIT and TYPE exist for Scala-produced data; the Java
// extractor never emits them.
enum class NodeKind {
  CLASS,
  INTERFACE,
  ENUM,
  METHOD,
  CONSTRUCTOR,
  PARAM,
  TYPE_PARAM,
  VALUE,
  VARIABLE,
  OBJECT,
  TRAIT,
  TYPE,
};

enum class EdgeType {
  CALL,
  DECLARATION,
  EXTEND,
  OVERRIDE,
  PARAMETER,
  RETURN_TYPE,
  TYPE,
  TYPE_PARAMETER,
};

// Edge labels of the class collaboration network view.
enum class CcnEdgeType {
  INHERITANCE,
  AGGREGATION,
  REFERENCE,
};

std::string_view to_string(NodeKind kind);
std::string_view to_string(EdgeType type);
std::string_view to_string(CcnEdgeType type);

std::optional<NodeKind> parse_node_kind(std::string_view text);
std::optional<EdgeType> parse_edge_type(std::string_view text);
std::optional<CcnEdgeType> parse_ccn_edge_type(std::string_view text);

// Class-level kinds: the vertex set of the class collaboration network.
bool is_class_level(NodeKind kind);
bool is_class_level(std::string_view kind);

using Properties = std::map<std::string, std::string, std::less<>>;

// Zero-based position range inside a source file. `uri` is relative to the
// project root and uses '/' separators.
struct SourceLocation {
  std::string uri;
  std::int32_t startLine = 0;
  std::int32_t startCharacter = 0;
  std::int32_t endLine = 0;
  std::int32_t endCharacter = 0;

  auto operator<=>(const SourceLocation&) const = default;
};

// Kind and type stay strings so data produced by other front ends (Scala
// kinds, derived views) survives a load/save cycle untouched.
struct Edge {
  std::string to;
  std::string type;
  std::optional<SourceLocation> location;
  Properties properties;

  auto operator<=>(const Edge&) const = default;
};

struct GraphNode {
  std::string id;
  std::string kind;
  std::optional<SourceLocation> location;
  Properties properties;
  std::string displayName;
  std::vector<Edge> edges;

  auto operator<=>(const GraphNode&) const = default;
};

// One `.semanticgraph` file: every node declared in one source file.
struct SemanticGraphFile {
  std::string uri;
  std::vector<GraphNode> nodes;

  auto operator<=>(const SemanticGraphFile&) const = default;
};

// Well-known property keys.
namespace prop {
inline constexpr std::string_view kLoc = "loc";
inline constexpr std::string_view kIsLocal = "isLocal";
inline constexpr std::string_view kPackage = "package";
inline constexpr std::string_view kFile = "file";
inline constexpr std::string_view kWitness = "witness";
}  // namespace prop

std::optional<std::string_view> property(const Properties& props, std::string_view key);

}  // namespace scg
