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

#include "scg/model.hpp"

#include <array>
#include <utility>

namespace scg {
namespace {

constexpr std::array<std::pair<NodeKind, std::string_view>, 12> kNodeKinds{{
    {NodeKind::CLASS, "CLASS"},
    {NodeKind::INTERFACE, "INTERFACE"},
    {NodeKind::ENUM, "ENUM"},
    {NodeKind::METHOD, "METHOD"},
    {NodeKind::CONSTRUCTOR, "CONSTRUCTOR"},
    {NodeKind::PARAM, "PARAM"},
    {NodeKind::TYPE_PARAM, "TYPE_PARAM"},
    {NodeKind::VALUE, "VALUE"},
    {NodeKind::VARIABLE, "VARIABLE"},
    {NodeKind::OBJECT, "OBJECT"},
    {NodeKind::TRAIT, "TRAIT"},
    {NodeKind::TYPE, "TYPE"},
}};

constexpr std::array<std::pair<EdgeType, std::string_view>, 8> kEdgeTypes{{
    {EdgeType::CALL, "CALL"},
    {EdgeType::DECLARATION, "DECLARATION"},
    {EdgeType::EXTEND, "EXTEND"},
    {EdgeType::OVERRIDE, "OVERRIDE"},
    {EdgeType::PARAMETER, "PARAMETER"},
    {EdgeType::RETURN_TYPE, "RETURN_TYPE"},
    {EdgeType::TYPE, "TYPE"},
    {EdgeType::TYPE_PARAMETER, "TYPE_PARAMETER"},
}};

constexpr std::array<std::pair<CcnEdgeType, std::string_view>, 3> kCcnEdgeTypes{{
    {CcnEdgeType::INHERITANCE, "INHERITANCE"},
    {CcnEdgeType::AGGREGATION, "AGGREGATION"},
    {CcnEdgeType::REFERENCE, "REFERENCE"},
}};

template <typename Enum, std::size_t N>
std::string_view lookup(const std::array<std::pair<Enum, std::string_view>, N>& table, Enum value) {
  for (const auto& [e, name] : table) {
    if (e == value) return name;
  }
  return {};
}

template <typename Enum, std::size_t N>
std::optional<Enum> reverse_lookup(const std::array<std::pair<Enum, std::string_view>, N>& table,
                                   std::string_view text) {
  for (const auto& [e, name] : table) {
    if (name == text) return e;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(NodeKind kind) { return lookup(kNodeKinds, kind); }
std::string_view to_string(EdgeType type) { return lookup(kEdgeTypes, type); }
std::string_view to_string(CcnEdgeType type) { return lookup(kCcnEdgeTypes, type); }

std::optional<NodeKind> parse_node_kind(std::string_view text) {
  return reverse_lookup(kNodeKinds, text);
}
std::optional<EdgeType> parse_edge_type(std::string_view text) {
  return reverse_lookup(kEdgeTypes, text);
}
std::optional<CcnEdgeType> parse_ccn_edge_type(std::string_view text) {
  return reverse_lookup(kCcnEdgeTypes, text);
}

bool is_class_level(NodeKind kind) {
  switch (kind) {
    case NodeKind::CLASS:
    case NodeKind::INTERFACE:
    case NodeKind::ENUM:
    case NodeKind::OBJECT:
    case NodeKind::TRAIT:
      return true;
    default:
      return false;
  }
}

bool is_class_level(std::string_view kind) {
  auto parsed = parse_node_kind(kind);
  return parsed && is_class_level(*parsed);
}

std::optional<std::string_view> property(const Properties& props, std::string_view key) {
  auto it = props.find(key);
  if (it == props.end()) return std::nullopt;
  return std::string_view(it->second);
}

}  // namespace scg
