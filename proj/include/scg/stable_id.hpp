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
#include <stdexcept>
#include <string>
#include <string_view>

#include "scg/model.hpp"

namespace scg {

using StableSymbolId = std::string;

// Everything a stable identifier can be built for: the node kinds plus
// packages, which own symbols but never become nodes.
enum class SymbolKind {
  PACKAGE,
  CLASS,
  INTERFACE,
  ENUM,
  OBJECT,
  TRAIT,
  TYPE,
  METHOD,
  CONSTRUCTOR,
  PARAM,
  TYPE_PARAM,
  VALUE,
  VARIABLE,
};

SymbolKind symbol_kind(NodeKind kind);

// Reserved constructor name. Rendered as "`<init>`" inside identifiers.
inline constexpr std::string_view kConstructorName = "<init>";

class StableIdError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Builds the identifier of `name` declared inside `owner`.
///
/// Suffix grammar by kind:
///   PACKAGE                       name/
///   CLASS, INTERFACE, ENUM,
///   TRAIT, TYPE                   name#
///   OBJECT, VALUE                 name.
///   METHOD, CONSTRUCTOR,
///   VARIABLE                      name().   or name(+n). for overload n >= 1
///   PARAM                         (name)
///   TYPE_PARAM                    [name]
///
/// Names made of anything other than [A-Za-z0-9_$] are wrapped in backticks.
/// Throws StableIdError for an empty name, whitespace or delimiter characters
/// in the name, or an overload index on a kind that is not a method or
/// constructor.
StableSymbolId make_stable_id(std::string_view owner, std::string_view name, SymbolKind kind,
                              std::optional<std::size_t> overload_index = std::nullopt);

inline StableSymbolId make_stable_id(std::string_view owner, std::string_view name,
                                     NodeKind kind,
                                     std::optional<std::size_t> overload_index = std::nullopt) {
  return make_stable_id(owner, name, symbol_kind(kind), overload_index);
}

// Package identifier for a dotted package name ("a.b" -> "a/b/"); the default
// package maps to the empty root.
StableSymbolId package_id(std::string_view dotted_name);

}  // namespace scg
