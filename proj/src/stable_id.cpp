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

#include "scg/stable_id.hpp"

#include <algorithm>

namespace scg {
namespace {

bool is_plain_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '$' || static_cast<unsigned char>(c) >= 0x80;
}

bool is_forbidden_char(char c) {
  switch (c) {
    case ' ':
    case '\t':
    case '\n':
    case '\r':
    case '\f':
    case '\v':
    case '/':
    case '#':
    case '.':
    case '(':
    case ')':
    case '[':
    case ']':
    case '`':
      return true;
    default:
      return false;
  }
}

std::string render_name(std::string_view name) {
  if (std::all_of(name.begin(), name.end(), is_plain_char)) return std::string(name);
  std::string quoted;
  quoted.reserve(name.size() + 2);
  quoted.push_back('`');
  quoted.append(name);
  quoted.push_back('`');
  return quoted;
}

}  // namespace

SymbolKind symbol_kind(NodeKind kind) {
  switch (kind) {
    case NodeKind::CLASS: return SymbolKind::CLASS;
    case NodeKind::INTERFACE: return SymbolKind::INTERFACE;
    case NodeKind::ENUM: return SymbolKind::ENUM;
    case NodeKind::METHOD: return SymbolKind::METHOD;
    case NodeKind::CONSTRUCTOR: return SymbolKind::CONSTRUCTOR;
    case NodeKind::PARAM: return SymbolKind::PARAM;
    case NodeKind::TYPE_PARAM: return SymbolKind::TYPE_PARAM;
    case NodeKind::VALUE: return SymbolKind::VALUE;
    case NodeKind::VARIABLE: return SymbolKind::VARIABLE;
    case NodeKind::OBJECT: return SymbolKind::OBJECT;
    case NodeKind::TRAIT: return SymbolKind::TRAIT;
    case NodeKind::TYPE: return SymbolKind::TYPE;
  }
  return SymbolKind::CLASS;
}

StableSymbolId make_stable_id(std::string_view owner, std::string_view name, SymbolKind kind,
                              std::optional<std::size_t> overload_index) {
  if (name.empty()) throw StableIdError("stable id: empty symbol name");
  if (auto bad = std::find_if(name.begin(), name.end(), is_forbidden_char); bad != name.end()) {
    throw StableIdError("stable id: invalid character '" + std::string(1, *bad) + "' in name \"" +
                        std::string(name) + "\"");
  }
  const bool overloadable = kind == SymbolKind::METHOD || kind == SymbolKind::CONSTRUCTOR;
  if (overload_index && !overloadable) {
    throw StableIdError("stable id: overload index given for non-method symbol \"" +
                        std::string(name) + "\"");
  }

  StableSymbolId id(owner);
  const std::string rendered = render_name(name);
  switch (kind) {
    case SymbolKind::PACKAGE:
      id += rendered;
      id += '/';
      break;
    case SymbolKind::CLASS:
    case SymbolKind::INTERFACE:
    case SymbolKind::ENUM:
    case SymbolKind::TRAIT:
    case SymbolKind::TYPE:
      id += rendered;
      id += '#';
      break;
    case SymbolKind::OBJECT:
    case SymbolKind::VALUE:
      id += rendered;
      id += '.';
      break;
    case SymbolKind::METHOD:
    case SymbolKind::CONSTRUCTOR:
    case SymbolKind::VARIABLE:
      id += rendered;
      if (overload_index && *overload_index > 0) {
        id += "(+" + std::to_string(*overload_index) + ").";
      } else {
        id += "().";
      }
      break;
    case SymbolKind::PARAM:
      id += '(';
      id += rendered;
      id += ')';
      break;
    case SymbolKind::TYPE_PARAM:
      id += '[';
      id += rendered;
      id += ']';
      break;
  }
  return id;
}

StableSymbolId package_id(std::string_view dotted_name) {
  StableSymbolId id;
  std::size_t start = 0;
  while (start < dotted_name.size()) {
    std::size_t dot = dotted_name.find('.', start);
    if (dot == std::string_view::npos) dot = dotted_name.size();
    id = make_stable_id(id, dotted_name.substr(start, dot - start), SymbolKind::PACKAGE);
    start = dot + 1;
  }
  return id;
}

}  // namespace scg
