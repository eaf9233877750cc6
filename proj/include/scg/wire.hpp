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

// Binary `.semanticgraph` codec. The byte layout is the proto3 encoding of
//
//   message Location  { string uri = 1; int32 startLine = 2;
//                       int32 startCharacter = 3; int32 endLine = 4;
//                       int32 endCharacter = 5; }
//   message Edge      { string to = 1; string type = 2; Location location = 3;
//                       map<string, string> properties = 4; }
//   message GraphNode { string id = 1; string kind = 2; Location location = 3;
//                       map<string, string> properties = 4;
//                       string displayName = 5; repeated Edge edges = 6; }
//   message SemanticGraphFile { string uri = 1; repeated GraphNode nodes = 2; }
//
// Fields are written in field-number order, default scalars are omitted and
// map entries are emitted sorted by key, which matches the deterministic mode
// of the reference protobuf runtime byte for byte.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "scg/model.hpp"

namespace scg {

using Bytes = std::vector<std::uint8_t>;

class DecodeError : public std::runtime_error {
 public:
  DecodeError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

Bytes encode_file(const SemanticGraphFile& file);

// Unknown fields are skipped. Throws DecodeError carrying the byte offset of
// the first malformed element.
SemanticGraphFile decode_file(std::span<const std::uint8_t> bytes);

}  // namespace scg
