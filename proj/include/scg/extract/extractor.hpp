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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "scg/extract/diagnostics.hpp"
#include "scg/model.hpp"

namespace scg::extract {

struct SourceFile {
  std::string uri;  // relative, '/' separated
  std::string text;
};

struct ExtractResult {
  // One file per successfully parsed source, in uri order. Nodes inside a
  // file are ordered by declaration position.
  std::vector<SemanticGraphFile> files;
  // Recoverable problems: skipped constructs, unresolved names, ambiguous
  // overloads. Ordered by uri, line, column.
  std::vector<Diagnostic> diagnostics;
  // Files that could not be parsed at all; they produce no graph file.
  std::vector<Diagnostic> fatal;
};

class ExtractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs the whole front end over in-memory sources. Pure: the same sources
// give the same result regardless of their order.
ExtractResult extract_sources(std::vector<SourceFile> sources);

// Reads every `.java` file below `project_root` (hidden directories are
// skipped) and extracts it. Throws ExtractError when the root is not a
// readable directory; unreadable files are reported in `fatal`.
ExtractResult extract(const std::filesystem::path& project_root);

}  // namespace scg::extract
