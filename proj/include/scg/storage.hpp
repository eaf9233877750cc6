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
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scg/graph.hpp"
#include "scg/model.hpp"

namespace scg {

inline constexpr std::string_view kGraphFileExtension = ".semanticgraph";

class StorageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadOptions {
  // Glob over SemanticGraphFile::uri; empty loads everything. `*` and `?`
  // stay inside one path segment, `**` crosses segments.
  std::string include;
};

struct FileProblem {
  std::filesystem::path path;
  std::string message;
};

struct LoadReport {
  std::size_t files_read = 0;
  std::size_t files_skipped = 0;  // rejected by the include filter
  std::vector<FileProblem> problems;
};

bool glob_match(std::string_view pattern, std::string_view text);

// Decodes every `*.semanticgraph` below `dir` in path order. A file that
// cannot be read or decoded is recorded in `report` and loading continues.
std::vector<SemanticGraphFile> read_graph_files(const std::filesystem::path& dir,
                                                const LoadOptions& options = {},
                                                LoadReport* report = nullptr);

SemanticCodeGraph load_dir(const std::filesystem::path& dir, const LoadOptions& options = {},
                           LoadReport* report = nullptr);

// Writes one file per SemanticGraphFile at `out_dir/<uri>.semanticgraph`,
// mirroring the source tree. Returns the written paths.
std::vector<std::filesystem::path> write_graph_files(std::span<const SemanticGraphFile> files,
                                                     const std::filesystem::path& out_dir);

}  // namespace scg
