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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "scg/derive.hpp"
#include "scg/graph.hpp"
#include "scg/storage.hpp"

namespace scg::cli {

// 64-bit FNV-1a over the relative path and bytes of every graph file below
// dir, in path order. Hex encoded.
std::string content_hash(const std::filesystem::path& dir);

// A loaded SCG data directory with lazily derived views. Derived views are
// dropped whenever refresh() sees a different content hash.
class Workspace {
 public:
  explicit Workspace(std::filesystem::path data_dir, LoadOptions options = {});

  const std::filesystem::path& data_dir() const { return data_dir_; }
  const std::string& hash() const { return hash_; }
  const LoadReport& load_report() const { return report_; }

  const SemanticCodeGraph& graph(GraphView view = GraphView::SCG);

  // Re-hashes the directory; reloads and clears caches on change. Returns
  // true when something was reloaded.
  bool refresh();

 private:
  void load();

  std::filesystem::path data_dir_;
  LoadOptions options_;
  std::string hash_;
  LoadReport report_;
  SemanticCodeGraph scg_;
  std::map<GraphView, SemanticCodeGraph> derived_;
};

}  // namespace scg::cli
