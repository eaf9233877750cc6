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

#include "scg/cli/workspace.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <vector>

namespace scg::cli {
namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

void fnv(std::uint64_t& h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
}

}  // namespace

std::string content_hash(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  std::error_code ec;
  if (fs::is_directory(dir, ec)) {
    for (fs::recursive_directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec)) {
      if (it->is_regular_file(ec) && it->path().extension() == kGraphFileExtension) {
        files.push_back(it->path());
      }
    }
  }
  std::sort(files.begin(), files.end());
  std::uint64_t h = kFnvOffset;
  for (const fs::path& file : files) {
    fnv(h, fs::relative(file, dir).generic_string());
    fnv(h, std::string_view("\0", 1));
    std::ifstream in(file, std::ios::binary);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    fnv(h, std::to_string(bytes.size()));
    fnv(h, bytes);
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

Workspace::Workspace(std::filesystem::path data_dir, LoadOptions options)
    : data_dir_(std::move(data_dir)), options_(std::move(options)) {
  hash_ = content_hash(data_dir_);
  load();
}

void Workspace::load() {
  report_ = {};
  scg_ = load_dir(data_dir_, options_, &report_);
  derived_.clear();
}

const SemanticCodeGraph& Workspace::graph(GraphView view) {
  if (view == GraphView::SCG) return scg_;
  auto it = derived_.find(view);
  if (it == derived_.end()) it = derived_.emplace(view, derive(scg_, view)).first;
  return it->second;
}

bool Workspace::refresh() {
  std::string now = content_hash(data_dir_);
  if (now == hash_) return false;
  hash_ = std::move(now);
  load();
  return true;
}

}  // namespace scg::cli
