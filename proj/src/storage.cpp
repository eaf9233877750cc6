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

#include "scg/storage.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

#include "scg/wire.hpp"

namespace fs = std::filesystem;

namespace scg {
namespace {

bool glob_at(std::string_view p, std::string_view t) {
  while (!p.empty()) {
    if (p.substr(0, 2) == "**") {
      std::string_view rest = p.substr(2);
      // "**/" may also match zero directories.
      if (!rest.empty() && rest.front() == '/' && glob_at(rest.substr(1), t)) return true;
      for (std::size_t i = 0; i <= t.size(); ++i) {
        if (glob_at(rest, t.substr(i))) return true;
      }
      return false;
    }
    if (p.front() == '*') {
      std::string_view rest = p.substr(1);
      for (std::size_t i = 0; i <= t.size(); ++i) {
        if (glob_at(rest, t.substr(i))) return true;
        if (i < t.size() && t[i] == '/') break;
      }
      return false;
    }
    if (t.empty()) return false;
    if (p.front() == '?') {
      if (t.front() == '/') return false;
    } else if (p.front() != t.front()) {
      return false;
    }
    p.remove_prefix(1);
    t.remove_prefix(1);
  }
  return t.empty();
}

Bytes read_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StorageError("cannot open " + path.string());
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw StorageError("read failed for " + path.string());
  return data;
}

}  // namespace

bool glob_match(std::string_view pattern, std::string_view text) { return glob_at(pattern, text); }

std::vector<SemanticGraphFile> read_graph_files(const fs::path& dir, const LoadOptions& options,
                                                LoadReport* report) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw StorageError("not a readable directory: " + dir.string());

  std::vector<fs::path> paths;
  for (fs::recursive_directory_iterator it(dir, fs::directory_options::skip_permission_denied, ec),
       end;
       !ec && it != end; it.increment(ec)) {
    if (it->is_regular_file(ec) && it->path().extension() == kGraphFileExtension) {
      paths.push_back(it->path());
    }
  }
  if (ec) throw StorageError("cannot scan " + dir.string() + ": " + ec.message());
  std::sort(paths.begin(), paths.end());

  LoadReport local;
  LoadReport& rep = report ? *report : local;
  std::vector<SemanticGraphFile> files;
  for (const auto& path : paths) {
    try {
      const Bytes data = read_bytes(path);
      SemanticGraphFile file = decode_file(data);
      if (!options.include.empty() && !glob_match(options.include, file.uri)) {
        ++rep.files_skipped;
        continue;
      }
      files.push_back(std::move(file));
      ++rep.files_read;
    } catch (const std::exception& e) {
      rep.problems.push_back({path, e.what()});
    }
  }
  return files;
}

SemanticCodeGraph load_dir(const fs::path& dir, const LoadOptions& options, LoadReport* report) {
  return assemble(read_graph_files(dir, options, report));
}

std::vector<fs::path> write_graph_files(std::span<const SemanticGraphFile> files,
                                        const fs::path& out_dir) {
  std::vector<fs::path> written;
  for (const auto& file : files) {
    if (file.uri.empty()) throw StorageError("cannot write a graph file without uri");
    fs::path target = out_dir / fs::path(file.uri + std::string(kGraphFileExtension));
    fs::create_directories(target.parent_path());
    std::ofstream out(target, std::ios::binary | std::ios::trunc);
    if (!out) throw StorageError("cannot write " + target.string());
    const Bytes data = encode_file(file);
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out) throw StorageError("write failed for " + target.string());
    written.push_back(std::move(target));
  }
  return written;
}

}  // namespace scg
