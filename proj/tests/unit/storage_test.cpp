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

#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "random_graphs.hpp"
#include "scg/storage.hpp"
#include "scg/wire.hpp"

namespace scg {
namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("scg_storage_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

SemanticGraphFile file_with(std::string uri, std::string id) {
  GraphNode n;
  n.id = std::move(id);
  n.kind = "CLASS";
  n.location = SourceLocation{uri, 0, 0, 1, 1};
  return {std::move(uri), {n}};
}

TEST_CASE("glob matching") {
  CHECK_FALSE(glob_match("", "anything"));
  CHECK(glob_match("", ""));
  CHECK(glob_match("p/*.java", "p/A.java"));
  CHECK_FALSE(glob_match("p/*.java", "p/q/A.java"));
  CHECK(glob_match("p/**/A.java", "p/q/r/A.java"));
  CHECK(glob_match("**/*.java", "A.java"));
  CHECK(glob_match("p/?.java", "p/A.java"));
  CHECK_FALSE(glob_match("p/?.java", "p/AB.java"));
}

TEST_CASE("write then load mirrors the tree") {
  TempDir dir;
  std::vector<SemanticGraphFile> files = {file_with("p/A.java", "p/A#"),
                                          file_with("p/q/B.java", "p/q/B#")};
  const auto written = write_graph_files(files, dir.path);
  CHECK(written.size() == 2);
  CHECK(fs::exists(dir.path / "p" / "q" / "B.java.semanticgraph"));
  LoadReport report;
  const auto g = load_dir(dir.path, {}, &report);
  CHECK(report.files_read == 2);
  CHECK(g.node_count() == 2);

  LoadReport filtered;
  const auto only = load_dir(dir.path, {"p/q/**"}, &filtered);
  CHECK(only.node_count() == 1);
  CHECK(filtered.files_skipped == 1);
}

TEST_CASE("a corrupt file is reported and skipped") {
  TempDir dir;
  write_graph_files(std::vector{file_with("A.java", "A#")}, dir.path);
  std::ofstream(dir.path / "Bad.java.semanticgraph", std::ios::binary) << "\x0a\x09zz";
  LoadReport report;
  const auto g = load_dir(dir.path, {}, &report);
  CHECK(g.node_count() == 1);
  REQUIRE(report.problems.size() == 1);
  CHECK(report.problems[0].path.filename() == "Bad.java.semanticgraph");
}

TEST_CASE("missing directory throws") {
  CHECK_THROWS_AS(load_dir("/nonexistent/scg/dir"), StorageError);
}

}  // namespace
}  // namespace scg
