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
#include <sstream>

#include "doctest.h"
#include "golden.hpp"
#include "json.hpp"
#include "scg/cli/app.hpp"
#include "scg/cli/report.hpp"
#include "scg/cli/workspace.hpp"
#include "scg/rank.hpp"
#include "scg/storage.hpp"

namespace scg::cli {
namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("scg_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

struct Run {
  int code = 0;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "scg-cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string generated(const TempDir& dir, const char* fixture) {
  const auto data = (dir.path / fixture).string();
  const auto r = cli({"generate", (testing::fixture_dir() / fixture / "src").string(), "--out", data});
  REQUIRE(r.code == kExitOk);
  return data;
}

TEST_CASE("number formatting") {
  CHECK(format_sig(0.001104) == "0.001104");
  CHECK(format_sig(57.24) == "57.24");
  CHECK(format_sig(-0.0) == "0");
  CHECK(format_sig(3035) == "3035");
  CHECK(format_sig(12345) == "1.234e+04");
}

TEST_CASE("generate reports counts") {
  TempDir dir;
  const auto r = cli({"generate", (testing::fixture_dir() / "project3" / "src").string(), "--out",
                      (dir.path / "out").string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "files        3\nnodes        37\nedges        103\ndiagnostics  0\nfatal        0\n");
  CHECK(fs::exists(dir.path / "out" / "shop" / "model" / "Cart.java.semanticgraph"));
}

TEST_CASE("generate on an empty directory and a missing one") {
  TempDir dir;
  fs::create_directories(dir.path / "empty");
  const auto empty = cli({"generate", (dir.path / "empty").string()});
  CHECK(empty.code == kExitOk);
  CHECK(empty.out.rfind("files        0\n", 0) == 0);
  CHECK(fs::exists(dir.path / "empty" / ".semanticgraphs"));
  CHECK(cli({"generate", (dir.path / "missing").string()}).code == kExitUsage);
}

TEST_CASE("generate keeps partial output when a file is fatal") {
  TempDir dir;
  fs::create_directories(dir.path / "src");
  std::ofstream(dir.path / "src" / "Ok.java") << "class Ok {}\n";
  std::ofstream(dir.path / "src" / "Bad.java") << "class Bad {\n";
  const auto r = cli({"generate", (dir.path / "src").string(), "--out", (dir.path / "out").string()});
  CHECK(r.code == kExitPartial);
  CHECK(fs::exists(dir.path / "out" / "Ok.java.semanticgraph"));
  CHECK(r.err.find("Bad.java") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"summary", "/nonexistent/scg"}).code == kExitUsage);
  TempDir dir;
  const auto data = generated(dir, "default_package");
  CHECK(cli({"summary", data, "--graph", "XYZ"}).code == kExitUsage);
  CHECK(cli({"summary", data, "--group-by", "colour"}).code == kExitUsage);
  CHECK(cli({"crucial", data, "-k", "0"}).code == kExitUsage);
  CHECK(cli({"similar", data, "--s-min", "0"}).code == kExitUsage);
  CHECK(cli({"export", data, "--format", "xml", "--out", (dir.path / "x").string()}).code ==
        kExitUsage);
}

TEST_CASE("summary of an empty directory is a zeroed table") {
  TempDir dir;
  const auto r = cli({"summary", dir.path.string(), "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["summaries"][0]["nodes"] == 0);
  CHECK(j["summaries"][0]["density"] == 0);
}

TEST_CASE("summary over several views") {
  TempDir dir;
  const auto data = generated(dir, "class_network");
  const auto r = cli({"summary", data, "--graph", "SCG,CCN,CG", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["summaries"].size() == 3);
  CHECK(j["summaries"][0]["nodes"] == 7);
  CHECK(j["summaries"][1]["nodes"] == 4);
  CHECK(j["summaries"][1]["edges"] == 4);
  const auto text = cli({"summary", data, "--graph", "SCG,CCN"});
  CHECK(text.out.find("LOC/|V|") != std::string::npos);
  CHECK(text.out.find("CCN") != std::string::npos);
}

TEST_CASE("summary group counts") {
  TempDir dir;
  const auto data = generated(dir, "project3");
  const auto r = cli({"summary", data, "--group-by", "file", "--kind", "VARIABLE", "--kind",
                      "VALUE", "--local", "true", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto groups = nlohmann::json::parse(r.out)["groups"];
  REQUIRE(groups.size() == 1);
  CHECK(groups[0]["group"] == "Cart.java");
  CHECK(groups[0]["count"] == 3);
}

TEST_CASE("crucial delegates to the rank module") {
  TempDir dir;
  const auto data = generated(dir, "project3");
  const auto r = cli({"crucial", data, "-k", "5", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  const auto g = load_dir(data);
  std::size_t i = 0;
  for (auto metric : kAllRankMetrics) {
    const auto expected = rank_json(rank(g, metric, 5));
    CHECK(j[0]["metrics"][i]["entries"] == expected["entries"]);
    ++i;
  }
  auto combined = combined_importance(g);
  combined.entries.resize(5);
  CHECK(j[0]["combined"]["entries"] == rank_json(combined)["entries"]);
}

TEST_CASE("similar lists the shared-successor pair with locations") {
  TempDir dir;
  const auto data = generated(dir, "project3");
  const auto r = cli({"similar", data, "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["m1"]["id"] == "shop/service/Checkout#checkout().");
  CHECK(j[0]["m2"]["id"] == "shop/service/Quote#estimate().");
  CHECK(j[0]["s"] == 5);
  CHECK(j[0]["m2"]["location"]["uri"] == "shop/service/Checkout.java");
}

TEST_CASE("partition writes graphml with communities") {
  TempDir dir;
  const auto data = generated(dir, "project3");
  const auto graphml = (dir.path / "p.graphml").string();
  const auto r = cli({"partition", data, "--seed", "3", "--graphml", graphml, "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["seed"] == 3);
  CHECK(j["labels"].size() == 37);
  CHECK(testing::read_text(graphml).find("community") != std::string::npos);
}

TEST_CASE("export writes every format") {
  TempDir dir;
  const auto data = generated(dir, "default_package");
  for (const char* f : {"graphml", "gdf", "dot", "jsonl"}) {
    const auto target = dir.path / (std::string("g.") + f);
    CHECK(cli({"export", data, "--format", f, "--out", target.string()}).code == kExitOk);
    CHECK(fs::file_size(target) > 0);
  }
  CHECK(cli({"export", data, "--format", "csv", "--out", (dir.path / "csv").string()}).code == kExitOk);
  CHECK(fs::exists(dir.path / "csv" / "nodes.csv"));
  CHECK(fs::exists(dir.path / "csv" / "edges.csv"));
}

TEST_CASE("workspace caches derived views until the data changes") {
  TempDir dir;
  const auto data = generated(dir, "class_network");
  Workspace ws(data);
  const auto before = ws.hash();
  CHECK(ws.graph(GraphView::CCN).node_count() == 4);
  const auto* cached = &ws.graph(GraphView::CCN);
  CHECK(&ws.graph(GraphView::CCN) == cached);
  CHECK_FALSE(ws.refresh());

  // Replace the data with a different project.
  fs::remove_all(data);
  const auto r = cli({"generate", (testing::fixture_dir() / "default_package" / "src").string(), "--out", data});
  REQUIRE(r.code == kExitOk);
  CHECK(content_hash(data) != before);
  CHECK(ws.refresh());
  CHECK(ws.hash() != before);
  CHECK(ws.graph(GraphView::CCN).node_count() == 2);
  CHECK(ws.graph(GraphView::CG).node_count() == 2);
}

TEST_CASE("reports are byte-identical across runs") {
  TempDir dir;
  const auto data = generated(dir, "project3");
  for (const char* cmd : {"summary", "crucial", "similar", "partition"}) {
    for (const char* format : {"text", "json"}) {
      const auto a = cli({cmd, data, "--format", format});
      const auto b = cli({cmd, data, "--format", format});
      CHECK(a.code == kExitOk);
      CHECK(a.out == b.out);
    }
  }
}

}  // namespace
}  // namespace scg::cli
