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

#include <thread>

#include "doctest.h"
#include "golden.hpp"
#include "httplib.h"
#include "scg/cli/query.hpp"
#include "scg/extract/extractor.hpp"

namespace scg::cli {
namespace {

SemanticCodeGraph fixture(const char* name) {
  return assemble(extract::extract(testing::fixture_dir() / name / "src").files);
}

TEST_CASE("path from bar to foo is one CALL hop") {
  const auto g = fixture("default_package");
  QueryService q(g, GraphView::SCG);
  const auto r = q.handle("/path", {{"from", "B#bar()."}, {"to", "A#foo()."}});
  REQUIRE(r.status == 200);
  CHECK(r.body["length"] == 1);
  REQUIRE(r.body["edges"].size() == 1);
  CHECK(r.body["edges"][0]["type"] == "CALL");
  CHECK(r.body["edges"][0]["location"]["uri"] == "B.java");
  CHECK(r.body["nodes"].size() == 2);
  CHECK(r.body["nodes"][1]["location"]["startLine"] == 1);

  const auto back = q.handle("/path", {{"from", "A#foo()."}, {"to", "B#bar()."}});
  CHECK(back.status == 404);
  const auto typed = q.handle("/path", {{"from", "B#bar()."}, {"to", "A#foo()."}, {"types", "EXTEND"}});
  CHECK(typed.status == 404);
  const auto self = q.handle("/path", {{"from", "B#bar()."}, {"to", "B#bar()."}});
  CHECK(self.body["length"] == 0);
}

TEST_CASE("search is case-insensitive over names and ids") {
  const auto g = fixture("default_package");
  QueryService q(g, GraphView::SCG);
  const auto r = q.handle("/search", {{"q", "BAR"}});
  REQUIRE(r.status == 200);
  REQUIRE(r.body["results"].size() == 1);
  CHECK(r.body["results"][0]["id"] == "B#bar().");
  CHECK(r.body["results"][0]["location"]["uri"] == "B.java");
  CHECK(q.handle("/search", {}).status == 400);
  const auto limited = q.handle("/search", {{"q", "#"}, {"limit", "1"}});
  CHECK(limited.body["results"].size() == 1);
  CHECK(limited.body["truncated"] == true);
}

TEST_CASE("node and neighbours with multiplicity") {
  const auto g = fixture("triple");
  QueryService q(g, GraphView::SCG);
  const auto node = q.handle("/node/p/M#triple().", {});
  REQUIRE(node.status == 200);
  CHECK(node.body["kind"] == "METHOD");
  CHECK(node.body["outDegree"] == 3);

  const auto out = q.handle("/node/p/M#triple()./neighbors", {{"direction", "out"}, {"types", "CALL"}});
  REQUIRE(out.status == 200);
  REQUIRE(out.body["neighbors"].size() == 1);
  CHECK(out.body["neighbors"][0]["node"]["id"] == "p/M#triple().t.");
  CHECK(out.body["neighbors"][0]["multiplicity"] == 1);

  const auto t = q.handle("/node/p/M#triple().t./neighbors", {{"types", "CALL"}});
  REQUIRE(t.body["neighbors"].size() == 1);
  CHECK(t.body["neighbors"][0]["node"]["id"] == "p/M#triple().(n)");
  CHECK(t.body["neighbors"][0]["multiplicity"] == 3);
  CHECK(t.body["neighbors"][0]["edges"].size() == 3);

  const auto in = q.handle("/node/p/M#triple().(n)/neighbors", {{"direction", "in"}});
  CHECK(in.body["neighbors"].size() == 2);

  CHECK(q.handle("/node/p/Nope#", {}).status == 404);
  CHECK(q.handle("/node/p/M#/neighbors", {{"direction", "sideways"}}).status == 400);
  CHECK(q.handle("/node/p/M#/neighbors", {{"types", "CALLS"}}).status == 400);
  CHECK(q.handle("/node/p/M#/neighbors", {{"limit", "x"}}).status == 400);
  CHECK(q.handle("/elsewhere", {}).status == 404);
}

TEST_CASE("hierarchy") {
  const auto g = fixture("project3");
  QueryService q(g, GraphView::SCG);
  const auto root_only = q.handle("/hierarchy", {{"root", "shop/service/Checkout#twice()."}, {"depth", "0"}});
  REQUIRE(root_only.status == 200);
  CHECK(root_only.body["root"]["node"]["id"] == "shop/service/Checkout#twice().");
  CHECK(root_only.body["root"]["children"].empty());

  const auto callees = q.handle("/hierarchy", {{"root", "shop/service/Checkout#twice()."}, {"depth", "2"}});
  bool found_checkout = false;
  for (const auto& child : callees.body["root"]["children"]) {
    if (child["node"]["id"] == "shop/service/Checkout#checkout().") {
      found_checkout = true;
      CHECK_FALSE(child["children"].empty());
    }
  }
  CHECK(found_checkout);

  const auto callers = q.handle(
      "/hierarchy", {{"root", "shop/model/Cart#add()."}, {"direction", "callers"}, {"depth", "1"}});
  CHECK(callers.body["root"]["children"].size() == 2);

  CHECK(q.handle("/hierarchy", {{"root", "shop/model/Cart#add()."}, {"depth", "33"}}).status == 400);
  CHECK(q.handle("/hierarchy", {{"root", "shop/model/Cart#add()."}, {"depth", "-1"}}).status == 400);
  CHECK(q.handle("/hierarchy", {{"root", "nope"}}).status == 404);
  CHECK(q.handle("/hierarchy", {}).status == 400);
}

TEST_CASE("hierarchy marks cycles") {
  GraphNode a, b;
  a.id = "a";
  a.kind = b.kind = "METHOD";
  b.id = "b";
  Edge e;
  e.type = "CALL";
  e.to = "b";
  a.edges.push_back(e);
  e.to = "a";
  b.edges.push_back(e);
  const auto g = SemanticCodeGraph::from_nodes({a, b});
  QueryService q(g, GraphView::CG);
  const auto r = q.handle("/hierarchy", {{"root", "a"}, {"depth", "5"}});
  const auto& back = r.body["root"]["children"][0]["children"][0];
  CHECK(back["node"]["id"] == "a");
  CHECK(back["cycle"] == true);
}

TEST_CASE("summary endpoint") {
  const auto g = fixture("class_network");
  QueryService q(g, GraphView::SCG);
  const auto r = q.handle("/summary", {});
  REQUIRE(r.status == 200);
  CHECK(r.body.dump().find("\"nodes\":7") != std::string::npos);
}

TEST_CASE("http server answers over a socket") {
  const auto g = fixture("default_package");
  QueryService service(g, GraphView::SCG);
  HttpServer server(service);
  const int port = server.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread loop([&] { server.listen(); });
  httplib::Client client("127.0.0.1", port);
  client.set_connection_timeout(5);

  auto res = client.Get("/search?q=bar");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(res->get_header_value("Content-Type") == "application/json");
  auto body = nlohmann::json::parse(res->body);
  CHECK(body["results"][0]["id"] == "B#bar().");

  res = client.Get("/path?from=B%23bar().&to=A%23foo().");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(nlohmann::json::parse(res->body)["length"] == 1);

  res = client.Get("/node/A%23foo().");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(nlohmann::json::parse(res->body)["location"]["uri"] == "A.java");

  res = client.Get("/hierarchy?root=B%23bar().&depth=zz");
  REQUIRE(res);
  CHECK(res->status == 400);
  CHECK(nlohmann::json::parse(res->body).contains("error"));

  res = client.Get("/node/Q%23");
  REQUIRE(res);
  CHECK(res->status == 404);

  server.stop();
  loop.join();
}

}  // namespace
}  // namespace scg::cli
