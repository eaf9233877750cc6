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

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "json.hpp"
#include "scg/cli/report.hpp"
#include "scg/graph.hpp"

namespace scg::cli {

using Params = std::map<std::string, std::string, std::less<>>;

struct Response {
  int status = 200;
  nlohmann::json body;
};

inline constexpr std::size_t kSearchLimit = 100;
inline constexpr std::size_t kNeighborLimit = 1000;
inline constexpr int kMaxHierarchyDepth = 32;
inline constexpr std::size_t kMaxHierarchyNodes = 2000;

// Read-only queries over one immutable graph, independent of the transport.
// Errors come back as {"error": message} with status 400 (bad parameters)
// or 404 (unknown node, no path).
//
//   GET /summary
//   GET /search?q=&limit=
//   GET /node/{id}
//   GET /node/{id}/neighbors?direction=in|out&types=A,B&limit=
//   GET /hierarchy?root=&edge=CALL&direction=callers|callees&depth=
//   GET /path?from=&to=&types=
class QueryService {
 public:
  // The graph must outlive the service.
  QueryService(const SemanticCodeGraph& graph, GraphView view);

  // path is already percent-decoded.
  Response handle(std::string_view path, const Params& params) const;

  Response summary() const;
  Response search(const Params& params) const;
  Response node(std::string_view id) const;
  Response neighbors(std::string_view id, const Params& params) const;
  Response hierarchy(const Params& params) const;
  Response path(const Params& params) const;

 private:
  const SemanticCodeGraph& graph_;
  nlohmann::json summary_;
};

// Minimal HTTP/1.1 front for a QueryService (GET only, JSON bodies).
class HttpServer {
 public:
  explicit HttpServer(const QueryService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds; port 0 picks a free one. Returns the bound port, or -1.
  int bind(const std::string& host, int port);
  // Blocks until stop() is called.
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace scg::cli
