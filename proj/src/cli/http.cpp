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

#include "httplib.h"
#include "scg/cli/query.hpp"

namespace scg::cli {

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(const QueryService& service) : impl_(std::make_unique<Impl>()) {
  impl_->server.Get(R"(/.*)", [&service](const httplib::Request& req, httplib::Response& res) {
    Params params;
    for (const auto& [key, value] : req.params) params.emplace(key, value);  // first value wins
    Response r = service.handle(req.path, params);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  });
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

}  // namespace scg::cli
