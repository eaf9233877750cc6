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

#include "scg/cli/query.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>
#include <vector>

#include "scg/metrics.hpp"

namespace scg::cli {
namespace {

using nlohmann::json;

Response error(int status, std::string message) {
  return {status, json{{"error", std::move(message)}}};
}

struct BadRequest {
  std::string message;
};

std::string_view param(const Params& params, std::string_view key, std::string_view fallback = "") {
  auto it = params.find(key);
  return it == params.end() ? fallback : std::string_view(it->second);
}

long long integer_param(const Params& params, std::string_view key, long long fallback,
                        long long lo, long long hi) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  long long value = 0;
  const std::string& text = it->second;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < lo || value > hi) {
    throw BadRequest{std::string(key) + " must be an integer in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]"};
  }
  return value;
}

bool known_edge_type(std::string_view type) {
  return parse_edge_type(type).has_value() || parse_ccn_edge_type(type).has_value();
}

// Empty set means every type.
std::set<std::string, std::less<>> type_filter(const Params& params) {
  std::set<std::string, std::less<>> types;
  std::string_view text = param(params, "types");
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    if (!known_edge_type(item)) throw BadRequest{"unknown edge type '" + std::string(item) + "'"};
    types.emplace(item);
    text = comma == std::string_view::npos ? std::string_view() : text.substr(comma + 1);
  }
  return types;
}

std::string lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

json edge_json(const SemanticCodeGraph& g, const ResolvedEdge& e) {
  const Edge& edge = g.edge(e);
  return {{"from", g.node(e.from).id},
          {"to", edge.to},
          {"type", edge.type},
          {"location", location_json(edge.location)}};
}

}  // namespace

QueryService::QueryService(const SemanticCodeGraph& graph, GraphView view)
    : graph_(graph), summary_(summary_json({view, scg::summary(graph), distributions(graph)})) {}

Response QueryService::handle(std::string_view path, const Params& params) const {
  try {
    if (path == "/summary") return summary();
    if (path == "/search") return search(params);
    if (path == "/hierarchy") return hierarchy(params);
    if (path == "/path") return this->path(params);
    constexpr std::string_view kNode = "/node/";
    constexpr std::string_view kNeighbors = "/neighbors";
    if (path.starts_with(kNode) && path.size() > kNode.size()) {
      std::string_view rest = path.substr(kNode.size());
      // Stable ids never end in "/neighbors": every id ends in # . ) or ].
      if (rest.size() > kNeighbors.size() && rest.ends_with(kNeighbors)) {
        return neighbors(rest.substr(0, rest.size() - kNeighbors.size()), params);
      }
      return node(rest);
    }
    return error(404, "no such endpoint: " + std::string(path));
  } catch (const BadRequest& bad) {
    return error(400, bad.message);
  }
}

Response QueryService::summary() const { return {200, summary_}; }

Response QueryService::search(const Params& params) const {
  const std::string q = lower(param(params, "q"));
  if (q.empty()) throw BadRequest{"q is required"};
  const auto limit = static_cast<std::size_t>(
      integer_param(params, "limit", kSearchLimit, 1, static_cast<long long>(kSearchLimit)));
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < graph_.node_count(); ++i) {
    const GraphNode& n = graph_.node(i);
    if (lower(n.displayName).find(q) != std::string::npos || lower(n.id).find(q) != std::string::npos) {
      hits.push_back(i);
    }
  }
  std::sort(hits.begin(), hits.end(),
            [&](std::size_t a, std::size_t b) { return graph_.node(a).id < graph_.node(b).id; });
  json results = json::array();
  for (std::size_t i = 0; i < std::min(limit, hits.size()); ++i) {
    results.push_back(node_json(graph_.node(hits[i])));
  }
  return {200, {{"query", param(params, "q")}, {"results", results}, {"truncated", hits.size() > limit}}};
}

Response QueryService::node(std::string_view id) const {
  auto index = graph_.index_of(id);
  if (!index) return error(404, "unknown node: " + std::string(id));
  json body = node_json(graph_.node(*index));
  body["inDegree"] = graph_.in_edges(*index).size();
  body["outDegree"] = graph_.out_edges(*index).size();
  return {200, body};
}

Response QueryService::neighbors(std::string_view id, const Params& params) const {
  auto index = graph_.index_of(id);
  if (!index) return error(404, "unknown node: " + std::string(id));
  const std::string_view direction = param(params, "direction", "out");
  if (direction != "in" && direction != "out") throw BadRequest{"direction must be in or out"};
  const auto types = type_filter(params);
  const auto limit = static_cast<std::size_t>(integer_param(
      params, "limit", kSearchLimit, 1, static_cast<long long>(kNeighborLimit)));
  const bool out = direction == "out";

  std::map<std::string, std::pair<std::size_t, json>> grouped;  // neighbour id -> (index, edges)
  for (std::size_t e : out ? graph_.out_edges(*index) : graph_.in_edges(*index)) {
    const ResolvedEdge& ref = graph_.edges()[e];
    if (!types.empty() && !types.contains(graph_.edge(ref).type)) continue;
    const std::size_t other = out ? ref.to : ref.from;
    auto& slot = grouped[graph_.node(other).id];
    slot.first = other;
    if (slot.second.is_null()) slot.second = json::array();
    slot.second.push_back({{"type", graph_.edge(ref).type},
                           {"location", location_json(graph_.edge(ref).location)}});
  }
  json list = json::array();
  for (const auto& [other_id, entry] : grouped) {
    if (list.size() == limit) break;
    list.push_back({{"node", node_json(graph_.node(entry.first))},
                    {"multiplicity", entry.second.size()},
                    {"edges", entry.second}});
  }
  return {200,
          {{"node", node_json(graph_.node(*index))},
           {"direction", direction},
           {"neighbors", list},
           {"truncated", grouped.size() > limit}}};
}

Response QueryService::hierarchy(const Params& params) const {
  const std::string_view root_id = param(params, "root");
  if (root_id.empty()) throw BadRequest{"root is required"};
  const std::string_view edge = param(params, "edge", "CALL");
  if (!known_edge_type(edge)) throw BadRequest{"unknown edge type '" + std::string(edge) + "'"};
  const std::string_view direction = param(params, "direction", "callees");
  if (direction != "callers" && direction != "callees") {
    throw BadRequest{"direction must be callers or callees"};
  }
  const int depth = static_cast<int>(integer_param(params, "depth", 3, 0, kMaxHierarchyDepth));
  auto root = graph_.index_of(root_id);
  if (!root) return error(404, "unknown node: " + std::string(root_id));
  const bool callees = direction == "callees";

  std::size_t budget = kMaxHierarchyNodes;
  bool truncated = false;
  std::vector<std::size_t> trail;
  // Depth-first; a node already on the current branch is reported but not
  // expanded again.
  auto build = [&](auto& self, std::size_t at, int remaining) -> json {
    json item = {{"node", node_json(graph_.node(at))}};
    json children = json::array();
    if (remaining > 0) {
      std::map<std::string, std::pair<std::size_t, std::size_t>> next;  // id -> (index, count)
      for (std::size_t e : callees ? graph_.out_edges(at) : graph_.in_edges(at)) {
        const ResolvedEdge& ref = graph_.edges()[e];
        if (graph_.edge(ref).type != edge) continue;
        const std::size_t other = callees ? ref.to : ref.from;
        auto& slot = next[graph_.node(other).id];
        slot.first = other;
        ++slot.second;
      }
      trail.push_back(at);
      for (const auto& [id, entry] : next) {
        if (budget == 0) {
          truncated = true;
          break;
        }
        --budget;
        if (std::find(trail.begin(), trail.end(), entry.first) != trail.end()) {
          children.push_back({{"node", node_json(graph_.node(entry.first))},
                              {"multiplicity", entry.second},
                              {"cycle", true},
                              {"children", json::array()}});
          continue;
        }
        json child = self(self, entry.first, remaining - 1);
        child["multiplicity"] = entry.second;
        children.push_back(std::move(child));
      }
      trail.pop_back();
    }
    item["children"] = std::move(children);
    return item;
  };
  json tree = build(build, *root, depth);
  return {200,
          {{"edge", edge},
           {"direction", direction},
           {"depth", depth},
           {"root", std::move(tree)},
           {"truncated", truncated}}};
}

Response QueryService::path(const Params& params) const {
  const std::string_view from_id = param(params, "from");
  const std::string_view to_id = param(params, "to");
  if (from_id.empty() || to_id.empty()) throw BadRequest{"from and to are required"};
  const auto types = type_filter(params);
  auto from = graph_.index_of(from_id);
  if (!from) return error(404, "unknown node: " + std::string(from_id));
  auto to = graph_.index_of(to_id);
  if (!to) return error(404, "unknown node: " + std::string(to_id));

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> via(graph_.node_count(), kNone);  // edge index reaching the node
  std::vector<bool> seen(graph_.node_count(), false);
  std::deque<std::size_t> queue{*from};
  seen[*from] = true;
  while (!queue.empty() && !seen[*to]) {
    std::size_t at = queue.front();
    queue.pop_front();
    for (std::size_t e : graph_.out_edges(at)) {
      const ResolvedEdge& ref = graph_.edges()[e];
      if (seen[ref.to]) continue;
      if (!types.empty() && !types.contains(graph_.edge(ref).type)) continue;
      seen[ref.to] = true;
      via[ref.to] = e;
      queue.push_back(ref.to);
    }
  }
  if (!seen[*to]) {
    return error(404, "no path from " + std::string(from_id) + " to " + std::string(to_id));
  }
  std::vector<std::size_t> hops;
  for (std::size_t at = *to; at != *from; at = graph_.edges()[via[at]].from) hops.push_back(via[at]);
  std::reverse(hops.begin(), hops.end());
  json nodes = json::array({node_json(graph_.node(*from))});
  json edges = json::array();
  for (std::size_t e : hops) {
    const ResolvedEdge& ref = graph_.edges()[e];
    edges.push_back(edge_json(graph_, ref));
    nodes.push_back(node_json(graph_.node(ref.to)));
  }
  return {200, {{"length", hops.size()}, {"nodes", nodes}, {"edges", edges}}};
}

}  // namespace scg::cli
