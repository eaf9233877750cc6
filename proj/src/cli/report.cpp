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

#include "scg/cli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace scg::cli {
namespace {

using nlohmann::json;

// Left-aligned first column, right-aligned rest.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      const std::string pad(width[c] - row[c].size(), ' ');
      line += c == 0 ? row[c] + pad : pad + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

json histogram_json(const std::map<std::size_t, std::size_t>& histogram) {
  json out = json::array();
  for (const auto& [degree, count] : histogram) out.push_back({degree, count});
  return out;
}

std::string counts_text(const std::string& title, const std::map<std::string, std::size_t>& counts) {
  std::vector<std::pair<std::string, std::size_t>> sorted(counts.begin(), counts.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::vector<std::string>> rows{{title, "count"}};
  for (const auto& [name, count] : sorted) rows.push_back({name, std::to_string(count)});
  return render_table(rows);
}

}  // namespace

std::string format_sig(double value) {
  if (value == 0) value = 0;  // no "-0"
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.4g", value);
  return buffer;
}

json location_json(const std::optional<SourceLocation>& location) {
  if (!location) return nullptr;
  return {{"uri", location->uri},
          {"startLine", location->startLine},
          {"startCharacter", location->startCharacter},
          {"endLine", location->endLine},
          {"endCharacter", location->endCharacter}};
}

json node_json(const GraphNode& node) {
  return {{"id", node.id},
          {"kind", node.kind},
          {"displayName", node.displayName},
          {"location", location_json(node.location)},
          {"properties", node.properties}};
}

json summary_json(const ViewSummary& v) {
  const ProjectSummary& s = v.summary;
  json kinds = v.distributions.node_kinds;
  json types = v.distributions.edge_types;
  return {{"view", std::string(to_string(v.view))},
          {"nodes", s.n},
          {"edges", s.m},
          {"totalLoc", s.totalLoc},
          {"locPerNode", s.locPerNode},
          {"density", s.density},
          {"avgDegree", s.avgDegree},
          {"stdInDegree", s.stdInDegree},
          {"iodInDegree", s.iodInDegree},
          {"stdOutDegree", s.stdOutDegree},
          {"iodOutDegree", s.iodOutDegree},
          {"acc", s.acc},
          {"gcc", s.gcc},
          {"dac", s.dac},
          {"notes", s.notes},
          {"nodeKinds", kinds},
          {"edgeTypes", types},
          {"inDegree", histogram_json(v.distributions.in_degree)},
          {"outDegree", histogram_json(v.distributions.out_degree)}};
}

std::string summary_text(const std::vector<ViewSummary>& summaries) {
  std::vector<std::vector<std::string>> rows{{"graph", "#LOC", "|V|", "LOC/|V|", "|E|", "D", "A_D",
                                              "sigma_ID", "IoD_ID", "sigma_OD", "IoD_OD", "ACC",
                                              "GCC", "DAC"}};
  for (const ViewSummary& v : summaries) {
    const ProjectSummary& s = v.summary;
    rows.push_back({std::string(to_string(v.view)), std::to_string(s.totalLoc),
                    std::to_string(s.n), format_sig(s.locPerNode), std::to_string(s.m),
                    format_sig(s.density), format_sig(s.avgDegree), format_sig(s.stdInDegree),
                    format_sig(s.iodInDegree), format_sig(s.stdOutDegree),
                    format_sig(s.iodOutDegree), format_sig(s.acc), format_sig(s.gcc),
                    format_sig(s.dac)});
  }
  std::string out = render_table(rows);
  for (const ViewSummary& v : summaries) {
    out += "\n[" + std::string(to_string(v.view)) + "]\n";
    out += counts_text("node kind", v.distributions.node_kinds);
    out += counts_text("edge type", v.distributions.edge_types);
  }
  return out;
}

json group_count_json(const std::vector<std::pair<std::string, std::size_t>>& groups) {
  json out = json::array();
  for (const auto& [group, count] : groups) out.push_back({{"group", group}, {"count", count}});
  return out;
}

std::string group_count_text(const std::vector<std::pair<std::string, std::size_t>>& groups) {
  std::vector<std::vector<std::string>> rows{{"group", "count"}};
  for (const auto& [group, count] : groups) rows.push_back({group, std::to_string(count)});
  return render_table(rows);
}

json rank_json(const RankTable& table) {
  json entries = json::array();
  for (const RankEntry& e : table.entries) {
    json entry = {{"id", e.id}, {"displayName", e.displayName}, {"score", e.score}};
    if (table.metric == "combined") entry["appearances"] = e.appearances;
    entries.push_back(std::move(entry));
  }
  return {{"metric", table.metric}, {"k", table.k}, {"notes", table.notes}, {"entries", entries}};
}

std::string rank_text(const RankTable& table) {
  const bool combined = table.metric == "combined";
  std::vector<std::vector<std::string>> rows;
  if (combined) {
    rows.push_back({"#", "score", "metrics", "node"});
  } else {
    rows.push_back({"#", "score", "node"});
  }
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    const RankEntry& e = table.entries[i];
    std::string label = e.displayName.empty() ? e.id : e.displayName + "  " + e.id;
    if (combined) {
      rows.push_back({std::to_string(i + 1), format_sig(e.score), std::to_string(e.appearances),
                      label});
    } else {
      rows.push_back({std::to_string(i + 1), format_sig(e.score), label});
    }
  }
  // The node column is last and left-aligned by hand.
  std::string out = "== " + table.metric + " ==\n";
  std::vector<std::size_t> width(rows.front().size() - 1, 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c + 1 < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c + 1 < row.size(); ++c) {
      out += std::string(width[c] - row[c].size(), ' ') + row[c] + "  ";
    }
    out += row.back() + '\n';
  }
  return out;
}

json similar_json(const std::vector<SimilarPair>& pairs, const SemanticCodeGraph& graph) {
  json out = json::array();
  auto describe = [&](const std::string& id) -> json {
    const GraphNode* node = graph.find(id);
    return node ? node_json(*node) : json{{"id", id}};
  };
  for (const SimilarPair& p : pairs) {
    out.push_back({{"m1", describe(p.m1)},
                   {"m2", describe(p.m2)},
                   {"s", p.s},
                   {"p1", p.p1},
                   {"p2", p.p2}});
  }
  return out;
}

std::string similar_text(const std::vector<SimilarPair>& pairs) {
  std::vector<std::vector<std::string>> rows{{"s", "p1", "p2", "m1", "m2"}};
  for (const SimilarPair& p : pairs) {
    rows.push_back({std::to_string(p.s), std::to_string(p.p1), std::to_string(p.p2), p.m1, p.m2});
  }
  std::string out;
  for (const auto& row : rows) {
    char prefix[48];
    std::snprintf(prefix, sizeof prefix, "%5s %4s %4s  ", row[0].c_str(), row[1].c_str(),
                  row[2].c_str());
    out += prefix + row[3] + "  " + row[4] + '\n';
  }
  return out;
}

json partition_json(const Partition& partition, const SemanticCodeGraph& graph) {
  json labels = json::object();
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    labels[graph.node(i).id] = partition.membership[i];
  }
  json communities = json::array();
  for (const Community& c : partition.communities) {
    communities.push_back({{"label", c.label},
                           {"size", c.size},
                           {"dominantPackage", c.dominant_package},
                           {"dominantCount", c.dominant_count}});
  }
  return {{"modularity", partition.modularity},
          {"resolution", partition.resolution},
          {"seed", partition.seed},
          {"notes", partition.notes},
          {"communities", communities},
          {"labels", labels}};
}

std::string partition_text(const Partition& partition) {
  std::string out = "modularity  " + format_sig(partition.modularity) + "\ncommunities " +
                    std::to_string(partition.communities.size()) + "\n\n";
  std::vector<std::vector<std::string>> rows{{"label", "size", "dominant package", "share"}};
  for (const Community& c : partition.communities) {
    const double share = c.size ? static_cast<double>(c.dominant_count) / static_cast<double>(c.size) : 0;
    rows.push_back({std::to_string(c.label), std::to_string(c.size),
                    c.dominant_package.empty() ? "-" : c.dominant_package, format_sig(share)});
  }
  return out + render_table(rows);
}

}  // namespace scg::cli
