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

#include "scg/cli/app.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "scg/cli/query.hpp"
#include "scg/cli/report.hpp"
#include "scg/cli/workspace.hpp"
#include "scg/export.hpp"
#include "scg/extract/extractor.hpp"
#include "scg/storage.hpp"

namespace scg::cli {
namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string data_dir;
  std::string include;
  std::string graphs = "SCG";
  std::string format = "text";
  std::string out_file;
};

void add_common(CLI::App* cmd, Common& c, bool with_graph, bool with_format) {
  cmd->add_option("data", c.data_dir, "directory with .semanticgraph files")->required();
  cmd->add_option("--include", c.include, "glob over file uris for partial loading");
  if (with_graph) cmd->add_option("--graph", c.graphs, "SCG, CCN or CG; comma separated");
  if (with_format) {
    cmd->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", c.out_file, "write the report to a file");
  }
}

std::vector<GraphView> parse_views(const std::string& list) {
  std::vector<GraphView> views;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto view = parse_graph_view(item);
    if (!view) throw UsageError("unknown graph '" + item + "' (expected SCG, CCN or CG)");
    if (std::find(views.begin(), views.end(), *view) == views.end()) views.push_back(*view);
  }
  if (views.empty()) throw UsageError("--graph needs at least one of SCG, CCN, CG");
  return views;
}

GraphView single_view(const std::string& list) {
  auto views = parse_views(list);
  if (views.size() != 1) throw UsageError("this command takes exactly one --graph");
  return views.front();
}

Workspace open_workspace(const Common& c, std::ostream& err) {
  try {
    Workspace ws(c.data_dir, LoadOptions{c.include});
    for (const auto& problem : ws.load_report().problems) {
      err << "warning: " << problem.path.string() << ": " << problem.message << '\n';
    }
    return ws;
  } catch (const StorageError& e) {
    throw UsageError(e.what());
  }
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out_file, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot write " + c.out_file);
  file << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + '\n'; }

int cmd_generate(const std::string& project, std::string out_dir, std::ostream& out,
                 std::ostream& err) {
  if (out_dir.empty()) out_dir = (fs::path(project) / ".semanticgraphs").string();
  extract::ExtractResult result;
  try {
    result = extract::extract(project);
  } catch (const extract::ExtractError& e) {
    throw UsageError(e.what());
  }
  fs::create_directories(out_dir);
  write_graph_files(result.files, out_dir);
  std::size_t nodes = 0, edges = 0;
  for (const auto& file : result.files) {
    nodes += file.nodes.size();
    for (const auto& node : file.nodes) edges += node.edges.size();
  }
  for (const auto& d : result.diagnostics) err << d << '\n';
  for (const auto& d : result.fatal) err << d << '\n';
  out << "files        " << result.files.size() << '\n'
      << "nodes        " << nodes << '\n'
      << "edges        " << edges << '\n'
      << "diagnostics  " << result.diagnostics.size() << '\n'
      << "fatal        " << result.fatal.size() << '\n';
  return result.fatal.empty() ? kExitOk : kExitPartial;
}

struct GroupOptions {
  std::string key;
  std::vector<std::string> kinds;
  std::string local;
};

int cmd_summary(const Common& c, const GroupOptions& group, std::ostream& out, std::ostream& err) {
  const auto views = parse_views(c.graphs);
  Workspace ws = open_workspace(c, err);
  std::vector<ViewSummary> rows;
  for (GraphView v : views) {
    const SemanticCodeGraph& g = ws.graph(v);
    rows.push_back({v, summary(g), distributions(g)});
  }
  std::optional<std::vector<std::pair<std::string, std::size_t>>> groups;
  if (!group.key.empty()) {
    NodeFilter filter;
    for (const auto& k : group.kinds) filter.kinds.insert(k);
    if (group.local == "true") filter.is_local = true;
    if (group.local == "false") filter.is_local = false;
    try {
      groups = group_count(ws.graph(views.front()), filter, parse_group_key(group.key));
    } catch (const UnknownGroupKey& e) {
      throw UsageError(e.what());
    }
  }
  if (c.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) j.push_back(summary_json(r));
    nlohmann::json body = {{"summaries", j}};
    if (groups) body["groups"] = group_count_json(*groups);
    emit(c, dump(body), out);
  } else {
    std::string text = summary_text(rows);
    if (groups) text += "\n" + group_count_text(*groups);
    emit(c, text, out);
  }
  return kExitOk;
}

int cmd_crucial(const Common& c, std::size_t k, std::ostream& out, std::ostream& err) {
  if (k < 1) throw UsageError("-k must be at least 1");
  const auto views = parse_views(c.graphs);
  Workspace ws = open_workspace(c, err);
  nlohmann::json j = nlohmann::json::array();
  std::string text;
  for (GraphView v : views) {
    const SemanticCodeGraph& g = ws.graph(v);
    std::vector<RankTable> tables;
    for (RankMetric m : kAllRankMetrics) tables.push_back(rank(g, m, std::max(k, kCombinedDepth)));
    RankTable combined = combined_importance(tables, kCombinedDepth);
    auto cut = [k](RankTable t) {
      if (t.entries.size() > k) t.entries.resize(k);
      t.k = std::min(t.k, k);
      return t;
    };
    nlohmann::json metrics = nlohmann::json::array();
    text += "[" + std::string(to_string(v)) + "]\n";
    for (const RankTable& t : tables) {
      metrics.push_back(rank_json(cut(t)));
      text += rank_text(cut(t)) + '\n';
    }
    text += rank_text(cut(combined)) + '\n';
    j.push_back({{"graph", std::string(to_string(v))},
                 {"metrics", metrics},
                 {"combined", rank_json(cut(combined))}});
  }
  emit(c, c.format == "json" ? dump(j) : text, out);
  return kExitOk;
}

int cmd_similar(const Common& c, SimilarityOptions options, std::ostream& out, std::ostream& err) {
  Workspace ws = open_workspace(c, err);
  const SemanticCodeGraph& g = ws.graph(GraphView::SCG);
  std::vector<SimilarPair> pairs;
  try {
    pairs = find_similar_methods(g, options);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(c, c.format == "json" ? dump(similar_json(pairs, g)) : similar_text(pairs), out);
  return kExitOk;
}

int cmd_partition(const Common& c, double resolution, std::uint64_t seed,
                  const std::string& graphml, std::ostream& out, std::ostream& err) {
  const GraphView v = single_view(c.graphs);
  Workspace ws = open_workspace(c, err);
  const SemanticCodeGraph& g = ws.graph(v);
  Partition p = partition(g, resolution, seed);
  if (!graphml.empty()) {
    NodeAttributes extra;
    auto& labels = extra["community"];
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      labels[g.node(i).id] = std::to_string(p.membership[i]);
    }
    try {
      export_graph(g, ExportFormat::GraphML, graphml, extra);
    } catch (const std::runtime_error& e) {
      throw UsageError(e.what());
    }
  }
  emit(c, c.format == "json" ? dump(partition_json(p, g)) : partition_text(p), out);
  return kExitOk;
}

int cmd_export(const Common& c, const std::string& format, const std::string& target,
               std::ostream& out, std::ostream& err) {
  auto f = parse_export_format(format);
  if (!f) throw UsageError("unknown export format '" + format + "'");
  const GraphView v = single_view(c.graphs);
  Workspace ws = open_workspace(c, err);
  try {
    for (const auto& path : export_graph(ws.graph(v), *f, target)) {
      out << path.generic_string() << '\n';
    }
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

int cmd_serve(const Common& c, const std::string& host, int port, std::ostream& out,
              std::ostream& err) {
  const GraphView v = single_view(c.graphs);
  Workspace ws = open_workspace(c, err);
  QueryService service(ws.graph(v), v);
  HttpServer server(service);
  const int bound = server.bind(host, port);
  if (bound < 0) throw UsageError("cannot bind " + host + ":" + std::to_string(port));
  out << "serving " << to_string(v) << " of " << c.data_dir << " on http://" << host << ':'
      << bound << std::endl;
  return server.listen() ? kExitOk : kExitPartial;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semantic code graph toolkit", "scg-cli"};
  app.require_subcommand(1);

  std::string project, gen_out;
  auto* generate = app.add_subcommand("generate", "extract graph files from a Java project");
  generate->add_option("project", project, "project root")->required();
  generate->add_option("--out", gen_out, "output directory (default <project>/.semanticgraphs)");

  Common summary_opts;
  GroupOptions group;
  auto* summary_cmd = app.add_subcommand("summary", "graph metrics and distributions");
  add_common(summary_cmd, summary_opts, true, true);
  summary_cmd->add_option("--group-by", group.key, "count nodes per file, package, kind or isLocal");
  summary_cmd->add_option("--kind", group.kinds, "node kinds to count (with --group-by)");
  summary_cmd->add_option("--local", group.local, "true or false (with --group-by)")
      ->check(CLI::IsMember({"true", "false"}));

  Common crucial_opts;
  std::size_t k = 10;
  auto* crucial = app.add_subcommand("crucial", "critical entities by eight metrics");
  add_common(crucial, crucial_opts, true, true);
  crucial->add_option("-k,--top", k, "rows per table");

  Common similar_opts;
  SimilarityOptions sim;
  auto* similar = app.add_subcommand("similar", "pairs of structurally similar methods");
  add_common(similar, similar_opts, false, true);
  similar->add_option("--s-min", sim.s_min, "minimal number of shared successors");
  similar->add_option("--s-min-p", sim.s_min_p, "minimal shared percentage")
      ->check(CLI::Range(0, 100));

  Common partition_opts;
  double resolution = 1.0;
  std::uint64_t seed = 0;
  std::string graphml;
  auto* partition_cmd = app.add_subcommand("partition", "suggest module boundaries");
  add_common(partition_cmd, partition_opts, true, true);
  partition_cmd->add_option("--resolution", resolution, "modularity resolution");
  partition_cmd->add_option("--seed", seed, "visit order seed");
  partition_cmd->add_option("--graphml", graphml, "also write GraphML with a community attribute");

  Common export_opts;
  std::string export_format, export_target;
  auto* export_cmd = app.add_subcommand("export", "convert to graphml, gdf, dot, csv or jsonl");
  add_common(export_cmd, export_opts, true, false);
  export_cmd->add_option("--format", export_format, "graphml, gdf, dot, csv or jsonl")->required();
  export_cmd->add_option("--out", export_target, "file (directory for csv)")->required();

  Common serve_opts;
  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "HTTP/JSON query service");
  add_common(serve, serve_opts, true, false);
  serve->add_option("--host", host, "interface to bind");
  serve->add_option("--port", port, "port, 0 for any free one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(project, gen_out, out, err);
    if (*summary_cmd) return cmd_summary(summary_opts, group, out, err);
    if (*crucial) return cmd_crucial(crucial_opts, k, out, err);
    if (*similar) return cmd_similar(similar_opts, sim, out, err);
    if (*partition_cmd) {
      return cmd_partition(partition_opts, resolution, seed, graphml, out, err);
    }
    if (*export_cmd) return cmd_export(export_opts, export_format, export_target, out, err);
    if (*serve) return cmd_serve(serve_opts, host, port, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitPartial;
  }
  return kExitUsage;
}

}  // namespace scg::cli
