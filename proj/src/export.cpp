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

#include "scg/export.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace fs = std::filesystem;

namespace scg {
namespace {

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  out += '"';
  return out;
}

std::string gdf_quote(std::string_view s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += '\'';
    out += c;
  }
  out += '\'';
  return out;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string prop_or_empty(const GraphNode& n, std::string_view key) {
  auto v = property(n.properties, key);
  return v ? std::string(*v) : std::string();
}

void write_location_columns(std::ostream& out, const std::optional<SourceLocation>& loc) {
  if (loc) {
    out << csv_field(loc->uri) << ',' << loc->startLine << ',' << loc->startCharacter << ','
        << loc->endLine << ',' << loc->endCharacter;
  } else {
    out << ",,,,";
  }
}

// RFC 4180 record reader. Returns false at end of input.
bool read_csv_record(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  if (in.peek() == std::char_traits<char>::eof()) return false;
  std::string field;
  bool quoted = false;
  char c;
  while (in.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      break;
    } else if (c != '\r') {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return true;
}

std::optional<SourceLocation> location_from_columns(const std::vector<std::string>& f,
                                                    std::size_t first) {
  if (f.size() < first + 5 || f[first].empty()) return std::nullopt;
  SourceLocation loc;
  loc.uri = f[first];
  loc.startLine = std::stoi(f[first + 1]);
  loc.startCharacter = std::stoi(f[first + 2]);
  loc.endLine = std::stoi(f[first + 3]);
  loc.endCharacter = std::stoi(f[first + 4]);
  return loc;
}

nlohmann::json location_json(const std::optional<SourceLocation>& loc) {
  if (!loc) return nullptr;
  return {{"uri", loc->uri},
          {"startLine", loc->startLine},
          {"startCharacter", loc->startCharacter},
          {"endLine", loc->endLine},
          {"endCharacter", loc->endCharacter}};
}

}  // namespace

std::optional<ExportFormat> parse_export_format(std::string_view name) {
  if (name == "graphml") return ExportFormat::GraphML;
  if (name == "gdf") return ExportFormat::Gdf;
  if (name == "dot") return ExportFormat::Dot;
  if (name == "csv") return ExportFormat::Csv;
  if (name == "jsonl") return ExportFormat::Jsonl;
  return std::nullopt;
}

std::string_view to_string(ExportFormat format) {
  switch (format) {
    case ExportFormat::GraphML: return "graphml";
    case ExportFormat::Gdf: return "gdf";
    case ExportFormat::Dot: return "dot";
    case ExportFormat::Csv: return "csv";
    case ExportFormat::Jsonl: return "jsonl";
  }
  return {};
}

void write_graphml(const SemanticCodeGraph& graph, std::ostream& out,
                   const NodeAttributes& extra) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"kind\" for=\"node\" attr.name=\"kind\" attr.type=\"string\"/>\n"
      << "  <key id=\"displayName\" for=\"node\" attr.name=\"displayName\" "
         "attr.type=\"string\"/>\n"
      << "  <key id=\"loc\" for=\"node\" attr.name=\"loc\" attr.type=\"long\"/>\n"
      << "  <key id=\"package\" for=\"node\" attr.name=\"package\" attr.type=\"string\"/>\n";
  for (const auto& [name, values] : extra) {
    out << "  <key id=\"" << xml_escape(name) << "\" for=\"node\" attr.name=\""
        << xml_escape(name) << "\" attr.type=\"string\"/>\n";
  }
  out << "  <key id=\"type\" for=\"edge\" attr.name=\"type\" attr.type=\"string\"/>\n"
      << "  <graph id=\"scg\" edgedefault=\"directed\">\n";
  for (const auto& n : graph.nodes()) {
    out << "    <node id=\"" << xml_escape(n.id) << "\">"
        << "<data key=\"kind\">" << xml_escape(n.kind) << "</data>"
        << "<data key=\"displayName\">" << xml_escape(n.displayName) << "</data>";
    if (auto loc = property(n.properties, prop::kLoc)) {
      out << "<data key=\"loc\">" << xml_escape(*loc) << "</data>";
    }
    if (auto pkg = property(n.properties, prop::kPackage)) {
      out << "<data key=\"package\">" << xml_escape(*pkg) << "</data>";
    }
    for (const auto& [name, values] : extra) {
      if (auto it = values.find(n.id); it != values.end()) {
        out << "<data key=\"" << xml_escape(name) << "\">" << xml_escape(it->second) << "</data>";
      }
    }
    out << "</node>\n";
  }
  std::map<std::tuple<std::size_t, std::string_view, std::size_t>, std::size_t> ordinals;
  for (const auto& ref : graph.edges()) {
    const Edge& e = graph.edge(ref);
    const auto& from = graph.node(ref.from).id;
    const auto& to = graph.node(ref.to).id;
    const std::size_t ordinal = ordinals[{ref.from, e.type, ref.to}]++;
    const std::string edge_id = from + "|" + e.type + "|" + to + "|" + std::to_string(ordinal);
    out << "    <edge id=\"" << xml_escape(edge_id) << "\" source=\"" << xml_escape(from)
        << "\" target=\"" << xml_escape(to) << "\"><data key=\"type\">" << xml_escape(e.type)
        << "</data></edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
}

void write_gdf(const SemanticCodeGraph& graph, std::ostream& out) {
  out << "nodedef>name VARCHAR,label VARCHAR,kind VARCHAR,loc INTEGER,package VARCHAR\n";
  for (const auto& n : graph.nodes()) {
    out << gdf_quote(n.id) << ',' << gdf_quote(n.displayName) << ',' << gdf_quote(n.kind) << ','
        << prop_or_empty(n, prop::kLoc) << ',' << gdf_quote(prop_or_empty(n, prop::kPackage))
        << '\n';
  }
  out << "edgedef>node1 VARCHAR,node2 VARCHAR,directed BOOLEAN,type VARCHAR\n";
  for (const auto& ref : graph.edges()) {
    out << gdf_quote(graph.node(ref.from).id) << ',' << gdf_quote(graph.node(ref.to).id)
        << ",true," << gdf_quote(graph.edge(ref).type) << '\n';
  }
}

void write_dot(const SemanticCodeGraph& graph, std::ostream& out) {
  if (graph.empty()) {
    out << "digraph scg {}\n";
    return;
  }
  out << "digraph scg {\n";
  for (const auto& n : graph.nodes()) {
    out << "  " << dot_quote(n.id) << " [label=" << dot_quote(n.displayName)
        << ", kind=" << dot_quote(n.kind);
    if (auto loc = property(n.properties, prop::kLoc)) out << ", loc=" << dot_quote(*loc);
    if (auto pkg = property(n.properties, prop::kPackage)) out << ", package=" << dot_quote(*pkg);
    out << "];\n";
  }
  for (const auto& ref : graph.edges()) {
    out << "  " << dot_quote(graph.node(ref.from).id) << " -> " << dot_quote(graph.node(ref.to).id)
        << " [type=" << dot_quote(graph.edge(ref).type) << "];\n";
  }
  out << "}\n";
}

void write_csv(const SemanticCodeGraph& graph, std::ostream& nodes, std::ostream& edges) {
  nodes << "id,kind,displayName,loc,package,file,uri,startLine,startCharacter,endLine,"
           "endCharacter\r\n";
  for (const auto& n : graph.nodes()) {
    nodes << csv_field(n.id) << ',' << csv_field(n.kind) << ',' << csv_field(n.displayName) << ','
          << csv_field(prop_or_empty(n, prop::kLoc)) << ','
          << csv_field(prop_or_empty(n, prop::kPackage)) << ','
          << csv_field(prop_or_empty(n, prop::kFile)) << ',';
    write_location_columns(nodes, n.location);
    nodes << "\r\n";
  }
  edges << "from,to,type,uri,startLine,startCharacter,endLine,endCharacter\r\n";
  for (const auto& ref : graph.edges()) {
    const Edge& e = graph.edge(ref);
    edges << csv_field(graph.node(ref.from).id) << ',' << csv_field(e.to) << ','
          << csv_field(e.type) << ',';
    write_location_columns(edges, e.location);
    edges << "\r\n";
  }
}

void write_jsonl(const SemanticCodeGraph& graph, std::ostream& out) {
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    const auto& n = graph.node(i);
    nlohmann::json edges = nlohmann::json::array();
    for (std::size_t e : graph.out_edges(i)) {
      const Edge& edge = graph.edge(e);
      edges.push_back({{"to", edge.to},
                       {"type", edge.type},
                       {"location", location_json(edge.location)},
                       {"properties", edge.properties}});
    }
    nlohmann::json record = {{"id", n.id},
                             {"kind", n.kind},
                             {"displayName", n.displayName},
                             {"location", location_json(n.location)},
                             {"properties", n.properties},
                             {"edges", std::move(edges)}};
    out << record.dump() << '\n';
  }
}

SemanticCodeGraph import_csv(std::istream& nodes_in, std::istream& edges_in) {
  std::vector<std::string> f;
  std::map<std::string, GraphNode, std::less<>> nodes;
  if (!read_csv_record(nodes_in, f)) return {};
  while (read_csv_record(nodes_in, f)) {
    if (f.size() < 11) throw std::runtime_error("nodes.csv: short record");
    GraphNode n;
    n.id = f[0];
    n.kind = f[1];
    n.displayName = f[2];
    if (!f[3].empty()) n.properties[std::string(prop::kLoc)] = f[3];
    if (!f[4].empty()) n.properties[std::string(prop::kPackage)] = f[4];
    if (!f[5].empty()) n.properties[std::string(prop::kFile)] = f[5];
    n.location = location_from_columns(f, 6);
    nodes.emplace(n.id, std::move(n));
  }
  if (read_csv_record(edges_in, f)) {
    while (read_csv_record(edges_in, f)) {
      if (f.size() < 8) throw std::runtime_error("edges.csv: short record");
      auto it = nodes.find(f[0]);
      if (it == nodes.end()) throw std::runtime_error("edges.csv: unknown source " + f[0]);
      Edge e;
      e.to = f[1];
      e.type = f[2];
      e.location = location_from_columns(f, 3);
      it->second.edges.push_back(std::move(e));
    }
  }
  std::vector<GraphNode> list;
  for (auto& [id, n] : nodes) list.push_back(std::move(n));
  return SemanticCodeGraph::from_nodes(std::move(list));
}

std::vector<fs::path> export_graph(const SemanticCodeGraph& graph, ExportFormat format,
                                   const fs::path& target, const NodeAttributes& extra) {
  auto open = [](const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
  };
  if (format == ExportFormat::Csv) {
    fs::create_directories(target);
    const fs::path nodes_path = target / "nodes.csv";
    const fs::path edges_path = target / "edges.csv";
    auto nodes = open(nodes_path);
    auto edges = open(edges_path);
    write_csv(graph, nodes, edges);
    if (!nodes || !edges) throw std::runtime_error("write failed under " + target.string());
    return {nodes_path, edges_path};
  }
  auto out = open(target);
  switch (format) {
    case ExportFormat::GraphML: write_graphml(graph, out, extra); break;
    case ExportFormat::Gdf: write_gdf(graph, out); break;
    case ExportFormat::Dot: write_dot(graph, out); break;
    case ExportFormat::Jsonl: write_jsonl(graph, out); break;
    case ExportFormat::Csv: break;
  }
  if (!out) throw std::runtime_error("write failed for " + target.string());
  return {target};
}

}  // namespace scg
