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

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scg/graph.hpp"

namespace scg {

enum class ExportFormat { GraphML, Gdf, Dot, Csv, Jsonl };

std::optional<ExportFormat> parse_export_format(std::string_view name);
std::string_view to_string(ExportFormat format);

// Extra per-node attributes: attribute name -> (node id -> value). Used e.g.
// to attach community labels to a GraphML export.
using NodeAttributes = std::map<std::string, std::map<std::string, std::string, std::less<>>>;

// Every writer emits nodes in id order with id, kind, displayName, loc and
// package, and the resolved edges with their type.
void write_graphml(const SemanticCodeGraph& graph, std::ostream& out,
                   const NodeAttributes& extra = {});
void write_gdf(const SemanticCodeGraph& graph, std::ostream& out);
void write_dot(const SemanticCodeGraph& graph, std::ostream& out);
// RFC 4180; two tables with fixed header order.
void write_csv(const SemanticCodeGraph& graph, std::ostream& nodes, std::ostream& edges);
// One JSON object per node, edges embedded.
void write_jsonl(const SemanticCodeGraph& graph, std::ostream& out);

// Rebuilds a graph from the two CSV tables written by write_csv.
SemanticCodeGraph import_csv(std::istream& nodes, std::istream& edges);

// Writes `graph` to `target`. For CSV `target` is a directory receiving
// nodes.csv and edges.csv; every other format writes a single file. Returns the
// written paths; throws std::runtime_error when the target is not writable.
std::vector<std::filesystem::path> export_graph(const SemanticCodeGraph& graph,
                                                ExportFormat format,
                                                const std::filesystem::path& target,
                                                const NodeAttributes& extra = {});

}  // namespace scg
