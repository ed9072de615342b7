/*
Copyright 2026 The pebblekit Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pebble/attacks.hpp"
#include "pebble/bounds.hpp"
#include "pebble/extreme_dr.hpp"
#include "pebble/graph.hpp"
#include "pebble/pebbling.hpp"
#include "pebble/robustness.hpp"
#include "pebble/superconcentrator.hpp"
#include "pebble/unique_games.hpp"

namespace pebble::io {

using Json = nlohmann::json;

/// Optional per-node and per-graph annotations carried next to the edge list.
struct GraphMeta {
    std::optional<std::vector<NodeRole>> roles;
    std::optional<std::vector<std::uint32_t>> layers;
    std::optional<std::vector<std::string>> labels;
    std::optional<std::vector<NodeId>> inputs;
    std::optional<std::vector<NodeId>> outputs;
    std::optional<std::size_t> sc_depth;
    std::optional<std::size_t> sc_nodes;
};

struct GraphDoc {
    Dag dag;
    GraphMeta meta;
};

enum class GraphFormat { Json, Dot, Edgelist };

GraphFormat parse_format(const std::string& name);

/// {"n": N, "edges": [[u, v], ...], "meta": {...}}. Errors name the offending field;
/// a cyclic edge list is rejected with its witness cycle.
GraphDoc graph_from_json(const Json& j);
Json graph_to_json(const GraphDoc& g);

/// First line "N M", then one "u v" per line. Errors cite the line number.
GraphDoc graph_from_edgelist(const std::string& text);

std::string emit_graph(const GraphDoc& g, GraphFormat format);
/// Parses JSON, or an edge list when the text does not start with '{'.
GraphDoc parse_graph(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

/// One line per round: the pebbled ids, ascending, space separated.
std::string transcript_to_text(const Transcript& t);
Transcript transcript_from_text(const std::string& text, std::size_t node_count);

/// {"set": [...], "d": target_depth}; the certificate claims depth(G - set) < d.
Json certificate_to_json(const ReducibilityCertificate& c);
ReducibilityCertificate certificate_from_json(const Json& j, std::size_t node_count);

/// {"V": left, "W": right, "R": labels, "edges": [{"v", "w", "pi"}]}.
Json ug_to_json(const UniqueGamesInstance& u);
UniqueGamesInstance ug_from_json(const Json& j);

/// Decimal with 12 significant digits.
std::string decimal(double x);
std::string rational_text(const Rational& r);

Json to_json(const PebblingCost& c);
Json to_json(const LegalityReport& r);
Json to_json(const OracleResult& r);
Json to_json(const RobustnessReport& r);
Json to_json(const BoundReport& r);
Json to_json(const GapReport& r);
Json to_json(const Cor45Parameters& p);
Json to_json(const SuperconcentratorReport& r);
Json to_json(const ExtremeDrReport& r);
Json to_json(const AttackResult& r);

/// Reads a JSON array of non-negative ids below node_count into a set.
NodeSet node_set_from_json(const Json& j, std::size_t node_count, const std::string& field);
Json node_set_to_json(const NodeSet& s);

}  // namespace pebble::io
