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

#include "pebble/io.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

namespace pebble::io {

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
    throw Error("field '" + field + "': " + what);
}

const Json& require(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) field_error(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) field_error(where.empty() ? key : where + "." + key, "missing");
    return *it;
}

std::uint64_t as_index(const Json& j, const std::string& field) {
    if (!j.is_number_integer()) field_error(field, "expected a non-negative integer");
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    const auto v = j.get<std::int64_t>();
    if (v < 0) field_error(field, "expected a non-negative integer");
    return static_cast<std::uint64_t>(v);
}

template <class T>
std::vector<T> index_array(const Json& j, const std::string& field, std::uint64_t below) {
    if (!j.is_array()) field_error(field, "expected an array");
    std::vector<T> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string f = field + "[" + std::to_string(i) + "]";
        const auto v = as_index(j[i], f);
        if (v >= below) field_error(f, "value " + std::to_string(v) + " out of range");
        out.push_back(static_cast<T>(v));
    }
    return out;
}

std::string ids_text(const std::vector<NodeId>& ids) {
    std::string s = "[";
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
    return s + "]";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Reducible: return "reducible";
        case Verdict::DepthRobust: return "depth-robust";
        case Verdict::NoWitnessFound: return "no-witness-found";
    }
    return "";
}

const char* method_name(SearchMethod m) { return m == SearchMethod::Exact ? "exact" : "bounded-search"; }

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

GraphFormat parse_format(const std::string& name) {
    if (name == "json") return GraphFormat::Json;
    if (name == "dot") return GraphFormat::Dot;
    if (name == "edgelist") return GraphFormat::Edgelist;
    throw Error("unknown graph format '" + name + "'");
}

GraphDoc graph_from_json(const Json& j) {
    const auto n = as_index(require(j, "n", ""), "n");
    if (n > UINT32_MAX) field_error("n", "too large");
    const Json& ej = require(j, "edges", "");
    if (!ej.is_array()) field_error("edges", "expected an array");
    std::vector<Edge> edges;
    edges.reserve(ej.size());
    for (std::size_t i = 0; i < ej.size(); ++i) {
        const std::string f = "edges[" + std::to_string(i) + "]";
        if (!ej[i].is_array() || ej[i].size() != 2) field_error(f, "expected a pair [u, v]");
        auto pair = index_array<NodeId>(ej[i], f, n);
        edges.emplace_back(pair[0], pair[1]);
    }
    const auto cycle = find_cycle(n, edges);
    if (!cycle.empty()) field_error("edges", "graph has a cycle " + ids_text(cycle));

    GraphDoc doc;
    try {
        doc.dag = Dag(n, std::move(edges));
    } catch (const Error& e) {
        field_error("edges", e.what());
    }
    auto mt = j.find("meta");
    if (mt == j.end() || mt->is_null()) return doc;
    if (!mt->is_object()) field_error("meta", "expected an object");
    const Json& m = *mt;
    auto sized = [&](const char* key) {
        const Json& a = m.at(key);
        if (!a.is_array() || a.size() != n) field_error(std::string("meta.") + key, "expected an array of length n");
        return &a;
    };
    if (m.contains("roles")) {
        const Json& a = *sized("roles");
        std::vector<NodeRole> roles;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == "bit") roles.push_back(NodeRole::Bit);
            else if (a[i] == "test") roles.push_back(NodeRole::Test);
            else field_error("meta.roles[" + std::to_string(i) + "]", "expected \"bit\" or \"test\"");
        }
        doc.meta.roles = std::move(roles);
    }
    if (m.contains("layers")) doc.meta.layers = index_array<std::uint32_t>(*sized("layers"), "meta.layers", UINT32_MAX);
    if (m.contains("labels")) {
        const Json& a = *sized("labels");
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i].is_string()) field_error("meta.labels[" + std::to_string(i) + "]", "expected a string");
            labels.push_back(a[i].get<std::string>());
        }
        doc.meta.labels = std::move(labels);
    }
    if (m.contains("inputs")) doc.meta.inputs = index_array<NodeId>(m["inputs"], "meta.inputs", n);
    if (m.contains("outputs")) doc.meta.outputs = index_array<NodeId>(m["outputs"], "meta.outputs", n);
    if (m.contains("sc_depth")) doc.meta.sc_depth = as_index(m["sc_depth"], "meta.sc_depth");
    if (m.contains("sc_nodes")) doc.meta.sc_nodes = as_index(m["sc_nodes"], "meta.sc_nodes");
    return doc;
}

Json graph_to_json(const GraphDoc& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.dag.edges()) edges.push_back({u, v});
    Json j{{"n", g.dag.node_count()}, {"edges", std::move(edges)}};
    Json meta = Json::object();
    const GraphMeta& m = g.meta;
    if (m.roles) {
        Json r = Json::array();
        for (auto role : *m.roles) r.push_back(role == NodeRole::Bit ? "bit" : "test");
        meta["roles"] = std::move(r);
    }
    if (m.layers) meta["layers"] = *m.layers;
    if (m.labels) meta["labels"] = *m.labels;
    if (m.inputs) meta["inputs"] = *m.inputs;
    if (m.outputs) meta["outputs"] = *m.outputs;
    if (m.sc_depth) meta["sc_depth"] = *m.sc_depth;
    if (m.sc_nodes) meta["sc_nodes"] = *m.sc_nodes;
    if (!meta.empty()) j["meta"] = std::move(meta);
    return j;
}

GraphDoc graph_from_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&](std::istringstream& out) {
        while (std::getline(in, line)) {
            ++lineno;
            const auto p = line.find_first_not_of(" \t\r");
            if (p == std::string::npos || line[p] == '#') continue;
            out = std::istringstream(line);
            return true;
        }
        return false;
    };
    auto line_error = [&](const std::string& what) -> Error {
        return Error("line " + std::to_string(lineno) + ": " + what);
    };
    std::istringstream ls;
    if (!next_line(ls)) throw Error("line 1: missing header \"N M\"");
    long long n = -1, m = -1;
    if (!(ls >> n >> m) || n < 0 || m < 0) throw line_error("expected header \"N M\"");
    std::vector<Edge> edges;
    for (long long i = 0; i < m; ++i) {
        if (!next_line(ls)) throw Error("line " + std::to_string(lineno + 1) + ": expected " + std::to_string(m) + " edges");
        long long u = -1, v = -1;
        if (!(ls >> u >> v) || u < 0 || v < 0) throw line_error("expected \"u v\"");
        if (u >= n || v >= n) throw line_error("node id out of range");
        edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
    if (next_line(ls)) throw line_error("unexpected content after the edge list");
    const auto cycle = find_cycle(static_cast<std::size_t>(n), edges);
    if (!cycle.empty()) throw Error("edges: graph has a cycle " + ids_text(cycle));
    return {Dag(static_cast<std::size_t>(n), std::move(edges)), {}};
}

std::string emit_graph(const GraphDoc& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::Json: return graph_to_json(g).dump() + "\n";
        case GraphFormat::Edgelist: {
            std::string s = std::to_string(g.dag.node_count()) + " " + std::to_string(g.dag.edge_count()) + "\n";
            for (auto [u, v] : g.dag.edges()) s += std::to_string(u) + " " + std::to_string(v) + "\n";
            return s;
        }
        case GraphFormat::Dot: {
            std::ostringstream os;
            os << "digraph G {\n";
            for (NodeId v = 0; v < g.dag.node_count(); ++v) {
                os << "  " << v;
                std::string label = g.meta.labels ? (*g.meta.labels)[v] : std::string();
                const bool bit = g.meta.roles && (*g.meta.roles)[v] == NodeRole::Bit;
                if (!label.empty() || bit) {
                    os << " [";
                    if (!label.empty()) os << "label=\"" << dot_escape(label) << "\"";
                    if (bit) os << (label.empty() ? "" : ", ") << "shape=box";
                    os << "]";
                }
                os << ";\n";
            }
            for (auto [u, v] : g.dag.edges()) os << "  " << u << " -> " << v << ";\n";
            os << "}\n";
            return os.str();
        }
    }
    return {};
}

GraphDoc parse_graph(const std::string& text) {
    const auto p = text.find_first_not_of(" \t\r\n");
    if (p != std::string::npos && text[p] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw Error(std::string("invalid JSON: ") + e.what());
        }
        return graph_from_json(j);
    }
    return graph_from_edgelist(text);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + path + "'");
    out << data;
    if (!out) throw Error("write to '" + path + "' failed");
}

std::string transcript_to_text(const Transcript& t) {
    std::string s;
    for (const auto& c : t) {
        bool first = true;
        for (NodeId v : c.members()) {
            if (!first) s += ' ';
            s += std::to_string(v);
            first = false;
        }
        s += '\n';
    }
    return s;
}

Transcript transcript_from_text(const std::string& text, std::size_t node_count) {
    Transcript t;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        NodeSet c(node_count);
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            unsigned long long v = 0;
            try {
                v = std::stoull(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size() || tok[0] == '-') {
                throw Error("line " + std::to_string(lineno) + ": '" + tok + "' is not a node id");
            }
            if (v >= node_count) throw Error("line " + std::to_string(lineno) + ": node " + tok + " out of range");
            c.insert(static_cast<NodeId>(v));
        }
        t.push_back(std::move(c));
    }
    return t;
}

NodeSet node_set_from_json(const Json& j, std::size_t node_count, const std::string& field) {
    const auto ids = index_array<NodeId>(j, field, node_count);
    return NodeSet(node_count, std::span<const NodeId>(ids));
}

Json node_set_to_json(const NodeSet& s) { return s.members(); }

Json certificate_to_json(const ReducibilityCertificate& c) {
    return {{"set", node_set_to_json(c.set)}, {"d", c.target_depth}};
}

ReducibilityCertificate certificate_from_json(const Json& j, std::size_t node_count) {
    ReducibilityCertificate c;
    c.set = node_set_from_json(require(j, "set", ""), node_count, "set");
    c.target_depth = as_index(require(j, "d", ""), "d");
    return c;
}

Json ug_to_json(const UniqueGamesInstance& u) {
    Json edges = Json::array();
    for (const auto& e : u.edges) edges.push_back({{"v", e.v}, {"w", e.w}, {"pi", e.pi}});
    return {{"V", u.left}, {"W", u.right}, {"R", u.labels}, {"edges", std::move(edges)}};
}

UniqueGamesInstance ug_from_json(const Json& j) {
    UniqueGamesInstance u;
    u.left = static_cast<std::uint32_t>(as_index(require(j, "V", ""), "V"));
    u.right = static_cast<std::uint32_t>(as_index(require(j, "W", ""), "W"));
    u.labels = static_cast<std::uint32_t>(as_index(require(j, "R", ""), "R"));
    const Json& ej = require(j, "edges", "");
    if (!ej.is_array()) field_error("edges", "expected an array");
    for (std::size_t i = 0; i < ej.size(); ++i) {
        const std::string f = "edges[" + std::to_string(i) + "]";
        UgConstraint c;
        c.v = static_cast<std::uint32_t>(as_index(require(ej[i], "v", f), f + ".v"));
        c.w = static_cast<std::uint32_t>(as_index(require(ej[i], "w", f), f + ".w"));
        c.pi = index_array<std::uint32_t>(require(ej[i], "pi", f), f + ".pi", UINT32_MAX);
        u.edges.push_back(std::move(c));
    }
    u.validate();
    return u;
}

std::string decimal(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string rational_text(const Rational& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json to_json(const PebblingCost& c) {
    return {{"cumulative", c.cumulative}, {"space", c.space}, {"time", c.time}, {"space_time", c.space_time}};
}

Json to_json(const LegalityReport& r) {
    Json j{{"legal", r.legal}, {"complete", r.complete}, {"unpebbled_sinks", r.unpebbled_sinks}};
    if (!r.legal) {
        j["round"] = r.round;
        j["node"] = r.node;
        j["reason"] = r.reason;
    }
    return j;
}

Json to_json(const OracleResult& r) {
    Json j{{"status", r.optimal() ? "optimal" : "budget-exceeded"},
           {"lower_bound", r.lower_bound},
           {"upper_bound", r.upper_bound},
           {"states_settled", r.states_settled}};
    if (r.optimal()) j["pcc"] = r.value();
    return j;
}

Json to_json(const RobustnessReport& r) {
    Json j{{"e", r.e}, {"d", r.d}, {"verdict", verdict_name(r.verdict)}, {"method", method_name(r.method)},
           {"branches", r.branches}};
    if (r.witness) j["witness"] = node_set_to_json(*r.witness);
    return j;
}

Json to_json(const BoundReport& r) {
    Json b = Json::object();
    for (const auto& [k, v] : r.bindings) b[k] = decimal(v);
    Json j{{"formula", r.formula}, {"bindings", std::move(b)}, {"value", decimal(r.value)}};
    if (r.exact) j["exact"] = rational_text(*r.exact);
    return j;
}

Json to_json(const GapReport& r) {
    Json j{{"c", rational_text(r.c)},
           {"eps", rational_text(r.eps)},
           {"k", r.k},
           {"upper_coefficient", rational_text(r.upper_coefficient)},
           {"lower_coefficient", rational_text(r.lower_coefficient)},
           {"target", rational_text(r.target)},
           {"upper_within_target", r.upper_within_target},
           {"gap_factor", rational_text(r.gap_factor)},
           {"gap_factor_decimal", decimal(boost::rational_cast<double>(r.gap_factor))},
           {"gap_verified", r.gap_verified},
           {"boundary", r.boundary},
           {"exponent", decimal(r.exponent)}};
    if (r.n) {
        j["n"] = decimal(*r.n);
        j["upper_at_n"] = decimal(*r.upper_at_n);
        j["lower_at_n"] = decimal(*r.lower_at_n);
    }
    return j;
}

Json to_json(const Cor45Parameters& p) {
    return {{"e1", decimal(p.e1)}, {"d1", decimal(p.d1)}, {"e2", decimal(p.e2)}, {"d2", decimal(p.d2)}};
}

Json to_json(const SuperconcentratorReport& r) {
    Json j{{"passed", r.passed}, {"checks", r.checks}};
    if (!r.passed) {
        j["failing_inputs"] = r.failing_inputs;
        j["failing_outputs"] = r.failing_outputs;
        j["flow"] = r.flow;
    }
    return j;
}

Json to_json(const ExtremeDrReport& r) {
    Json pts = Json::array();
    for (const auto& p : r.points) {
        pts.push_back({{"e", p.e}, {"d", p.d}, {"verdict", verdict_name(p.verdict)}, {"method", method_name(p.method)}});
    }
    return {{"gamma", decimal(r.gamma)}, {"frontier", r.frontier}, {"passed", r.passed}, {"exact", r.exact},
            {"points", std::move(pts)}};
}

Json to_json(const AttackResult& r) {
    Json phases = Json::array();
    for (const auto& p : r.phases) {
        phases.push_back(
            {{"name", p.name}, {"first_round", p.first_round}, {"last_round", p.last_round}, {"cost", p.cost}});
    }
    return {{"phases", std::move(phases)}, {"balloons", r.balloons}, {"slack", r.slack}, {"bound", to_json(r.bound)}};
}

}  // namespace pebble::io
