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

// pebblectl: build graphs, run attacks and oracles, check certificates, evaluate bounds.
// Exit status: 0 success, 1 a verification reported failure, 2 usage or input error.

#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pebble/attacks.hpp"
#include "pebble/bounds.hpp"
#include "pebble/extreme_dr.hpp"
#include "pebble/io.hpp"
#include "pebble/pebbling.hpp"
#include "pebble/rng.hpp"
#include "pebble/robustness.hpp"
#include "pebble/superconcentrator.hpp"
#include "pebble/svensson.hpp"
#include "pebble/transforms.hpp"

namespace {

using namespace pebble;
using io::Json;

struct VerificationFailed {};

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        io::write_file(path, text);
    }
}

void emit_json(const Json& j, const std::string& path) { emit(j.dump(2) + "\n", path); }

io::GraphDoc load_graph(const std::string& path) { return io::parse_graph(io::read_file(path)); }

NodeSet parse_id_list(const std::string& text, std::size_t n) {
    NodeSet s(n);
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || tok[0] == '-') throw Error("'" + tok + "' is not a node id");
        if (v >= n) throw Error("node " + tok + " out of range");
        s.insert(static_cast<NodeId>(v));
    }
    return s;
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const long long v = std::stoll(text, &used);
            if (used == text.size()) return Rational(v);
        } else {
            const std::string a = text.substr(0, slash), b = text.substr(slash + 1);
            std::size_t ua = 0, ub = 0;
            const long long num = std::stoll(a, &ua), den = std::stoll(b, &ub);
            if (ua == a.size() && ub == b.size() && den != 0) return Rational(num, den);
        }
    } catch (const std::exception&) {
    }
    throw Error("'" + text + "' is not an integer or a fraction p/q");
}

io::GraphDoc layered_doc(const SvenssonGraph& g) {
    io::GraphDoc doc{g.graph.dag, {}};
    doc.meta.roles = g.graph.role;
    doc.meta.layers = g.graph.layer;
    std::vector<std::string> labels;
    for (const auto& l : g.labels) labels.push_back(l.to_string());
    doc.meta.labels = std::move(labels);
    return doc;
}

struct GraphOut {
    std::string path;
    std::string format = "json";
};

void add_graph_out(CLI::App* sub, GraphOut& out) {
    sub->add_option("-o,--out", out.path, "Output file (stdout when omitted)");
    sub->add_option("--format", out.format, "json, dot or edgelist")
        ->check(CLI::IsMember({"json", "dot", "edgelist"}));
}

void write_graph(const io::GraphDoc& g, const GraphOut& out) {
    emit(io::emit_graph(g, io::parse_format(out.format)), out.path);
}

struct SvenssonOpts {
    std::string ug;
    std::uint32_t layers = 1;
    std::uint32_t alphabet = 2;
    std::uint32_t repetitions = 1;
    double eps = 0.5;
};

void add_svensson_opts(CLI::App* sub, SvenssonOpts& o) {
    sub->add_option("--ug", o.ug, "Unique Games instance JSON (the two-vertex example when omitted)")
        ->check(CLI::ExistingFile);
    sub->add_option("--layers", o.layers, "Number of test layers")->check(CLI::PositiveNumber);
    sub->add_option("--alphabet", o.alphabet, "Bit alphabet size")->check(CLI::Range(2U, 16U));
    sub->add_option("--repetitions", o.repetitions, "Right vertices per test, halved")->check(CLI::PositiveNumber);
    sub->add_option("--eps", o.eps, "Free-coordinate fraction of the label set");
}

SvenssonGraph build_from(const SvenssonOpts& o) {
    const auto u = o.ug.empty() ? example1_instance() : io::ug_from_json(Json::parse(io::read_file(o.ug)));
    SvenssonParams p;
    p.layers = o.layers;
    p.alphabet = o.alphabet;
    p.repetitions = o.repetitions;
    p.subcube_fraction = o.eps;
    return build_svensson(u, p);
}

Dag random_backbone(std::size_t n, Rng rng) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (rng.chance(1, 2)) edges.emplace_back(u, v);
        }
    }
    return Dag(n, std::move(edges));
}

// ---------------------------------------------------------------- generate

void register_generate(CLI::App& app) {
    auto* gen = app.add_subcommand("generate", "Build a graph and write it out");
    gen->require_subcommand(1);

    {
        auto* sub = gen->add_subcommand("path", "Directed path");
        static std::size_t n = 0;
        static GraphOut out;
        sub->add_option("--n", n, "Node count")->required();
        add_graph_out(sub, out);
        sub->callback([] { write_graph({graphs::path(n), {}}, out); });
    }
    {
        auto* sub = gen->add_subcommand("complete", "Edge (i, j) for every i < j");
        static std::size_t n = 0;
        static GraphOut out;
        sub->add_option("--n", n, "Node count")->required();
        add_graph_out(sub, out);
        sub->callback([] { write_graph({graphs::complete(n), {}}, out); });
    }
    {
        auto* sub = gen->add_subcommand("layered-matching", "Equal layers joined by identity matchings");
        static std::size_t n = 0, layers = 0;
        static GraphOut out;
        sub->add_option("--n", n, "Node count")->required();
        sub->add_option("--layers", layers, "Layer count (divides n)")->required();
        add_graph_out(sub, out);
        sub->callback([] {
            io::GraphDoc doc{graphs::layered_matching(n, layers), {}};
            doc.meta.layers = graphs::layered_matching_layers(n, layers);
            write_graph(doc, out);
        });
    }
    {
        auto* sub = gen->add_subcommand("ug", "Random biregular Unique Games instance (JSON)");
        static std::uint64_t seed = 0;
        static std::uint32_t left = 1, right = 1, labels = 2, degree = 1;
        static std::string path;
        sub->add_option("--seed", seed, "Random seed")->required();
        sub->add_option("--left", left, "Left vertices")->required();
        sub->add_option("--right", right, "Right vertices")->required();
        sub->add_option("--labels", labels, "Label count")->required();
        sub->add_option("--degree", degree, "Left degree")->required();
        sub->add_option("-o,--out", path, "Output file");
        sub->callback([] {
            Rng rng = Rng(seed).substream("ug");
            emit_json(io::ug_to_json(random_ug_instance(rng, left, right, labels, degree)), path);
        });
    }
    {
        auto* sub = gen->add_subcommand("svensson", "Layered bit/test graph of a Unique Games instance");
        static SvenssonOpts opts;
        static GraphOut out;
        add_svensson_opts(sub, opts);
        add_graph_out(sub, out);
        sub->callback([] { write_graph(layered_doc(build_from(opts)), out); });
    }
    {
        auto* sub = gen->add_subcommand("simplified", "Test-only graph: u -> v when a bit lies between them");
        static SvenssonOpts opts;
        static GraphOut out;
        add_svensson_opts(sub, opts);
        add_graph_out(sub, out);
        sub->callback([] {
            const auto g = build_from(opts);
            const auto s = simplify(g);
            io::GraphDoc doc{s.dag, {}};
            doc.meta.layers = s.layer;
            std::vector<std::string> labels;
            for (NodeId v : s.origin) labels.push_back(g.labels[v].to_string());
            doc.meta.labels = std::move(labels);
            write_graph(doc, out);
        });
    }
    {
        auto* sub = gen->add_subcommand("sparsified", "Layered graph with edges kept along a backbone DAG");
        static SvenssonOpts opts;
        static GraphOut out;
        static std::string backbone, kind = "file";
        static std::optional<std::uint64_t> seed;
        add_svensson_opts(sub, opts);
        add_graph_out(sub, out);
        sub->add_option("--backbone", backbone, "Backbone graph on layers + 1 nodes")->check(CLI::ExistingFile);
        sub->add_option("--backbone-kind", kind, "file, complete, path or random")
            ->check(CLI::IsMember({"file", "complete", "path", "random"}));
        sub->add_option("--seed", seed, "Random seed (required for a random backbone)");
        sub->callback([] {
            const auto g = build_from(opts);
            const std::size_t n = g.layers + 1;
            Dag bb;
            if (kind == "file") {
                if (backbone.empty()) throw Error("--backbone is required with --backbone-kind file");
                bb = load_graph(backbone).dag;
            } else if (kind == "complete") {
                bb = graphs::complete(n);
            } else if (kind == "path") {
                bb = graphs::path(n);
            } else {
                if (!seed) throw Error("--seed is required for a random backbone");
                bb = random_backbone(n, Rng(*seed).substream("backbone"));
            }
            write_graph(layered_doc(sparsify(g, bb)), out);
        });
    }
    {
        auto* sub = gen->add_subcommand("idr", "Replace each node by a chain so that indegree is at most 2");
        static std::string input;
        static std::uint32_t gamma = 1;
        static GraphOut out;
        sub->add_option("-i,--input", input, "Graph file")->required()->check(CLI::ExistingFile);
        sub->add_option("--gamma", gamma, "Extra chain nodes per node");
        add_graph_out(sub, out);
        sub->callback([] { write_graph({idr(load_graph(input).dag, gamma), {}}, out); });
    }
    {
        auto* sub = gen->add_subcommand("superconc", "Superconcentrator with n inputs and n outputs");
        static std::size_t n = 0;
        static GraphOut out;
        sub->add_option("--n", n, "Inputs and outputs")->required()->check(CLI::PositiveNumber);
        add_graph_out(sub, out);
        sub->callback([] {
            const auto sc = build_superconcentrator(n);
            io::GraphDoc doc{sc.dag, {}};
            doc.meta.inputs = sc.inputs;
            doc.meta.outputs = sc.outputs;
            doc.meta.sc_depth = sc.depth();
            doc.meta.sc_nodes = sc.dag.node_count();
            write_graph(doc, out);
        });
    }
    {
        auto* sub = gen->add_subcommand("overlay", "Base graph on the inputs of a superconcentrator, outputs chained");
        static std::string input;
        static GraphOut out;
        sub->add_option("-i,--input", input, "Base graph file")->required()->check(CLI::ExistingFile);
        add_graph_out(sub, out);
        sub->callback([] {
            const Dag base = load_graph(input).dag;
            const auto o = superconc_overlay(base, build_superconcentrator(std::max<std::size_t>(1, base.node_count())));
            io::GraphDoc doc{o.dag, {}};
            doc.meta.inputs = o.inputs;
            doc.meta.outputs = o.outputs;
            doc.meta.sc_depth = o.sc_depth;
            doc.meta.sc_nodes = o.sc_nodes;
            write_graph(doc, out);
        });
    }
    {
        auto* sub = gen->add_subcommand("extreme-dr", "Search random sparse DAGs for a gamma-extreme depth-robust one");
        static std::size_t n = 0, attempts = 200;
        static double gamma = 0.5, degree = 1.0;
        static std::uint64_t seed = 0;
        static GraphOut out;
        static std::string report;
        sub->add_option("--n", n, "Node count")->required()->check(CLI::PositiveNumber);
        sub->add_option("--gamma", gamma, "Slack in [0, 1)")->required();
        sub->add_option("--seed", seed, "Random seed")->required();
        sub->add_option("--attempts", attempts, "Candidates to try");
        sub->add_option("--degree-factor", degree, "Degree cap is ceil(factor * log2 n)");
        sub->add_option("--report", report, "Write the frontier report here");
        add_graph_out(sub, out);
        sub->callback([] {
            Rng rng = Rng(seed).substream("extreme-dr");
            const auto s = sample_extreme_dr(n, gamma, rng, attempts, degree);
            if (!report.empty()) {
                Json j = io::to_json(s.report);
                j["found"] = s.found;
                j["attempts"] = s.attempts;
                emit_json(j, report);
            }
            if (!s.found) {
                throw Error("no gamma-extreme depth-robust graph found in " + std::to_string(s.attempts) +
                            " attempts");
            }
            write_graph({s.dag, {}}, out);
        });
    }
}

// ---------------------------------------------------------------- analyze

void register_analyze(CLI::App& app) {
    auto* an = app.add_subcommand("analyze", "Structural analysis of a graph");
    an->require_subcommand(1);
    {
        auto* sub = an->add_subcommand("robustness", "Decide (e, d)-depth-robustness");
        static std::string input, path;
        static std::size_t e = 0, d = 1;
        static bool exact = false, tests_only = false;
        static std::uint64_t max_branches = SearchLimits{}.max_branches;
        sub->add_option("-i,--input", input, "Graph file")->required()->check(CLI::ExistingFile);
        sub->add_option("--e", e, "Deletion budget")->required();
        sub->add_option("--d", d, "Path length in nodes")->required();
        sub->add_flag("--exact", exact, "Never truncate the search");
        sub->add_flag("--tests-only", tests_only, "Only test nodes (per meta.roles) may be deleted");
        sub->add_option("--max-branches", max_branches, "Search budget");
        sub->add_option("-o,--out", path, "Report file");
        sub->callback([] {
            const auto doc = load_graph(input);
            NodeSet deletable;
            if (tests_only) {
                if (!doc.meta.roles) throw Error("--tests-only needs meta.roles in the graph file");
                deletable = NodeSet(doc.dag.node_count());
                for (NodeId v = 0; v < doc.dag.node_count(); ++v) {
                    if ((*doc.meta.roles)[v] == NodeRole::Test) deletable.insert(v);
                }
            }
            SearchLimits lim{exact ? UINT64_MAX : max_branches};
            emit_json(io::to_json(is_depth_robust(doc.dag, e, d, lim, tests_only ? &deletable : nullptr)), path);
        });
    }
    {
        auto* sub = an->add_subcommand("depth", "Longest path, optionally after deleting a set");
        static std::string input, set, path;
        sub->add_option("-i,--input", input, "Graph file")->required()->check(CLI::ExistingFile);
        sub->add_option("--set", set, "Comma-separated node ids to delete");
        sub->add_option("-o,--out", path, "Report file");
        sub->callback([] {
            const auto doc = load_graph(input);
            const NodeSet s = parse_id_list(set, doc.dag.node_count());
            Json j{{"n", doc.dag.node_count()}, {"deleted", io::node_set_to_json(s)}, {"depth", depth(doc.dag, s)},
                   {"path", longest_path(doc.dag, s)}};
            if (doc.meta.roles) {
                NodeSet bits(doc.dag.node_count());
                for (NodeId v = 0; v < doc.dag.node_count(); ++v) {
                    if ((*doc.meta.roles)[v] == NodeRole::Bit) bits.insert(v);
                }
                j["bit_depth"] = depth_counted(doc.dag, bits, s);
            }
            emit_json(j, path);
        });
    }
}

// ---------------------------------------------------------------- pebble

struct AttackOpts {
    std::string set, certificate;
    std::size_t d = 1, g = 0;
};

void add_attack_opts(CLI::App* sub, AttackOpts& o) {
    sub->add_option("--set", o.set, "Depth-reducing set, comma-separated ids (searched when omitted)");
    sub->add_option("--certificate", o.certificate, "Certificate JSON supplying the set")->check(CLI::ExistingFile);
    sub->add_option("--d", o.d, "Depth left after deleting the set")->required();
    sub->add_option("--g", o.g, "Interval length (defaults to d)");
}

AttackSchedule schedule_for(const Dag& g, const AttackOpts& o) {
    AttackSchedule s;
    s.d = o.d;
    s.interval = o.g == 0 ? o.d : o.g;
    if (!o.certificate.empty()) {
        s.depth_reducing_set =
            io::certificate_from_json(Json::parse(io::read_file(o.certificate)), g.node_count()).set;
    } else if (!o.set.empty()) {
        s.depth_reducing_set = parse_id_list(o.set, g.node_count());
    } else {
        const auto r = min_depth_reducing_set(g, o.d + 1);
        if (!r.best) throw Error("no set reduces the depth to " + std::to_string(o.d));
        s.depth_reducing_set = *r.best;
    }
    return s;
}

struct PebbleOut {
    std::string report, transcript, csv;
};

void add_pebble_out(CLI::App* sub, PebbleOut& o, bool with_csv) {
    sub->add_option("-o,--out", o.report, "Report file (stdout when omitted)");
    sub->add_option("--transcript-out", o.transcript, "Write the transcript, one round per line");
    if (with_csv) sub->add_option("--csv-out", o.csv, "Write the per-round phase log as CSV");
}

void finish_pebbling(const Dag& g, const Transcript& t, Json report, const PebbleOut& o) {
    report["cost"] = io::to_json(cost(t));
    report["legality"] = io::to_json(validate(g, t));
    report["rounds"] = t.size();
    report["n"] = g.node_count();
    if (!o.transcript.empty()) io::write_file(o.transcript, io::transcript_to_text(t));
    emit_json(report, o.report);
}

void register_pebble(CLI::App& app) {
    auto* pb = app.add_subcommand("pebble", "Produce a pebbling and its cost");
    pb->require_subcommand(1);
    {
        auto* sub = pb->add_subcommand("oracle", "Exact parallel cumulative complexity of a small graph");
        static std::string input;
        static PebbleOut out;
        static OracleLimits lim;
        sub->add_option("-i,--input", input, "Graph file")->required()->check(CLI::ExistingFile);
        sub->add_option("--max-nodes", lim.max_nodes, "Node limit");
        sub->add_option("--max-states", lim.max_states, "States settled before giving up");
        add_pebble_out(sub, out, false);
        sub->callback([] {
            const Dag g = load_graph(input).dag;
            const auto r = exact_pcc(g, lim);
            finish_pebbling(g, r.witness, {{"strategy", "oracle"}, {"oracle", io::to_json(r)}}, out);
        });
    }
    {
        auto* sub = pb->add_subcommand("generic", "Light and balloon phases driven by a depth-reducing set");
        static std::string input;
        static AttackOpts opts;
        static PebbleOut out;
        static bool finish_all = false;
        sub->add_option("-i,--input", input, "Graph file")->required()->check(CLI::ExistingFile);
        add_attack_opts(sub, opts);
        sub->add_flag("--finish-all", finish_all, "End with every node pebbled");
        add_pebble_out(sub, out, true);
        sub->callback([] {
            const Dag g = load_graph(input).dag;
            const auto s = schedule_for(g, opts);
            const auto r = generic_attack(g, s, finish_all);
            if (!out.csv.empty()) io::write_file(out.csv, phase_csv(r));
            finish_pebbling(g, r.transcript,
                            {{"strategy", "generic"},
                             {"set", io::node_set_to_json(s.depth_reducing_set)},
                             {"d", s.d},
                             {"g", s.interval},
                             {"attack", io::to_json(r)}},
                            out);
        });
    }
    {
        auto* sub = pb->add_subcommand("overlay", "Three-step strategy on the superconcentrator overlay of a base graph");
        static std::string input;
        static AttackOpts opts;
        static PebbleOut out;
        sub->add_option("-i,--input", input, "Base graph file")->required()->check(CLI::ExistingFile);
        add_attack_opts(sub, opts);
        add_pebble_out(sub, out, true);
        sub->callback([] {
            const Dag base = load_graph(input).dag;
            const auto s = schedule_for(base, opts);
            const auto o = superconc_overlay(base, build_superconcentrator(std::max<std::size_t>(1, base.node_count())));
            const auto r = overlay_attack(o, s);
            if (!out.csv.empty()) io::write_file(out.csv, phase_csv(r));
            finish_pebbling(o.dag, r.transcript,
                            {{"strategy", "overlay"},
                             {"set", io::node_set_to_json(s.depth_reducing_set)},
                             {"d", s.d},
                             {"g", s.interval},
                             {"sc_nodes", o.sc_nodes},
                             {"sc_depth", o.sc_depth},
                             {"attack", io::to_json(r)}},
                            out);
        });
    }
    {
        auto* sub = pb->add_subcommand("natural", "Pebble layer by layer, never removing");
        static std::string input;
        static PebbleOut out;
        sub->add_option("-i,--input", input, "Graph file with meta.layers")->required()->check(CLI::ExistingFile);
        add_pebble_out(sub, out, false);
        sub->callback([] {
            const auto doc = load_graph(input);
            if (!doc.meta.layers) throw Error("field 'meta.layers': missing");
            finish_pebbling(doc.dag, natural_svensson_pebbling(doc.dag, *doc.meta.layers), {{"strategy", "natural"}},
                            out);
        });
    }
    {
        auto* sub = pb->add_subcommand("everything", "Pebble every ready node each round, never removing");
        static std::string input;
        static PebbleOut out;
        sub->add_option("-i,--input", input, "Graph file")->required()->check(CLI::ExistingFile);
        add_pebble_out(sub, out, false);
        sub->callback([] {
            const Dag g = load_graph(input).dag;
            finish_pebbling(g, pebble_everything(g), {{"strategy", "everything"}}, out);
        });
    }
}

// ---------------------------------------------------------------- verify

void register_verify(CLI::App& app) {
    auto* vf = app.add_subcommand("verify", "Check a claim; exit status 1 when it fails");
    vf->require_subcommand(1);
    {
        auto* sub = vf->add_subcommand("transcript", "Legality and completeness of a pebbling");
        static std::string input, transcript, path;
        static bool sequential = false;
        sub->add_option("-i,--input", input, "Graph file")->required()->check(CLI::ExistingFile);
        sub->add_option("-t,--transcript", transcript, "Transcript file")->required()->check(CLI::ExistingFile);
        sub->add_flag("--sequential", sequential, "At most one placement per round");
        sub->add_option("-o,--out", path, "Report file");
        sub->callback([] {
            const Dag g = load_graph(input).dag;
            const auto t = io::transcript_from_text(io::read_file(transcript), g.node_count());
            const auto r = validate(g, t, sequential ? PebblingMode::Sequential : PebblingMode::Parallel);
            Json j = io::to_json(r);
            j["passed"] = r.ok();
            j["cost"] = io::to_json(cost(t));
            emit_json(j, path);
            if (!r.ok()) throw VerificationFailed{};
        });
    }
    {
        auto* sub = vf->add_subcommand("certificate", "depth(G - set) < d");
        static std::string input, certificate, path;
        sub->add_option("-i,--input", input, "Graph file")->required()->check(CLI::ExistingFile);
        sub->add_option("-c,--certificate", certificate, "Certificate JSON")->required()->check(CLI::ExistingFile);
        sub->add_option("-o,--out", path, "Report file");
        sub->callback([] {
            const Dag g = load_graph(input).dag;
            const auto c = io::certificate_from_json(Json::parse(io::read_file(certificate)), g.node_count());
            const bool ok = verify_certificate(g, c);
            Json j{{"passed", ok}, {"size", c.set.size()}, {"d", c.target_depth}, {"depth_after", depth(g, c.set)}};
            if (!ok) j["witness_path"] = longest_path(g, c.set);
            emit_json(j, path);
            if (!ok) throw VerificationFailed{};
        });
    }
    {
        auto* sub = vf->add_subcommand("superconcentrator", "Vertex-disjoint linkage of every input/output subset pair");
        static std::string input, path;
        static std::size_t n = 0;
        static std::uint64_t samples = 0;
        static std::optional<std::uint64_t> seed;
        sub->add_option("-i,--input", input, "Graph with meta.inputs and meta.outputs")->check(CLI::ExistingFile);
        sub->add_option("--n", n, "Check build_superconcentrator(n) instead of a file");
        sub->add_option("--samples", samples, "Random checks instead of exhaustive enumeration");
        sub->add_option("--seed", seed, "Random seed (required with --samples)");
        sub->add_option("-o,--out", path, "Report file");
        sub->callback([] {
            Dag g;
            std::vector<NodeId> ins, outs;
            if (!input.empty()) {
                auto doc = load_graph(input);
                if (!doc.meta.inputs || !doc.meta.outputs) throw Error("field 'meta.inputs': missing");
                g = doc.dag;
                ins = *doc.meta.inputs;
                outs = *doc.meta.outputs;
            } else if (n > 0) {
                auto sc = build_superconcentrator(n);
                g = sc.dag;
                ins = sc.inputs;
                outs = sc.outputs;
            } else {
                throw Error("give --input or --n");
            }
            SuperconcentratorReport r;
            if (samples > 0) {
                if (!seed) throw Error("--seed is required with --samples");
                Rng rng = Rng(*seed).substream("superconcentrator");
                r = verify_superconcentrator(g, ins, outs, VerifyMode::Sampled, samples, &rng);
            } else {
                r = verify_superconcentrator(g, ins, outs, VerifyMode::Exhaustive);
            }
            Json j = io::to_json(r);
            j["mode"] = samples > 0 ? "sampled" : "exhaustive";
            emit_json(j, path);
            if (!r.passed) throw VerificationFailed{};
        });
    }
    {
        auto* sub = vf->add_subcommand("extreme-dr", "(e, d)-depth-robust for every e + d = floor((1 - gamma) N)");
        static std::string input, path;
        static double gamma = 0.5;
        sub->add_option("-i,--input", input, "Graph file")->required()->check(CLI::ExistingFile);
        sub->add_option("--gamma", gamma, "Slack in [0, 1)")->required();
        sub->add_option("-o,--out", path, "Report file");
        sub->callback([] {
            const auto r = check_extreme_dr(load_graph(input).dag, gamma);
            emit_json(io::to_json(r), path);
            if (!r.passed) throw VerificationFailed{};
        });
    }
}

// ---------------------------------------------------------------- bounds

void register_bounds(CLI::App& app) {
    auto* bd = app.add_subcommand("bounds", "Evaluate a closed-form cost bound");
    bd->require_subcommand(1);
    static long long e = 0, d = 1, g = 1, n = 1, delta = 2;
    static std::optional<long long> sc_nodes, sc_depth;
    static std::string path;
    auto params = [](CLI::App* sub, bool with_g, bool with_n) {
        sub->add_option("--e", e, "Set size")->required();
        sub->add_option("--d", d, "Depth")->required();
        if (with_g) sub->add_option("--g", g, "Interval length")->required();
        if (with_n) sub->add_option("--n", n, "Node count")->required();
        sub->add_option("-o,--out", path, "Report file");
    };
    {
        auto* sub = bd->add_subcommand("generic", "eN + delta g N + N^2 d / g");
        params(sub, true, true);
        sub->add_option("--delta", delta, "Maximum indegree")->required();
        sub->callback([] { emit_json(io::to_json(bound_generic(e, d, g, n, delta)), path); });
    }
    {
        auto* sub = bd->add_subcommand("dr-lower", "e d");
        params(sub, false, false);
        sub->callback([] { emit_json(io::to_json(bound_depth_robust_lower(e, d)), path); });
    }
    {
        auto* sub = bd->add_subcommand("overlay-lower", "min(eN/8, dN/8)");
        params(sub, false, true);
        sub->callback([] { emit_json(io::to_json(bound_overlay_lower(e, d, n)), path); });
    }
    auto measured = [](CLI::App* sub) {
        sub->add_option("--sc-nodes", sc_nodes, "Measured superconcentrator node count");
        sub->add_option("--sc-depth", sc_depth, "Measured superconcentrator depth");
    };
    {
        auto* sub = bd->add_subcommand("overlay-naive", "Overlay upper bound from the generic attack");
        params(sub, true, true);
        measured(sub);
        sub->callback([] {
            if (sc_nodes.has_value() != sc_depth.has_value()) throw Error("give both --sc-nodes and --sc-depth");
            emit_json(io::to_json(sc_nodes ? bound_overlay_naive_measured(e, d, g, n, *sc_nodes, *sc_depth)
                                           : bound_overlay_naive(e, d, g, n)),
                      path);
        });
    }
    {
        auto* sub = bd->add_subcommand("overlay-improved", "Overlay upper bound from the three-step attack");
        params(sub, true, true);
        measured(sub);
        sub->add_option("--delta", delta, "Base graph indegree (measured variant)");
        sub->callback([] {
            if (sc_nodes.has_value() != sc_depth.has_value()) throw Error("give both --sc-nodes and --sc-depth");
            emit_json(io::to_json(sc_nodes ? bound_overlay_improved_measured(e, d, g, n, delta, *sc_nodes, *sc_depth)
                                           : bound_overlay_improved(e, d, g, n)),
                      path);
        });
    }
    {
        auto* sub = bd->add_subcommand("gap", "Approximation gap arithmetic for factor c");
        static std::string c;
        static std::optional<double> at;
        sub->add_option("--c", c, "Factor, integer or p/q, at least 1")->required();
        sub->add_option("--n", at, "Also evaluate both sides at this N");
        sub->add_option("-o,--out", path, "Report file");
        sub->callback([] { emit_json(io::to_json(gap_analysis(parse_rational(c), at)), path); });
    }
    {
        auto* sub = bd->add_subcommand("cor45", "Reducibility and robustness parameters of the transformed graph");
        static double nn = 0, k = 2, eps = 0.5;
        sub->add_option("--n", nn, "N")->required();
        sub->add_option("--k", k, "k")->required();
        sub->add_option("--eps", eps, "eps")->required();
        sub->add_option("-o,--out", path, "Report file");
        sub->callback([] { emit_json(io::to_json(cor45_parameters(nn, k, eps)), path); });
    }
}

// ---------------------------------------------------------------- demo

std::string one_based(const SvenssonLabel& l) {
    std::string s = "(";
    for (auto c : l.x) s += std::to_string(c + 1);
    s += "),(";
    for (auto c : l.free_coords) s += std::to_string(c + 1);
    return s + ")";
}

Json example1_report(std::uint32_t layers) {
    SvenssonParams p;
    p.layers = layers;
    const auto u = example1_instance();
    const auto g = build_svensson(u, p);
    const auto s = simplify(g);
    const NodeId named = g.find_test(0, {0, 0}, {1}, 0, {0, 0});
    NodeId local = 0;
    while (s.origin[local] != named) ++local;
    Json next = Json::array(), next_one_based = Json::array();
    for (NodeId c : s.dag.children(local)) {
        if (s.layer[c] != s.layer[local] + 1) continue;
        next.push_back(g.labels[s.origin[c]].to_string());
        next_one_based.push_back(one_based(g.labels[s.origin[c]]));
    }
    const auto sym = check_layer_symmetry(g);
    return {{"instance", io::ug_to_json(u)},
            {"test_layers", g.layers},
            {"bits_per_layer", g.bits_per_layer},
            {"tests_per_layer", g.tests_per_layer},
            {"layered", {{"nodes", g.graph.node_count()}, {"edges", g.graph.dag.edge_count()}}},
            {"simplified", {{"nodes", s.dag.node_count()}, {"edges", s.dag.edge_count()}}},
            {"named_test", g.labels[named].to_string()},
            {"named_test_one_based", one_based(g.labels[named])},
            {"next_layer_out_edges", next},
            {"next_layer_out_edges_one_based", next_one_based},
            {"next_layer_out_degree", next.size()},
            {"symmetry",
             {{"holds", sym.holds()},
              {"equal_layer_sizes", sym.equal_layer_sizes},
              {"bit_to_test", sym.bit_to_test},
              {"test_to_bit", sym.test_to_bit},
              {"pairs_checked", sym.pairs_checked}}}};
}

void register_demo(CLI::App& app) {
    auto* dm = app.add_subcommand("demo", "Worked examples");
    dm->require_subcommand(1);
    auto* sub = dm->add_subcommand("example1", "Two-vertex Unique Games instance and its layered graph");
    static std::uint32_t layers = 2;
    static std::string path;
    sub->add_option("--layers", layers, "Test layers (at least 2 to show next-layer edges)")->check(CLI::Range(2U, 8U));
    sub->add_option("-o,--out", path, "Report file");
    sub->callback([] { emit_json(example1_report(layers), path); });
}

int fail(const std::string& kind, const std::string& message, int code) {
    std::cerr << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pebblekit: parallel pebbling graphs, attacks and bounds", "pebblectl"};
    app.require_subcommand(1);
    register_generate(app);
    register_analyze(app);
    register_pebble(app);
    register_verify(app);
    register_bounds(app);
    register_demo(app);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what(), 2);
    } catch (const VerificationFailed&) {
        return 1;
    } catch (const Json::exception& e) {
        return fail("input", std::string("invalid JSON: ") + e.what(), 2);
    } catch (const std::exception& e) {
        return fail("input", e.what(), 2);
    }
    return 0;
}
