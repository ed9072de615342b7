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

#include "pebble/superconcentrator.hpp"

#include <algorithm>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>

namespace pebble {

namespace {

struct Builder {
    std::size_t count = 0;
    std::vector<Edge> edges;

    std::vector<NodeId> fresh(std::size_t n) {
        std::vector<NodeId> out(n);
        std::iota(out.begin(), out.end(), static_cast<NodeId>(count));
        count += n;
        return out;
    }

    void biclique(const std::vector<NodeId>& from, const std::vector<NodeId>& to) {
        for (NodeId a : from) {
            for (NodeId b : to) edges.emplace_back(a, b);
        }
    }

    // Any k of `in` reach any k of `out`: for k <= m route through the half-size
    // core; for k > m at least k - m pairs share an index and use the direct edge.
    void core(const std::vector<NodeId>& in, const std::vector<NodeId>& out) {
        const std::size_t n = in.size();
        if (n <= 4) {
            biclique(in, out);
            return;
        }
        for (std::size_t j = 0; j < n; ++j) edges.emplace_back(in[j], out[j]);
        const std::size_t m = (n + 1) / 2;
        auto a = fresh(m);
        auto b = fresh(m);
        biclique(in, a);
        core(a, b);
        biclique(b, out);
    }
};

}  // namespace

Superconcentrator build_superconcentrator(std::size_t n) {
    if (n == 0) throw Error("superconcentrator needs at least one input");
    Builder b;
    auto in = b.fresh(n);
    std::vector<NodeId> out;
    if (n <= 2) {
        out = b.fresh(n);
        b.biclique(in, out);
    } else {
        auto core_out = b.fresh(n);
        b.core(in, core_out);
        out = b.fresh(n);
        for (std::size_t j = 0; j < n; ++j) b.edges.emplace_back(core_out[j], out[j]);
    }

    // Relabel: inputs, interior in creation order, outputs.
    std::vector<NodeId> relabel(b.count);
    std::vector<bool> is_out(b.count, false);
    for (NodeId o : out) is_out[o] = true;
    NodeId next = static_cast<NodeId>(n);
    for (NodeId v = static_cast<NodeId>(n); v < b.count; ++v) {
        if (!is_out[v]) relabel[v] = next++;
    }
    for (std::size_t j = 0; j < n; ++j) relabel[out[j]] = next++;
    for (std::size_t j = 0; j < n; ++j) relabel[in[j]] = static_cast<NodeId>(j);
    for (auto& [u, v] : b.edges) {
        u = relabel[u];
        v = relabel[v];
    }

    Superconcentrator sc;
    sc.dag = Dag(b.count, std::move(b.edges));
    for (std::size_t j = 0; j < n; ++j) {
        sc.inputs.push_back(static_cast<NodeId>(j));
        sc.outputs.push_back(static_cast<NodeId>(b.count - n + j));
    }
    return sc;
}

namespace {

using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, long,
                    boost::property<boost::edge_residual_capacity_t, long,
                                    boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
using FlowEdge = boost::graph_traits<FlowGraph>::edge_descriptor;

// Node v splits into 2v -> 2v+1 with capacity 1; source and sink are appended.
class VertexDisjointFlow {
  public:
    VertexDisjointFlow(const Dag& g, const std::vector<NodeId>& inputs, const std::vector<NodeId>& outputs)
        : graph_(2 * g.node_count() + 2),
          source_(2 * g.node_count()),
          sink_(2 * g.node_count() + 1) {
        for (NodeId v = 0; v < g.node_count(); ++v) add(2 * v, 2 * v + 1, 1);
        for (auto [u, v] : g.edges()) add(2 * u + 1, 2 * v, 1);
        for (NodeId i : inputs) source_edges_.push_back(add(source_, 2 * i, 0));
        for (NodeId o : outputs) sink_edges_.push_back(add(2 * o + 1, sink_, 0));
    }

    std::size_t max_flow(const std::vector<std::size_t>& from, const std::vector<std::size_t>& to) {
        auto cap = boost::get(boost::edge_capacity, graph_);
        for (auto e : source_edges_) cap[e] = 0;
        for (auto e : sink_edges_) cap[e] = 0;
        for (std::size_t i : from) cap[source_edges_[i]] = 1;
        for (std::size_t j : to) cap[sink_edges_[j]] = 1;
        return static_cast<std::size_t>(boost::edmonds_karp_max_flow(graph_, source_, sink_));
    }

  private:
    FlowEdge add(std::size_t a, std::size_t b, long c) {
        auto cap = boost::get(boost::edge_capacity, graph_);
        auto rev = boost::get(boost::edge_reverse, graph_);
        FlowEdge e = boost::add_edge(a, b, graph_).first;
        FlowEdge r = boost::add_edge(b, a, graph_).first;
        cap[e] = c;
        cap[r] = 0;
        rev[e] = r;
        rev[r] = e;
        return e;
    }

    FlowGraph graph_;
    std::size_t source_, sink_;
    std::vector<FlowEdge> source_edges_, sink_edges_;
};

template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    std::vector<std::size_t> c(k);
    std::iota(c.begin(), c.end(), 0);
    while (true) {
        if (!fn(c)) return false;
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1) --i;
        if (i == 0) return true;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

std::vector<std::size_t> random_subset(Rng& rng, std::size_t n, std::size_t k) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t i = 0; i < k; ++i) std::swap(all[i], all[i + rng.uniform_below(n - i)]);
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace

SuperconcentratorReport verify_superconcentrator(const Dag& g, const std::vector<NodeId>& inputs,
                                                 const std::vector<NodeId>& outputs, VerifyMode mode,
                                                 std::uint64_t samples, Rng* rng) {
    if (inputs.size() != outputs.size()) throw Error("input and output counts differ");
    NodeSet in_set(g.node_count(), std::span<const NodeId>(inputs));
    NodeSet out_set(g.node_count(), std::span<const NodeId>(outputs));
    if (in_set.size() != inputs.size() || out_set.size() != outputs.size() || !(in_set & out_set).empty()) {
        throw Error("inputs and outputs must be distinct and disjoint");
    }
    if (mode == VerifyMode::Sampled && rng == nullptr) throw Error("sampled verification needs a generator");

    SuperconcentratorReport report;
    VertexDisjointFlow flow(g, inputs, outputs);
    const std::size_t n = inputs.size();
    auto check = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        ++report.checks;
        const std::size_t f = flow.max_flow(a, b);
        if (f == a.size()) return true;
        report.passed = false;
        report.flow = f;
        for (std::size_t i : a) report.failing_inputs.push_back(inputs[i]);
        for (std::size_t j : b) report.failing_outputs.push_back(outputs[j]);
        return false;
    };

    if (mode == VerifyMode::Exhaustive) {
        for (std::size_t k = 1; k <= n; ++k) {
            const bool ok = for_each_combination(n, k, [&](const std::vector<std::size_t>& a) {
                return for_each_combination(n, k, [&](const std::vector<std::size_t>& b) { return check(a, b); });
            });
            if (!ok) break;
        }
    } else {
        for (std::uint64_t s = 0; s < samples && report.passed; ++s) {
            const std::size_t k = 1 + rng->uniform_below(n);
            auto a = random_subset(*rng, n, k);
            auto b = random_subset(*rng, n, k);
            check(a, b);
        }
    }
    return report;
}

Overlay superconc_overlay(const Dag& base, const Superconcentrator& sc) {
    const std::size_t n = base.node_count();
    if (sc.width() != n) {
        throw Error("superconcentrator width " + std::to_string(sc.width()) + " differs from base size " +
                    std::to_string(n));
    }
    std::vector<Edge> edges = sc.dag.edges();
    for (auto [u, v] : base.edges()) edges.emplace_back(sc.inputs[u], sc.inputs[v]);
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(sc.outputs[i], sc.outputs[i + 1]);

    Overlay o;
    o.dag = Dag(sc.dag.node_count(), std::move(edges));
    o.base = base;
    o.inputs = sc.inputs;
    o.outputs = sc.outputs;
    NodeSet io(sc.dag.node_count(), std::span<const NodeId>(sc.inputs));
    for (NodeId v : sc.outputs) io.insert(v);
    for (NodeId v = 0; v < sc.dag.node_count(); ++v) {
        if (!io.contains(v)) o.interior.push_back(v);
    }
    o.sc_depth = sc.depth();
    o.sc_nodes = sc.dag.node_count();
    o.sc_max_indegree = sc.dag.max_indegree();
    return o;
}

NodeSet overlay_reducing_set(const Overlay& o, const NodeSet& base_set, std::size_t d) {
    if (d == 0) throw Error("overlay_reducing_set needs d >= 1");
    NodeSet out(o.dag.node_count());
    for (NodeId v : base_set.members()) out.insert(o.inputs.at(v));
    for (std::size_t i = d; i <= o.outputs.size(); i += d) out.insert(o.outputs[i - 1]);
    return out;
}

}  // namespace pebble
