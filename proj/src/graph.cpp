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

#include "pebble/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace pebble {

// ---------------------------------------------------------------- NodeSet

NodeSet::NodeSet(std::size_t universe, std::initializer_list<NodeId> members) : bits_(universe, false) {
    for (NodeId v : members) insert(v);
}

NodeSet::NodeSet(std::size_t universe, std::span<const NodeId> members) : bits_(universe, false) {
    for (NodeId v : members) insert(v);
}

NodeSet NodeSet::all(std::size_t universe) {
    NodeSet s(universe);
    s.bits_.assign(universe, true);
    s.count_ = universe;
    return s;
}

void NodeSet::insert(NodeId v) {
    if (v >= bits_.size()) {
        throw Error("node " + std::to_string(v) + " outside universe of size " + std::to_string(bits_.size()));
    }
    if (!bits_[v]) {
        bits_[v] = true;
        ++count_;
    }
}

void NodeSet::erase(NodeId v) {
    if (v < bits_.size() && bits_[v]) {
        bits_[v] = false;
        --count_;
    }
}

std::vector<NodeId> NodeSet::members() const {
    std::vector<NodeId> out;
    out.reserve(count_);
    for (std::size_t v = 0; v < bits_.size(); ++v) {
        if (bits_[v]) out.push_back(static_cast<NodeId>(v));
    }
    return out;
}

namespace {

template <typename Op>
NodeSet combine(const NodeSet& a, const NodeSet& b, Op op) {
    const std::size_t n = std::max(a.universe(), b.universe());
    NodeSet out(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (op(a.contains(static_cast<NodeId>(v)), b.contains(static_cast<NodeId>(v)))) {
            out.insert(static_cast<NodeId>(v));
        }
    }
    return out;
}

}  // namespace

NodeSet NodeSet::operator|(const NodeSet& other) const {
    return combine(*this, other, [](bool x, bool y) { return x || y; });
}
NodeSet NodeSet::operator&(const NodeSet& other) const {
    return combine(*this, other, [](bool x, bool y) { return x && y; });
}
NodeSet NodeSet::operator-(const NodeSet& other) const {
    return combine(*this, other, [](bool x, bool y) { return x && !y; });
}

bool NodeSet::is_subset_of(const NodeSet& other) const {
    for (std::size_t v = 0; v < bits_.size(); ++v) {
        if (bits_[v] && !other.contains(static_cast<NodeId>(v))) return false;
    }
    return true;
}

// ---------------------------------------------------------------- Dag

std::vector<NodeId> find_cycle(std::size_t node_count, std::span<const Edge> edges) {
    std::vector<std::vector<NodeId>> adj(node_count);
    for (auto [u, v] : edges) adj.at(u).push_back(v);
    for (auto& a : adj) std::sort(a.begin(), a.end());

    // 0 = unvisited, 1 = on stack, 2 = done
    std::vector<std::uint8_t> state(node_count, 0);
    std::vector<NodeId> stack;
    std::vector<std::size_t> next_child(node_count, 0);
    for (NodeId root = 0; root < node_count; ++root) {
        if (state[root] != 0) continue;
        stack.push_back(root);
        state[root] = 1;
        while (!stack.empty()) {
            NodeId u = stack.back();
            if (next_child[u] < adj[u].size()) {
                NodeId v = adj[u][next_child[u]++];
                if (state[v] == 1) {
                    auto it = std::find(stack.begin(), stack.end(), v);
                    std::vector<NodeId> cycle(it, stack.end());
                    cycle.push_back(v);
                    return cycle;
                }
                if (state[v] == 0) {
                    state[v] = 1;
                    stack.push_back(v);
                }
            } else {
                state[u] = 2;
                stack.pop_back();
            }
        }
    }
    return {};
}

Dag::Dag(std::size_t node_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), parents_(node_count), children_(node_count) {
    for (auto [u, v] : edges_) {
        if (u >= node_count || v >= node_count) {
            std::ostringstream msg;
            msg << "edge (" << u << "," << v << ") references a node outside [0," << node_count << ")";
            throw Error(msg.str());
        }
        if (u == v) throw Error("self-loop on node " + std::to_string(u));
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        std::ostringstream msg;
        msg << "duplicate edge (" << dup->first << "," << dup->second << ")";
        throw Error(msg.str());
    }
    for (auto [u, v] : edges_) {
        children_[u].push_back(v);
        parents_[v].push_back(u);
    }
    for (auto& p : parents_) std::sort(p.begin(), p.end());

    std::vector<std::size_t> missing(node_count);
    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
    for (NodeId v = 0; v < node_count; ++v) {
        missing[v] = parents_[v].size();
        if (missing[v] == 0) ready.push(v);
    }
    topo_.reserve(node_count);
    while (!ready.empty()) {
        NodeId u = ready.top();
        ready.pop();
        topo_.push_back(u);
        for (NodeId v : children_[u]) {
            if (--missing[v] == 0) ready.push(v);
        }
    }
    if (topo_.size() != node_count) {
        auto cycle = find_cycle(node_count, edges_);
        std::ostringstream msg;
        msg << "graph contains a cycle:";
        for (NodeId v : cycle) msg << ' ' << v;
        throw Error(msg.str());
    }
}

std::size_t Dag::max_indegree() const {
    std::size_t m = 0;
    for (const auto& p : parents_) m = std::max(m, p.size());
    return m;
}

std::size_t Dag::max_outdegree() const {
    std::size_t m = 0;
    for (const auto& c : children_) m = std::max(m, c.size());
    return m;
}

bool Dag::has_edge(NodeId u, NodeId v) const {
    if (u >= children_.size()) return false;
    const auto& c = children_[u];
    return std::binary_search(c.begin(), c.end(), v);
}

std::vector<NodeId> Dag::sources() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < node_count(); ++v) {
        if (parents_[v].empty()) out.push_back(v);
    }
    return out;
}

std::vector<NodeId> Dag::sinks() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < node_count(); ++v) {
        if (children_[v].empty()) out.push_back(v);
    }
    return out;
}

// ---------------------------------------------------------------- depth queries

std::vector<std::size_t> depth_counted_ending_at(const Dag& g, const NodeSet& counted, const NodeSet& removed) {
    std::vector<std::size_t> best(g.node_count(), 0);
    for (NodeId v : g.topological_order()) {
        if (removed.contains(v)) continue;
        std::size_t in = 0;
        for (NodeId p : g.parents(v)) {
            if (!removed.contains(p)) in = std::max(in, best[p]);
        }
        best[v] = in + (counted.contains(v) ? 1 : 0);
    }
    return best;
}

std::size_t depth_counted(const Dag& g, const NodeSet& counted, const NodeSet& removed) {
    auto best = depth_counted_ending_at(g, counted, removed);
    std::size_t out = 0;
    for (std::size_t v = 0; v < best.size(); ++v) {
        if (!removed.contains(static_cast<NodeId>(v))) out = std::max(out, best[v]);
    }
    return out;
}

std::size_t depth(const Dag& g, const NodeSet& removed) {
    return depth_counted(g, NodeSet::all(g.node_count()), removed);
}

std::size_t depth(const Dag& g) { return depth(g, NodeSet(g.node_count())); }

std::vector<NodeId> longest_path(const Dag& g, const NodeSet& removed) {
    const std::size_t n = g.node_count();
    std::vector<std::size_t> len(n, 0);
    std::vector<NodeId> pred(n, static_cast<NodeId>(n));
    NodeId end = static_cast<NodeId>(n);
    std::size_t end_len = 0;
    for (NodeId v : g.topological_order()) {
        if (removed.contains(v)) continue;
        len[v] = 1;
        for (NodeId p : g.parents(v)) {
            if (!removed.contains(p) && len[p] + 1 > len[v]) {
                len[v] = len[p] + 1;
                pred[v] = p;
            }
        }
        if (len[v] > end_len) {
            end_len = len[v];
            end = v;
        }
    }
    std::vector<NodeId> path;
    for (NodeId v = end; v < n; v = pred[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

Dag remove_nodes(const Dag& g, const NodeSet& removed) {
    const std::size_t n = g.node_count();
    std::vector<NodeId> relabel(n, 0);
    NodeId next = 0;
    for (NodeId v = 0; v < n; ++v) {
        if (!removed.contains(v)) relabel[v] = next++;
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        if (!removed.contains(u) && !removed.contains(v)) edges.emplace_back(relabel[u], relabel[v]);
    }
    return Dag(next, std::move(edges));
}

Dag disjoint_union(const Dag& g, const Dag& h) {
    const auto shift = static_cast<NodeId>(g.node_count());
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
    return Dag(g.node_count() + h.node_count(), std::move(edges));
}

// ---------------------------------------------------------------- LayeredDag

LayeredDag::LayeredDag(Dag g, std::vector<std::uint32_t> layers, std::vector<NodeRole> roles)
    : dag(std::move(g)), layer(std::move(layers)), role(std::move(roles)) {
    if (layer.size() != dag.node_count() || role.size() != dag.node_count()) {
        throw Error("layer/role annotations must cover every node");
    }
}

NodeSet LayeredDag::bits() const {
    NodeSet s(node_count());
    for (NodeId v = 0; v < node_count(); ++v) {
        if (role[v] == NodeRole::Bit) s.insert(v);
    }
    return s;
}

NodeSet LayeredDag::tests() const {
    NodeSet s(node_count());
    for (NodeId v = 0; v < node_count(); ++v) {
        if (role[v] == NodeRole::Test) s.insert(v);
    }
    return s;
}

// ---------------------------------------------------------------- generators

namespace graphs {

Dag edgeless(std::size_t n) { return Dag(n, {}); }

Dag path(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Dag(n, std::move(edges));
}

Dag complete(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Dag(n, std::move(edges));
}

Dag layered_matching(std::size_t n, std::size_t layers) {
    if (layers == 0 || n % layers != 0) throw Error("layered_matching needs L > 0 dividing N");
    const std::size_t width = n / layers;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < layers; ++i) {
        for (std::size_t j = i + 1; j < layers; ++j) {
            for (std::size_t p = 0; p < width; ++p) {
                edges.emplace_back(static_cast<NodeId>(i * width + p), static_cast<NodeId>(j * width + p));
            }
        }
    }
    return Dag(n, std::move(edges));
}

std::vector<std::uint32_t> layered_matching_layers(std::size_t n, std::size_t layers) {
    if (layers == 0 || n % layers != 0) throw Error("layered_matching needs L > 0 dividing N");
    std::vector<std::uint32_t> out(n);
    for (std::size_t v = 0; v < n; ++v) out[v] = static_cast<std::uint32_t>(v / (n / layers));
    return out;
}

}  // namespace graphs

}  // namespace pebble
