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

#include "pebble/transforms.hpp"

namespace pebble {

std::size_t idr_chain_length(const Dag& g, std::uint32_t extra) { return g.max_indegree() + extra; }

Dag idr(const Dag& g, std::uint32_t extra) {
    const std::size_t c = idr_chain_length(g, extra);
    if (c == 0) throw Error("idr: chain length is zero (edgeless graph needs extra >= 1)");
    std::vector<Edge> edges;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto base = static_cast<NodeId>(c * v);
        for (std::size_t i = 0; i + 1 < c; ++i) {
            edges.emplace_back(static_cast<NodeId>(base + i), static_cast<NodeId>(base + i + 1));
        }
        const auto ps = g.parents(v);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            edges.emplace_back(static_cast<NodeId>(c * ps[i] + c - 1), static_cast<NodeId>(base + i));
        }
    }
    return Dag(c * g.node_count(), std::move(edges));
}

NodeSet idr_lift(const Dag& g, std::uint32_t extra, const NodeSet& s) {
    const std::size_t c = idr_chain_length(g, extra);
    NodeSet out(c * g.node_count());
    for (NodeId v : s.members()) out.insert(static_cast<NodeId>(c * v + c - 1));
    return out;
}

}  // namespace pebble
