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

// Brute-force helpers shared by the test suites. They recompute quantities by
// enumeration so the library's DP and search results have an independent check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <random>
#include <vector>

#include "pebble/graph.hpp"

namespace test_support {

using pebble::Dag;
using pebble::Edge;
using pebble::NodeId;
using pebble::NodeSet;

/// Random DAG: edge (u, v), u < v, present with probability p, then ids shuffled.
inline Dag random_dag(std::mt19937_64& rng, std::size_t n, double p, bool shuffle = true) {
    std::vector<NodeId> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<NodeId>(i);
    if (shuffle) std::shuffle(perm.begin(), perm.end(), rng);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.emplace_back(perm[u], perm[v]);
        }
    }
    return Dag(n, std::move(edges));
}

inline NodeSet random_subset(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    NodeSet s(n);
    for (NodeId v = 0; v < n; ++v) {
        if (coin(rng)) s.insert(v);
    }
    return s;
}

inline NodeSet from_mask(std::size_t n, std::uint64_t mask) {
    NodeSet s(n);
    for (NodeId v = 0; v < n; ++v) {
        if (mask >> v & 1U) s.insert(v);
    }
    return s;
}

/// Longest path by DFS over every simple path (exponential; tiny graphs only).
inline std::size_t brute_force_depth(const Dag& g, const NodeSet& removed) {
    std::size_t best = 0;
    std::function<void(NodeId, std::size_t)> walk = [&](NodeId v, std::size_t len) {
        best = std::max(best, len);
        for (NodeId c : g.children(v)) {
            if (!removed.contains(c)) walk(c, len + 1);
        }
    };
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (!removed.contains(v)) walk(v, 1);
    }
    return best;
}

/// Smallest |S| over S ⊆ allowed with depth(g - S) < d, or SIZE_MAX when impossible.
inline std::size_t brute_force_min_reducing(const Dag& g, std::size_t d, const NodeSet* allowed = nullptr) {
    const std::size_t n = g.node_count();
    std::size_t best = SIZE_MAX;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        NodeSet s = from_mask(n, mask);
        if (allowed && !s.is_subset_of(*allowed)) continue;
        if (s.size() < best && brute_force_depth(g, s) < d) best = s.size();
    }
    return best;
}

}  // namespace test_support

namespace test_support {

/// Plain Dijkstra over (configuration, sinks seen) with every legal successor and
/// no pruning or canonicalization. Independent reference for exact_pcc (n <= 8).
inline std::uint64_t brute_force_pcc(const Dag& g) {
    const std::size_t n = g.node_count();
    if (n == 0) return 0;
    std::vector<std::uint32_t> pm(n, 0);
    for (auto [u, v] : g.edges()) pm[v] |= 1U << u;
    std::uint32_t sinks = 0;
    for (NodeId s : g.sinks()) sinks |= 1U << s;
    const std::uint32_t states = 1U << n;
    std::vector<std::uint64_t> dist(std::size_t{states} * states, UINT64_MAX);
    using Item = std::pair<std::uint64_t, std::uint64_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[0] = 0;
    pq.emplace(0, 0);
    while (!pq.empty()) {
        auto [d, key] = pq.top();
        pq.pop();
        if (d != dist[key]) continue;
        const auto p = static_cast<std::uint32_t>(key / states);
        const auto seen = static_cast<std::uint32_t>(key % states);
        if ((seen & sinks) == sinks) return d;
        std::uint32_t allowed = p;
        for (std::size_t v = 0; v < n; ++v) {
            if ((pm[v] & ~p) == 0) allowed |= 1U << v;
        }
        for (std::uint32_t q = allowed; q != 0; q = (q - 1) & allowed) {
            const std::uint64_t next = std::uint64_t{q} * states + ((seen | q) & sinks);
            const std::uint64_t nd = d + static_cast<std::uint64_t>(__builtin_popcount(q));
            if (nd < dist[next]) {
                dist[next] = nd;
                pq.emplace(nd, next);
            }
        }
    }
    return UINT64_MAX;
}

}  // namespace test_support
