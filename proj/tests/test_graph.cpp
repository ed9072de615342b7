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

#include "doctest.h"

#include <random>

#include "pebble/graph.hpp"
#include "support.hpp"

using namespace pebble;

TEST_CASE("depth of a chain with and without a cut") {
    Dag p = graphs::path(3);
    CHECK(depth(p) == 3);
    CHECK(depth(p, NodeSet(3, {1})) == 1);
    CHECK(depth(p, NodeSet::all(3)) == 0);
    CHECK(depth(graphs::edgeless(0)) == 0);
}

TEST_CASE("depth_counted on a bit-test-bit chain") {
    Dag g = graphs::path(3);
    NodeSet bits(3, {0, 2});
    CHECK(depth_counted(g, bits, NodeSet(3)) == 2);
    CHECK(depth_counted(g, bits, NodeSet(3, {1})) == 1);
}

TEST_CASE("topological order breaks ties by smallest id") {
    CHECK(graphs::path(3).topological_order() == std::vector<NodeId>{0, 1, 2});
    Dag diamond(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(diamond.topological_order() == std::vector<NodeId>{0, 1, 2, 3});
    CHECK(graphs::edgeless(3).topological_order() == std::vector<NodeId>{0, 1, 2});
    Dag reversed(3, {{2, 1}, {1, 0}});
    CHECK(reversed.topological_order() == std::vector<NodeId>{2, 1, 0});
}

TEST_CASE("remove_nodes relabels compactly") {
    Dag tri(3, {{0, 1}, {0, 2}, {1, 2}});
    Dag h = remove_nodes(tri, NodeSet(3, {1}));
    CHECK(h.node_count() == 2);
    CHECK(h.edges() == std::vector<Edge>{{0, 1}});
    CHECK(remove_nodes(tri, NodeSet(3)).edges() == tri.edges());
    CHECK(remove_nodes(tri, NodeSet::all(3)).node_count() == 0);
}

TEST_CASE("construction rejects malformed edge sets") {
    CHECK_THROWS_AS(Dag(2, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Dag(2, {{0, 0}}), Error);
    CHECK_THROWS_AS(Dag(2, {{0, 1}, {0, 1}}), Error);
    CHECK_THROWS_AS(Dag(2, {{0, 2}}), Error);
    std::vector<Edge> cyc{{0, 1}, {1, 0}};
    CHECK(find_cycle(2, cyc) == std::vector<NodeId>{0, 1, 0});
    try {
        Dag(2, cyc);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("0 1 0") != std::string::npos);
    }
}

TEST_CASE("degrees, sources and sinks") {
    Dag diamond(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(diamond.indegree(3) == 2);
    CHECK(diamond.outdegree(0) == 2);
    CHECK(diamond.max_indegree() == 2);
    CHECK(diamond.sources() == std::vector<NodeId>{0});
    CHECK(diamond.sinks() == std::vector<NodeId>{3});
    CHECK(diamond.has_edge(0, 1));
    CHECK_FALSE(diamond.has_edge(1, 0));
}

TEST_CASE("longest_path is a path of the reported depth") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Dag g = test_support::random_dag(rng, 1 + trial % 12, 0.35);
        NodeSet s = test_support::random_subset(rng, g.node_count(), 0.2);
        auto p = longest_path(g, s);
        REQUIRE(p.size() == depth(g, s));
        for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(g.has_edge(p[i], p[i + 1]));
        for (NodeId v : p) CHECK_FALSE(s.contains(v));
    }
}

TEST_CASE("depth properties on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 10;
        Dag g = test_support::random_dag(rng, n, 0.4);
        NodeSet s = test_support::random_subset(rng, n, 0.3);
        NodeSet bigger = s | test_support::random_subset(rng, n, 0.3);
        CHECK(depth(g, bigger) <= depth(g, s));
        CHECK(depth_counted(g, NodeSet::all(n), s) == depth(g, s));
        CHECK(depth(remove_nodes(g, s)) == depth(g, s));
        CHECK(test_support::brute_force_depth(g, s) == depth(g, s));
    }
}

TEST_CASE("disjoint union and layered matching") {
    Dag u = disjoint_union(graphs::path(3), graphs::path(2));
    CHECK(u.node_count() == 5);
    CHECK(u.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {3, 4}});
    Dag m = graphs::layered_matching(6, 3);
    CHECK(m.edge_count() == 6);
    CHECK(m.has_edge(0, 4));
    CHECK(m.has_edge(1, 3));
    CHECK(depth(m) == 3);
    CHECK(graphs::layered_matching_layers(6, 3) == std::vector<std::uint32_t>{0, 0, 1, 1, 2, 2});
    CHECK_THROWS_AS(graphs::layered_matching(7, 3), Error);
}

TEST_CASE("NodeSet algebra") {
    NodeSet a(5, {0, 1, 2}), b(5, {2, 3});
    CHECK((a | b).members() == std::vector<NodeId>{0, 1, 2, 3});
    CHECK((a & b).members() == std::vector<NodeId>{2});
    CHECK((a - b).members() == std::vector<NodeId>{0, 1});
    CHECK((a & b).is_subset_of(a));
    CHECK_THROWS_AS(a.insert(5), Error);
}
