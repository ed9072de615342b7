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
#include "pebble/pebbling.hpp"
#include "support.hpp"

using namespace pebble;

namespace {

Dag diamond() { return Dag(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

// Random legal complete transcript: each round keeps a random subset of the
// previous configuration and adds a random subset of the available nodes.
Transcript random_transcript(std::mt19937_64& rng, const Dag& g) {
    const std::size_t n = g.node_count();
    Transcript out;
    NodeSet cur(n), seen(n);
    std::bernoulli_distribution keep(0.6), add(0.5);
    const auto sinks = g.sinks();
    auto done = [&] {
        return std::all_of(sinks.begin(), sinks.end(), [&](NodeId s) { return seen.contains(s); });
    };
    while (!done()) {
        NodeSet next(n);
        for (NodeId v = 0; v < n; ++v) {
            const auto ps = g.parents(v);
            const bool ready = std::all_of(ps.begin(), ps.end(), [&](NodeId u) { return cur.contains(u); });
            if (cur.contains(v) ? keep(rng) : (ready && add(rng))) next.insert(v);
        }
        if (next.empty()) continue;
        for (NodeId v : next.members()) seen.insert(v);
        out.push_back(next);
        cur = next;
    }
    return out;
}

}  // namespace

TEST_CASE("validate reports legality per mode") {
    Dag p2 = graphs::path(2);
    Transcript ok{NodeSet(2, {0}), NodeSet(2, {1})};
    CHECK(validate(p2, ok).ok());
    CHECK(validate(p2, ok, PebblingMode::Sequential).ok());

    auto bad = validate(p2, {NodeSet(2, {1})});
    CHECK_FALSE(bad.legal);
    CHECK(bad.round == 1);
    CHECK(bad.node == 1);

    Transcript t{NodeSet(4, {0}), NodeSet(4, {0, 1, 2}), NodeSet(4, {1, 2}), NodeSet(4, {3})};
    CHECK(validate(diamond(), t).ok());
    auto seq = validate(diamond(), t, PebblingMode::Sequential);
    CHECK_FALSE(seq.legal);
    CHECK(seq.round == 2);

    auto partial = validate(p2, {NodeSet(2, {0})});
    CHECK(partial.legal);
    CHECK_FALSE(partial.complete);
    CHECK(partial.unpebbled_sinks == std::vector<NodeId>{1});
}

TEST_CASE("cost accounting") {
    auto c = cost({NodeSet(3, {0}), NodeSet(3, {1})});
    CHECK(c.cumulative == 2);
    CHECK(c.space == 1);
    CHECK(c.time == 2);
    auto c2 = cost({NodeSet(3, {0}), NodeSet(3, {0, 1}), NodeSet(3, {0, 1, 2})});
    CHECK(c2.cumulative == 6);
    CHECK(c2.space == 3);
    CHECK(c2.time == 3);
    CHECK(c2.space_time == 9);
}

TEST_CASE("pebble_everything") {
    CHECK(cost(pebble_everything(graphs::path(3))).cumulative == 6);
    auto e = pebble_everything(graphs::edgeless(4));
    CHECK(e.size() == 1);
    CHECK(cost(e).cumulative == 4);
    auto d = pebble_everything(diamond());
    REQUIRE(d.size() == 3);
    CHECK(d[1].members() == std::vector<NodeId>{0, 1, 2});
    CHECK(cost(d).cumulative == 8);
}

TEST_CASE("exact_pcc small known values") {
    CHECK(exact_pcc(graphs::path(1)).value() == 1);
    for (std::size_t n = 1; n <= 10; ++n) {
        auto r = exact_pcc(graphs::path(n));
        CHECK(r.optimal());
        CHECK(r.value() == n);
    }
    CHECK(exact_pcc(disjoint_union(graphs::path(3), graphs::path(3))).value() == 6);
    CHECK(exact_pcc(graphs::edgeless(0)).value() == 0);
}

TEST_CASE("exact_pcc witness is legal, complete and optimal") {
    auto r = exact_pcc(diamond());
    CHECK(validate(diamond(), r.witness).ok());
    CHECK(cost(r.witness).cumulative == r.value());
    // {0},{1,2},{3}: every node must appear, three rounds minimum.
    CHECK(r.value() == 4);
    REQUIRE(r.witness.size() == 3);
    CHECK(r.witness[0].members() == std::vector<NodeId>{0});
}

TEST_CASE("exact_pcc agrees with an unpruned reference search") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 120; ++trial) {
        Dag g = test_support::random_dag(rng, 1 + trial % 7, 0.45);
        auto r = exact_pcc(g);
        CHECK(r.value() == test_support::brute_force_pcc(g));
        CHECK(validate(g, r.witness).ok());
        CHECK(cost(r.witness).cumulative == r.value());
    }
}

TEST_CASE("exact_pcc properties on random graphs") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 10;
        Dag g = test_support::random_dag(rng, n, 0.3);
        const auto opt = exact_pcc(g).value();
        CHECK(opt <= cost(pebble_everything(g)).cumulative);
        CHECK(opt <= n * n);
        for (int k = 0; k < 5; ++k) {
            auto t = random_transcript(rng, g);
            REQUIRE(validate(g, t).ok());
            CHECK(cost(t).cumulative >= opt);
        }
    }
}

TEST_CASE("exact_pcc is additive over disjoint unions") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t a = 1 + trial % 5, b = 1 + (trial / 5) % 5;
        Dag g = test_support::random_dag(rng, a, 0.5), h = test_support::random_dag(rng, b, 0.5);
        CHECK(exact_pcc(disjoint_union(g, h)).value() == exact_pcc(g).value() + exact_pcc(h).value());
    }
}

TEST_CASE("exact_pcc limits") {
    CHECK_THROWS_AS(exact_pcc(graphs::path(13)), Error);
    OracleLimits wide;
    wide.max_nodes = 16;
    CHECK(exact_pcc(graphs::path(16), wide).value() == 16);
    OracleLimits tight;
    tight.max_states = 3;
    auto r = exact_pcc(graphs::complete(6), tight);
    CHECK(r.status == OracleStatus::BudgetExceeded);
    CHECK(r.lower_bound <= r.upper_bound);
    CHECK(validate(graphs::complete(6), r.witness).ok());
}

TEST_CASE("layered matching graphs: oracle values") {
    // Independent reference search; these are the true minima.
    CHECK(test_support::brute_force_pcc(graphs::layered_matching(6, 3)) == 8);
    CHECK(exact_pcc(graphs::layered_matching(6, 3)).value() == 8);
    CHECK(exact_pcc(graphs::layered_matching(8, 2)).value() == 8);
}
