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

#include <bit>
#include <cmath>
#include <random>

#include "pebble/attacks.hpp"
#include "pebble/bounds.hpp"
#include "pebble/pebbling.hpp"
#include "pebble/robustness.hpp"
#include "pebble/superconcentrator.hpp"
#include "support.hpp"

using namespace pebble;

namespace {

// Rows 0..h-1, row i has i+1 nodes; (i, j) feeds (i+1, j) and (i+1, j+1).
Dag pyramid(std::size_t h) {
    std::vector<NodeId> start(h + 1, 0);
    for (std::size_t i = 0; i < h; ++i) start[i + 1] = start[i] + static_cast<NodeId>(i + 1);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < h; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            edges.emplace_back(start[i] + j, start[i + 1] + j);
            edges.emplace_back(start[i] + j, start[i + 1] + j + 1);
        }
    }
    return Dag(start[h], std::move(edges));
}

std::uint64_t total_cost(const AttackResult& r) { return cost(r.transcript).cumulative; }

void check_attack_on(const Dag& g, const AttackResult& r, bool all_nodes) {
    const auto rep = validate(g, r.transcript, PebblingMode::Parallel);
    CHECK(rep.ok());
    if (all_nodes) CHECK(r.transcript.back() == NodeSet::all(g.node_count()));
    std::uint64_t phase_sum = 0;
    std::size_t next_round = 1;
    for (const auto& ph : r.phases) {
        CHECK(ph.first_round == next_round);
        next_round = ph.last_round + 1;
        phase_sum += ph.cost;
    }
    CHECK(next_round == r.transcript.size() + 1);
    CHECK(phase_sum == total_cost(r));
    REQUIRE(r.bound.exact.has_value());
    CHECK(Rational(static_cast<long long>(total_cost(r))) <=
          *r.bound.exact + Rational(static_cast<long long>(r.slack)));
}

// A smallest set leaving depth at most d, by enumeration.
NodeSet reducing_set(const Dag& g, std::size_t d) {
    const std::size_t n = g.node_count();
    const std::size_t size = test_support::brute_force_min_reducing(g, d + 1);
    REQUIRE(size != SIZE_MAX);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
        NodeSet s = test_support::from_mask(n, mask);
        if (test_support::brute_force_depth(g, s) <= d) return s;
    }
    FAIL("no set of the minimum size found");
    return NodeSet(n);
}

}  // namespace

TEST_CASE("bound calculators evaluate their closed forms") {
    CHECK(*bound_depth_robust_lower(3, 4).exact == Rational(12));
    CHECK(*bound_overlay_lower(4, 2, 16).exact == Rational(4));
    CHECK(*bound_generic(1, 4, 4, 8, 1).exact == Rational(104));
    CHECK(bound_generic(1, 4, 4, 8, 1).value == doctest::Approx(104));
    CHECK(*bound_generic(0, 3, 4, 10, 2).exact == Rational(80 + 75));
    CHECK_THROWS_AS(bound_generic(1, 5, 4, 8, 1), Error);
    CHECK_THROWS_AS(bound_overlay_improved(1, 5, 4, 8), Error);

    // N = 1: 42N = 42, log2(42) terms.
    const double lg = std::log2(42.0);
    CHECK(bound_overlay_naive(1, 1, 1, 1).value == doctest::Approx(2 * 42 + 2 * 42 + 42 * (2 + lg) * 42));
    CHECK(bound_overlay_improved(1, 1, 1, 1).value ==
          doctest::Approx(2 + 4 + 43 + 24 * lg + 42 * lg + 1));
    CHECK(*bound_overlay_naive_measured(1, 2, 2, 4, 10, 3).exact == Rational(30 + 40 + 5 * 7 * 10));
    CHECK(*bound_overlay_improved_measured(1, 2, 2, 4, 1, 10, 3).exact == Rational(28 + 30 + 24 + 100));
}

TEST_CASE("corollary parameters at N = 1024, k = 2, eps = 1/2") {
    const auto p = cor45_parameters(1024, 2, 0.5);
    CHECK(p.e1 == doctest::Approx(16));
    CHECK(p.d1 == doctest::Approx(64));
    CHECK(p.e2 == doctest::Approx(16));
    CHECK(p.d2 == doctest::Approx(0.9 * std::pow(1024.0, 0.75)));
    CHECK_THROWS_AS(cor45_parameters(1024, 1, 0.5), Error);
}

TEST_CASE("gap arithmetic is exact") {
    const auto c2 = gap_analysis(Rational(2), 1e6);
    CHECK(c2.k == 249);
    CHECK(c2.gap_factor == Rational(2241, 560));
    CHECK(c2.gap_verified);
    CHECK(c2.upper_within_target);
    CHECK_FALSE(c2.boundary);
    CHECK(c2.exponent == doctest::Approx(11.0 / 6.0));
    CHECK(*c2.lower_at_n > *c2.upper_at_n);

    const auto c1 = gap_analysis(Rational(1));
    CHECK(c1.k == 63);
    CHECK(c1.boundary);
    CHECK(c1.upper_coefficient == Rational(1, 9));
    CHECK(c1.upper_within_target);  // 1/9 < 9/80
    CHECK(c1.gap_factor == Rational(81, 80));
    CHECK(c1.gap_verified);

    for (long long c : {3, 5, 10}) {
        const auto r = gap_analysis(Rational(c));
        const long long k = (560 * c * c + 8) / 9;
        CHECK(r.k == k);
        CHECK(r.gap_factor == Rational(9 * k, 560));
        CHECK(r.upper_within_target == (Rational(7, k) <= Rational(9, 80 * c * c)));
        CHECK(r.gap_verified);
    }
    CHECK_THROWS_AS(gap_analysis(Rational(1, 2)), Error);
}

TEST_CASE("generic attack on a path with one cut node") {
    const Dag g = graphs::path(8);
    const AttackSchedule s{NodeSet(8, {3}), 4, 4};
    const auto r = generic_attack(g, s);
    check_attack_on(g, r, false);
    CHECK(r.transcript.back().contains(7));
    CHECK(total_cost(r) >= exact_pcc(graphs::path(8)).value());

    const auto all = generic_attack(g, s, true);
    check_attack_on(g, all, true);

    CHECK_THROWS_AS(generic_attack(g, {NodeSet(8, {3}), 3, 4}), Error);  // depth 4 > 3
    CHECK_THROWS_AS(generic_attack(g, {NodeSet(8, {3}), 4, 3}), Error);  // g < d
}

TEST_CASE("generic attack without a set degenerates to balloons") {
    const Dag g = pyramid(4);
    REQUIRE(g.node_count() == 10);
    const AttackSchedule s{NodeSet(10), depth(g), depth(g)};
    const auto r = generic_attack(g, s, true);
    check_attack_on(g, r, true);
    CHECK(*r.bound.exact == Rational(100 + 2 * 4 * 10));
    CHECK(total_cost(r) >= exact_pcc(g).value());
}

TEST_CASE("generic attack is legal and bounded on random graphs") {
    std::mt19937_64 rng(911);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 4 + trial % 6;
        const Dag g = test_support::random_dag(rng, n, 0.35);
        const std::size_t full = depth(g);
        for (std::size_t d = 1; d <= full; ++d) {
            const NodeSet s = reducing_set(g, d);
            for (std::size_t gl : {d, d + 1, 2 * d}) {
                for (bool finish : {false, true}) {
                    const auto r = generic_attack(g, {s, d, gl}, finish);
                    check_attack_on(g, r, finish);
                    for (NodeId v : g.sinks()) {
                        bool seen = false;
                        for (const auto& c : r.transcript) seen = seen || c.contains(v);
                        CHECK(seen);
                    }
                    if (n <= 8) CHECK(total_cost(r) >= exact_pcc(g).value());
                }
            }
        }
    }
}

TEST_CASE("overlay attack on the two-node overlay") {
    const Overlay o = superconc_overlay(graphs::edgeless(2), build_superconcentrator(2));
    const auto r = overlay_attack(o, {NodeSet(2), 1, 1});
    check_attack_on(o.dag, r, false);
    CHECK(r.transcript.back().contains(o.outputs.back()));
    CHECK(total_cost(r) >= exact_pcc(o.dag).value());
}

TEST_CASE("overlay attack on a path base") {
    const Dag base = graphs::path(4);
    const Overlay o = superconc_overlay(base, build_superconcentrator(4));
    const auto r = overlay_attack(o, {NodeSet(4, {2}), 2, 2});
    check_attack_on(o.dag, r, false);
    CHECK(r.transcript.back().contains(o.outputs.back()));
    CHECK(r.phases.front().name.rfind("step1-", 0) == 0);
}

TEST_CASE("overlay attack light rounds respect the space bound") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + trial % 7;
        const Dag base = test_support::random_dag(rng, n, 0.4);
        const Overlay o = superconc_overlay(base, build_superconcentrator(n));
        for (std::size_t d = 1; d <= depth(base); ++d) {
            const NodeSet s = reducing_set(base, d);
            for (std::size_t gl : {d, d + 2}) {
                const auto r = overlay_attack(o, {s, d, gl});
                check_attack_on(o.dag, r, false);
                CHECK(r.transcript.back().contains(o.outputs.back()));
                for (const auto& ph : r.phases) {
                    if (ph.name.rfind("step3-light", 0) != 0) continue;
                    for (std::size_t i = ph.first_round; i <= ph.last_round; ++i) {
                        CHECK(r.transcript[i - 1].size() <= s.size() + 2 * gl + 1);
                    }
                }
                if (o.dag.node_count() <= 12) CHECK(total_cost(r) >= exact_pcc(o.dag).value());
            }
        }
    }
}

TEST_CASE("natural layer pebbling of layered matchings") {
    for (auto [n, l, want] : std::vector<std::tuple<std::size_t, std::size_t, std::uint64_t>>{
             {6, 3, 12}, {8, 2, 12}, {8, 4, 20}, {10, 5, 30}}) {
        const Dag g = graphs::layered_matching(n, l);
        const auto t = natural_svensson_pebbling(g, graphs::layered_matching_layers(n, l));
        CHECK(validate(g, t, PebblingMode::Parallel).ok());
        CHECK(cost(t).cumulative == want);
        CHECK(cost(t).cumulative * 2 == n * (l + 1));
    }
    const Dag p = graphs::path(3);
    CHECK_THROWS_AS(natural_svensson_pebbling(p, {0, 0, 1}), Error);
}

TEST_CASE("phase csv has one row per round") {
    const auto r = generic_attack(graphs::path(5), {NodeSet(5, {2}), 2, 2});
    const std::string csv = phase_csv(r);
    CHECK(csv.rfind("round,phase,pebbles\n", 0) == 0);
    CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == r.transcript.size() + 1);
}

TEST_CASE("robust graphs cost at least e times d") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 3 + trial % 6;
        const Dag g = test_support::random_dag(rng, n, 0.5);
        const std::uint64_t pcc = exact_pcc(g).value();
        for (std::size_t d = 1; d <= n; ++d) {
            for (std::size_t e = 0; e <= n; ++e) {
                const auto rep = is_depth_robust(g, e, d);
                if (rep.robust() && rep.method == SearchMethod::Exact) {
                    CHECK(static_cast<std::uint64_t>(e * d) <= pcc);
                }
            }
        }
    }
}
