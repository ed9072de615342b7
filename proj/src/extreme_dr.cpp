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

#include "pebble/extreme_dr.hpp"

#include <algorithm>
#include <cmath>

namespace pebble {

ExtremeDrReport check_extreme_dr(const Dag& g, double gamma, const SearchLimits& limits) {
    if (!(gamma >= 0 && gamma < 1)) throw Error("gamma must lie in [0, 1)");
    ExtremeDrReport r;
    r.gamma = gamma;
    r.frontier = static_cast<std::size_t>(std::floor((1 - gamma) * static_cast<double>(g.node_count()) + 1e-9));
    r.passed = true;
    for (std::size_t d = 1; d <= r.frontier; ++d) {
        const std::size_t e = r.frontier - d;
        auto rep = is_depth_robust(g, e, d, limits);
        r.points.push_back({e, d, rep.verdict, rep.method});
        if (rep.method == SearchMethod::Bounded) r.exact = false;
        if (!rep.robust()) r.passed = false;
    }
    return r;
}

namespace {

Dag random_candidate(std::size_t n, std::size_t cap, Rng& rng) {
    std::vector<Edge> edges;
    std::vector<std::size_t> out(n, 0);
    for (NodeId v = 1; v < n; ++v) {
        edges.emplace_back(v - 1, v);
        ++out[v - 1];
        std::vector<NodeId> pool;
        for (NodeId u = 0; u + 1 < v; ++u) {
            if (out[u] < cap) pool.push_back(u);
        }
        std::size_t want = std::min(cap - 1, pool.size());
        want = want == 0 ? 0 : rng.uniform_below(want + 1);
        for (std::size_t i = 0; i < want; ++i) {
            const std::size_t j = i + rng.uniform_below(pool.size() - i);
            std::swap(pool[i], pool[j]);
            edges.emplace_back(pool[i], v);
            ++out[pool[i]];
        }
    }
    return Dag(n, std::move(edges));
}

std::size_t robust_points(const ExtremeDrReport& r) {
    return static_cast<std::size_t>(
        std::count_if(r.points.begin(), r.points.end(), [](const FrontierPoint& p) {
            return p.verdict == Verdict::DepthRobust;
        }));
}

}  // namespace

ExtremeDrSample sample_extreme_dr(std::size_t n, double gamma, Rng& rng, std::size_t attempts,
                                  double degree_factor, const SearchLimits& limits) {
    if (n == 0) throw Error("sample_extreme_dr needs n >= 1");
    const double lg = n > 1 ? std::log2(static_cast<double>(n)) : 0.0;
    const std::size_t cap = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(degree_factor * lg)));
    ExtremeDrSample best;
    bool have = false;
    for (std::size_t a = 1; a <= attempts; ++a) {
        Dag g = random_candidate(n, cap, rng);
        auto rep = check_extreme_dr(g, gamma, limits);
        if (!have || robust_points(rep) > robust_points(best.report) || rep.passed) {
            best.dag = g;
            best.report = rep;
            have = true;
        }
        best.attempts = a;
        if (rep.passed) {
            best.found = true;
            break;
        }
    }
    return best;
}

}  // namespace pebble
