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

#include <cstdint>
#include <vector>

#include "pebble/graph.hpp"
#include "pebble/rng.hpp"
#include "pebble/robustness.hpp"

namespace pebble {

struct FrontierPoint {
    std::size_t e = 0;
    std::size_t d = 0;
    Verdict verdict = Verdict::DepthRobust;
    SearchMethod method = SearchMethod::Exact;
};

struct ExtremeDrReport {
    double gamma = 0;
    /// Largest e + d covered: floor((1 - gamma) N).
    std::size_t frontier = 0;
    std::vector<FrontierPoint> points;
    bool passed = false;
    /// True when every point was settled by a complete search.
    bool exact = true;
};

/// Checks (e, d)-depth-robustness at every frontier point e + d = floor((1 - gamma) N),
/// d >= 1. Points inside the frontier follow by monotonicity.
ExtremeDrReport check_extreme_dr(const Dag& g, double gamma, const SearchLimits& limits = {});

struct ExtremeDrSample {
    Dag dag;
    ExtremeDrReport report;
    bool found = false;
    std::size_t attempts = 0;
};

/// Random DAGs on n nodes: a Hamiltonian path plus random earlier parents, in- and
/// outdegree capped at max(1, ceil(degree_factor * log2 n)). Returns the first
/// candidate passing check_extreme_dr, else the candidate with most robust points.
ExtremeDrSample sample_extreme_dr(std::size_t n, double gamma, Rng& rng, std::size_t attempts,
                                  double degree_factor = 1.0, const SearchLimits& limits = {});

}  // namespace pebble
