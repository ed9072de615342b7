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
#include <optional>
#include <vector>

#include "pebble/graph.hpp"
#include "pebble/rng.hpp"

namespace pebble {

/// A DAG with designated input and output lists of equal length. Inputs occupy
/// ids [0, n), outputs the last n ids, interior nodes lie in between.
struct Superconcentrator {
    Dag dag;
    std::vector<NodeId> inputs;
    std::vector<NodeId> outputs;

    std::size_t width() const { return inputs.size(); }
    /// Nodes on the longest path (input and output included).
    std::size_t depth() const { return pebble::depth(dag); }
};

/// n <= 2: complete bipartite. n >= 3: a recursive core (direct matching plus
/// complete bipartite into and out of a half-size core, K_{n,n} at n <= 4) whose
/// outputs each feed one fresh output node.
Superconcentrator build_superconcentrator(std::size_t n);

enum class VerifyMode { Exhaustive, Sampled };

struct SuperconcentratorReport {
    bool passed = true;
    std::uint64_t checks = 0;
    /// First failing pair, if any.
    std::vector<NodeId> failing_inputs;
    std::vector<NodeId> failing_outputs;
    std::size_t flow = 0;
};

/// Checks that every k-subset of inputs reaches every k-subset of outputs by k
/// vertex-disjoint paths (unit vertex capacities, max flow). Sampled mode draws
/// `samples` random (k, S1, S2) triples from rng.
SuperconcentratorReport verify_superconcentrator(const Dag& g, const std::vector<NodeId>& inputs,
                                                 const std::vector<NodeId>& outputs, VerifyMode mode,
                                                 std::uint64_t samples = 0, Rng* rng = nullptr);

/// Base graph copied onto the inputs, outputs chained o_1 -> ... -> o_n.
struct Overlay {
    Dag dag;
    Dag base;
    std::vector<NodeId> inputs;
    std::vector<NodeId> outputs;
    std::vector<NodeId> interior;
    std::size_t sc_depth = 0;      // depth of the superconcentrator alone
    std::size_t sc_nodes = 0;
    std::size_t sc_max_indegree = 0;
};

Overlay superconc_overlay(const Dag& base, const Superconcentrator& sc);

/// S on the inputs plus every d-th output o_d, o_2d, ... (1-based).
NodeSet overlay_reducing_set(const Overlay& o, const NodeSet& base_set, std::size_t d);

}  // namespace pebble
