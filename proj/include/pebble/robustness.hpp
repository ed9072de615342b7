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

namespace pebble {

/// Claim: depth(g - set) < target_depth.
struct ReducibilityCertificate {
    NodeSet set;
    std::size_t target_depth = 0;
};

bool verify_certificate(const Dag& g, const ReducibilityCertificate& c);

enum class SearchMethod { Exact, Bounded };

struct SearchLimits {
    std::uint64_t max_branches = 50'000'000;
};

struct MinSetResult {
    SearchMethod method = SearchMethod::Exact;
    /// False when no allowed set reaches the target (undeletable long path).
    bool feasible = true;
    /// Exact minimum when method is Exact, best known otherwise.
    std::optional<NodeSet> best;
    std::size_t lower_bound = 0;
    std::uint64_t branches = 0;
};

/// Smallest S (drawn from `deletable`, all nodes when null) with depth(g - S) < d.
/// Branch and bound on the d-node windows of a current longest path.
MinSetResult min_depth_reducing_set(const Dag& g, std::size_t d, const SearchLimits& limits = {},
                                    const NodeSet* deletable = nullptr);

enum class Verdict { Reducible, DepthRobust, NoWitnessFound };

struct RobustnessReport {
    std::size_t e = 0;
    std::size_t d = 0;
    Verdict verdict = Verdict::DepthRobust;
    SearchMethod method = SearchMethod::Exact;
    std::optional<NodeSet> witness;
    std::uint64_t branches = 0;

    bool robust() const { return verdict == Verdict::DepthRobust; }
    bool reducible() const { return verdict == Verdict::Reducible; }
};

/// Decides (e,d)-depth-robustness. DepthRobust is only reported when the search
/// covered every candidate set; a truncated search reports NoWitnessFound.
RobustnessReport is_depth_robust(const Dag& g, std::size_t e, std::size_t d, const SearchLimits& limits = {},
                                 const NodeSet* deletable = nullptr);

/// Colors indexed by node id; entries for test nodes are ignored. Colors start at 1.
using LayerColoring = std::vector<std::uint32_t>;

/// Test nodes whose largest parent color is not below their smallest child color.
NodeSet coloring_to_set(const LayeredDag& g, const LayerColoring& chi);

/// chi(b) = number of bit nodes on the longest bit-counted path ending at b in g - s.
/// Throws Error when s contains a bit node.
LayerColoring set_to_coloring(const LayeredDag& g, const NodeSet& s);

}  // namespace pebble
