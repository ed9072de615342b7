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
#include <string>
#include <vector>

#include "pebble/graph.hpp"

namespace pebble {

/// Configurations P_1..P_t; P_0 is the empty set and is not stored.
using Transcript = std::vector<NodeSet>;

enum class PebblingMode { Parallel, Sequential };

struct LegalityReport {
    bool legal = true;
    bool complete = true;
    /// 1-based round of the first violation, 0 when legal.
    std::size_t round = 0;
    NodeId node = 0;
    std::string reason;
    std::vector<NodeId> unpebbled_sinks;

    bool ok() const { return legal && complete; }
};

struct PebblingCost {
    std::uint64_t cumulative = 0;
    std::uint64_t space = 0;
    std::uint64_t time = 0;
    std::uint64_t space_time = 0;
};

LegalityReport validate(const Dag& g, const Transcript& p, PebblingMode mode = PebblingMode::Parallel);
PebblingCost cost(const Transcript& p);

/// Each round pebbles every node whose parents are all pebbled; nothing is removed.
Transcript pebble_everything(const Dag& g);

/// Node limit read from PEBBLE_ORACLE_MAX_NODES, else 12.
std::size_t default_oracle_node_limit();

struct OracleLimits {
    std::size_t max_nodes = default_oracle_node_limit();
    std::uint64_t max_states = 20'000'000;
};

enum class OracleStatus { Optimal, BudgetExceeded };

struct OracleResult {
    OracleStatus status = OracleStatus::Optimal;
    /// Equal to the optimum when status is Optimal.
    std::uint64_t lower_bound = 0;
    std::uint64_t upper_bound = 0;
    Transcript witness;
    std::uint64_t states_settled = 0;

    bool optimal() const { return status == OracleStatus::Optimal; }
    std::uint64_t value() const { return upper_bound; }
};

/// Exact parallel cumulative pebbling complexity by uniform-cost search over
/// (configuration, sinks already pebbled). Throws Error when the graph exceeds
/// limits.max_nodes (hard cap 32). The witness is the lexicographically smallest
/// optimal configuration sequence, each configuration compared as a sorted id list.
OracleResult exact_pcc(const Dag& g, const OracleLimits& limits = {});

}  // namespace pebble
