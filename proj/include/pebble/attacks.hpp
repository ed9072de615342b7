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

#include "pebble/bounds.hpp"
#include "pebble/graph.hpp"
#include "pebble/pebbling.hpp"
#include "pebble/superconcentrator.hpp"

namespace pebble {

/// Depth-reducing set S with depth(G - S) <= d, and interval length g >= d.
struct AttackSchedule {
    NodeSet depth_reducing_set;
    std::size_t d = 0;
    std::size_t interval = 1;
};

/// Rounds first..last (1-based, inclusive) belong to one phase. Empty phases have last < first.
struct PhaseSpan {
    std::string name;
    std::size_t first_round = 1;
    std::size_t last_round = 0;
    std::uint64_t cost = 0;
};

struct AttackResult {
    Transcript transcript;
    std::vector<PhaseSpan> phases;
    /// Balloon phases run by the generic strategy (Step 1 for the overlay).
    std::size_t balloons = 0;
    /// Additive allowance over the bound: N + ceil(d N max(0, balloons - N/g)).
    std::uint64_t slack = 0;
    /// The matching closed form at (|S|, d, g, N, indegree), measured constants for the overlay.
    BoundReport bound;
};

/// Light phases walk g consecutive topological-order nodes holding S and the
/// interval's pending parents; balloon phases re-pebble the missing parents'
/// ancestry outside S level by level. With finish_all a last balloon leaves every
/// node pebbled. Throws Error for an invalid certificate or g < d.
AttackResult generic_attack(const Dag& g, const AttackSchedule& sched, bool finish_all = false);

/// Step 1: generic_attack on the inputs with finish_all. Step 2: interior by depth
/// level. Step 3: walk the output chain g outputs at a time, refilling the next
/// interval's superconcentrator parents with a balloon that keeps S and the last
/// output. S is in base-graph ids.
AttackResult overlay_attack(const Overlay& o, const AttackSchedule& sched);

/// Round j pebbles every node of layer < j; nothing is removed. Throws Error when
/// an edge does not go to a strictly higher layer.
Transcript natural_svensson_pebbling(const Dag& g, const std::vector<std::uint32_t>& layer);

/// CSV rows "round,phase,pebbles", one per round.
std::string phase_csv(const AttackResult& r);

}  // namespace pebble
