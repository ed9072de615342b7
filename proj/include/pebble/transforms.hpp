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

#include "pebble/graph.hpp"

namespace pebble {

/// Indegree reduction. Node v becomes the chain (c*v, ..., c*v + c - 1) with
/// c = maxindeg(g) + extra; the i-th incoming edge (u, v), sources in increasing
/// order, becomes (c*u + c - 1, c*v + i). Throws Error when c == 0.
Dag idr(const Dag& g, std::uint32_t extra);

/// Chain length used by idr for this graph.
std::size_t idr_chain_length(const Dag& g, std::uint32_t extra);

/// Image of a depth-reducing set under idr: the tail node of each chain.
NodeSet idr_lift(const Dag& g, std::uint32_t extra, const NodeSet& s);

}  // namespace pebble
