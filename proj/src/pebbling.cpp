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

#include "pebble/pebbling.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace pebble {

LegalityReport validate(const Dag& g, const Transcript& p, PebblingMode mode) {
    LegalityReport report;
    const std::size_t n = g.node_count();
    NodeSet prev(n);
    NodeSet seen(n);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const NodeSet& cur = p[i];
        std::size_t placed = 0;
        for (NodeId v : cur.members()) {
            if (v >= n) {
                report.legal = false;
                report.round = i + 1;
                report.node = v;
                report.reason = "node outside graph";
                break;
            }
            seen.insert(v);
            if (prev.contains(v)) continue;
            ++placed;
            for (NodeId u : g.parents(v)) {
                if (!prev.contains(u)) {
                    report.legal = false;
                    report.round = i + 1;
                    report.node = v;
                    report.reason = "parent " + std::to_string(u) + " not pebbled in previous round";
                    break;
                }
            }
            if (!report.legal) break;
        }
        if (!report.legal) break;
        if (mode == PebblingMode::Sequential && placed > 1) {
            report.legal = false;
            report.round = i + 1;
            report.node = 0;
            report.reason = std::to_string(placed) + " new pebbles in one sequential round";
            break;
        }
        prev = NodeSet(n);
        for (NodeId v : cur.members()) prev.insert(v);
    }
    for (NodeId s : g.sinks()) {
        if (!seen.contains(s)) report.unpebbled_sinks.push_back(s);
    }
    report.complete = report.unpebbled_sinks.empty();
    return report;
}

PebblingCost cost(const Transcript& p) {
    PebblingCost c;
    for (const NodeSet& s : p) {
        c.cumulative += s.size();
        c.space = std::max<std::uint64_t>(c.space, s.size());
    }
    c.time = p.size();
    c.space_time = c.time * c.space;
    return c;
}

Transcript pebble_everything(const Dag& g) {
    const std::size_t n = g.node_count();
    Transcript out;
    NodeSet cur(n);
    while (cur.size() < n) {
        NodeSet next = cur;
        for (NodeId v = 0; v < n; ++v) {
            if (cur.contains(v)) continue;
            const auto ps = g.parents(v);
            if (std::all_of(ps.begin(), ps.end(), [&](NodeId u) { return cur.contains(u); })) next.insert(v);
        }
        out.push_back(next);
        cur = std::move(next);
    }
    return out;
}

std::size_t default_oracle_node_limit() {
    if (const char* env = std::getenv("PEBBLE_ORACLE_MAX_NODES")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 12;
}

namespace {

using Mask = std::uint32_t;

struct OracleGraph {
    std::size_t n = 0;
    std::vector<Mask> parent_mask;
    std::vector<Mask> sink_closure;  // sinks reachable from v, v included
    Mask sinks = 0;

    explicit OracleGraph(const Dag& g) : n(g.node_count()), parent_mask(n, 0), sink_closure(n, 0) {
        for (auto [u, v] : g.edges()) parent_mask[v] |= Mask{1} << u;
        for (NodeId s : g.sinks()) sinks |= Mask{1} << s;
        const auto& order = g.topological_order();
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            NodeId v = *it;
            Mask m = (sinks >> v & 1U) ? Mask{1} << v : 0;
            for (NodeId c : g.children(v)) m |= sink_closure[c];
            sink_closure[v] = m;
        }
    }

    Mask available(Mask p) const {
        Mask out = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if ((parent_mask[v] & ~p) == 0) out |= Mask{1} << v;
        }
        return out;
    }

    // Nodes whose every reachable sink has already been pebbled; closed under descendants.
    Mask useless(Mask done) const {
        Mask out = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if ((sink_closure[v] & ~done) == 0) out |= Mask{1} << v;
        }
        return out;
    }
};

std::uint64_t key_of(Mask p, Mask done) { return std::uint64_t{p} << 32 | done; }

NodeSet to_set(std::size_t n, Mask m) {
    NodeSet s(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (m >> v & 1U) s.insert(static_cast<NodeId>(v));
    }
    return s;
}

std::vector<NodeId> ids_of(Mask m) {
    std::vector<NodeId> out;
    for (NodeId v = 0; m != 0; ++v, m >>= 1) {
        if (m & 1U) out.push_back(v);
    }
    return out;
}

}  // namespace

OracleResult exact_pcc(const Dag& g, const OracleLimits& limits) {
    const std::size_t n = g.node_count();
    if (n > limits.max_nodes || n > 32) {
        throw Error("exact_pcc: graph has " + std::to_string(n) + " nodes, oracle limit is " +
                    std::to_string(std::min<std::size_t>(limits.max_nodes, 32)));
    }
    OracleResult result;
    if (n == 0) return result;

    const OracleGraph og(g);
    const std::uint64_t goal = key_of(0, og.sinks);

    std::unordered_map<std::uint64_t, std::uint64_t> dist;
    using Item = std::pair<std::uint64_t, std::uint64_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> frontier;
    dist[key_of(0, 0)] = 0;
    frontier.emplace(0, key_of(0, 0));

    auto for_each_move = [&](Mask p, Mask done, auto&& fn) {
        const Mask cand = (p | og.available(p)) & ~og.useless(done);
        for (Mask q = cand; q != 0; q = (q - 1) & cand) {
            const Mask next_done = done | (q & og.sinks);
            const Mask next_p = q & ~og.useless(next_done);
            fn(q, key_of(next_p, next_done));
        }
    };

    std::uint64_t best = 0;
    bool found = false;
    while (!frontier.empty()) {
        auto [d, key] = frontier.top();
        frontier.pop();
        if (d != dist[key]) continue;
        if (key == goal) {
            best = d;
            found = true;
            break;
        }
        if (++result.states_settled > limits.max_states) {
            result.status = OracleStatus::BudgetExceeded;
            result.lower_bound = d;
            result.witness = pebble_everything(g);
            result.upper_bound = cost(result.witness).cumulative;
            return result;
        }
        const Mask p = static_cast<Mask>(key >> 32);
        const Mask done = static_cast<Mask>(key);
        for_each_move(p, done, [&](Mask q, std::uint64_t next) {
            const std::uint64_t nd = d + static_cast<std::uint64_t>(std::popcount(q));
            auto it = dist.find(next);
            if (it == dist.end() || nd < it->second) {
                dist[next] = nd;
                frontier.emplace(nd, next);
            }
        });
    }
    if (!found) throw Error("exact_pcc: goal unreachable");

    // Every state with distance < best is settled, so an edge s -> t lies on an
    // optimal path iff dist[t] == dist[s] + |q| and t can still reach the goal.
    std::unordered_set<std::uint64_t> dead;
    std::vector<Mask> path;
    std::function<bool(std::uint64_t, std::uint64_t)> extend = [&](std::uint64_t key, std::uint64_t d) -> bool {
        if (key == goal) return d == best;
        std::vector<std::pair<std::vector<NodeId>, std::pair<Mask, std::uint64_t>>> moves;
        for_each_move(static_cast<Mask>(key >> 32), static_cast<Mask>(key), [&](Mask q, std::uint64_t next) {
            moves.push_back({ids_of(q), {q, next}});
        });
        std::sort(moves.begin(), moves.end());
        for (const auto& [ids, move] : moves) {
            const auto [q, next] = move;
            const std::uint64_t nd = d + ids.size();
            if (nd > best) continue;
            if (next != goal) {
                auto it = dist.find(next);
                if (it == dist.end() || it->second != nd || nd >= best || dead.count(next)) continue;
            } else if (nd != best) {
                continue;
            }
            path.push_back(q);
            if (extend(next, nd)) return true;
            path.pop_back();
            if (next != goal) dead.insert(next);
        }
        return false;
    };
    extend(key_of(0, 0), 0);

    result.lower_bound = result.upper_bound = best;
    for (Mask q : path) result.witness.push_back(to_set(n, q));
    return result;
}

}  // namespace pebble
