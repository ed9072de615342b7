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

#include "pebble/attacks.hpp"

#include <algorithm>
#include <sstream>

#include "pebble/robustness.hpp"

namespace pebble {

namespace {

class ScheduleBuilder {
  public:
    explicit ScheduleBuilder(AttackResult& out) : out_(out) {}

    void begin(std::string name) {
        out_.phases.push_back({std::move(name), out_.transcript.size() + 1, out_.transcript.size(), 0});
    }

    void push(NodeSet config) {
        out_.phases.back().cost += config.size();
        out_.transcript.push_back(std::move(config));
        out_.phases.back().last_round = out_.transcript.size();
    }

    const NodeSet& current(std::size_t universe) {
        if (out_.transcript.empty()) {
            empty_ = NodeSet(universe);
            return empty_;
        }
        return out_.transcript.back();
    }

  private:
    AttackResult& out_;
    NodeSet empty_;
};

/// Ancestors of `needed` reachable through nodes outside `base`, restricted to
/// `allowed`, grouped by depth above base. Level 1 has all parents in base.
std::vector<std::vector<NodeId>> closure_levels(const Dag& g, const std::vector<NodeId>& needed, const NodeSet& base,
                                                const NodeSet& allowed) {
    const std::size_t n = g.node_count();
    std::vector<char> in(n, 0);
    std::vector<NodeId> stack;
    for (NodeId v : needed) {
        if (!base.contains(v) && !in[v]) {
            in[v] = 1;
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        for (NodeId u : g.parents(v)) {
            if (base.contains(u) || in[u]) continue;
            if (!allowed.contains(u)) throw Error("balloon needs a node outside the allowed region");
            in[u] = 1;
            stack.push_back(u);
        }
    }
    std::vector<std::size_t> level(n, 0);
    std::vector<std::vector<NodeId>> levels;
    for (NodeId v : g.topological_order()) {
        if (!in[v]) continue;
        std::size_t l = 1;
        for (NodeId u : g.parents(v)) {
            if (in[u]) l = std::max(l, level[u] + 1);
        }
        level[v] = l;
        if (levels.size() < l) levels.resize(l);
        levels[l - 1].push_back(v);
    }
    return levels;
}

void run_balloon(ScheduleBuilder& b, const std::vector<std::vector<NodeId>>& levels, NodeSet config) {
    for (const auto& lv : levels) {
        for (NodeId v : lv) config.insert(v);
        b.push(config);
    }
}

std::uint64_t slack_for(std::size_t n, std::size_t d, std::size_t g, std::size_t balloons) {
    // N + ceil(d N max(0, B - N/g)), computed as ceil(d N (B g - N) / g).
    const long long excess = static_cast<long long>(balloons * g) - static_cast<long long>(n);
    std::uint64_t extra = 0;
    if (excess > 0) {
        const auto num = static_cast<std::uint64_t>(d) * n * static_cast<std::uint64_t>(excess);
        extra = (num + g - 1) / g;
    }
    return n + extra;
}

void check_schedule(const Dag& g, const AttackSchedule& s) {
    if (s.depth_reducing_set.universe() != g.node_count()) throw Error("depth-reducing set has the wrong universe");
    if (s.interval == 0) throw Error("interval length g must be positive");
    if (s.interval < s.d) throw Error("interval length g must be at least d");
    if (!verify_certificate(g, {s.depth_reducing_set, s.d + 1})) {
        throw Error("set does not reduce the depth to at most d");
    }
}

std::vector<NodeId> sorted_unique(std::vector<NodeId> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

/// Walks `order` in chunks of `interval`; `parents_of` gives the parents a node needs
/// from the previous round. Before every chunk but the first, `refill` is asked to
/// re-pebble the chunk's missing parents. Nodes of `held` stay pebbled once placed;
/// `placed_held` is held from the start.
template <class ParentsOf, class Refill>
void walk_intervals(ScheduleBuilder& b, std::size_t universe, const std::vector<NodeId>& order, std::size_t interval,
                    const NodeSet& held, NodeSet placed_held, const std::string& prefix, ParentsOf parents_of,
                    Refill refill) {
    std::vector<std::size_t> pending(universe, 0);
    for (std::size_t start = 0, idx = 0; start < order.size(); start += interval, ++idx) {
        const std::size_t stop = std::min(order.size(), start + interval);
        std::vector<NodeId> chunk_parents;
        for (std::size_t j = start; j < stop; ++j) {
            for (NodeId u : parents_of(order[j])) {
                ++pending[u];
                chunk_parents.push_back(u);
            }
        }
        chunk_parents = sorted_unique(std::move(chunk_parents));
        if (idx > 0) {
            std::vector<NodeId> missing;
            const NodeSet& cur = b.current(universe);
            for (NodeId u : chunk_parents) {
                if (!cur.contains(u)) missing.push_back(u);
            }
            b.begin(prefix + "balloon-" + std::to_string(idx));
            refill(missing, chunk_parents, placed_held);
        }
        b.begin(prefix + "light-" + std::to_string(idx));
        for (std::size_t j = start; j < stop; ++j) {
            const NodeId x = order[j];
            for (NodeId u : parents_of(x)) --pending[u];
            if (held.contains(x)) placed_held.insert(x);
            NodeSet next = placed_held;
            next.insert(x);
            for (NodeId u : b.current(universe).members()) {
                if (pending[u] > 0) next.insert(u);
            }
            b.push(std::move(next));
        }
    }
}

}  // namespace

AttackResult generic_attack(const Dag& g, const AttackSchedule& sched, bool finish_all) {
    check_schedule(g, sched);
    const std::size_t n = g.node_count();
    const NodeSet& s = sched.depth_reducing_set;
    AttackResult out;
    ScheduleBuilder b(out);
    const NodeSet allowed = NodeSet::all(n) - s;

    auto parents_of = [&](NodeId v) { return g.parents(v); };
    auto refill = [&](const std::vector<NodeId>& missing, const std::vector<NodeId>& chunk_parents,
                      const NodeSet& placed_held) {
        if (!missing.empty()) ++out.balloons;
        NodeSet base = placed_held;
        const NodeSet& cur = b.current(n);
        for (NodeId u : chunk_parents) {
            if (cur.contains(u)) base.insert(u);
        }
        run_balloon(b, closure_levels(g, missing, base, allowed), base);
    };
    walk_intervals(b, n, g.topological_order(), sched.interval, s, NodeSet(n), "", parents_of, refill);

    if (finish_all) {
        const NodeSet base = b.current(n);
        std::vector<NodeId> rest = (NodeSet::all(n) - base).members();
        b.begin("finish");
        if (!rest.empty()) {
            ++out.balloons;
            run_balloon(b, closure_levels(g, rest, base, allowed), base);
        }
    }

    out.slack = slack_for(n, sched.d, sched.interval, out.balloons);
    if (n > 0) {
        out.bound = bound_generic(static_cast<long long>(s.size()), static_cast<long long>(std::max<std::size_t>(1, sched.d)),
                                  static_cast<long long>(sched.interval), static_cast<long long>(n),
                                  static_cast<long long>(g.max_indegree()));
    }
    return out;
}

AttackResult overlay_attack(const Overlay& o, const AttackSchedule& sched) {
    const Dag& base = o.base;
    check_schedule(base, sched);
    const Dag& g = o.dag;
    const std::size_t total = g.node_count();
    const std::size_t n = base.node_count();
    AttackResult out;
    ScheduleBuilder b(out);

    // Step 1, lifted onto the input nodes.
    AttackResult step1 = generic_attack(base, sched, true);
    for (auto& ph : step1.phases) {
        b.begin("step1-" + ph.name);
        for (std::size_t r = ph.first_round; r <= ph.last_round; ++r) {
            NodeSet lifted(total);
            for (NodeId v : step1.transcript[r - 1].members()) lifted.insert(o.inputs[v]);
            b.push(std::move(lifted));
        }
    }
    out.balloons = step1.balloons;
    out.slack = step1.slack;

    NodeSet all_inputs(total);
    for (NodeId v : o.inputs) all_inputs.insert(v);
    NodeSet inner = all_inputs;
    for (NodeId v : o.interior) inner.insert(v);

    // Step 2: the interior, one depth level per round.
    b.begin("step2");
    run_balloon(b, closure_levels(g, o.interior, all_inputs, inner), all_inputs);

    // Step 3: the output chain.
    NodeSet held(total);
    for (NodeId v : sched.depth_reducing_set.members()) held.insert(o.inputs[v]);
    NodeSet refill_allowed = inner - held;
    NodeSet is_output(total);
    for (NodeId v : o.outputs) is_output.insert(v);

    auto sc_parents = [&](NodeId v) {
        std::vector<NodeId> ps;
        for (NodeId u : g.parents(v)) {
            if (!is_output.contains(u)) ps.push_back(u);
        }
        return ps;
    };
    std::vector<std::vector<NodeId>> needs(total);
    for (NodeId v : o.outputs) needs[v] = sc_parents(v);
    auto parents_of = [&](NodeId v) -> const std::vector<NodeId>& { return needs[v]; };

    auto refill = [&](const std::vector<NodeId>& missing, const std::vector<NodeId>& chunk_parents,
                      const NodeSet&) {
        NodeSet keep = held;
        const NodeSet& cur = b.current(total);
        for (NodeId u : chunk_parents) {
            if (cur.contains(u)) keep.insert(u);
        }
        run_balloon(b, closure_levels(g, missing, keep, refill_allowed), keep);
    };

    // The previous output is a pending parent of the next one, so the walker is
    // carried through light rounds and kept by every balloon.
    for (std::size_t j = 1; j < o.outputs.size(); ++j) needs[o.outputs[j]].push_back(o.outputs[j - 1]);
    walk_intervals(b, total, o.outputs, sched.interval, NodeSet(total), held, "step3-", parents_of, refill);

    if (n > 0) {
        out.bound = bound_overlay_improved_measured(
            static_cast<long long>(sched.depth_reducing_set.size()),
            static_cast<long long>(std::max<std::size_t>(1, sched.d)), static_cast<long long>(sched.interval),
            static_cast<long long>(n), static_cast<long long>(base.max_indegree()),
            static_cast<long long>(o.sc_nodes), static_cast<long long>(o.sc_depth));
    }
    return out;
}

Transcript natural_svensson_pebbling(const Dag& g, const std::vector<std::uint32_t>& layer) {
    if (layer.size() != g.node_count()) throw Error("layer vector size does not match the graph");
    for (auto [u, v] : g.edges()) {
        if (layer[u] >= layer[v]) throw Error("edge does not go to a strictly higher layer");
    }
    std::uint32_t layers = 0;
    for (auto l : layer) layers = std::max(layers, l + 1);
    Transcript t;
    NodeSet config(g.node_count());
    for (std::uint32_t j = 0; j < layers; ++j) {
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (layer[v] == j) config.insert(v);
        }
        t.push_back(config);
    }
    return t;
}

std::string phase_csv(const AttackResult& r) {
    std::ostringstream os;
    os << "round,phase,pebbles\n";
    for (const auto& ph : r.phases) {
        for (std::size_t i = ph.first_round; i <= ph.last_round; ++i) {
            os << i << ',' << ph.name << ',' << r.transcript[i - 1].size() << '\n';
        }
    }
    return os.str();
}

}  // namespace pebble
