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

#include "pebble/robustness.hpp"

#include <algorithm>
#include <limits>

namespace pebble {

bool verify_certificate(const Dag& g, const ReducibilityCertificate& c) {
    return depth(g, c.set) < c.target_depth;
}

namespace {

constexpr std::size_t kInfeasible = std::numeric_limits<std::size_t>::max();

class HittingSearch {
  public:
    HittingSearch(const Dag& g, std::size_t d, const SearchLimits& limits, const NodeSet* deletable)
        : g_(g),
          d_(d),
          limits_(limits),
          allowed_(deletable ? *deletable : NodeSet::all(g.node_count())),
          removed_(g.node_count()),
          excluded_(g.node_count()) {}

    /// Greedy feasible set, or nullopt when no allowed set works.
    std::optional<NodeSet> greedy() const {
        NodeSet s(g_.node_count());
        while (true) {
            auto path = longest_path(g_, s);
            if (path.size() < d_) return s;
            // Hit the allowed node nearest the middle of the path.
            std::optional<NodeId> pick;
            std::size_t best_gap = kInfeasible;
            for (std::size_t i = 0; i < path.size(); ++i) {
                if (!allowed_.contains(path[i])) continue;
                const std::size_t gap = i * 2 > path.size() ? i * 2 - path.size() : path.size() - i * 2;
                if (gap < best_gap) {
                    best_gap = gap;
                    pick = path[i];
                }
            }
            if (!pick) return std::nullopt;
            s.insert(*pick);
        }
    }

    /// Lower bound on extra deletions: greedily packed node-disjoint d-node paths.
    std::size_t packing_bound() const {
        NodeSet used = removed_;
        std::size_t count = 0;
        while (true) {
            auto path = longest_path(g_, used);
            if (path.size() < d_) return count;
            bool hittable = false;
            for (std::size_t i = 0; i < d_; ++i) {
                hittable = hittable || branchable(path[i]);
                used.insert(path[i]);
            }
            if (!hittable) return kInfeasible;
            ++count;
        }
    }

    /// Looks for a set of at most k further deletions; result in found().
    bool run(std::size_t k) {
        if (++branches_ > limits_.max_branches) {
            truncated_ = true;
            return false;
        }
        auto path = longest_path(g_, removed_);
        if (path.size() < d_) {
            found_ = removed_;
            return true;
        }
        if (k == 0) return false;
        const std::size_t lb = packing_bound();
        if (lb == kInfeasible || lb > k) return false;

        // Every window of d consecutive path nodes must lose a node; branch on the
        // window with the fewest candidates.
        std::size_t best_start = 0, best_count = kInfeasible;
        for (std::size_t s = 0; s + d_ <= path.size(); ++s) {
            std::size_t c = 0;
            for (std::size_t i = s; i < s + d_; ++i) c += branchable(path[i]) ? 1 : 0;
            if (c < best_count) {
                best_count = c;
                best_start = s;
            }
        }
        if (best_count == 0) return false;

        std::vector<NodeId> tried;
        bool ok = false;
        for (std::size_t i = best_start; i < best_start + d_ && !ok && !truncated_; ++i) {
            const NodeId v = path[i];
            if (!branchable(v)) continue;
            removed_.insert(v);
            ok = run(k - 1);
            removed_.erase(v);
            excluded_.insert(v);
            tried.push_back(v);
        }
        for (NodeId v : tried) excluded_.erase(v);
        return ok;
    }

    bool truncated() const { return truncated_; }
    std::uint64_t branches() const { return branches_; }
    const std::optional<NodeSet>& found() const { return found_; }

  private:
    bool branchable(NodeId v) const { return allowed_.contains(v) && !excluded_.contains(v); }

    const Dag& g_;
    std::size_t d_;
    SearchLimits limits_;
    NodeSet allowed_;
    NodeSet removed_;
    NodeSet excluded_;
    std::optional<NodeSet> found_;
    std::uint64_t branches_ = 0;
    bool truncated_ = false;
};

}  // namespace

MinSetResult min_depth_reducing_set(const Dag& g, std::size_t d, const SearchLimits& limits,
                                    const NodeSet* deletable) {
    MinSetResult out;
    HittingSearch search(g, d, limits, deletable);
    auto greedy = search.greedy();
    if (d == 0 || !greedy) {
        out.feasible = false;
        return out;
    }
    out.best = greedy;
    out.lower_bound = search.packing_bound();
    for (std::size_t k = out.lower_bound; k < greedy->size(); ++k) {
        if (search.run(k)) {
            out.best = search.found();
            out.lower_bound = k;
            out.branches = search.branches();
            return out;
        }
        if (search.truncated()) {
            out.method = SearchMethod::Bounded;
            out.lower_bound = k;
            out.branches = search.branches();
            return out;
        }
    }
    out.lower_bound = greedy->size();
    out.branches = search.branches();
    return out;
}

RobustnessReport is_depth_robust(const Dag& g, std::size_t e, std::size_t d, const SearchLimits& limits,
                                 const NodeSet* deletable) {
    RobustnessReport r;
    r.e = e;
    r.d = d;
    if (d == 0) return r;
    HittingSearch search(g, d, limits, deletable);
    if (auto greedy = search.greedy(); greedy && greedy->size() <= e) {
        r.verdict = Verdict::Reducible;
        r.witness = greedy;
        return r;
    }
    const bool hit = search.run(e);
    r.branches = search.branches();
    if (hit) {
        r.verdict = Verdict::Reducible;
        r.witness = search.found();
    } else if (search.truncated()) {
        r.verdict = Verdict::NoWitnessFound;
        r.method = SearchMethod::Bounded;
    }
    return r;
}

NodeSet coloring_to_set(const LayeredDag& g, const LayerColoring& chi) {
    if (chi.size() != g.node_count()) throw Error("coloring must be indexed by node id");
    NodeSet out(g.node_count());
    for (NodeId t = 0; t < g.node_count(); ++t) {
        if (g.is_bit(t)) continue;
        std::int64_t max_in = std::numeric_limits<std::int64_t>::min();
        std::int64_t min_out = std::numeric_limits<std::int64_t>::max();
        for (NodeId p : g.dag.parents(t)) {
            if (g.is_bit(p)) max_in = std::max<std::int64_t>(max_in, chi[p]);
        }
        for (NodeId c : g.dag.children(t)) {
            if (g.is_bit(c)) min_out = std::min<std::int64_t>(min_out, chi[c]);
        }
        if (max_in >= min_out) out.insert(t);
    }
    return out;
}

LayerColoring set_to_coloring(const LayeredDag& g, const NodeSet& s) {
    for (NodeId v : s.members()) {
        if (v < g.node_count() && g.is_bit(v)) {
            throw Error("bit node " + std::to_string(v) + " cannot be deleted");
        }
    }
    auto ending = depth_counted_ending_at(g.dag, g.bits(), s);
    LayerColoring chi(g.node_count(), 0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.is_bit(v)) chi[v] = static_cast<std::uint32_t>(ending[v]);
    }
    return chi;
}

}  // namespace pebble
