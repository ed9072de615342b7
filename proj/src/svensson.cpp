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

#include "pebble/svensson.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pebble {

namespace {

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

/// All tuples in [radix]^len, lexicographic.
std::vector<std::vector<std::uint32_t>> all_tuples(std::uint32_t radix, std::size_t len) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur(len, 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = len;
        while (i > 0 && cur[i - 1] + 1 == radix) cur[--i] = 0;
        if (i == 0) break;
        ++cur[i - 1];
    }
    return out;
}

/// Sequences of length len over the given values, lexicographic in value order.
std::vector<std::vector<std::uint32_t>> all_sequences(std::vector<std::uint32_t> values, std::size_t len) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<std::vector<std::uint32_t>> out;
    if (values.empty()) return out;
    for (auto& idx : all_tuples(static_cast<std::uint32_t>(values.size()), len)) {
        for (auto& i : idx) i = values[i];
        out.push_back(std::move(idx));
    }
    return out;
}

std::size_t tuple_index(const std::vector<std::uint32_t>& x, std::uint32_t radix) {
    std::size_t idx = 0;
    for (std::uint32_t c : x) {
        if (c >= radix) throw Error("tuple entry out of range");
        idx = idx * radix + c;
    }
    return idx;
}

// Digits run together when all are single-digit, comma-separated otherwise.
std::string digits(const std::vector<std::uint32_t>& xs) {
    const bool wide = std::any_of(xs.begin(), xs.end(), [](std::uint32_t c) { return c > 9; });
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (wide && i ? "," : "") + std::to_string(xs[i]);
    return s;
}

}  // namespace

std::string SvenssonLabel::to_string() const {
    std::ostringstream os;
    if (role == NodeRole::Bit) {
        os << "b" << layer << ":w" << w << ":x" << digits(x);
    } else {
        os << "t" << layer << ":x" << digits(x) << ":S" << digits(free_coords) << ":v" << v << ":w" << digits(ws);
    }
    return os.str();
}

NodeId SvenssonGraph::bit_id(std::uint32_t layer, std::size_t index) const {
    if (layer > layers || index >= bits_per_layer) throw Error("bit index out of range");
    return static_cast<NodeId>(layer * (bits_per_layer + tests_per_layer) + index);
}

NodeId SvenssonGraph::test_id(std::uint32_t layer, std::size_t index) const {
    if (layer >= layers || index >= tests_per_layer) throw Error("test index out of range");
    return static_cast<NodeId>(layer * (bits_per_layer + tests_per_layer) + bits_per_layer + index);
}

NodeId SvenssonGraph::find_bit(std::uint32_t layer, std::uint32_t w, const std::vector<std::uint32_t>& x) const {
    const std::size_t per_w = static_cast<std::size_t>(ipow(alphabet, x.size()));
    return bit_id(layer, w * per_w + tuple_index(x, alphabet));
}

NodeId SvenssonGraph::find_test(std::uint32_t layer, const std::vector<std::uint32_t>& x,
                                const std::vector<std::uint32_t>& free_coords, std::uint32_t v,
                                const std::vector<std::uint32_t>& ws) const {
    for (std::size_t i = 0; i < tests_per_layer; ++i) {
        const auto& l = labels[test_id(0, i)];
        if (l.x == x && l.free_coords == free_coords && l.v == v && l.ws == ws) return test_id(layer, i);
    }
    throw Error("no such test tuple");
}

SvenssonGraph build_svensson(const UniqueGamesInstance& u, const SvenssonParams& p) {
    u.validate();
    if (p.alphabet < 2) throw Error("alphabet size k must be at least 2");
    if (p.repetitions < 1) throw Error("repetition parameter t must be at least 1");
    if (p.layers < 1) throw Error("need at least one test layer");
    const double free_real = p.subcube_fraction * u.labels;
    const auto free_count = static_cast<std::size_t>(std::llround(free_real));
    if (p.subcube_fraction <= 0 || std::fabs(free_real - static_cast<double>(free_count)) > 1e-9) {
        throw Error("eps * R must be a positive integer");
    }

    const std::uint32_t k = p.alphabet, R = u.labels;
    const auto xs = all_tuples(k, R);
    const auto subsets = all_tuples(R, free_count);

    struct TestTuple {
        std::vector<std::uint32_t> x, s;
        std::uint32_t v;
        std::vector<std::uint32_t> ws;
    };
    std::vector<TestTuple> tests;
    for (const auto& x : xs) {
        for (const auto& s : subsets) {
            for (std::uint32_t v = 0; v < u.left; ++v) {
                for (auto& ws : all_sequences(u.neighbors(v), 2 * p.repetitions)) tests.push_back({x, s, v, ws});
            }
        }
    }

    SvenssonGraph g;
    g.layers = p.layers;
    g.alphabet = k;
    g.bits_per_layer = static_cast<std::size_t>(u.right) * xs.size();
    g.tests_per_layer = tests.size();
    const std::size_t stride = g.bits_per_layer + g.tests_per_layer;
    const std::size_t n = stride * p.layers + g.bits_per_layer;

    g.labels.resize(n);
    std::vector<std::uint32_t> layer(n);
    std::vector<NodeRole> role(n);
    for (std::uint32_t l = 0; l <= p.layers; ++l) {
        for (std::uint32_t w = 0; w < u.right; ++w) {
            for (std::size_t xi = 0; xi < xs.size(); ++xi) {
                const NodeId id = g.bit_id(l, w * xs.size() + xi);
                g.labels[id] = {NodeRole::Bit, l, xs[xi], w, {}, 0, {}};
                layer[id] = l;
                role[id] = NodeRole::Bit;
            }
        }
        if (l == p.layers) break;
        for (std::size_t ti = 0; ti < tests.size(); ++ti) {
            const NodeId id = g.test_id(l, ti);
            const auto& t = tests[ti];
            g.labels[id] = {NodeRole::Test, l, t.x, 0, t.s, t.v, t.ws};
            layer[id] = l;
            role[id] = NodeRole::Test;
        }
    }

    std::vector<Edge> edges;
    for (std::size_t ti = 0; ti < tests.size(); ++ti) {
        const auto& t = tests[ti];
        // (w, z) pairs feeding the test, and (w, z + 1) pairs it feeds.
        std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> in, out;
        for (std::uint32_t w : t.ws) {
            const auto& pi = u.permutation(t.v, w);
            std::vector<bool> fixed(R);
            for (std::uint32_t j = 0; j < R; ++j) {
                fixed[j] = std::find(t.s.begin(), t.s.end(), pi[j]) == t.s.end();
            }
            for (const auto& z : xs) {
                bool member = true;
                for (std::uint32_t j = 0; j < R && member; ++j) member = !fixed[j] || z[j] == t.x[pi[j]];
                if (!member) continue;
                auto shifted = z;
                for (auto& c : shifted) c = (c + 1) % k;
                in.emplace_back(w, z);
                out.emplace_back(w, std::move(shifted));
            }
        }
        for (auto* list : {&in, &out}) {
            std::sort(list->begin(), list->end());
            list->erase(std::unique(list->begin(), list->end()), list->end());
        }
        for (std::uint32_t lt = 0; lt < p.layers; ++lt) {
            const NodeId tid = g.test_id(lt, ti);
            for (std::uint32_t lb = 0; lb <= p.layers; ++lb) {
                if (lb <= lt) {
                    for (const auto& [w, z] : in) edges.emplace_back(g.find_bit(lb, w, z), tid);
                } else {
                    for (const auto& [w, z] : out) edges.emplace_back(tid, g.find_bit(lb, w, z));
                }
            }
        }
    }
    g.graph = LayeredDag(Dag(n, std::move(edges)), std::move(layer), std::move(role));
    return g;
}

double auto_layer_count(double tests_per_layer, double delta) {
    if (!(delta > 0 && delta < 1) || tests_per_layer <= 0) throw Error("auto_layer_count: need 0 < delta < 1");
    return std::ceil(std::pow(std::pow(tests_per_layer, 1 - delta) / (delta * delta), 1 / delta));
}

SimplifiedGraph simplify(const SvenssonGraph& g) {
    const Dag& d = g.graph.dag;
    SimplifiedGraph out;
    std::vector<NodeId> index(d.node_count(), 0);
    for (NodeId v = 0; v < d.node_count(); ++v) {
        if (g.graph.is_bit(v)) continue;
        index[v] = static_cast<NodeId>(out.origin.size());
        out.origin.push_back(v);
        out.layer.push_back(g.graph.layer[v]);
    }
    std::vector<Edge> edges;
    for (NodeId b = 0; b < d.node_count(); ++b) {
        if (!g.graph.is_bit(b)) continue;
        for (NodeId from : d.parents(b)) {
            for (NodeId to : d.children(b)) {
                if (!g.graph.is_bit(from) && !g.graph.is_bit(to)) edges.emplace_back(index[from], index[to]);
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.dag = Dag(out.origin.size(), std::move(edges));
    return out;
}

SvenssonGraph sparsify(const SvenssonGraph& g, const Dag& backbone) {
    if (backbone.node_count() != static_cast<std::size_t>(g.layers) + 1) {
        throw Error("backbone must have L + 1 = " + std::to_string(g.layers + 1) + " nodes");
    }
    const auto& layer = g.graph.layer;
    std::vector<Edge> kept;
    for (auto [a, b] : g.graph.dag.edges()) {
        const std::uint32_t la = layer[a], lb = layer[b];
        const bool keep = g.graph.is_bit(a) ? (la == lb || backbone.has_edge(la, lb)) : backbone.has_edge(la, lb);
        if (keep) kept.emplace_back(a, b);
    }
    SvenssonGraph out = g;
    out.graph = LayeredDag(Dag(g.graph.node_count(), std::move(kept)), g.graph.layer, g.graph.role);
    return out;
}

SymmetryReport check_layer_symmetry(const SvenssonGraph& g) {
    SymmetryReport r;
    const auto& d = g.graph.dag;
    const std::uint32_t top = g.layers;
    std::vector<std::size_t> bits(top + 1, 0), tests(top + 1, 0);
    for (const auto& lab : g.labels) (lab.role == NodeRole::Bit ? bits : tests)[lab.layer] += 1;
    for (std::uint32_t l = 0; l <= top; ++l) {
        if (bits[l] != g.bits_per_layer) r.equal_layer_sizes = false;
        if (l < top && tests[l] != g.tests_per_layer) r.equal_layer_sizes = false;
    }
    for (std::uint32_t l = 0; l <= top; ++l) {
        for (std::size_t bi = 0; bi < g.bits_per_layer; ++bi) {
            const NodeId b = g.bit_id(l, bi);
            for (std::size_t ti = 0; ti < g.tests_per_layer; ++ti) {
                const bool here = l < top && d.has_edge(b, g.test_id(l, ti));
                for (std::uint32_t lt = 0; lt < top; ++lt) {
                    ++r.pairs_checked;
                    const bool want = lt >= l && here;
                    if (d.has_edge(b, g.test_id(lt, ti)) != want) r.bit_to_test = false;
                }
            }
        }
    }
    for (std::uint32_t l = 0; l < top; ++l) {
        for (std::size_t ti = 0; ti < g.tests_per_layer; ++ti) {
            const NodeId t = g.test_id(l, ti);
            for (std::size_t bi = 0; bi < g.bits_per_layer; ++bi) {
                const bool here = d.has_edge(t, g.bit_id(l + 1, bi));
                for (std::uint32_t lb = 0; lb <= top; ++lb) {
                    ++r.pairs_checked;
                    const bool want = lb > l && here;
                    if (d.has_edge(t, g.bit_id(lb, bi)) != want) r.test_to_bit = false;
                }
            }
        }
    }
    return r;
}

}  // namespace pebble
