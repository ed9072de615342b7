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

#include "pebble/unique_games.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pebble {

void UniqueGamesInstance::validate() const {
    if (labels == 0) throw Error("unique games instance needs at least one label");
    std::vector<std::size_t> left_deg(left, 0), right_deg(right, 0);
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const auto& e : edges) {
        if (e.v >= left || e.w >= right) throw Error("constraint endpoint out of range");
        if (!seen.emplace(e.v, e.w).second) {
            throw Error("duplicate constraint (" + std::to_string(e.v) + "," + std::to_string(e.w) + ")");
        }
        if (e.pi.size() != labels) throw Error("permutation length differs from label count");
        std::vector<bool> hit(labels, false);
        for (std::uint32_t img : e.pi) {
            if (img >= labels || hit[img]) throw Error("constraint permutation is not a bijection");
            hit[img] = true;
        }
        ++left_deg[e.v];
        ++right_deg[e.w];
    }
    auto regular = [](const std::vector<std::size_t>& deg) {
        return std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) == deg.end();
    };
    if (!regular(left_deg) || !regular(right_deg)) throw Error("constraint graph is not biregular");
}

std::vector<std::uint32_t> UniqueGamesInstance::neighbors(std::uint32_t v) const {
    std::vector<std::uint32_t> out;
    for (const auto& e : edges) {
        if (e.v == v) out.push_back(e.w);
    }
    return out;
}

const std::vector<std::uint32_t>& UniqueGamesInstance::permutation(std::uint32_t v, std::uint32_t w) const {
    for (const auto& e : edges) {
        if (e.v == v && e.w == w) return e.pi;
    }
    throw Error("no constraint on (" + std::to_string(v) + "," + std::to_string(w) + ")");
}

Rational ug_satisfied_fraction(const UniqueGamesInstance& u, const std::vector<std::uint32_t>& left_labels,
                               const std::vector<std::uint32_t>& right_labels) {
    if (left_labels.size() != u.left || right_labels.size() != u.right) {
        throw Error("labeling must cover both sides");
    }
    if (u.edges.empty()) return Rational(1);
    long long good = 0;
    for (const auto& e : u.edges) {
        const std::uint32_t lw = right_labels[e.w];
        if (lw >= u.labels || left_labels[e.v] >= u.labels) throw Error("label out of range");
        if (left_labels[e.v] == e.pi[lw]) ++good;
    }
    return Rational(good, static_cast<long long>(u.edges.size()));
}

UniqueGamesInstance example1_instance() {
    UniqueGamesInstance u;
    u.left = 1;
    u.right = 1;
    u.labels = 2;
    u.edges.push_back({0, 0, {1, 0}});
    return u;
}

UniqueGamesInstance random_ug_instance(Rng& rng, std::uint32_t left, std::uint32_t right, std::uint32_t labels,
                                       std::uint32_t degree) {
    if (right == 0 || degree > right || (std::uint64_t{left} * degree) % right != 0) {
        throw Error("random_ug_instance: need degree <= right and right | left * degree");
    }
    UniqueGamesInstance u;
    u.left = left;
    u.right = right;
    u.labels = labels;
    for (std::uint32_t v = 0; v < left; ++v) {
        for (std::uint32_t j = 0; j < degree; ++j) {
            std::vector<std::uint32_t> pi(labels);
            std::iota(pi.begin(), pi.end(), 0U);
            for (std::size_t i = labels; i > 1; --i) std::swap(pi[i - 1], pi[rng.uniform_below(i)]);
            u.edges.push_back({v, static_cast<std::uint32_t>((std::uint64_t{v} * degree + j) % right), std::move(pi)});
        }
    }
    u.validate();
    return u;
}

}  // namespace pebble
