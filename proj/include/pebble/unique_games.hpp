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
#include <vector>

#include <boost/rational.hpp>

#include "pebble/graph.hpp"
#include "pebble/rng.hpp"

namespace pebble {

using Rational = boost::rational<long long>;

/// Constraint on edge (v, w): labels agree when label(v) == pi[label(w)].
struct UgConstraint {
    std::uint32_t v = 0;
    std::uint32_t w = 0;
    std::vector<std::uint32_t> pi;
};

/// Bipartite Unique Games instance on left side [0, left), right side [0, right), labels [0, labels).
struct UniqueGamesInstance {
    std::uint32_t left = 0;
    std::uint32_t right = 0;
    std::uint32_t labels = 0;
    std::vector<UgConstraint> edges;

    /// Throws Error unless ids are in range, every pi is a bijection on [labels],
    /// no (v, w) pair repeats, and both sides are regular.
    void validate() const;

    /// Right-side neighbours of v, in edge order.
    std::vector<std::uint32_t> neighbors(std::uint32_t v) const;
    /// The permutation on edge (v, w); throws Error when absent.
    const std::vector<std::uint32_t>& permutation(std::uint32_t v, std::uint32_t w) const;
};

/// Fraction of constraints satisfied by the labeling.
Rational ug_satisfied_fraction(const UniqueGamesInstance& u, const std::vector<std::uint32_t>& left_labels,
                               const std::vector<std::uint32_t>& right_labels);

/// One left vertex, one right vertex, two labels, the swap permutation.
UniqueGamesInstance example1_instance();

/// Biregular instance: each left vertex has `degree` distinct right neighbours,
/// permutations uniform. right must divide left * degree.
UniqueGamesInstance random_ug_instance(Rng& rng, std::uint32_t left, std::uint32_t right, std::uint32_t labels,
                                       std::uint32_t degree);

}  // namespace pebble
