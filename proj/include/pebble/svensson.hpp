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
#include "pebble/unique_games.hpp"

namespace pebble {

struct SvenssonParams {
    std::uint32_t alphabet = 2;       // k
    std::uint32_t repetitions = 1;    // t; each test reads 2t right vertices
    double subcube_fraction = 0.5;    // eps; eps * labels must be an integer
    double slack = 0.1;               // delta, used only by auto_layer_count
    std::uint32_t layers = 1;         // L test layers, L + 1 bit layers
};

/// Tuple behind a node of the layered graph. Bits use (layer, w, x); tests use
/// (layer, x, free_coords, v, ws).
struct SvenssonLabel {
    NodeRole role = NodeRole::Bit;
    std::uint32_t layer = 0;
    std::vector<std::uint32_t> x;
    std::uint32_t w = 0;
    std::vector<std::uint32_t> free_coords;
    std::uint32_t v = 0;
    std::vector<std::uint32_t> ws;

    std::string to_string() const;
};

/// Node ids are laid out B_0, T_0, B_1, T_1, ..., B_L (a topological order).
/// Bits within a layer are ordered by (w, x), tests by (x, free_coords, v, ws),
/// all lexicographic.
struct SvenssonGraph {
    LayeredDag graph;
    std::vector<SvenssonLabel> labels;
    std::uint32_t layers = 0;
    std::uint32_t alphabet = 2;
    std::size_t bits_per_layer = 0;
    std::size_t tests_per_layer = 0;

    NodeId bit_id(std::uint32_t layer, std::size_t index) const;
    NodeId test_id(std::uint32_t layer, std::size_t index) const;
    /// Id of b^layer_{w, x}.
    NodeId find_bit(std::uint32_t layer, std::uint32_t w, const std::vector<std::uint32_t>& x) const;
    /// Id of the test in `layer` with the given tuple; throws Error when absent.
    NodeId find_test(std::uint32_t layer, const std::vector<std::uint32_t>& x,
                     const std::vector<std::uint32_t>& free_coords, std::uint32_t v,
                     const std::vector<std::uint32_t>& ws) const;
};

/// Layered bit/test graph of a Unique Games instance. Throws Error when eps * R is
/// not an integer or parameters are degenerate.
SvenssonGraph build_svensson(const UniqueGamesInstance& u, const SvenssonParams& p);

/// Smallest L with delta^2 L >= (tests_per_layer * L)^(1 - delta). Real-valued
/// because it is astronomically large for realistic delta.
double auto_layer_count(double tests_per_layer, double delta);

struct SymmetryReport {
    bool equal_layer_sizes = true;
    /// (b^l, t^l) exists iff (b^l, t^l') exists for every l' >= l, and never for l' < l.
    bool bit_to_test = true;
    /// (t^l, b^(l+1)) exists iff (t^l, b^l') exists for every l' > l, and never for l' <= l.
    bool test_to_bit = true;
    std::uint64_t pairs_checked = 0;
    bool holds() const { return equal_layer_sizes && bit_to_test && test_to_bit; }
};

/// Exhaustive check of the layer symmetry of a layered graph from build_svensson or sparsify
/// with a complete backbone.
SymmetryReport check_layer_symmetry(const SvenssonGraph& g);

/// Test nodes only: u -> v whenever some bit b has u -> b -> v.
/// Node i of the result is the i-th test node in id order.
struct SimplifiedGraph {
    Dag dag;
    std::vector<std::uint32_t> layer;
    std::vector<NodeId> origin;  // id in the layered graph
};

SimplifiedGraph simplify(const SvenssonGraph& g);

/// Keeps bit(i) -> test(j) iff i == j or (i, j) is a backbone edge, and
/// test(j) -> bit(i) iff (j, i) is a backbone edge. Backbone has L + 1 nodes.
SvenssonGraph sparsify(const SvenssonGraph& g, const Dag& backbone);

}  // namespace pebble
