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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pebble/unique_games.hpp"

namespace pebble {

/// A closed-form bound evaluated at named parameters. `exact` is set when every
/// term is rational.
struct BoundReport {
    std::string formula;
    std::vector<std::pair<std::string, double>> bindings;
    double value = 0;
    std::optional<Rational> exact;
};

/// eN + delta g N + N^2 d / g. Throws Error when g < d or g == 0.
BoundReport bound_generic(long long e, long long d, long long g, long long n, long long delta);

/// e d.
BoundReport bound_depth_robust_lower(long long e, long long d);

/// min(eN/8, dN/8).
BoundReport bound_overlay_lower(long long e, long long d, long long n);

/// (e + N/d) 42N + 2g(42N) + (42N/g)(2d + log2(42N)) 42N.
BoundReport bound_overlay_naive(long long e, long long d, long long g, long long n);

/// Same shape with the superconcentrator's node count M and depth D in place of 42N, log2(42N).
BoundReport bound_overlay_naive_measured(long long e, long long d, long long g, long long n, long long sc_nodes,
                                         long long sc_depth);

/// 2eN + 4gN + 43dN^2/g + 24N^2 log2(42N)/g + 42N log2(42N) + N, coefficients as published.
BoundReport bound_overlay_improved(long long e, long long d, long long g, long long n);

/// Sum of the three strategy steps with measured constants:
/// eN + delta g N + N^2 d/g + M D + (e + 2g + 1) N + (d + D) M N / g.
BoundReport bound_overlay_improved_measured(long long e, long long d, long long g, long long n, long long delta,
                                            long long sc_nodes, long long sc_depth);

struct Cor45Parameters {
    double e1 = 0, d1 = 0, e2 = 0, d2 = 0;
};

/// e1 = N^(1/(1+2eps))/k, d1 = k N^(2eps/(1+2eps)), e2 = (1-eps) N^(1/(1+2eps)),
/// d2 = 0.9 N^((1+eps)/(1+2eps)).
Cor45Parameters cor45_parameters(double n, double k, double eps);

struct GapReport {
    Rational c;
    Rational eps;
    long long k = 0;
    Rational upper_coefficient;   // 7/k
    Rational lower_coefficient;   // (1 - eps)/8
    Rational target;              // lower / c^2
    bool upper_within_target = false;
    Rational gap_factor;          // lower / upper
    bool gap_verified = false;    // gap_factor >= c^2
    bool boundary = false;        // c == 1
    double exponent = 0;          // (2 + 2eps)/(1 + 2eps)
    std::optional<double> n;
    std::optional<double> upper_at_n;
    std::optional<double> lower_at_n;
};

/// eps = 1/10, k = ceil(560 c^2 / 9), exact comparisons. Throws Error when c < 1;
/// c == 1 is evaluated with boundary set.
GapReport gap_analysis(Rational c, std::optional<double> n = std::nullopt);

}  // namespace pebble
