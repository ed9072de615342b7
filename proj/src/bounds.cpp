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

#include "pebble/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace pebble {

namespace {

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

void require_positive(std::initializer_list<long long> xs) {
    for (long long x : xs) {
        if (x <= 0) throw Error("bound parameters must be positive");
    }
}

void require_nonnegative(long long e) {
    if (e < 0) throw Error("set size e must be nonnegative");
}

void require_interval(long long g, long long d) {
    if (g < d) throw Error("interval length g must be at least d");
}

BoundReport exact_report(std::string formula, std::vector<std::pair<std::string, double>> bindings, Rational v) {
    return {std::move(formula), std::move(bindings), to_double(v), v};
}

std::vector<std::pair<std::string, double>> bind(std::initializer_list<std::pair<const char*, long long>> xs) {
    std::vector<std::pair<std::string, double>> out;
    for (auto [k, v] : xs) out.emplace_back(k, static_cast<double>(v));
    return out;
}

}  // namespace

BoundReport bound_generic(long long e, long long d, long long g, long long n, long long delta) {
    require_nonnegative(e);
    require_positive({d, g, n});
    require_interval(g, d);
    Rational v = Rational(e * n) + Rational(delta * g * n) + Rational(n * n * d, g);
    return exact_report("eN + delta*g*N + N^2*d/g", bind({{"e", e}, {"d", d}, {"g", g}, {"N", n}, {"delta", delta}}),
                        v);
}

BoundReport bound_depth_robust_lower(long long e, long long d) {
    require_nonnegative(e);
    require_nonnegative(d);
    return exact_report("e*d", bind({{"e", e}, {"d", d}}), Rational(e * d));
}

BoundReport bound_overlay_lower(long long e, long long d, long long n) {
    require_nonnegative(e);
    require_nonnegative(d);
    require_positive({n});
    Rational v = std::min(Rational(e * n, 8), Rational(d * n, 8));
    return exact_report("min(eN/8, dN/8)", bind({{"e", e}, {"d", d}, {"N", n}}), v);
}

BoundReport bound_overlay_naive(long long e, long long d, long long g, long long n) {
    require_nonnegative(e);
    require_positive({d, g, n});
    require_interval(g, d);
    const double N = static_cast<double>(n), m = 42 * N, lg = std::log2(m);
    const double v = (e + N / d) * m + 2.0 * g * m + (m / g) * (2.0 * d + lg) * m;
    return {"(e + N/d)*42N + 2g*42N + (42N/g)*(2d + log2(42N))*42N", bind({{"e", e}, {"d", d}, {"g", g}, {"N", n}}), v,
            std::nullopt};
}

BoundReport bound_overlay_naive_measured(long long e, long long d, long long g, long long n, long long sc_nodes,
                                         long long sc_depth) {
    require_nonnegative(e);
    require_positive({d, g, n, sc_nodes, sc_depth});
    require_interval(g, d);
    const Rational m(sc_nodes);
    Rational v = (Rational(e) + Rational(n, d)) * m + Rational(2 * g) * m + m / g * Rational(2 * d + sc_depth) * m;
    return exact_report("(e + N/d)*M + 2g*M + (M/g)*(2d + D)*M",
                        bind({{"e", e}, {"d", d}, {"g", g}, {"N", n}, {"M", sc_nodes}, {"D", sc_depth}}), v);
}

BoundReport bound_overlay_improved(long long e, long long d, long long g, long long n) {
    require_nonnegative(e);
    require_positive({d, g, n});
    require_interval(g, d);
    const double N = static_cast<double>(n), lg = std::log2(42 * N);
    const double v = 2.0 * e * N + 4.0 * g * N + 43.0 * d * N * N / g + 24.0 * N * N * lg / g + 42.0 * N * lg + N;
    return {"2eN + 4gN + 43dN^2/g + 24N^2*log2(42N)/g + 42N*log2(42N) + N",
            bind({{"e", e}, {"d", d}, {"g", g}, {"N", n}}), v, std::nullopt};
}

BoundReport bound_overlay_improved_measured(long long e, long long d, long long g, long long n, long long delta,
                                            long long sc_nodes, long long sc_depth) {
    require_nonnegative(e);
    require_positive({d, g, n, sc_nodes, sc_depth});
    require_interval(g, d);
    const long long m = sc_nodes, D = sc_depth;
    Rational step1 = Rational(e * n) + Rational(delta * g * n) + Rational(n * n * d, g);
    Rational step2(m * D);
    Rational step3 = Rational((e + 2 * g + 1) * n) + Rational((d + D) * m * n, g);
    return exact_report("eN + delta*g*N + N^2*d/g + M*D + (e + 2g + 1)*N + (d + D)*M*N/g",
                        bind({{"e", e}, {"d", d}, {"g", g}, {"N", n}, {"delta", delta}, {"M", m}, {"D", D}}),
                        step1 + step2 + step3);
}

Cor45Parameters cor45_parameters(double n, double k, double eps) {
    if (!(n > 0) || k < 2 || !(eps > 0)) throw Error("cor45_parameters needs N > 0, k >= 2, eps > 0");
    const double denom = 1 + 2 * eps;
    Cor45Parameters p;
    p.e1 = std::pow(n, 1 / denom) / k;
    p.d1 = k * std::pow(n, 2 * eps / denom);
    p.e2 = (1 - eps) * std::pow(n, 1 / denom);
    p.d2 = 0.9 * std::pow(n, (1 + eps) / denom);
    return p;
}

GapReport gap_analysis(Rational c, std::optional<double> n) {
    if (c < Rational(1)) throw Error("approximation factor c must be at least 1");
    GapReport r;
    r.c = c;
    r.boundary = c == Rational(1);
    r.eps = Rational(1, 10);
    const Rational c2 = c * c;
    const Rational raw = Rational(560) * c2 / Rational(9);
    r.k = raw.numerator() / raw.denominator() + (raw.numerator() % raw.denominator() != 0 ? 1 : 0);
    r.upper_coefficient = Rational(7, r.k);
    r.lower_coefficient = (Rational(1) - r.eps) / Rational(8);
    r.target = r.lower_coefficient / c2;
    r.upper_within_target = r.upper_coefficient <= r.target;
    r.gap_factor = r.lower_coefficient / r.upper_coefficient;
    r.gap_verified = r.gap_factor >= c2;
    r.exponent = to_double((Rational(2) + Rational(2) * r.eps) / (Rational(1) + Rational(2) * r.eps));
    if (n) {
        r.n = n;
        r.upper_at_n = to_double(r.upper_coefficient) * std::pow(*n, r.exponent);
        r.lower_at_n = to_double(r.lower_coefficient) * std::pow(*n, r.exponent);
    }
    return r;
}

}  // namespace pebble
