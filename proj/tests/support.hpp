// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Test-only oracles and instance builders. Nothing here calls the BFS core;
// distances come from a plain Floyd-Warshall on the colour matrix.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "mcover/graph.hpp"
#include "mcover/layers.hpp"

namespace mcover::testing {

inline constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 4;

// All-pairs c-distances inside `members` (induced), kInf when unreachable.
inline std::vector<std::uint32_t> floyd(const EdgeColouring& col, Colour c, const std::vector<Vertex>& members) {
    const std::size_t m = members.size();
    std::vector<std::uint32_t> d(m * m, kInf);
    for (std::size_t i = 0; i < m; ++i) {
        d[i * m + i] = 0;
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && col.colour(members[i], members[j]) == c) d[i * m + j] = 1;
    }
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) d[i * m + j] = std::min(d[i * m + j], d[i * m + t] + d[t * m + j]);
    return d;
}

// Diameter of the induced c-graph on `members`, kInf if disconnected.
inline std::uint32_t floyd_diameter(const EdgeColouring& col, Colour c, const std::vector<Vertex>& members) {
    const auto d = floyd(col, c, members);
    std::uint32_t worst = 0;
    for (auto x : d) worst = std::max(worst, x);
    return worst;
}

// Same, keeping only edges between different classes.
inline std::uint32_t partite_diameter(const EdgeColouring& col, Colour c, const std::vector<VertexSet>& classes) {
    std::vector<Vertex> members;
    std::vector<std::size_t> cls;
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (Vertex v : classes[i]) members.push_back(v), cls.push_back(i);
    const std::size_t m = members.size();
    std::vector<std::uint32_t> d(m * m, kInf);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            d[i * m + j] = i == j ? 0 : (cls[i] != cls[j] && col.colour(members[i], members[j]) == c) ? 1 : kInf;
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) d[i * m + j] = std::min(d[i * m + j], d[i * m + t] + d[t * m + j]);
    std::uint32_t worst = 0;
    for (auto x : d) worst = std::max(worst, x);
    return worst;
}

inline std::vector<Vertex> iota_vertices(std::size_t n) {
    std::vector<Vertex> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Vertex>(i);
    return v;
}

// Colouring of a host from an explicit colour list over its present pairs
// (u < v, lexicographic).
inline EdgeColouring colouring_from_list(const HostGraph& host, Colour k, const std::vector<Colour>& list) {
    std::size_t idx = 0;
    std::vector<Colour> m(host.n() * host.n(), kNoColour);
    for (Vertex u = 0; u < host.n(); ++u)
        for (Vertex v = u + 1; v < host.n(); ++v)
            if (host.has_edge(u, v)) m[u * host.n() + v] = list.at(idx++);
    return EdgeColouring(host, k, [&](Vertex u, Vertex v) { return m[u * host.n() + v]; });
}

inline std::size_t edge_count(const HostGraph& host) {
    std::size_t e = 0;
    for (Vertex u = 0; u < host.n(); ++u)
        for (Vertex v = u + 1; v < host.n(); ++v) e += host.has_edge(u, v);
    return e;
}

// Calls f on every k-colouring of the host's present pairs.
inline void for_each_colouring(const HostGraph& host, Colour k, const std::function<void(const EdgeColouring&)>& f) {
    const std::size_t e = edge_count(host);
    std::vector<Colour> list(e, 1);
    while (true) {
        f(colouring_from_list(host, k, list));
        std::size_t i = 0;
        while (i < e && list[i] == k) list[i++] = 1;
        if (i == e) break;
        ++list[i];
    }
}

// Brute-force existence of a split of K_{X,Y}: some side assignment where
// the colour depends only on whether the two ends agree.
inline bool split_exists(const EdgeColouring& col, const std::vector<Vertex>& x, const std::vector<Vertex>& y) {
    const std::size_t m = x.size() + y.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
        auto side = [&](std::size_t i) { return (mask >> i) & 1U; };
        Colour same = kNoColour, cross = kNoColour;
        bool ok = true;
        for (std::size_t i = 0; i < x.size() && ok; ++i)
            for (std::size_t j = 0; j < y.size() && ok; ++j) {
                const Colour c = col.colour(x[i], y[j]);
                Colour& slot = side(i) == side(x.size() + j) ? same : cross;
                if (slot == kNoColour) slot = c;
                ok = slot == c;
            }
        if (ok) return true;
    }
    return false;
}

// A valid layer mapping by construction: vertices are placed on `points`
// with `size` vertices each; a pair 2-separated in both coordinates takes
// colour 3 with probability p3 and colour 4 otherwise; other pairs take
// colour 1 when the first coordinates are within 1, colour 2 otherwise.
struct LayeredInstance {
    EdgeColouring colouring;
    std::vector<std::uint32_t> d1, d2;
};

inline LayeredInstance layered_instance(const std::vector<LayerPoint>& points, std::size_t size, double p3,
                                        std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution three(p3);
    LayeredInstance out;
    for (const auto& p : points)
        for (std::size_t i = 0; i < size; ++i) out.d1.push_back(p.x), out.d2.push_back(p.y);
    const std::size_t n = out.d1.size();
    auto gap = [](std::uint32_t a, std::uint32_t b) { return a > b ? a - b : b - a; };
    std::vector<Colour> m(n * n, kNoColour);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            const auto dx = gap(out.d1[u], out.d1[v]), dy = gap(out.d2[u], out.d2[v]);
            if (dx >= 2 && dy >= 2)
                m[u * n + v] = three(rng) ? 3 : 4;
            else
                m[u * n + v] = dx <= 1 ? 1 : 2;
        }
    out.colouring = EdgeColouring(HostGraph::complete(n), 4, [&](Vertex u, Vertex v) { return m[u * n + v]; });
    return out;
}

} // namespace mcover::testing
