// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#include "mcover/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace mcover {

namespace {

// Uniform in [0, bound) without the implementation-defined distributions.
std::uint32_t below(std::mt19937_64& rng, std::uint64_t bound) {
    return static_cast<std::uint32_t>(((rng() >> 32) * bound) >> 32);
}

std::vector<Colour> shuffled_colours(std::mt19937_64& rng, Colour k) {
    std::vector<Colour> perm(k);
    std::iota(perm.begin(), perm.end(), Colour{1});
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[below(rng, i)]);
    return perm;
}

std::vector<Colour> matrix(std::size_t n) { return std::vector<Colour>(n * n, kNoColour); }

EdgeColouring from_matrix(HostGraph host, Colour k, const std::vector<Colour>& m) {
    const std::size_t n = host.n();
    return EdgeColouring(std::move(host), k, [&](Vertex u, Vertex v) { return m[u * n + v]; });
}

void require_positive(std::size_t n) {
    if (n == 0) throw InvalidArgument("generator needs at least one vertex");
}

} // namespace

EdgeColouring random_uniform(std::size_t n, Colour k, std::uint64_t seed) {
    require_positive(n);
    if (k < 1) throw InvalidArgument("need at least one colour");
    std::mt19937_64 rng(seed);
    auto m = matrix(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) m[u * n + v] = static_cast<Colour>(1 + below(rng, k));
    return from_matrix(HostGraph::complete(n), k, m);
}

EdgeColouring random_multipartite(const std::vector<std::size_t>& sizes, Colour k, std::uint64_t seed) {
    if (k < 1) throw InvalidArgument("need at least one colour");
    auto host = HostGraph::multipartite(sizes);
    std::mt19937_64 rng(seed);
    const std::size_t n = host.n();
    auto m = matrix(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (host.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
                m[u * n + v] = static_cast<Colour>(1 + below(rng, k));
    return from_matrix(std::move(host), k, m);
}

EdgeColouring layered_adversarial(std::size_t n, std::uint64_t seed) {
    require_positive(n);
    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> a(n), b(n);
    std::vector<int> side(n);
    // Monotone-ish walk so both coordinates sweep a long range.
    std::int64_t x = 0, y = 0;
    for (std::size_t v = 0; v < n; ++v) {
        a[v] = x;
        b[v] = y;
        side[v] = static_cast<int>(below(rng, 2));
        const auto step = below(rng, 4);
        if (step == 0 || step == 2) ++x;
        if (step == 1 || step == 2) ++y;
        if (step == 3 && below(rng, 2)) y = std::max<std::int64_t>(0, y - 1);
    }
    const auto perm = shuffled_colours(rng, 4);
    auto m = matrix(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const bool near_a = std::llabs(a[u] - a[v]) <= 1, near_b = std::llabs(b[u] - b[v]) <= 1;
            Colour c;
            if (near_a && near_b)
                c = static_cast<Colour>(1 + below(rng, 2));
            else if (near_a)
                c = 1;
            else if (near_b)
                c = 2;
            else
                c = (side[u] == side[v]) != (below(rng, 10) == 0) ? 3 : 4;
            m[u * n + v] = perm[c - 1];
        }
    }
    return from_matrix(HostGraph::complete(n), 4, m);
}

EdgeColouring twin_path(std::size_t n, std::uint64_t seed) {
    require_positive(n);
    std::mt19937_64 rng(seed);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[below(rng, i)]);
    std::vector<int> half(n);
    for (auto& h : half) h = static_cast<int>(below(rng, 2));
    auto m = matrix(n);
    auto set = [&](std::size_t u, std::size_t v, Colour c) {
        if (u > v) std::swap(u, v);
        if (m[u * n + v] == kNoColour) m[u * n + v] = c;
    };
    for (std::size_t i = 0; i + 1 < n; ++i) set(i, i + 1, 1);
    for (std::size_t i = 0; i + 1 < n; ++i) set(order[i], order[i + 1], 2);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) set(u, v, half[u] == half[v] ? 3 : 4);
    return from_matrix(HostGraph::complete(n), 4, m);
}

EdgeColouring component_blowup(std::size_t n, std::uint64_t seed) {
    require_positive(n);
    std::mt19937_64 rng(seed);
    std::uint32_t side = 2;
    while (side * side * side < n / 2 && side < 8) ++side;
    std::vector<GridPoint> of_vertex;
    std::set<GridPoint> used;
    while (of_vertex.size() < n) {
        GridPoint p{below(rng, side), below(rng, side), below(rng, side)};
        if (!used.insert(p).second && used.size() < side * side * side) continue;
        const auto copies = 1 + below(rng, 3);
        for (std::uint32_t i = 0; i < copies && of_vertex.size() < n; ++i) of_vertex.push_back(p);
    }
    const auto perm = shuffled_colours(rng, 4);
    auto m = matrix(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            Colour c = 4;
            for (std::size_t i = 0; i < 3; ++i)
                if (of_vertex[u][i] == of_vertex[v][i]) {
                    c = static_cast<Colour>(i + 1);
                    break;
                }
            m[u * n + v] = perm[c - 1];
        }
    }
    return from_matrix(HostGraph::complete(n), 4, m);
}

GridPointSet sharpness_points() {
    return GridPointSet(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
}

EdgeColouring sharpness_colouring() { return colouring_from_points(sharpness_points()); }

EdgeColouring matching_gap_example(std::size_t m, std::uint64_t seed) {
    const std::size_t n = m + 6;
    auto host = HostGraph::with_missing(n, {{0, 1}, {2, 3}, {4, 5}});
    auto col = matrix(n);
    auto set = [&](std::size_t u, std::size_t v, Colour c) { col[std::min(u, v) * n + std::max(u, v)] = c; };
    // v1..v6 are 0..5.
    set(0, 2, 1), set(2, 4, 1), set(0, 4, 1), set(3, 5, 1);
    set(1, 3, 2), set(1, 4, 2), set(3, 4, 2), set(0, 5, 2);
    set(1, 2, 3), set(1, 5, 3), set(2, 5, 3), set(0, 3, 3);
    for (std::size_t u = 6; u < n; ++u) {
        for (std::size_t v : {0, 2, 4}) set(v, u, 1);
        for (std::size_t v : {1, 3}) set(v, u, 2);
        set(5, u, 3);
    }
    std::mt19937_64 rng(seed);
    for (std::size_t u = 6; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) set(u, v, static_cast<Colour>(1 + below(rng, 3)));
    return from_matrix(std::move(host), 3, col);
}

} // namespace mcover
