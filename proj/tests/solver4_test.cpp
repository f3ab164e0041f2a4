// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <map>
#include <set>

#include "mcover/generate.hpp"
#include "mcover/grid.hpp"
#include "mcover/oracle.hpp"
#include "mcover/solver4.hpp"
#include "support.hpp"

namespace {

using namespace mcover;
using namespace mcover::testing;

// Each part connected in its colour within `bound` (kInf: connectivity
// only), at most three parts, every vertex covered.
void expect_cover(const EdgeColouring& col, const Cover& cover, std::uint32_t bound) {
    ASSERT_GE(cover.parts.size(), 1u);
    ASSERT_LE(cover.parts.size(), 3u);
    VertexSet seen(col.n());
    for (const auto& part : cover.parts) {
        const auto d = floyd_diameter(col, part.colour, part.set.to_vector());
        ASSERT_LT(d, kInf);
        ASSERT_LE(d, bound);
        seen |= part.set;
    }
    EXPECT_EQ(seen.count(), col.n());
}

// Blow-up of a random point set of {0..m-1}^3: each point becomes `f`
// vertices joined in colour 1, other pairs follow colouring_from_points.
EdgeColouring blown_points(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::uint32_t m = 2 + static_cast<std::uint32_t>(seed % 4);
    const std::size_t size = std::min<std::size_t>(4 + rng() % 10, m * m * m);
    std::set<GridPoint> pts;
    while (pts.size() < size)
        pts.insert({static_cast<std::uint32_t>(rng() % m), static_cast<std::uint32_t>(rng() % m),
                    static_cast<std::uint32_t>(rng() % m)});
    const auto base = colouring_from_points(GridPointSet(3, std::vector<GridPoint>(pts.begin(), pts.end())));
    const std::size_t f = 2 + seed % 2;
    return EdgeColouring(HostGraph::complete(size * f), 4, [&](Vertex u, Vertex v) {
        return u / f == v / f ? Colour{1} : base.colour(static_cast<Vertex>(u / f), static_cast<Vertex>(v / f));
    });
}

TEST(Gyarfas, SingleColourIsOnePart) {
    const EdgeColouring col(HostGraph::complete(6), 4, [](Vertex, Vertex) { return Colour{2}; });
    const auto cover = gyarfas_connectivity_cover(col);
    ASSERT_EQ(cover.parts.size(), 1u);
    EXPECT_FALSE(cover.claimed_bound);
    expect_cover(col, cover, kInf);
}

TEST(Gyarfas, SharpnessColouring) {
    const auto col = sharpness_colouring();
    ASSERT_EQ(col.n(), 7u);
    const auto cover = gyarfas_connectivity_cover(col);
    EXPECT_EQ(cover.parts.size(), 3u);
    expect_cover(col, cover, kInf);
    // As a colouring it does have a two-component cover (colour 2 twice).
    const auto two = min_cover_bruteforce(col, 2, std::nullopt);
    ASSERT_TRUE(two);
    EXPECT_TRUE(verify_cover(col, *two, std::nullopt, 2).valid);
}

TEST(Gyarfas, RandomColourings) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 5 + seed % 96;
        const auto col = seed % 3 == 0 ? random_uniform(n, 4, seed) : seed % 3 == 1 ? component_blowup(n, seed) : blown_points(seed);
        const auto cover = gyarfas_connectivity_cover(col);
        expect_cover(col, cover, kInf);
    }
    EXPECT_THROW(gyarfas_connectivity_cover(random_uniform(6, 3, 1)), InvalidArgument);
}

TEST(SmallDiameters, SmallComponentsGiveBound30) {
    std::size_t hits = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto col = blown_points(seed);
        SolveTrace trace;
        const auto cover = reduce_small_diameters(col, 2, &trace);
        if (!cover) continue;
        ++hits;
        EXPECT_EQ(cover->claimed_bound, Bound(30));
        expect_cover(col, *cover, 30);
        ASSERT_TRUE(trace.recoloured_diameter);
        EXPECT_LE(*trace.recoloured_diameter, 30);
    }
    EXPECT_GT(hits, 50u);
}

TEST(SmallDiameters, NotApplicableWithTwoLargeColours) {
    // Colours 1 and 2 are paths of length 9 on 10 vertices.
    const EdgeColouring col(HostGraph::complete(10), 4, [](Vertex u, Vertex v) {
        if (v == u + 1) return Colour{1};
        if (v == u + 2 && u % 2 == 0) return Colour{2};
        if (v == u + 3 && u % 2 == 1) return Colour{2};
        return static_cast<Colour>(3 + (u + v) % 2);
    });
    const MonoMetrics m(col);
    ASSERT_GT(m.colour_diameter(1), 2u);
    ASSERT_GT(m.colour_diameter(2), 2u);
    EXPECT_FALSE(reduce_small_diameters(col, 2));
}

TEST(SmallDiameters, RecolouringPreservesLowColourComponents) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto col = blown_points(seed);
        SolveTrace trace;
        if (const auto cover = reduce_small_diameters(col, kMainBound, &trace)) {
            expect_cover(col, *cover, kMainBound);
            ASSERT_TRUE(trace.recoloured_diameter);
            if (*trace.recoloured_diameter >= 0) {
                EXPECT_LE(*trace.recoloured_diameter, 30);
            }
        }
    }
}

TEST(ConnectedCase, DefaultGateNotApplicableOnSmallDiameters) {
    const auto col = random_uniform(40, 4, 3);
    const MonoMetrics m(col);
    EXPECT_FALSE(solve_connected_case(col, m));
}

TEST(ConnectedCase, LoweredGateOnConnectedColourings) {
    std::size_t emitted = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 20 + seed * 5;
        const auto col = seed % 2 ? random_uniform(n, 4, seed) : twin_path(n, seed);
        const MonoMetrics m(col);
        SolveTrace trace;
        if (const auto cover = solve_connected_case(col, m, 0, &trace)) {
            ++emitted;
            ASSERT_TRUE(cover->claimed_bound);
            EXPECT_LE(*cover->claimed_bound, kMainBound);
            expect_cover(col, *cover, kMainBound);
        }
    }
    EXPECT_GT(emitted, 0u);
}

TEST(ConnectedCase, LongPathAndDenseColour) {
    // Colour 1 is a Hamiltonian path, 3 and 4 are joined step-2 and step-3
    // paths, colour 2 takes the rest.
    const std::size_t n = 60;
    const EdgeColouring col(HostGraph::complete(n), 4, [](Vertex u, Vertex v) {
        if (v == u + 1) return Colour{1};
        if (v == u + 2 || (u == 0 && v == 5)) return Colour{3};
        if (v == u + 3 || (u <= 1 && v == u + 4)) return Colour{4};
        return Colour{2};
    });
    const MonoMetrics m(col);
    ASSERT_TRUE(m.spans(1) && m.spans(2) && m.spans(3) && m.spans(4));
    const std::uint32_t gate =
        std::min({m.colour_diameter(1), m.colour_diameter(2), m.colour_diameter(3), m.colour_diameter(4)}) - 1;
    const auto cover = solve_connected_case(col, m, gate);
    ASSERT_TRUE(cover);
    expect_cover(col, *cover, kMainBound);
}

TEST(IntersectingCase, GateFailsOnDisjointLargeComponents) {
    // Colour 1 has two long path components, each disjoint from a colour-2 component.
    const std::size_t n = 80;
    const EdgeColouring col(HostGraph::complete(n), 4, [](Vertex u, Vertex v) {
        if (v == u + 1 && u != 39) return Colour{1};
        if (u < 40 && v >= 40) return Colour{3};
        return (u + v) % 2 ? Colour{2} : Colour{4};
    });
    const MonoMetrics m(col);
    ASSERT_GE(m.components(1).parts.size(), 2u);
    EXPECT_FALSE(solve_intersecting_case(col, m));
}

TEST(IntersectingCase, TwinPathsAreCovered) {
    std::size_t emitted = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto col = twin_path(40 + seed * 7, seed);
        const MonoMetrics m(col);
        SolveTrace trace;
        if (const auto cover = solve_intersecting_case(col, m, 20, &trace)) {
            ++emitted;
            expect_cover(col, *cover, kMainBound);
        }
    }
    RecordProperty("emitted", static_cast<int>(emitted));
}

TEST(DisjointCase, EmittedCoversAreValid) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t n = 40 + seed * 5;
        const auto col = seed % 2 ? layered_adversarial(n, seed) : twin_path(n, seed);
        const MonoMetrics m(col);
        if (const auto cover = solve_disjoint_case(col, m)) expect_cover(col, *cover, kMainBound);
    }
}

TEST(Solve4, MonochromaticK10) {
    const EdgeColouring col(HostGraph::complete(10), 4, [](Vertex, Vertex) { return Colour{3}; });
    const auto sol = solve4(col);
    EXPECT_EQ(sol.trace.branch, Branch::SpanningColour);
    ASSERT_EQ(sol.cover.parts.size(), 1u);
    EXPECT_EQ(sol.cover.claimed_bound, Bound(1));
    EXPECT_TRUE(sol.report.valid);
}

TEST(Solve4, MissingColourGivesStars) {
    // Vertex 0 never sees colour 4.
    const EdgeColouring col(HostGraph::complete(12), 4, [](Vertex u, Vertex v) {
        if (u == 0) return static_cast<Colour>(1 + v % 3);
        return static_cast<Colour>(1 + (u * v) % 4);
    });
    const auto sol = solve4(col);
    if (sol.trace.branch == Branch::MissingColourStar) {
        EXPECT_EQ(sol.cover.parts.size(), 3u);
        EXPECT_EQ(sol.cover.claimed_bound, Bound(2));
    }
    expect_cover(col, sol.cover, kMainBound);
}

TEST(Solve4, RandomUniformAcrossSizes) {
    for (std::size_t n : {20u, 50u, 100u, 300u})
        for (std::uint64_t seed = 0; seed < (n == 300 ? 3u : 10u); ++seed) {
            const auto col = random_uniform(n, 4, seed);
            const auto sol = solve4(col);
            EXPECT_NE(sol.trace.branch, Branch::ConnectivityFallback);
            EXPECT_TRUE(verify_cover(col, sol.cover, kMainBound, 3).valid) << n << " " << seed;
            if (n <= 100) expect_cover(col, sol.cover, kMainBound);
        }
}

TEST(Solve4, AdversarialGenerators) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t n = 20 + seed * 6;
        const EdgeColouring cols[] = {layered_adversarial(n, seed), twin_path(n, seed), component_blowup(n, seed),
                                      blown_points(seed)};
        for (const auto& col : cols) {
            const auto sol = solve4(col);
            EXPECT_NE(sol.trace.branch, Branch::ConnectivityFallback) << sol.trace.diagnostic;
            EXPECT_TRUE(verify_cover(col, sol.cover, kMainBound, 3).valid);
        }
    }
}

TEST(Solve4, LoweredGatesReachLaterStages) {
    std::map<Branch, std::size_t> branches;
    for (std::uint64_t seed = 0; seed < 600; ++seed) {
        const auto col = blown_points(seed);
        SolveOptions options;
        options.small_diameter = static_cast<std::uint32_t>(seed % 3);
        options.connected_gate = 0;
        options.large_diameter = 2;
        const auto sol = solve4(col, options);
        ++branches[sol.trace.branch];
        if (sol.trace.branch == Branch::ConnectivityFallback) {
            EXPECT_FALSE(sol.trace.diagnostic.empty());
            expect_cover(col, sol.cover, kInf);
            continue;
        }
        EXPECT_TRUE(sol.report.valid);
        expect_cover(col, sol.cover, kMainBound);
        if (sol.trace.branch == Branch::LayerQuad) {
            ASSERT_TRUE(sol.trace.colour_pair);
            EXPECT_EQ(sol.trace.distant_set.size(), 4u);
            EXPECT_FALSE(sol.trace.layer_route.empty());
        }
    }
    EXPECT_GT(branches[Branch::SmallDiam], 0u);
    EXPECT_GT(branches[Branch::LayerQuad], 0u);
    for (const auto& [b, count] : branches) RecordProperty(branch_name(b), static_cast<int>(count));
}

TEST(Solve4, Deterministic) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto col = seed % 2 ? layered_adversarial(80, seed) : blown_points(seed);
        SolveOptions options;
        options.small_diameter = 1;
        const auto a = solve4(col, options), b = solve4(col, options);
        EXPECT_EQ(describe_cover(a.cover), describe_cover(b.cover));
        EXPECT_EQ(a.trace.branch, b.trace.branch);
        EXPECT_EQ(a.trace.notes, b.trace.notes);
        EXPECT_EQ(a.trace.distant_set, b.trace.distant_set);
    }
}

TEST(Solve4, Preconditions) {
    EXPECT_THROW(solve4(random_uniform(10, 3, 1)), InvalidArgument);
    EXPECT_THROW(solve4(random_multipartite({3, 3}, 4, 1)), InvalidArgument);
    EXPECT_THROW(solve4(EdgeColouring(HostGraph::complete(0), 4, [](Vertex, Vertex) { return Colour{1}; })),
                 InvalidArgument);
}

TEST(Branch, Names) {
    std::set<std::string> names;
    for (int b = 0; b <= static_cast<int>(Branch::ConnectivityFallback); ++b) names.insert(branch_name(static_cast<Branch>(b)));
    EXPECT_EQ(names.size(), static_cast<std::size_t>(Branch::ConnectivityFallback) + 1);
}

} // namespace
