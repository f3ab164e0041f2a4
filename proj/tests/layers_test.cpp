// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <map>
#include <set>

#include "mcover/generate.hpp"
#include "mcover/layers.hpp"
#include "support.hpp"

namespace {

using namespace mcover;
using namespace mcover::testing;

std::uint32_t gap(std::uint32_t a, std::uint32_t b) { return a > b ? a - b : b - a; }

// The three layer invariants, checked from the raw coordinates.
void expect_layer_invariants(const EdgeColouring& col, Colour c1, Colour c2, const LayerMapping& lm) {
    const std::size_t n = col.n();
    ASSERT_EQ(lm.d1().size(), n);
    ASSERT_EQ(lm.d2().size(), n);
    std::size_t covered = 0;
    for (const auto& p : lm.points()) covered += lm.layer(p).count();
    EXPECT_EQ(covered, n);
    for (Vertex v = 0; v < n; ++v) EXPECT_TRUE(lm.layer(lm.point_of(v)).contains(v));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const Colour c = col.colour(u, v);
            const auto dx = gap(lm.d1()[u], lm.d1()[v]), dy = gap(lm.d2()[u], lm.d2()[v]);
            if (c == c1) {
                ASSERT_LE(dx, 1u) << u << " " << v;
            }
            if (c == c2) {
                ASSERT_LE(dy, 1u) << u << " " << v;
            }
            if (dx >= 2 && dy >= 2) {
                ASSERT_TRUE(c != c1 && c != c2) << u << " " << v;
            }
        }
}

// Every part connected in its colour within `bound`, every vertex covered.
void expect_cover(const EdgeColouring& col, const Cover& cover, std::uint32_t bound) {
    ASSERT_GE(cover.parts.size(), 1u);
    ASSERT_LE(cover.parts.size(), 3u);
    VertexSet seen(col.n());
    for (const auto& part : cover.parts) {
        ASSERT_LE(floyd_diameter(col, part.colour, part.set.to_vector()), bound);
        seen |= part.set;
    }
    EXPECT_EQ(seen.count(), col.n());
}

bool brute_distant(const std::vector<LayerPoint>& s, std::uint32_t k) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (gap(s[i].x, s[j].x) < k || gap(s[i].y, s[j].y) < k) return false;
    return true;
}

// Lexicographically first k-distant subset of sorted P by plain enumeration.
std::optional<std::vector<LayerPoint>> brute_find(std::vector<LayerPoint> p, std::uint32_t k, std::size_t size) {
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    if (size > p.size()) return std::nullopt;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
        std::vector<LayerPoint> s;
        for (auto i : idx) s.push_back(p[i]);
        if (brute_distant(s, k)) return s;
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == p.size() - size + i - 1) --i;
        if (i == 0) return std::nullopt;
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

LayerMapping mapping_of(const LayeredInstance& inst) {
    return LayerMapping::from_coordinates(inst.colouring, 1, 2, inst.d1, inst.d2);
}

void add_point(std::vector<LayerPoint>& pts, LayerPoint p) {
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
}

TEST(LayerMapping, SingleVertex) {
    const EdgeColouring col(HostGraph::complete(1), 4, [](Vertex, Vertex) { return Colour{1}; });
    const MonoMetrics m(col);
    const auto lm = LayerMapping::build(m, 1, 2);
    ASSERT_EQ(lm.points(), (std::vector<LayerPoint>{{0, 0}}));
    EXPECT_EQ(lm.layer({0, 0}).to_vector(), (std::vector<Vertex>{0}));
}

TEST(LayerMapping, ConnectedColoursGiveSeedDistances) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto col = random_uniform(24, 4, seed);
        const MonoMetrics m(col);
        ASSERT_TRUE(m.spans(1) && m.spans(3));
        const Vertex x0 = static_cast<Vertex>(seed % 24);
        const std::vector<Vertex> seeds{x0};
        const auto lm = LayerMapping::build(m, 1, 3, seeds);
        const auto all = iota_vertices(24);
        const auto f1 = floyd(col, 1, all), f3 = floyd(col, 3, all);
        for (Vertex v = 0; v < 24; ++v) {
            EXPECT_EQ(lm.d1()[v], f1[x0 * 24 + v]);
            EXPECT_EQ(lm.d2()[v], f3[x0 * 24 + v]);
        }
        EXPECT_EQ(lm.c3(), 2);
        EXPECT_EQ(lm.c4(), 4);
    }
}

TEST(LayerMapping, TwoComponentsBothStartAtZero) {
    // Colour 1 is complete on {0..4} and on {5..9}; cross pairs use 2..4.
    const EdgeColouring col(HostGraph::complete(10), 4, [](Vertex u, Vertex v) {
        if (u / 5 == v / 5) return Colour{1};
        return static_cast<Colour>(2 + (u + v) % 3);
    });
    const MonoMetrics m(col);
    const auto lm = LayerMapping::build(m, 1, 2);
    EXPECT_EQ(lm.d1()[0], 0u);
    EXPECT_EQ(lm.d1()[5], 0u);
    EXPECT_FALSE(lm.invariant_violation());
    expect_layer_invariants(col, 1, 2, lm);
}

TEST(LayerMapping, SpreadPolicySeparatesComponents) {
    const EdgeColouring col(HostGraph::complete(10), 4, [](Vertex u, Vertex v) {
        if (u / 5 == v / 5) return Colour{1};
        return static_cast<Colour>(2 + (u + v) % 3);
    });
    const MonoMetrics m(col);
    const auto lm = LayerMapping::build(m, 1, 2, {}, ValuePolicy::Spread);
    EXPECT_GE(gap(lm.d1()[0], lm.d1()[5]), kSpreadGap);
    expect_layer_invariants(col, 1, 2, lm);
}

TEST(LayerMapping, InvariantsOnRandomMappings) {
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t n = 10 + seed % 50;
        const EdgeColouring cols[] = {random_uniform(n, 4, seed), layered_adversarial(n, seed), twin_path(n, seed),
                                      component_blowup(n, seed)};
        for (const auto& col : cols) {
            const MonoMetrics m(col);
            for (Colour c1 = 1; c1 <= 4; ++c1)
                for (Colour c2 = c1 + 1; c2 <= 4; ++c2)
                    for (auto policy : {ValuePolicy::Zero, ValuePolicy::Spread}) {
                        std::vector<Vertex> seeds = iota_vertices(n);
                        std::shuffle(seeds.begin(), seeds.end(), rng);
                        seeds.resize(seed % 4);
                        const auto lm = LayerMapping::build(m, c1, c2, seeds, policy);
                        ASSERT_FALSE(lm.invariant_violation()) << *lm.invariant_violation();
                        expect_layer_invariants(col, c1, c2, lm);
                        // The rebuilt mapping from the same coordinates is accepted.
                        EXPECT_NO_THROW(LayerMapping::from_coordinates(col, c1, c2, lm.d1(), lm.d2()));
                    }
        }
    }
}

TEST(LayerMapping, FromCoordinatesRejectsBrokenInvariants) {
    const auto inst = layered_instance({{0, 0}, {3, 3}, {6, 6}}, 2, 0.5, 1);
    EXPECT_NO_THROW(mapping_of(inst));
    auto d1 = inst.d1;
    d1[0] = 5;  // a colour-1 edge now spans 5 in D1
    EXPECT_THROW(LayerMapping::from_coordinates(inst.colouring, 1, 2, d1, inst.d2), InvalidArgument);
    auto d2 = inst.d2;
    d2.pop_back();
    EXPECT_THROW(LayerMapping::from_coordinates(inst.colouring, 1, 2, inst.d1, d2), InvalidArgument);
    // Colours 3 and 4 as generators make the 2-separated pairs illegal.
    EXPECT_THROW(LayerMapping::from_coordinates(inst.colouring, 3, 4, inst.d1, inst.d2), InvalidArgument);
}

TEST(LayerMapping, BuildPreconditions) {
    const auto col = random_uniform(8, 4, 1);
    const MonoMetrics m(col);
    EXPECT_THROW(LayerMapping::build(m, 2, 2), InvalidArgument);
    const std::vector<Vertex> twice{1, 1};
    EXPECT_THROW(LayerMapping::build(m, 1, 2, twice), InvalidArgument);
    const auto three = random_uniform(8, 3, 1);
    const MonoMetrics m3(three);
    EXPECT_THROW(LayerMapping::build(m3, 1, 2), InvalidArgument);
}

TEST(FindKDistant, Examples) {
    const std::vector<LayerPoint> p{{0, 0}, {7, 7}, {14, 14}};
    const auto t = find_k_distant(p, 7, 3);
    ASSERT_TRUE(t);
    EXPECT_EQ(*t, p);
    const std::vector<LayerPoint> q{{0, 0}, {1, 5}};
    EXPECT_FALSE(find_k_distant(q, 2, 2));
    EXPECT_TRUE(is_k_distant(p, 7));
    EXPECT_FALSE(is_k_distant(p, 8));
    EXPECT_THROW(find_k_distant(p, 0, 2), InvalidArgument);
}

TEST(FindKDistant, MatchesExhaustiveEnumeration) {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 1500; ++round) {
        const std::size_t count = 1 + rng() % (round < 1000 ? 20 : 40);
        const std::uint32_t range = 4 + static_cast<std::uint32_t>(rng() % 40);
        std::vector<LayerPoint> p;
        for (std::size_t i = 0; i < count; ++i)
            p.push_back({static_cast<std::uint32_t>(rng() % range), static_cast<std::uint32_t>(rng() % range)});
        const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 7);
        const std::size_t size = 1 + rng() % 4;
        ASSERT_EQ(find_k_distant(p, k, size), brute_find(p, k, size)) << round;
    }
}

TEST(ValueGate, CountsDistinctValues) {
    std::vector<LayerPoint> pts;
    for (std::uint32_t i = 0; i < 28; ++i) pts.push_back({i, 27 - i});
    const auto inst = layered_instance(pts, 1, 0.5, 2);
    const auto lm = mapping_of(inst);
    EXPECT_EQ(lm.distinct_values(0), 28u);
    EXPECT_TRUE(meets_value_gate(lm));
    EXPECT_FALSE(meets_value_gate(lm, 29));
}

TEST(Dist3Triple, AllCrossEdgesReserved) {
    const auto inst = layered_instance({{0, 0}, {3, 3}, {6, 6}}, 3, 1.0, 4);
    const auto lm = mapping_of(inst);
    const std::vector<LayerPoint> t{{0, 0}, {3, 3}, {6, 6}};
    const auto out = cover_from_dist3_triple(lm, t);
    EXPECT_EQ(out.colour, 3);
    EXPECT_LE(out.diameter, 2u);
}

TEST(Dist3Triple, RandomInstancesOrProvenGaps) {
    std::size_t gaps = 0, runs = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        std::mt19937_64 rng(seed);
        const std::vector<LayerPoint> t{{0, 0}, {3, 3 + static_cast<std::uint32_t>(rng() % 3)}, {7, 9}};
        const auto inst = layered_instance(t, 1 + seed % 4, 0.3 + 0.1 * static_cast<double>(seed % 5), seed);
        const auto lm = mapping_of(inst);
        const auto members = lm.layers(t).to_vector();
        ++runs;
        try {
            const auto out = cover_from_dist3_triple(lm, t);
            ASSERT_TRUE(out.colour == 3 || out.colour == 4);
            ASSERT_LE(floyd_diameter(inst.colouring, out.colour, members), 20u) << seed;
        } catch (const ImpossibleByLemma&) {
            ++gaps;
            ASSERT_GT(floyd_diameter(inst.colouring, 3, members), 20u) << seed;
            ASSERT_GT(floyd_diameter(inst.colouring, 4, members), 20u) << seed;
        }
    }
    EXPECT_LT(gaps, runs / 10);
    RecordProperty("gaps", static_cast<int>(gaps));
}

TEST(Dist3Triple, RejectsNonDistantPoints) {
    const auto inst = layered_instance({{0, 0}, {2, 3}, {6, 6}}, 2, 0.5, 1);
    const auto lm = mapping_of(inst);
    const std::vector<LayerPoint> t{{0, 0}, {2, 3}, {6, 6}};
    EXPECT_THROW(cover_from_dist3_triple(lm, t), InvalidArgument);
    const std::vector<LayerPoint> missing{{0, 0}, {3, 3}, {6, 6}};
    EXPECT_THROW(cover_from_dist3_triple(lm, missing), InvalidArgument);
}

TEST(Dist3TripleExt, DegenerateTripleIsOnePart) {
    const std::vector<LayerPoint> t{{0, 0}, {3, 3}, {6, 6}};
    const auto inst = layered_instance(t, 3, 0.5, 8);
    const auto lm = mapping_of(inst);
    const auto out = cover_from_dist3_triple_ext(lm, t, VertexSet(inst.colouring.n()), 20);
    EXPECT_EQ(out.route, LayerRoute::TripleSinglePart);
    ASSERT_EQ(out.cover.parts.size(), 1u);
    EXPECT_EQ(out.cover.claimed_bound, Bound(20));
    expect_cover(inst.colouring, out.cover, 20);
}

// Extra layers near the triple; the certificate is the union of two triple
// layers whenever that union is connected in the other reserved colour.
TEST(Dist3TripleExt, CertificateFromTwoTripleLayers) {
    std::size_t calls = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        std::mt19937_64 rng(seed);
        const std::vector<LayerPoint> t{{0, 0}, {4, 4}, {8, 8}};
        auto pts = t;
        for (int i = 0; i < 4; ++i) add_point(pts, {static_cast<std::uint32_t>(rng() % 11), static_cast<std::uint32_t>(rng() % 11)});
        const auto inst = layered_instance(pts, 2 + seed % 2, 0.3 + 0.1 * static_cast<double>(seed % 5), seed);
        const auto lm = mapping_of(inst);
        const auto& col = inst.colouring;
        bool reachable = true;
        for (const auto& d : lm.points()) {
            bool near = false;
            for (const auto& e : t) near = near || (gap(d.x, e.x) >= 2 && gap(d.y, e.y) >= 2) || d == e;
            reachable = reachable && near;
        }
        if (!reachable) continue;
        Colour c = 0;
        try {
            c = cover_from_dist3_triple(lm, t).colour;
        } catch (const ImpossibleByLemma&) {
            continue;
        }
        const Colour cp = c == 3 ? 4 : 3;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) {
                const VertexSet h = lm.layer(t[i]) | lm.layer(t[j]);
                const auto d = floyd_diameter(col, cp, h.to_vector());
                if (d > 20) continue;
                ++calls;
                const auto out = cover_from_dist3_triple_ext(lm, t, h, 20);
                EXPECT_EQ(out.cover.claimed_bound, Bound(40));
                expect_cover(col, out.cover, 40);
                // A certificate that misses two triple layers is rejected.
                EXPECT_THROW(cover_from_dist3_triple_ext(lm, t, lm.layer(t[i]), 20), InvalidArgument);
            }
    }
    EXPECT_GT(calls, 20u);
    RecordProperty("calls", static_cast<int>(calls));
}

TEST(Dist3Quad, ExactQuadrupleIsOnePart) {
    const std::vector<LayerPoint> q{{0, 0}, {3, 3}, {6, 6}, {9, 9}};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto inst = layered_instance(q, 2, 0.5, seed);
        const auto lm = mapping_of(inst);
        try {
            const auto out = cover_from_dist3_quad(lm, q);
            EXPECT_EQ(out.route, LayerRoute::QuadSinglePart);
            ASSERT_EQ(out.cover.parts.size(), 1u);
            EXPECT_EQ(out.cover.claimed_bound, Bound(60));
            expect_cover(inst.colouring, out.cover, 60);
        } catch (const ImpossibleByLemma&) {
            const auto members = iota_vertices(inst.colouring.n());
            EXPECT_GT(floyd_diameter(inst.colouring, 3, members), 20u);
            EXPECT_GT(floyd_diameter(inst.colouring, 4, members), 20u);
        }
    }
}

TEST(Dist3Quad, RandomInstancesReachEveryRoute) {
    std::map<LayerRoute, std::size_t> routes;
    std::size_t two_part_intersecting = 0;
    for (std::uint64_t seed = 0; seed < 600; ++seed) {
        std::mt19937_64 rng(seed);
        const std::vector<LayerPoint> q{{0, 0}, {3, 3}, {6, 6}, {9, 9}};
        auto pts = q;
        const int extra = 1 + static_cast<int>(seed % 3);
        for (int i = 0; i < extra; ++i) add_point(pts, {static_cast<std::uint32_t>(rng() % 10), static_cast<std::uint32_t>(rng() % 10)});
        const auto inst = layered_instance(pts, 1 + seed % 3, 0.2 + 0.15 * static_cast<double>(seed % 5), seed);
        const auto lm = mapping_of(inst);
        try {
            const auto out = cover_from_dist3_quad(lm, q);
            expect_cover(inst.colouring, out.cover, 160);
            ++routes[out.route];
            two_part_intersecting += out.route == LayerRoute::QuadIntersectingPairs && out.cover.parts.size() == 2;
        } catch (const ImpossibleByLemma& e) {
            // Either a layer misses the pigeonhole or a three-class gap.
            const std::string what = e.what();
            EXPECT_TRUE(what.find("fewer than two") != std::string::npos ||
                        what.find("three-class") != std::string::npos)
                << what;
        }
    }
    EXPECT_GT(routes[LayerRoute::QuadSinglePart], 0u);
    EXPECT_GT(routes[LayerRoute::QuadIntersectingPairs], 0u);
    EXPECT_GT(routes[LayerRoute::QuadDisjointPairs], 0u);
    EXPECT_GT(two_part_intersecting, 0u);
}

// Triple (0,0), (g,g), (2g,2g) plus one layer per value along a cross
// pattern: every layer sits within 2 of a triple coordinate on one axis.
LayeredInstance cross_instance(std::uint32_t g, double same, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<LayerPoint> pts{{0, 0}, {g, g}, {2 * g, 2 * g}};
    std::uniform_int_distribution<int> off(-2, 2), pick(0, 2);
    std::bernoulli_distribution near_own(same);
    for (std::uint32_t i = 0; i <= 2 * g + 2; ++i) {
        int t = near_own(rng) ? static_cast<int>((i + g / 2) / g) : pick(rng);
        t = std::min(t, 2);
        const auto y = static_cast<std::uint32_t>(std::max(0, t * static_cast<int>(g) + off(rng)));
        add_point(pts, {i, y});
        add_point(pts, {y, i});
    }
    return layered_instance(pts, 1 + seed % 3, 0.3 + 0.1 * static_cast<double>(seed % 5), seed);
}

TEST(Dist7Triple, ConstructedInstancesAreCovered) {
    std::map<LayerRoute, std::size_t> routes;
    std::size_t gaps = 0, runs = 0;
    for (std::uint32_t g : {14u, 16u})
        for (double same : {0.5, 0.9})
            for (std::uint64_t seed = 0; seed < 60; ++seed) {
                const auto inst = cross_instance(g, same, seed);
                const auto lm = mapping_of(inst);
                ASSERT_TRUE(meets_value_gate(lm));
                const std::vector<LayerPoint> t{{0, 0}, {g, g}, {2 * g, 2 * g}};
                ++runs;
                try {
                    const auto out = cover_from_dist7_triple(lm, t);
                    expect_cover(inst.colouring, out.cover, 160);
                    ASSERT_TRUE(out.cover.claimed_bound);
                    EXPECT_LE(*out.cover.claimed_bound, 160u);
                    ++routes[out.route];
                } catch (const ImpossibleByLemma& e) {
                    ++gaps;
                    EXPECT_NE(std::string(e.what()).find("three-class"), std::string::npos) << e.what();
                }
            }
    EXPECT_GT(routes[LayerRoute::TripleOtherColour], 0u);
    EXPECT_GT(routes[LayerRoute::BallOnly] + routes[LayerRoute::CrossPointsQuad], 0u);
    EXPECT_LT(gaps, runs / 5);
    for (const auto& [route, count] : routes) RecordProperty(route_name(route), static_cast<int>(count));
}

TEST(Dist7Triple, FarPointDelegatesToQuadruple) {
    std::size_t far = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        std::mt19937_64 rng(seed);
        std::vector<LayerPoint> pts{{0, 0}, {18, 18}, {36, 36}};
        for (std::uint32_t i = 0; i <= 38; ++i) {
            const auto y = static_cast<std::uint32_t>(std::max(0, static_cast<int>(i) + static_cast<int>(rng() % 3) - 1));
            add_point(pts, {i, y});
        }
        const auto inst = layered_instance(pts, 1, 0.5, seed);
        const auto lm = mapping_of(inst);
        if (!meets_value_gate(lm)) continue;
        const std::vector<LayerPoint> t{{0, 0}, {18, 18}, {36, 36}};
        try {
            const auto out = cover_from_dist7_triple(lm, t);
            expect_cover(inst.colouring, out.cover, 160);
            far += out.route == LayerRoute::FarPointQuad;
            if (out.route == LayerRoute::FarPointQuad) {
                EXPECT_EQ(out.distant_set.size(), 4u);
            }
        } catch (const ImpossibleByLemma& e) {
            EXPECT_NE(std::string(e.what()).find("three-class"), std::string::npos) << e.what();
        }
    }
    EXPECT_GT(far, 0u);
}

TEST(Dist7Triple, RequiresValueGate) {
    const std::vector<LayerPoint> t{{0, 0}, {7, 7}, {14, 14}};
    const auto inst = layered_instance(t, 2, 0.5, 3);
    const auto lm = mapping_of(inst);
    EXPECT_FALSE(meets_value_gate(lm));
    EXPECT_THROW(cover_from_dist7_triple(lm, t), InvalidArgument);
}

TEST(LayerRoute, NamesAreDistinct) {
    std::set<std::string> names;
    for (int r = 0; r <= static_cast<int>(LayerRoute::BallAndArmsInBaseColour); ++r)
        names.insert(route_name(static_cast<LayerRoute>(r)));
    EXPECT_EQ(names.size(), static_cast<std::size_t>(LayerRoute::BallAndArmsInBaseColour) + 1);
}

} // namespace
