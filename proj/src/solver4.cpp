// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#include "mcover/solver4.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "mcover/grid.hpp"

namespace mcover {

const char* branch_name(Branch b) {
    switch (b) {
    case Branch::SpanningColour: return "SpanningColour";
    case Branch::MissingColourStar: return "MissingColourStar";
    case Branch::SmallDiam: return "SmallDiam";
    case Branch::LayerQuad: return "LayerQuad";
    case Branch::LayerTriple7: return "LayerTriple7";
    case Branch::SingleComponent: return "SingleComponent";
    case Branch::Intersecting: return "Intersecting";
    case Branch::DisjointCorollary: return "DisjointCorollary";
    case Branch::ConnectivityFallback: return "ConnectivityFallback";
    }
    return "unknown";
}

namespace {

void require_k4(const EdgeColouring& col) {
    if (col.k() != 4) throw InvalidArgument("the 4-colour solver needs k = 4");
    if (!col.host().is_complete()) throw InvalidArgument("the 4-colour solver needs a complete host");
    if (col.n() == 0) throw InvalidArgument("empty colouring");
}

void note(SolveTrace* trace, std::string what) {
    if (trace) trace->notes.push_back(std::move(what));
}

std::optional<Cover> accept(const EdgeColouring& col, Cover cover, std::uint32_t bound, SolveTrace* trace,
                            const std::string& what) {
    cover.claimed_bound = bound;
    const auto report = verify_cover(col, cover, bound, 3);
    if (report.valid) return cover;
    note(trace, what + " rejected: " + report.describe());
    return std::nullopt;
}

std::array<Colour, 2> others(Colour a, Colour b) {
    std::array<Colour, 2> out{};
    std::size_t i = 0;
    for (Colour c = 1; c <= 4; ++c)
        if (c != a && c != b) out[i++] = c;
    return out;
}

std::uint32_t dist(const MonoMetrics& m, Colour c, Vertex u, Vertex v) { return m.row(c, u)[v]; }

// Closes through the 7-distant lemma when the three vertices land on a
// 7-distant triple and the value gate holds.
std::optional<Cover> via_dist7(const LayerMapping& lm, std::span<const Vertex> vs, SolveTrace* trace,
                               const std::string& what) {
    std::vector<LayerPoint> pts;
    for (Vertex v : vs) pts.push_back(lm.point_of(v));
    if (!is_k_distant(pts, 7)) {
        note(trace, what + ": vertices are not 7-distant in the layer mapping");
        return std::nullopt;
    }
    if (!meets_value_gate(lm)) {
        note(trace, what + ": 7-distant triple found but fewer than 28 values on some axis");
        return std::nullopt;
    }
    try {
        auto lc = cover_from_dist7_triple(lm, pts);
        if (trace) {
            trace->colour_pair = std::pair{lm.c1(), lm.c2()};
            trace->seeds.assign(vs.begin(), vs.end());
            trace->distant_set = lc.distant_set;
            trace->layer_route = std::string(route_name(lc.route)) + (lc.detail.empty() ? "" : " / " + lc.detail);
        }
        return std::move(lc.cover);
    } catch (const ImpossibleByLemma& e) {
        note(trace, what + ": " + e.what());
        return std::nullopt;
    }
}

std::optional<Cover> spanning_colour(const EdgeColouring& col, const MonoMetrics& m) {
    for (Colour c = 1; c <= 4; ++c) {
        if (!m.spans(c)) continue;
        const auto d = m.colour_diameter(c);
        if (d <= kMainBound) return Cover{{CoverPart{VertexSet::full(col.n()), c}}, d};
    }
    return std::nullopt;
}

std::optional<Cover> missing_colour_star(const EdgeColouring& col) {
    const std::size_t n = col.n();
    for (Vertex v = 0; v < n; ++v) {
        for (Colour c = 1; c <= 4; ++c) {
            if (!col.neighbours(c, v).empty()) continue;
            Cover cover;
            cover.claimed_bound = 2;
            for (Colour o = 1; o <= 4; ++o) {
                if (o == c) continue;
                VertexSet star = col.neighbours(o, v);
                star.insert(v);
                cover.parts.push_back({star, o});
            }
            return cover;
        }
    }
    return std::nullopt;
}

std::optional<Cover> layer_stage(const MonoMetrics& m, SolveTrace* trace) {
    for (Colour c1 = 1; c1 <= 4; ++c1) {
        for (Colour c2 = c1 + 1; c2 <= 4; ++c2) {
            const bool single = m.spans(c1) && m.spans(c2);
            for (auto policy : {ValuePolicy::Zero, ValuePolicy::Spread}) {
                if (policy == ValuePolicy::Spread && single) continue;  // same mapping
                const auto lm = LayerMapping::build(m, c1, c2, {}, policy);
                const std::string tag = "layers (" + std::to_string(c1) + "," + std::to_string(c2) + ")";
                if (auto quad = find_k_distant(lm.points(), 3, 4)) {
                    try {
                        auto lc = cover_from_dist3_quad(lm, *quad);
                        if (trace) {
                            trace->branch = Branch::LayerQuad;
                            trace->colour_pair = std::pair{c1, c2};
                            trace->distant_set = lc.distant_set;
                            trace->layer_route = route_name(lc.route);
                        }
                        return std::move(lc.cover);
                    } catch (const ImpossibleByLemma& e) {
                        note(trace, tag + " quadruple: " + e.what());
                    }
                }
                if (!meets_value_gate(lm)) continue;
                if (auto tri = find_k_distant(lm.points(), 7, 3)) {
                    try {
                        auto lc = cover_from_dist7_triple(lm, *tri);
                        if (trace) {
                            trace->branch = Branch::LayerTriple7;
                            trace->colour_pair = std::pair{c1, c2};
                            trace->distant_set = lc.distant_set;
                            trace->layer_route =
                                std::string(route_name(lc.route)) + (lc.detail.empty() ? "" : " / " + lc.detail);
                        }
                        return std::move(lc.cover);
                    } catch (const ImpossibleByLemma& e) {
                        note(trace, tag + " 7-distant triple: " + e.what());
                    }
                }
            }
        }
    }
    return std::nullopt;
}

// The smallest-index neighbour one step closer to y, repeated from x.
std::vector<Vertex> shortest_path(const EdgeColouring& col, const MonoMetrics& m, Colour c, Vertex x, Vertex y) {
    const auto to_y = m.row(c, y);
    std::vector<Vertex> path{x};
    Vertex cur = x;
    while (cur != y) {
        for (Vertex w : col.neighbours(c, cur)) {
            if (to_y[w] + 1 == to_y[cur]) {
                cur = w;
                break;
            }
        }
        path.push_back(cur);
    }
    return path;
}

// Contradiction argument for a pair with d_a in [6, 50] and d_b in [10, 20]:
// either two balls around u cover, or a third vertex makes a 7-distant triple.
std::optional<Cover> contradiction_pair(const EdgeColouring& col, const MonoMetrics& m, Colour a, Colour b, Vertex u,
                                        Vertex v, SolveTrace* trace) {
    const auto da = dist(m, a, u, v), db = dist(m, b, u, v);
    const std::string tag = "pair " + std::to_string(u) + "," + std::to_string(v);
    if (da < 6 || da > 50 || db < 10 || db > 20) {
        note(trace, tag + " misses the distance window");
        return std::nullopt;
    }
    const VertexSet ball_a = m.ball(a, u, 56), ball_b = m.ball(b, u, 26);
    const VertexSet outside = VertexSet::full(col.n()) - ball_a - ball_b;
    if (outside.empty()) {
        if (auto ok = accept(col, Cover{{{ball_a, a}, {ball_b, b}}, kMainBound}, kMainBound, trace, tag + " balls")) {
            if (trace) trace->seeds = {u, v};
            return ok;
        }
        return std::nullopt;
    }
    const auto lm = LayerMapping::build(m, a, b, std::vector<Vertex>{u});
    const Vertex trip[3] = {u, v, outside.first()};
    return via_dist7(lm, trip, trace, tag);
}

std::optional<Cover> connected_ordered(const EdgeColouring& col, const MonoMetrics& m, Colour a, Colour b,
                                       SolveTrace* trace) {
    const std::size_t n = col.n();
    const auto [c, d] = others(a, b);
    std::optional<std::pair<Vertex, Vertex>> claim;
    for (Vertex x = 0; x < n && !claim; ++x) {
        const auto ra = m.row(a, x), rb = m.row(b, x);
        for (Vertex y = 0; y < n; ++y) {
            if (ra[y] >= 25 && ra[y] <= 27 && rb[y] >= 40) {
                claim = std::pair{x, y};
                break;
            }
        }
    }
    const std::string tag = "connected case (" + std::to_string(a) + "," + std::to_string(b) + ")";
    if (!claim) {
        // Every a-edge then joins vertices at b-distance <= 78.
        for (Vertex u = 0; u < n; ++u)
            for (Vertex w : col.neighbours(a, u))
                if (w > u && dist(m, b, u, w) > 78) {
                    note(trace, tag + ": no distance pair, yet an a-edge spans b-distance > 78");
                    return std::nullopt;
                }
        const Vertex x = 0;
        Cover balls{{{m.ball(b, x, 78), b}, {m.ball(c, x, 1), c}, {m.ball(d, x, 1), d}}, kMainBound};
        if (auto ok = accept(col, balls, kMainBound, trace, tag + " balls")) {
            if (trace) trace->seeds = {x};
            return ok;
        }
        return std::nullopt;
    }
    const auto [x, y] = *claim;
    const auto path = shortest_path(col, m, b, x, y);
    const std::size_t r = path.size() - 2;
    const std::size_t k = (r - 10) / 10;
    const auto from_x = LayerMapping::build(m, a, b, std::vector<Vertex>{x});
    const auto from_y = LayerMapping::build(m, a, b, std::vector<Vertex>{y});
    for (std::size_t i = 1; i <= k; ++i) {
        const Vertex z = path[10 * i];
        const Vertex trip[3] = {x, y, z};
        for (const auto* lm : {&from_x, &from_y}) {
            std::vector<LayerPoint> pts{lm->point_of(x), lm->point_of(y), lm->point_of(z)};
            if (!is_k_distant(pts, 7)) continue;
            if (auto cov = via_dist7(*lm, trip, trace, tag + " path vertex " + std::to_string(z))) return cov;
        }
    }
    // Designated pair for the contradiction lemma.
    auto near_x = [&](std::size_t i) { return dist(m, a, x, path[10 * i]) <= 6; };
    Vertex u = path[10 * k], v = y;
    if (!near_x(1)) {
        u = x;
        v = path[10];
    } else {
        for (std::size_t i = 1; i < k; ++i) {
            if (!near_x(i + 1)) {
                u = path[10 * i];
                v = path[10 * (i + 1)];
                break;
            }
        }
    }
    return contradiction_pair(col, m, a, b, u, v, trace);
}

} // namespace

Cover gyarfas_connectivity_cover(const EdgeColouring& colouring) {
    require_k4(colouring);
    const auto pts = points_from_colouring(colouring);
    const auto parts = cover_G3(pts.points);
    Cover cover;
    for (const auto& part : parts) {
        if (part.kind == GridCoverPart::Kind::Hyperplane) {
            cover.parts.push_back({pts.components[part.axis][part.value - 1], static_cast<Colour>(part.axis + 1)});
        } else if (part.members.size() == 1) {
            // A lone fibre has no colour-4 edges inside; its colour-1 component holds it.
            const auto& p = pts.points[part.members[0]];
            cover.parts.push_back({pts.components[0][p[0] - 1], 1});
        } else {
            VertexSet s(colouring.n());
            for (auto i : part.members) s |= pts.fibres[i];
            cover.parts.push_back({s, 4});
        }
    }
    const auto report = verify_cover(colouring, cover, std::nullopt, 3);
    if (!report.valid)
        throw ImpossibleByLemma("connectivity cover failed: " + report.describe(), describe_cover(cover));
    return cover;
}

std::optional<Cover> reduce_small_diameters(const EdgeColouring& colouring, std::uint32_t n1, SolveTrace* trace) {
    require_k4(colouring);
    const MonoMetrics m(colouring);
    std::array<std::uint32_t, 4> diam{};
    std::size_t small = 0;
    for (Colour c = 1; c <= 4; ++c) {
        diam[c - 1] = m.colour_diameter(c);
        if (diam[c - 1] <= n1) ++small;
    }
    if (small < 3) return std::nullopt;
    Colour excluded = 4;
    for (Colour c = 4; c >= 1; --c)
        if (diam[c - 1] > diam[excluded - 1]) excluded = c;
    // excluded becomes colour 4, the rest keep their order.
    std::vector<Colour> perm(4), back(4);
    Colour next = 1;
    for (Colour c = 1; c <= 4; ++c) perm[c - 1] = (c == excluded) ? 4 : next++;
    for (Colour c = 1; c <= 4; ++c) back[perm[c - 1] - 1] = c;
    const auto permuted = colouring.permuted(perm);
    const MonoMetrics pm(permuted);
    const EdgeColouring recoloured(permuted.host(), 4, [&](Vertex u, Vertex v) -> Colour {
        const Colour c = permuted.colour(u, v);
        if (c != 4) return c;
        for (Colour s = 1; s <= 3; ++s)
            if (pm.component_of(s, u) == pm.component_of(s, v)) return s;
        return 4;
    });
    if (trace) {
        const MonoMetrics rm(recoloured);
        trace->recoloured_diameter = rm.colour_diameter(4);
        if (*trace->recoloured_diameter > 30)
            note(trace, "recoloured colour-4 diameter " + std::to_string(*trace->recoloured_diameter) + " exceeds 30");
    }
    Cover cover = gyarfas_connectivity_cover(recoloured);
    for (auto& part : cover.parts) part.colour = back[part.colour - 1];
    return accept(colouring, std::move(cover), std::max<std::uint32_t>(n1, 30), trace, "small-diameter reduction");
}

std::optional<Cover> solve_connected_case(const EdgeColouring& colouring, const MonoMetrics& m, std::uint32_t gate,
                                          SolveTrace* trace) {
    require_k4(colouring);
    for (Colour c = 1; c <= 4; ++c)
        if (!m.spans(c) || m.colour_diameter(c) <= gate) return std::nullopt;
    for (Colour a = 1; a <= 4; ++a)
        for (Colour b = 1; b <= 4; ++b) {
            if (a == b) continue;
            if (auto cov = connected_ordered(colouring, m, a, b, trace)) return cov;
        }
    return std::nullopt;
}

std::optional<Cover> solve_intersecting_case(const EdgeColouring& colouring, const MonoMetrics& m,
                                             std::uint32_t large, SolveTrace* trace) {
    require_k4(colouring);
    const std::size_t n = colouring.n();
    for (Colour c = 1; c <= 4; ++c) {
        const auto& comps = m.components(c).parts;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (m.component_diameter(c, i) < 30) continue;
            for (Colour o = 1; o <= 4; ++o) {
                if (o == c) continue;
                for (const auto& other : m.components(o).parts)
                    if (!comps[i].intersects(other)) return std::nullopt;
            }
        }
    }
    std::vector<Colour> big;
    for (Colour c = 1; c <= 4; ++c)
        if (m.colour_diameter(c) > large) big.push_back(c);
    if (big.size() < 2) return std::nullopt;
    Colour cp = kNoColour;
    for (Colour c = 1; c <= 4 && !cp; ++c)
        if (m.components(c).parts.size() >= 2) cp = c;
    if (!cp) return std::nullopt;
    const Colour c1 = big[0] != cp ? big[0] : big[1];
    std::size_t id = 0;
    while (m.component_diameter(c1, id) <= large) ++id;
    const VertexSet& comp = m.components(c1).parts[id];

    std::optional<std::pair<Vertex, Vertex>> pair;
    for (Vertex x : comp) {
        const auto row = m.row(c1, x);
        for (Vertex y : comp)
            if (y > x && row[y] >= 10 && row[y] <= 40 && m.component_of(cp, x) != m.component_of(cp, y)) {
                pair = std::pair{x, y};
                break;
            }
        if (pair) break;
    }
    if (!pair) {
        note(trace, "intersecting case: no pair at distance 10..40 across components");
        return std::nullopt;
    }
    const auto [x, y] = *pair;
    const VertexSet bx = m.ball(c1, x, 50), sx = m.ball(cp, x, 6), sy = m.ball(cp, y, 6);
    const VertexSet outside = VertexSet::full(n) - bx - sx - sy;
    if (outside.empty()) {
        if (auto ok = accept(colouring, Cover{{{bx, c1}, {sx, cp}, {sy, cp}}, 100}, 100, trace, "intersecting balls")) {
            if (trace) trace->seeds = {x, y};
            return ok;
        }
        return std::nullopt;
    }
    const Vertex trip[3] = {x, y, outside.first()};
    const auto lm = LayerMapping::build(m, c1, cp, trip, ValuePolicy::Spread);
    return via_dist7(lm, trip, trace, "intersecting case");
}

std::optional<Cover> solve_disjoint_case(const EdgeColouring& colouring, const MonoMetrics& m, SolveTrace* trace) {
    require_k4(colouring);
    for (Colour c = 1; c <= 4; ++c) {
        const auto& comps = m.components(c).parts;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (m.component_diameter(c, i) < 30) continue;
            const VertexSet& big = comps[i];
            for (Colour cp = 1; cp <= 4; ++cp) {
                if (cp == c) continue;
                const auto& others_cp = m.components(cp).parts;
                auto it = std::find_if(others_cp.begin(), others_cp.end(),
                                       [&](const VertexSet& s) { return !s.intersects(big); });
                if (it == others_cp.end()) continue;
                const auto [c2, c3] = others(c, cp);
                const Vertex v = big.first();
                const std::string tag = "disjoint case colour " + std::to_string(c) + " vs " + std::to_string(cp);
                Cover balls{{{m.ball(cp, v, 12), cp}, {m.ball(c2, v, 1), c2}, {m.ball(c3, v, 1), c3}}, 24};
                if (auto ok = accept(colouring, balls, 24, trace, tag + " balls")) {
                    if (trace) trace->seeds = {v};
                    return ok;
                }
                // A pair far apart in both colours gives a 7-distant triple with the disjoint component.
                std::optional<std::pair<Vertex, Vertex>> pair;
                for (Vertex x : big) {
                    const auto rc = m.row(c, x), rp = m.row(cp, x);
                    for (Vertex y : big)
                        if (y > x && rc[y] >= 7 && rp[y] > 6) {
                            pair = std::pair{x, y};
                            break;
                        }
                    if (pair) break;
                }
                if (!pair) {
                    note(trace, tag + ": no pair far apart in both colours");
                    continue;
                }
                const Vertex trip[3] = {pair->first, pair->second, it->first()};
                const auto lm = LayerMapping::build(m, c, cp, trip, ValuePolicy::Spread);
                if (auto cov = via_dist7(lm, trip, trace, tag)) return cov;
            }
        }
    }
    return std::nullopt;
}

Solution solve4(const EdgeColouring& colouring, const SolveOptions& options) {
    require_k4(colouring);
    Solution sol;
    SolveTrace& trace = sol.trace;
    const MonoMetrics m(colouring);
    auto done = [&](Cover cover, Branch b) {
        sol.cover = std::move(cover);
        trace.branch = b;
        sol.report = verify_cover(colouring, sol.cover, sol.cover.claimed_bound, 3);
        return sol;
    };
    auto guarded = [&](const char* stage, auto&& f) -> std::optional<Cover> {
        try {
            return f();
        } catch (const ImpossibleByLemma& e) {
            note(&trace, std::string(stage) + ": " + e.what());
            return std::nullopt;
        }
    };

    if (auto c = spanning_colour(colouring, m)) return done(std::move(*c), Branch::SpanningColour);
    if (auto c = missing_colour_star(colouring)) return done(std::move(*c), Branch::MissingColourStar);
    if (auto c = guarded("small-diameter reduction",
                         [&] { return reduce_small_diameters(colouring, options.small_diameter, &trace); }))
        return done(std::move(*c), Branch::SmallDiam);
    {
        SolveTrace scratch;
        if (auto c = guarded("layer stage", [&] { return layer_stage(m, &scratch); })) {
            scratch.notes.insert(scratch.notes.begin(), trace.notes.begin(), trace.notes.end());
            const Branch b = scratch.branch;
            trace = std::move(scratch);
            return done(std::move(*c), b);
        }
        trace.notes.insert(trace.notes.end(), scratch.notes.begin(), scratch.notes.end());
    }
    if (auto c = guarded("connected case",
                         [&] { return solve_connected_case(colouring, m, options.connected_gate, &trace); }))
        return done(std::move(*c), Branch::SingleComponent);
    if (auto c = guarded("intersecting case",
                         [&] { return solve_intersecting_case(colouring, m, options.large_diameter, &trace); }))
        return done(std::move(*c), Branch::Intersecting);
    if (auto c = guarded("disjoint case", [&] { return solve_disjoint_case(colouring, m, &trace); }))
        return done(std::move(*c), Branch::DisjointCorollary);

    std::ostringstream dump;
    dump << "no stage closed the instance; n=" << colouring.n() << '\n';
    for (Colour c = 1; c <= 4; ++c)
        dump << "colour " << static_cast<unsigned>(c) << ": components=" << m.components(c).parts.size()
             << " diameter=" << m.colour_diameter(c) << '\n';
    for (const auto& n : trace.notes) dump << "note: " << n << '\n';
    trace.diagnostic = dump.str();
    return done(gyarfas_connectivity_cover(colouring), Branch::ConnectivityFallback);
}

} // namespace mcover
