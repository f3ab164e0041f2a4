// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#include "mcover/layers.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <sstream>

namespace mcover {

std::string to_string(const LayerPoint& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

namespace {

std::uint32_t gap(std::uint32_t a, std::uint32_t b) { return a > b ? a - b : b - a; }

bool separated(const LayerPoint& a, const LayerPoint& b, std::uint32_t k) {
    return gap(a.x, b.x) >= k && gap(a.y, b.y) >= k;
}

std::pair<Colour, Colour> reserved_pair(Colour k, Colour c1, Colour c2) {
    std::vector<Colour> rest;
    for (Colour c = 1; c <= k; ++c)
        if (c != c1 && c != c2) rest.push_back(c);
    if (rest.size() < 2) throw InvalidArgument("layer mapping needs at least four colours");
    return {rest[0], rest[1]};
}

void check_pair(const EdgeColouring& colouring, Colour c1, Colour c2) {
    colouring.check_colour(c1);
    colouring.check_colour(c2);
    if (c1 == c2) throw InvalidArgument("layer mapping needs two distinct generating colours");
}

std::string points_dump(std::span<const LayerPoint> ps) {
    std::string out;
    for (const auto& p : ps) out += to_string(p) + " ";
    return out;
}

} // namespace

LayerMapping LayerMapping::build(const MonoMetrics& metrics, Colour c1, Colour c2, std::span<const Vertex> seeds,
                                 ValuePolicy policy) {
    const auto& col = metrics.colouring();
    check_pair(col, c1, c2);
    const std::size_t n = col.n();
    std::vector<Vertex> order;
    std::vector<char> listed(n, 0);
    for (Vertex s : seeds) {
        col.check_vertex(s);
        if (listed[s]) throw InvalidArgument("seed vertex " + std::to_string(s) + " listed twice");
        listed[s] = 1;
        order.push_back(s);
    }
    for (Vertex v = 0; v < n; ++v)
        if (!listed[v]) order.push_back(v);

    LayerMapping lm;
    lm.colouring_ = &col;
    lm.c1_ = c1;
    lm.c2_ = c2;
    std::tie(lm.c3_, lm.c4_) = reserved_pair(col.k(), c1, c2);
    std::array<std::vector<std::uint32_t>, 2> d{std::vector<std::uint32_t>(n, kUnreached),
                                                std::vector<std::uint32_t>(n, kUnreached)};
    std::array<std::uint32_t, 2> top{0, 0};
    std::array<bool, 2> any{false, false};
    const std::array<Colour, 2> gen{c1, c2};
    for (Vertex v : order) {
        for (std::size_t j = 0; j < 2; ++j) {
            if (d[j][v] != kUnreached) continue;
            const std::uint32_t base = (policy == ValuePolicy::Spread && any[j]) ? top[j] + kSpreadGap : 0;
            const auto row = metrics.row(gen[j], v);
            for (Vertex u = 0; u < n; ++u) {
                if (row[u] == kUnreached) continue;
                d[j][u] = base + row[u];
                top[j] = std::max(top[j], d[j][u]);
            }
            any[j] = true;
        }
    }
    lm.d1_ = std::move(d[0]);
    lm.d2_ = std::move(d[1]);
    lm.index_layers();
    return lm;
}

LayerMapping LayerMapping::from_coordinates(const EdgeColouring& colouring, Colour c1, Colour c2,
                                            std::vector<std::uint32_t> d1, std::vector<std::uint32_t> d2) {
    check_pair(colouring, c1, c2);
    if (d1.size() != colouring.n() || d2.size() != colouring.n())
        throw InvalidArgument("coordinate vectors must have one entry per vertex");
    LayerMapping lm;
    lm.colouring_ = &colouring;
    lm.c1_ = c1;
    lm.c2_ = c2;
    std::tie(lm.c3_, lm.c4_) = reserved_pair(colouring.k(), c1, c2);
    lm.d1_ = std::move(d1);
    lm.d2_ = std::move(d2);
    lm.index_layers();
    if (auto bad = lm.invariant_violation()) throw InvalidArgument("not a layer mapping: " + *bad);
    return lm;
}

void LayerMapping::index_layers() {
    const std::size_t n = d1_.size();
    std::set<LayerPoint> seen;
    for (Vertex v = 0; v < n; ++v) seen.insert(point_of(v));
    points_.assign(seen.begin(), seen.end());
    layers_.assign(points_.size(), VertexSet(n));
    for (Vertex v = 0; v < n; ++v) {
        auto it = std::lower_bound(points_.begin(), points_.end(), point_of(v));
        layers_[it - points_.begin()].insert(v);
    }
}

bool LayerMapping::contains(const LayerPoint& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

const VertexSet& LayerMapping::layer(const LayerPoint& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) throw InvalidArgument("no layer at " + to_string(p));
    return layers_[it - points_.begin()];
}

VertexSet LayerMapping::layers(std::span<const LayerPoint> ps) const {
    VertexSet out(d1_.size());
    for (const auto& p : ps) out |= layer(p);
    return out;
}

std::size_t LayerMapping::distinct_values(std::size_t axis) const {
    std::set<std::uint32_t> values;
    for (const auto& p : points_) values.insert(p[axis]);
    return values.size();
}

std::optional<std::string> LayerMapping::invariant_violation() const {
    const auto& col = *colouring_;
    const std::size_t n = col.n();
    VertexSet covered(n);
    std::size_t total = 0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (layers_[i].empty()) return "empty layer " + to_string(points_[i]);
        for (Vertex v : layers_[i])
            if (point_of(v) != points_[i]) return "vertex " + std::to_string(v) + " filed under the wrong layer";
        covered |= layers_[i];
        total += layers_[i].count();
    }
    if (covered.count() != n || total != n) return std::string("layers do not partition the vertex set");
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const Colour c = col.colour(u, v);
            if (c == kNoColour) continue;
            if (c == c1_ && gap(d1_[u], d1_[v]) > 1)
                return "edge " + std::to_string(u) + "-" + std::to_string(v) + " in the first colour jumps D1";
            if (c == c2_ && gap(d2_[u], d2_[v]) > 1)
                return "edge " + std::to_string(u) + "-" + std::to_string(v) + " in the second colour jumps D2";
            if (separated(point_of(u), point_of(v), 2) && c != c3_ && c != c4_)
                return "edge " + std::to_string(u) + "-" + std::to_string(v) + " between separated layers " +
                       to_string(point_of(u)) + " and " + to_string(point_of(v)) + " is not reserved";
        }
    }
    return std::nullopt;
}

bool is_k_distant(std::span<const LayerPoint> points, std::uint32_t k) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (!separated(points[i], points[j], k)) return false;
    return true;
}

std::optional<std::vector<LayerPoint>> find_k_distant(std::span<const LayerPoint> points, std::uint32_t k,
                                                      std::size_t size) {
    if (k < 1 || size < 1) throw InvalidArgument("find_k_distant needs k >= 1 and size >= 1");
    std::vector<LayerPoint> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t m = pts.size();
    if (size > m) return std::nullopt;
    // compat[i]: later points separated from point i.
    std::vector<VertexSet> compat(m, VertexSet(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (separated(pts[i], pts[j], k)) compat[i].insert(static_cast<Vertex>(j));
    std::vector<std::size_t> chosen;
    auto search = [&](auto&& self, const VertexSet& allowed) -> bool {
        if (chosen.size() == size) return true;
        if (allowed.count() < size - chosen.size()) return false;
        for (Vertex i : allowed) {
            chosen.push_back(i);
            if (self(self, allowed & compat[i])) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!search(search, VertexSet::full(m))) return std::nullopt;
    std::vector<LayerPoint> out;
    for (auto i : chosen) out.push_back(pts[i]);
    return out;
}

bool meets_value_gate(const LayerMapping& lm, std::size_t values) {
    return lm.distinct_values(0) >= values && lm.distinct_values(1) >= values;
}

const char* route_name(LayerRoute route) {
    switch (route) {
    case LayerRoute::TripleSinglePart: return "triple-single-part";
    case LayerRoute::TripleThreeGraphs: return "triple-three-graphs";
    case LayerRoute::QuadSinglePart: return "quad-single-part";
    case LayerRoute::QuadIntersectingPairs: return "quad-intersecting-pairs";
    case LayerRoute::QuadDisjointPairs: return "quad-disjoint-pairs";
    case LayerRoute::FarPointQuad: return "far-point-quad";
    case LayerRoute::TripleOtherColour: return "triple-other-colour";
    case LayerRoute::CrossPointsQuad: return "cross-points-quad";
    case LayerRoute::CrossPointsOtherColour: return "cross-points-other-colour";
    case LayerRoute::BallOnly: return "ball-only";
    case LayerRoute::BallAndSecondArm: return "ball-and-second-arm";
    case LayerRoute::BallAndThirdArm: return "ball-and-third-arm";
    case LayerRoute::BallAndJoinedArms: return "ball-and-joined-arms";
    case LayerRoute::BallAndArmsInBaseColour: return "ball-and-arms-in-base-colour";
    }
    return "unknown";
}

namespace {

void require_complete(const LayerMapping& lm) {
    if (!lm.colouring().host().is_complete()) throw InvalidArgument("distant-set covers need a complete host");
}

void require_points(const LayerMapping& lm, std::span<const LayerPoint> ps, std::size_t size, std::uint32_t k) {
    if (ps.size() != size) throw InvalidArgument("expected " + std::to_string(size) + " layer points");
    for (const auto& p : ps)
        if (!lm.contains(p)) throw InvalidArgument("point " + to_string(p) + " is not a layer");
    if (!is_k_distant(ps, k))
        throw InvalidArgument("points " + points_dump(ps) + "are not " + std::to_string(k) + "-distant");
}

std::vector<VertexSet> layer_classes(const LayerMapping& lm, std::span<const LayerPoint> ps) {
    std::vector<VertexSet> out;
    for (const auto& p : ps) out.push_back(lm.layer(p));
    return out;
}

Colour other_reserved(const LayerMapping& lm, Colour c) { return c == lm.c3() ? lm.c4() : lm.c3(); }

bool in(std::span<const LayerPoint> ps, const LayerPoint& p) { return std::find(ps.begin(), ps.end(), p) != ps.end(); }

LayerCover finish(const LayerMapping& lm, LayerCover out, std::uint32_t bound, const char* what) {
    out.cover.claimed_bound = bound;
    const auto report = verify_cover(lm.colouring(), out.cover, bound, 3);
    if (!report.valid)
        throw ImpossibleByLemma(std::string(what) + " produced an invalid cover: " + report.describe(),
                                describe_cover(out.cover) + "\nroute " + route_name(out.route) + "\npoints " +
                                    points_dump(out.distant_set));
    return out;
}

// nullopt when the pair has neither bipartite outcome (a class holding
// vertices monochromatic in opposite colours). Callers then fall back to the
// per-vertex rule; finish() still verifies the result.
std::optional<BipartiteOutcome> reserved_outcome(const EdgeColouring& col, const VertexSet& x, const VertexSet& y,
                                                 Colour c, Colour cp) {
    try {
        return bipartite_outcome(col, x, y, c, cp);
    } catch (const ImpossibleByLemma&) {
        return std::nullopt;
    }
}

} // namespace

MultipartiteOutcome cover_from_dist3_triple(const LayerMapping& lm, std::span<const LayerPoint> triple) {
    require_complete(lm);
    require_points(lm, triple, 3, 3);
    return multipartite_outcome(lm.colouring(), layer_classes(lm, triple), lm.c3(), lm.c4());
}

LayerCover cover_from_dist3_triple_ext(const LayerMapping& lm, std::span<const LayerPoint> triple, const VertexSet& h,
                                       std::uint32_t n3) {
    require_complete(lm);
    require_points(lm, triple, 3, 3);
    const auto& col = lm.colouring();
    const std::vector<LayerPoint> t(triple.begin(), triple.end());
    const auto base = multipartite_outcome(col, layer_classes(lm, t), lm.c3(), lm.c4());
    const Colour c = base.colour;
    const Colour cp = other_reserved(lm, c);
    const VertexSet lt = lm.layers(t);

    LayerCover out;
    out.distant_set = t;
    if (lm.points().size() == 3) {
        out.route = LayerRoute::TripleSinglePart;
        out.cover.parts.push_back({lt, c});
        return finish(lm, std::move(out), 20, "triple cover");
    }

    // Certificate: H connected in c' within n3 and holding two triple layers.
    if (h.universe() != col.n() || h.empty()) throw InvalidArgument("certificate set is empty or has the wrong universe");
    const Diameter hd = set_diameter(col, cp, h);
    if (!within_bound(hd, n3))
        throw InvalidArgument("certificate set is not connected within " + std::to_string(n3) + " in the other colour");
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < 3; ++i)
        if (lm.layer(t[i]).is_subset_of(h)) inside.push_back(i);
    if (inside.size() < 2) throw InvalidArgument("certificate set must contain the layers of two triple points");
    const LayerPoint a2 = t[inside[0]], b2 = t[inside[1]];
    const LayerPoint c2 = t[3 - inside[0] - inside[1]];

    VertexSet part1 = lt, via_h(col.n()), via_c(col.n());
    for (const auto& d : lm.points()) {
        if (in(t, d)) continue;
        auto e = std::find_if(t.begin(), t.end(), [&](const LayerPoint& x) { return separated(d, x, 2); });
        if (e == t.end())
            throw ImpossibleByLemma("layer " + to_string(d) + " is 2-distant from no triple point", points_dump(t));
        const VertexSet& ld = lm.layer(d);
        const VertexSet& le = lm.layer(*e);
        VertexSet& side = (*e == a2 || *e == b2) ? via_h : via_c;
        const auto outcome = reserved_outcome(col, ld, le, c, cp);
        if (const auto* mono = outcome ? std::get_if<MonoSpanning>(&*outcome) : nullptr) {
            if (mono->colour == c)
                part1 |= ld;
            else
                side |= ld;
            continue;
        }
        for (Vertex v : ld) {
            if (col.neighbours(c, v).intersects(le))
                part1.insert(v);
            else
                side.insert(v);
        }
    }
    out.route = LayerRoute::TripleThreeGraphs;
    out.cover.parts.push_back({part1, c});
    if (!via_h.empty()) out.cover.parts.push_back({h | via_h, cp});
    if (!via_c.empty()) out.cover.parts.push_back({lm.layer(c2) | via_c, cp});
    return finish(lm, std::move(out), std::max<std::uint32_t>(40, n3 + 20), "triple extension");
}

LayerCover cover_from_dist3_quad(const LayerMapping& lm, std::span<const LayerPoint> quad) {
    require_complete(lm);
    require_points(lm, quad, 4, 3);
    const auto& col = lm.colouring();
    const std::vector<LayerPoint> q(quad.begin(), quad.end());
    const auto base = multipartite_outcome(col, layer_classes(lm, q), lm.c3(), lm.c4());
    const Colour cb = base.colour;
    const Colour co = other_reserved(lm, cb);

    LayerCover out;
    out.distant_set = q;
    VertexSet base_part = lm.layers(q);
    if (lm.points().size() == 4) {
        out.route = LayerRoute::QuadSinglePart;
        out.cover.parts.push_back({base_part, cb});
        return finish(lm, std::move(out), 60, "quadruple cover");
    }

    // Pair index (i, j) with i < j into q.
    std::array<std::array<VertexSet, 4>, 4> group;
    for (auto& row : group)
        for (auto& s : row) s = VertexSet(col.n());
    for (const auto& e : lm.points()) {
        if (in(q, e)) continue;
        std::vector<std::size_t> near;
        for (std::size_t i = 0; i < 4; ++i)
            if (separated(e, q[i], 2)) near.push_back(i);
        if (near.size() < 2)
            throw ImpossibleByLemma("layer " + to_string(e) + " is 2-distant from fewer than two quadruple points",
                                    points_dump(q));
        const std::size_t i = near[0], j = near[1];
        const LayerPoint trip[3] = {q[i], q[j], e};
        const auto ce = multipartite_outcome(col, layer_classes(lm, trip), lm.c3(), lm.c4());
        if (ce.colour == cb)
            base_part |= lm.layer(e);
        else
            group[i][j] |= lm.layer(e);
    }
    out.cover.parts.push_back({base_part, cb});

    std::vector<std::pair<std::size_t, std::size_t>> used;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (!group[i][j].empty()) used.emplace_back(i, j);
    auto pair_set = [&](std::size_t i, std::size_t j) { return lm.layer(q[i]) | lm.layer(q[j]) | group[i][j]; };
    const bool disjoint_two = used.size() == 2 && used[0].first != used[1].first && used[0].first != used[1].second &&
                              used[0].second != used[1].first && used[0].second != used[1].second;
    if (used.empty()) {
        out.route = LayerRoute::QuadSinglePart;
    } else if (disjoint_two) {
        out.route = LayerRoute::QuadDisjointPairs;
        for (auto [i, j] : used) out.cover.parts.push_back({pair_set(i, j), co});
    } else {
        out.route = LayerRoute::QuadIntersectingPairs;
        VertexSet joined(col.n());
        for (auto [i, j] : used) joined |= pair_set(i, j);
        out.cover.parts.push_back({joined, co});
    }
    return finish(lm, std::move(out), 160, "quadruple cover");
}

namespace {

// Case walk for a 7-distant triple; the base colour of the triple is c3
// after renaming, the other reserved colour c4.
class SevenDistant {
  public:
    SevenDistant(const LayerMapping& lm, std::span<const LayerPoint> t) : lm_(lm), col_(lm.colouring()), t_(t.begin(), t.end()) {}

    LayerCover run() {
        // A layer 3-distant from the whole triple closes via the quadruple lemma.
        for (const auto& d : lm_.points()) {
            if (in(t_, d)) continue;
            if (std::all_of(t_.begin(), t_.end(), [&](const LayerPoint& e) { return separated(d, e, 3); })) {
                const LayerPoint quad[4] = {t_[0], t_[1], t_[2], d};
                return delegate(cover_from_dist3_quad(lm_, quad), LayerRoute::FarPointQuad);
            }
        }
        const auto base = cover_from_dist3_triple(lm_, t_);
        c3_ = base.colour;
        c4_ = other_reserved(lm_, c3_);

        // Every layer near at most one triple point on some axis forms a
        // 3-distant triple with two triple points.
        std::vector<LayerPoint> rest;
        for (const auto& d : lm_.points()) {
            if (in(t_, d)) continue;
            const auto e1 = near(d, 0), e2 = near(d, 1);
            if (e1 && e2 && *e1 != *e2) {
                rest.push_back(d);
                continue;
            }
            std::vector<LayerPoint> others;
            for (std::size_t i = 0; i < 3; ++i)
                if ((!e1 || i != *e1) && (!e2 || i != *e2)) others.push_back(t_[i]);
            const LayerPoint trip[3] = {d, others[0], others[1]};
            if (auto c = through(trip)) return *c;
        }

        // X far from the triple on the first axis, Y on the second.
        const auto x = far_point(0), y = far_point(1);
        if (!x || !y)
            throw ImpossibleByLemma("value gate holds but no far point exists on some axis", dump());
        const auto xa = near(*x, 1), yb = near(*y, 0);
        if (!xa || !yb) throw ImpossibleByLemma("far point is 3-distant from the triple after the quadruple check", dump());
        const std::size_t ia = *xa;
        if (*yb == ia) {
            std::vector<LayerPoint> quad{*x, *y};
            for (std::size_t i = 0; i < 3; ++i)
                if (i != ia) quad.push_back(t_[i]);
            return delegate(cover_from_dist3_quad(lm_, quad), LayerRoute::CrossPointsQuad);
        }
        const std::size_t ib = *yb, ic = 3 - ia - ib;

        VertexSet h = lm_.layers(t_) | lm_.layer(*x) | lm_.layer(*y);
        const Diameter hd = set_diameter(col_, c3_, h);
        if (!hd.connected())
            throw ImpossibleByLemma("triple and far points are not connected in the base colour", dump());

        std::array<std::vector<LayerPoint>, 3> arms;  // P1, P2, P3
        for (const auto& d : rest) {
            const std::size_t e1 = *near(d, 0), e2 = *near(d, 1);
            if ((e1 == ia && e2 == ib) || (e1 == ic && e2 == ib) || (e1 == ia && e2 == ic)) {
                const LayerPoint trip[3] = {d, *x, *y};
                const auto tc = cover_from_dist3_triple(lm_, trip);
                if (tc.colour == c4_) {
                    auto ext = cover_from_dist3_triple_ext(lm_, trip, h, hd.value());
                    ext.detail = std::string("extension route ") + route_name(ext.route);
                    ext.route = LayerRoute::CrossPointsOtherColour;
                    return ext;
                }
            } else if (e1 == ib && e2 == ia) {
                arms[0].push_back(d);
            } else if (e1 == ic && e2 == ia) {
                arms[1].push_back(d);
            } else if (e1 == ib && e2 == ic) {
                arms[2].push_back(d);
            } else {
                throw ImpossibleByLemma("layer " + to_string(d) + " matches no near-point pattern", dump());
            }
        }
        return ball_cover(arms, t_[ic], *y, *x);
    }

  private:
    // Index of the triple point within 2 of d on the axis, if any (unique by 7-distance).
    std::optional<std::size_t> near(const LayerPoint& d, std::size_t axis) const {
        for (std::size_t i = 0; i < 3; ++i)
            if (gap(d[axis], t_[i][axis]) <= 2) return i;
        return std::nullopt;
    }

    std::optional<LayerPoint> far_point(std::size_t axis) const {
        for (const auto& d : lm_.points())
            if (std::all_of(t_.begin(), t_.end(), [&](const LayerPoint& e) { return gap(d[axis], e[axis]) >= 5; }))
                return d;
        return std::nullopt;
    }

    // A triple holding two triple points and coloured c4 closes via the extension.
    std::optional<LayerCover> through(std::span<const LayerPoint> trip) {
        const auto tc = cover_from_dist3_triple(lm_, trip);
        if (tc.colour != c4_) return std::nullopt;
        const VertexSet h = lm_.layers(trip);
        const Diameter hd = set_diameter(col_, c4_, h);
        auto ext = cover_from_dist3_triple_ext(lm_, t_, h, hd.value());
        ext.detail = std::string("extension route ") + route_name(ext.route) + " via " + points_dump(trip);
        ext.route = LayerRoute::TripleOtherColour;
        return ext;
    }

    LayerCover delegate(LayerCover inner, LayerRoute route) const {
        inner.detail = std::string("quadruple route ") + route_name(inner.route);
        inner.route = route;
        return inner;
    }

    // Arm i reaches the anchor layer through reserved edges only. Vertices
    // outside the c3-ball V arrive without c3 edges to the anchor.
    LayerCover ball_cover(const std::array<std::vector<LayerPoint>, 3>& arms, const LayerPoint& anchor1,
                          const LayerPoint& anchor2, const LayerPoint& anchor3) {
        const std::size_t n = col_.n();
        const VertexSet lt = lm_.layers(t_);
        const auto dist = SubgraphView::induced(col_, VertexSet::full(n)).distances(c3_, lt);
        VertexSet v(n);
        for (Vertex u = 0; u < n; ++u)
            if (dist[u] <= 40) v.insert(u);

        const LayerPoint anchors[3] = {anchor1, anchor2, anchor3};
        std::array<std::optional<VertexSet>, 3> arm_part;  // c4 part for arm i, if needed
        std::array<VertexSet, 3> arm_layers, arm_outside;
        for (std::size_t i = 0; i < 3; ++i) {
            arm_layers[i] = lm_.layers(arms[i]);
            arm_outside[i] = arm_layers[i] - v;
            if (arm_outside[i].empty()) continue;
            const VertexSet& anchor = lm_.layer(anchors[i]);
            const auto outcome = reserved_outcome(col_, arm_layers[i], anchor, c3_, c4_);
            const auto* mono = outcome ? std::get_if<MonoSpanning>(&*outcome) : nullptr;
            arm_part[i] = (mono && mono->colour == c4_) ? (arm_layers[i] | anchor) : (arm_outside[i] | anchor);
        }

        LayerCover out;
        out.distant_set = t_;
        out.cover.parts.push_back({v, c3_});
        if (arm_part[0]) out.cover.parts.push_back({*arm_part[0], c4_});
        if (!arm_part[1] || !arm_part[2]) {
            out.route = arm_part[1] ? LayerRoute::BallAndSecondArm
                        : arm_part[2] ? LayerRoute::BallAndThirdArm
                                      : LayerRoute::BallOnly;
            if (arm_part[1]) out.cover.parts.push_back({*arm_part[1], c4_});
            if (arm_part[2]) out.cover.parts.push_back({*arm_part[2], c4_});
            return finish(lm_, std::move(out), 160, "7-distant cover");
        }

        // Both later arms stick out: join them in one colour.
        std::vector<std::pair<LayerRoute, CoverPart>> tries;
        const auto between = reserved_outcome(col_, arm_layers[1], arm_layers[2], c3_, c4_);
        const auto* mono = between ? std::get_if<MonoSpanning>(&*between) : nullptr;
        const CoverPart joined{*arm_part[1] | *arm_part[2], c4_};
        const CoverPart whole{arm_layers[1] | arm_layers[2], c3_};
        const CoverPart outer{arm_outside[1] | arm_outside[2], c3_};
        if (mono && mono->colour == c3_) {
            tries = {{LayerRoute::BallAndArmsInBaseColour, whole}, {LayerRoute::BallAndJoinedArms, joined}};
        } else {
            tries = {{LayerRoute::BallAndJoinedArms, joined},
                     {LayerRoute::BallAndArmsInBaseColour, whole},
                     {LayerRoute::BallAndArmsInBaseColour, outer}};
        }
        for (const auto& [route, part] : tries) {
            if (!set_diameter(col_, part.colour, part.set).connected()) continue;
            LayerCover attempt = out;
            attempt.route = route;
            attempt.cover.parts.push_back(part);
            attempt.cover.claimed_bound = 160;
            if (verify_cover(col_, attempt.cover, 160, 3).valid) return attempt;
        }
        throw ImpossibleByLemma("7-distant cover: no way to join the last two arms", dump());
    }

    std::string dump() const {
        std::ostringstream o;
        o << "triple " << points_dump(t_) << "\nP";
        for (const auto& p : lm_.points()) o << ' ' << to_string(p) << ':' << lm_.layer(p).count();
        return o.str();
    }

    const LayerMapping& lm_;
    const EdgeColouring& col_;
    std::vector<LayerPoint> t_;
    Colour c3_ = kNoColour, c4_ = kNoColour;
};

} // namespace

LayerCover cover_from_dist7_triple(const LayerMapping& lm, std::span<const LayerPoint> triple) {
    require_complete(lm);
    require_points(lm, triple, 3, 7);
    if (!meets_value_gate(lm, 28)) throw InvalidArgument("7-distant cover needs at least 28 values on each axis");
    return SevenDistant(lm, triple).run();
}

} // namespace mcover
