// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#include "mcover/grid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace mcover {

bool grid_adjacent(const GridPoint& x, const GridPoint& y) {
    if (x.size() != y.size()) throw InvalidArgument("grid points of different arity");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] == y[i]) return false;
    return true;
}

std::string point_to_string(const GridPoint& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p[i]);
    }
    return out + ")";
}

GridPointSet::GridPointSet(std::size_t arity, std::vector<GridPoint> points) : arity_(arity), points_(std::move(points)) {
    if (arity_ == 0) throw InvalidArgument("grid arity must be at least 1");
    std::set<GridPoint> seen;
    for (const auto& p : points_) {
        if (p.size() != arity_) throw InvalidArgument("point " + point_to_string(p) + " has wrong arity");
        if (!seen.insert(p).second) throw InvalidArgument("duplicate point " + point_to_string(p));
    }
}

std::vector<std::vector<std::size_t>> grid_components(const GridPointSet& x) {
    const std::size_t n = x.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        std::vector<std::size_t> members{s};
        comp[s] = id;
        for (std::size_t head = 0; head < members.size(); ++head) {
            const auto u = members[head];
            for (std::size_t v = 0; v < n; ++v)
                if (comp[v] < 0 && grid_adjacent(x[u], x[v])) {
                    comp[v] = id;
                    members.push_back(v);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

namespace {

bool members_connected(const GridPointSet& x, const std::vector<std::size_t>& members) {
    if (members.empty()) return false;
    std::vector<char> seen(members.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < members.size(); ++v)
            if (!seen[v] && grid_adjacent(x[members[u]], x[members[v]])) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == members.size();
}

std::vector<std::size_t> plane_members(const GridPointSet& x, std::size_t axis, std::uint32_t value) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i][axis] == value) out.push_back(i);
    return out;
}

GridCoverPart hyperplane(const GridPointSet& x, std::size_t axis, std::uint32_t value) {
    return {GridCoverPart::Kind::Hyperplane, axis, value, plane_members(x, axis, value)};
}

GridCoverPart connected(std::vector<std::size_t> members) {
    return {GridCoverPart::Kind::Connected, 0, 0, std::move(members)};
}

bool parts_cover(const GridPointSet& x, const std::vector<GridCoverPart>& parts) {
    std::vector<char> hit(x.size(), 0);
    for (const auto& p : parts) {
        if (!grid_part_ok(x, p)) return false;
        for (auto i : p.members) hit[i] = 1;
    }
    return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

std::size_t shared_coordinates(const GridPoint& p, const GridPoint& q) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += p[i] == q[i];
    return s;
}

bool coplanar(const std::vector<GridPoint>& pts, std::size_t& axis, std::uint32_t& value) {
    for (std::size_t a = 0; a < pts.front().size(); ++a) {
        bool all = true;
        for (const auto& p : pts) all = all && p[a] == pts.front()[a];
        if (all) {
            axis = a;
            value = pts.front()[a];
            return true;
        }
    }
    return false;
}

std::string dump_points(const GridPointSet& x) {
    std::ostringstream out;
    out << x.arity() << "\n";
    for (const auto& p : x.points()) {
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
        out << "\n";
    }
    return out.str();
}

// Cover by the two listed components and a plane containing every other
// component, if such a plane exists.
std::optional<std::vector<GridCoverPart>> two_components_and_plane(const GridPointSet& x,
                                                                   const std::vector<std::vector<std::size_t>>& comps,
                                                                   std::size_t i, std::size_t j) {
    std::vector<GridPoint> rest;
    for (std::size_t t = 0; t < comps.size(); ++t)
        if (t != i && t != j)
            for (auto m : comps[t]) rest.push_back(x[m]);
    std::vector<GridCoverPart> parts{connected(comps[i]), connected(comps[j])};
    if (!rest.empty()) {
        std::size_t axis = 0;
        std::uint32_t value = 0;
        if (!coplanar(rest, axis, value)) return std::nullopt;
        parts.push_back(hyperplane(x, axis, value));
    }
    if (!parts_cover(x, parts)) return std::nullopt;
    return parts;
}

std::optional<std::vector<GridCoverPart>> two_components_and_plane_search(
    const GridPointSet& x, const std::vector<std::vector<std::size_t>>& comps) {
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = i + 1; j < comps.size(); ++j)
            if (auto parts = two_components_and_plane(x, comps, i, j)) return parts;
    return std::nullopt;
}

} // namespace

bool grid_part_ok(const GridPointSet& x, const GridCoverPart& part) {
    if (part.members.empty()) return false;
    for (auto i : part.members)
        if (i >= x.size()) return false;
    if (part.kind == GridCoverPart::Kind::Hyperplane) {
        if (part.axis >= x.arity()) return false;
        for (auto i : part.members)
            if (x[i][part.axis] != part.value) return false;
        return true;
    }
    return members_connected(x, part.members);
}

std::string describe_grid_part(const GridCoverPart& part) {
    std::ostringstream out;
    if (part.kind == GridCoverPart::Kind::Hyperplane)
        out << "plane x" << part.axis + 1 << "=" << part.value;
    else
        out << "connected";
    out << " {";
    for (std::size_t i = 0; i < part.members.size(); ++i) out << (i ? " " : "") << part.members[i];
    out << "}";
    return out.str();
}

std::vector<GridCoverPart> cover_G3(const GridPointSet& x) {
    if (x.arity() != 3) throw InvalidArgument("cover_G3 needs arity 3");
    if (x.size() == 0) return {};
    auto finish = [&](std::vector<GridCoverPart> parts, const char* step) {
        if (parts.size() > 3 || !parts_cover(x, parts))
            throw ImpossibleByLemma(std::string("cover_G3: step '") + step + "' produced an invalid cover",
                                    dump_points(x));
        return parts;
    };

    {
        std::size_t axis = 0;
        std::uint32_t value = 0;
        if (coplanar(x.points(), axis, value)) return finish({hyperplane(x, axis, value)}, "single plane");
    }
    const auto comps = grid_components(x);
    const std::size_t r = comps.size();
    if (r <= 3) {
        std::vector<GridCoverPart> parts;
        for (const auto& c : comps) parts.push_back(connected(c));
        return finish(std::move(parts), "components");
    }
    std::vector<std::size_t> comp_of(x.size());
    for (std::size_t c = 0; c < r; ++c)
        for (auto m : comps[c]) comp_of[m] = c;

    // Three collinear points in different components: two planes.
    {
        std::map<std::array<std::uint32_t, 4>, std::set<std::size_t>> lines;
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t b = a + 1; b < 3; ++b) {
                    auto& comps_on_line = lines[{std::uint32_t(a), std::uint32_t(b), x[i][a], x[i][b]}];
                    comps_on_line.insert(comp_of[i]);
                    if (comps_on_line.size() >= 3)
                        return finish({hyperplane(x, a, x[i][a]), hyperplane(x, b, x[i][b])}, "collinear triple");
                }
    }

    // A representative triple outside every plane.
    std::optional<std::array<std::size_t, 3>> triple;
    for (std::size_t i = 0; i < x.size() && !triple; ++i)
        for (std::size_t j = i + 1; j < x.size() && !triple; ++j) {
            if (comp_of[j] == comp_of[i]) continue;
            for (std::size_t k = j + 1; k < x.size(); ++k) {
                if (comp_of[k] == comp_of[i] || comp_of[k] == comp_of[j]) continue;
                bool shares_plane = false;
                for (std::size_t a = 0; a < 3; ++a)
                    shares_plane = shares_plane || (x[i][a] == x[j][a] && x[i][a] == x[k][a]);
                if (!shares_plane) {
                    triple = std::array<std::size_t, 3>{i, j, k};
                    break;
                }
            }
        }

    if (!triple) {
        // Every complete representative set is coplanar. A noncollinear pair
        // of representatives spans the plane holding all other components.
        std::vector<std::size_t> reps;
        for (const auto& c : comps) reps.push_back(c.front());
        for (std::size_t a = 0; a < reps.size(); ++a)
            for (std::size_t b = a + 1; b < reps.size(); ++b)
                if (shared_coordinates(x[reps[a]], x[reps[b]]) == 1)
                    if (auto parts = two_components_and_plane(x, comps, a, b))
                        return finish(std::move(*parts), "coplanar representatives");
        throw ImpossibleByLemma("cover_G3: coplanar representatives without a covering plane", dump_points(x));
    }

    if (r >= 5) {
        // The concurrency point of the three lines: per axis, the value the
        // triple repeats.
        GridPoint p(3);
        bool defined = true;
        for (std::size_t a = 0; a < 3; ++a) {
            const auto u = x[(*triple)[0]][a], v = x[(*triple)[1]][a], w = x[(*triple)[2]][a];
            if (u == v || u == w)
                p[a] = u;
            else if (v == w)
                p[a] = v;
            else
                defined = false;
        }
        if (!defined) throw ImpossibleByLemma("cover_G3: representative triple repeats no value on some axis",
                                              dump_points(x));
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = a + 1; b < 3; ++b) {
                std::vector<GridCoverPart> parts{hyperplane(x, a, p[a]), hyperplane(x, b, p[b])};
                if (std::all_of(parts.begin(), parts.end(), [](const auto& q) { return !q.members.empty(); }) &&
                    parts_cover(x, parts))
                    return finish(std::move(parts), "three concurrent lines");
            }
        throw ImpossibleByLemma("cover_G3: no two planes through the concurrency point cover", dump_points(x));
    }

    // Exactly four components. Look for a plane meeting every component.
    for (std::size_t axis = 0; axis < 3; ++axis) {
        std::set<std::uint32_t> values;
        for (const auto& p : x.points()) values.insert(p[axis]);
        for (auto value : values) {
            std::vector<std::size_t> reps(r, x.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                if (x[i][axis] == value && reps[comp_of[i]] == x.size()) reps[comp_of[i]] = i;
            if (std::find(reps.begin(), reps.end(), x.size()) != reps.end()) continue;

            std::vector<GridCoverPart> parts{hyperplane(x, axis, value)};
            std::vector<std::pair<std::size_t, std::uint32_t>> doubled;
            for (std::size_t other = 0; other < 3; ++other) {
                if (other == axis) continue;
                std::map<std::uint32_t, int> counts;
                for (auto rep : reps) ++counts[x[rep][other]];
                for (auto [v, cnt] : counts)
                    if (cnt >= 2) doubled.emplace_back(other, v);
            }
            // Either at most one doubled value per axis (one plane each), or
            // two doubled values on one axis (those two planes).
            for (auto [a, v] : doubled) parts.push_back(hyperplane(x, a, v));
            if (parts.size() <= 3 && parts_cover(x, parts)) return finish(std::move(parts), "coplanar four");
            for (std::size_t a = 0; a < 3; ++a) {
                std::vector<GridCoverPart> two{hyperplane(x, axis, value)};
                for (auto [b, v] : doubled)
                    if (b == a) two.push_back(hyperplane(x, b, v));
                if (two.size() == 3 && parts_cover(x, two)) return finish(std::move(two), "coplanar four");
            }
        }
    }

    // No coplanar complete representative set: two components and a plane.
    if (auto parts = two_components_and_plane_search(x, comps)) return finish(std::move(*parts), "two components");
    throw ImpossibleByLemma("cover_G3: four components without a covering structure", dump_points(x));
}

bool grid_cover_exists(const GridPointSet& x, std::size_t parts, PartAxes axes) {
    const std::size_t n = x.size();
    if (n > 12) throw InvalidArgument("grid_cover_exists: at most 12 points");
    if (n == 0) return true;
    const std::size_t l = x.arity();
    if (axes == PartAxes::Indexed && parts > l) throw InvalidArgument("indexed parts: at most one part per axis");
    const std::uint32_t full = (1U << n) - 1;
    // valid[a]: sets allowed for a part whose hyperplane option is axis a;
    // valid[l]: any axis.
    std::vector<std::vector<std::uint32_t>> valid(l + 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1U) members.push_back(i);
        const bool conn = members_connected(x, members);
        bool any = conn;
        for (std::size_t a = 0; a < l; ++a) {
            bool plane = true;
            for (auto i : members) plane = plane && x[i][a] == x[members[0]][a];
            any = any || plane;
            if (plane || conn) valid[a].push_back(mask);
        }
        if (any) valid[l].push_back(mask);
    }
    // Only inclusion-maximal sets matter.
    for (auto& list : valid) {
        std::vector<std::uint32_t> maximal;
        for (auto m : list) {
            bool dominated = false;
            for (auto o : list)
                if (o != m && (o & m) == m) {
                    dominated = true;
                    break;
                }
            if (!dominated) maximal.push_back(m);
        }
        list = std::move(maximal);
    }
    if (axes == PartAxes::Any) {
        auto search = [&](auto&& self, std::uint32_t covered, std::size_t left) -> bool {
            if (covered == full) return true;
            if (left == 0) return false;
            const auto first_missing = static_cast<std::uint32_t>(std::countr_zero(~covered & full));
            for (auto m : valid[l])
                if ((m >> first_missing & 1U) && self(self, covered | m, left - 1)) return true;
            return false;
        };
        return search(search, 0, parts);
    }
    // Part a in turn takes one of its sets or stays empty.
    auto search = [&](auto&& self, std::uint32_t covered, std::size_t axis, std::size_t left) -> bool {
        if (covered == full) return true;
        if (axis == l || left == 0) return false;
        if (self(self, covered, axis + 1, left)) return true;
        for (auto m : valid[axis])
            if ((m & ~covered) && self(self, covered | m, axis + 1, left - 1)) return true;
        return false;
    };
    return search(search, 0, 0, parts);
}

// ---------------------------------------------------------------------------

bool independent(const std::vector<GridPoint>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (grid_adjacent(points[i], points[j])) return false;
    return true;
}

namespace {

void check_small_independent(const std::vector<GridPoint>& points, std::size_t size) {
    if (points.size() != size) throw InvalidArgument("expected " + std::to_string(size) + " points");
    for (const auto& p : points)
        if (p.size() != 3) throw InvalidArgument("expected points of arity 3");
    std::set<GridPoint> distinct(points.begin(), points.end());
    if (distinct.size() != size) throw InvalidArgument("points are not distinct");
    if (!independent(points)) throw InvalidArgument("points are not independent in G_3");
}

bool antipodal_holds(const std::vector<GridPoint>& pts, const AntipodalPattern& w) {
    if (w.a == w.a2 || w.b == w.b2 || w.c == w.c2) return false;
    const GridPoint want[4] = {{w.a, w.b, w.c}, {w.a2, w.b2, w.c}, {w.a2, w.b, w.c2}, {w.a, w.b2, w.c2}};
    std::set<std::size_t> used(w.order.begin(), w.order.end());
    if (used.size() != 4) return false;
    for (std::size_t t = 0; t < 4; ++t)
        if (w.order[t] >= pts.size() || pts[w.order[t]] != want[t]) return false;
    return true;
}

bool two_line_holds(const std::vector<GridPoint>& pts, const TwoLinePattern& w) {
    if (w.a == w.a2 || w.b == w.b2 || w.c == w.c2) return false;
    std::set<std::size_t> axes(w.perm.begin(), w.perm.end());
    if (axes.size() != 3 || *axes.rbegin() != 2) return false;
    std::set<std::size_t> used(w.order.begin(), w.order.end());
    if (used.size() != 4) return false;
    const GridPoint want[4] = {{w.a, w.b, w.c}, {w.a, w.b, w.c2}, {w.a, w.b2, w.x}, {w.a2, w.b, w.x}};
    for (std::size_t t = 0; t < 4; ++t) {
        if (w.order[t] >= pts.size()) return false;
        const auto& p = pts[w.order[t]];
        for (std::size_t s = 0; s < 3; ++s)
            if (p[w.perm[s]] != want[t][s]) return false;
    }
    return true;
}

} // namespace

Independent4 classify_independent4(const std::vector<GridPoint>& points) {
    check_small_independent(points, 4);
    {
        Coplanar c;
        if (coplanar(points, c.axis, c.value)) return c;
    }
    std::array<std::size_t, 4> order{0, 1, 2, 3};
    do {
        const auto& p0 = points[order[0]];
        const auto& p1 = points[order[1]];
        AntipodalPattern w{p0[0], p1[0], p0[1], p1[1], p0[2], points[order[2]][2], order};
        if (antipodal_holds(points, w)) return w;
    } while (std::next_permutation(order.begin(), order.end()));

    std::array<std::size_t, 3> perm{0, 1, 2};
    do {
        order = {0, 1, 2, 3};
        do {
            auto at = [&](std::size_t t, std::size_t s) { return points[order[t]][perm[s]]; };
            TwoLinePattern w{perm, at(0, 0), at(3, 0), at(0, 1), at(2, 1), at(0, 2), at(1, 2), at(2, 2), order};
            if (two_line_holds(points, w)) return w;
        } while (std::next_permutation(order.begin(), order.end()));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::ostringstream dump;
    for (const auto& p : points) dump << point_to_string(p) << " ";
    throw ImpossibleByLemma("independent 4-set fits no structure", dump.str());
}

bool check_independent4(const std::vector<GridPoint>& points, const Independent4& tag) {
    if (points.size() != 4 || !independent(points)) return false;
    if (const auto* c = std::get_if<Coplanar>(&tag)) {
        if (c->axis >= 3) return false;
        return std::all_of(points.begin(), points.end(), [&](const auto& p) { return p[c->axis] == c->value; });
    }
    if (const auto* s2 = std::get_if<AntipodalPattern>(&tag)) return antipodal_holds(points, *s2);
    return two_line_holds(points, std::get<TwoLinePattern>(tag));
}

const char* independent4_name(const Independent4& tag) {
    switch (tag.index()) {
    case 0: return "S1";
    case 1: return "S2";
    default: return "S3";
    }
}

Independent5 classify_independent5(const std::vector<GridPoint>& points) {
    check_small_independent(points, 5);
    {
        Coplanar c;
        if (coplanar(points, c.axis, c.value)) return c;
    }
    std::array<std::vector<std::uint32_t>, 3> values;
    for (std::size_t a = 0; a < 3; ++a) {
        std::set<std::uint32_t> s;
        for (const auto& p : points) s.insert(p[a]);
        values[a].assign(s.begin(), s.end());
    }
    for (auto u : values[0])
        for (auto v : values[1])
            for (auto w : values[2]) {
                ThreeLines t{{u, v, w}};
                if (check_independent5(points, t)) return t;
            }
    std::ostringstream dump;
    for (const auto& p : points) dump << point_to_string(p) << " ";
    throw ImpossibleByLemma("independent 5-set is neither coplanar nor on three concurrent lines", dump.str());
}

bool check_independent5(const std::vector<GridPoint>& points, const Independent5& tag) {
    if (points.size() != 5 || !independent(points)) return false;
    if (const auto* c = std::get_if<Coplanar>(&tag)) {
        if (c->axis >= 3) return false;
        return std::all_of(points.begin(), points.end(), [&](const auto& p) { return p[c->axis] == c->value; });
    }
    const auto& centre = std::get<ThreeLines>(tag).centre;
    if (centre.size() != 3) return false;
    return std::all_of(points.begin(), points.end(),
                       [&](const auto& p) { return shared_coordinates(p, centre) >= 2; });
}

// ---------------------------------------------------------------------------

EdgeColouring colouring_from_points(const GridPointSet& x) {
    const std::size_t l = x.arity();
    if (l + 1 > 255) throw InvalidArgument("arity too large");
    return EdgeColouring(HostGraph::complete(x.size()), static_cast<Colour>(l + 1), [&](Vertex u, Vertex v) {
        for (std::size_t i = 0; i < l; ++i)
            if (x[u][i] == x[v][i]) return static_cast<Colour>(i + 1);
        return static_cast<Colour>(l + 1);
    });
}

PointsOfColouring points_from_colouring(const EdgeColouring& colouring) {
    if (!colouring.host().is_complete()) throw InvalidArgument("points_from_colouring needs a complete host");
    if (colouring.k() < 2) throw InvalidArgument("points_from_colouring needs k >= 2");
    const std::size_t n = colouring.n();
    const std::size_t l = colouring.k() - 1;
    PointsOfColouring out;
    std::vector<std::vector<std::int32_t>> label(l);
    for (Colour c = 1; c <= l; ++c) {
        auto comps = SubgraphView::induced(colouring, VertexSet::full(n)).components(c);
        label[c - 1] = std::move(comps.label);
        out.components.push_back(std::move(comps.parts));
    }
    std::map<GridPoint, std::size_t> index;
    std::vector<GridPoint> pts;
    out.point_of_vertex.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        GridPoint sig(l);
        for (std::size_t c = 0; c < l; ++c) sig[c] = static_cast<std::uint32_t>(label[c][v] + 1);
        auto [it, fresh] = index.emplace(sig, pts.size());
        if (fresh) {
            pts.push_back(sig);
            out.fibres.emplace_back(n);
        }
        out.fibres[it->second].insert(v);
        out.point_of_vertex[v] = it->second;
    }
    out.points = GridPointSet(l, std::move(pts));
    return out;
}

} // namespace mcover
