// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#include "mcover/two_colour.hpp"

#include <algorithm>
#include <sstream>

namespace mcover {
namespace {

struct ColourShape {
    std::size_t components = 0;
    std::uint32_t largest_component_diameter = 0;
    Diameter diameter = Diameter::disconnected();
};

// Components and component diameters of one colour in a partite view.
ColourShape shape_of(const SubgraphView& view, Colour c) {
    ColourShape s;
    s.components = view.components(c).parts.size();
    bool connected = true;
    for (Vertex v : view.vertices()) {
        const auto dist = view.distances(c, v);
        for (Vertex u : view.vertices()) {
            if (dist[u] == kUnreached)
                connected = false;
            else
                s.largest_component_diameter = std::max(s.largest_component_diameter, dist[u]);
        }
    }
    if (connected) s.diameter = Diameter(s.largest_component_diameter);
    return s;
}

void check_cross_pairs(const EdgeColouring& colouring, const std::vector<VertexSet>& classes, Colour p, Colour q) {
    colouring.check_colour(p);
    colouring.check_colour(q);
    if (p == q) throw InvalidArgument("two-colour lemma needs two distinct colours");
    VertexSet seen(colouring.n());
    for (const auto& cls : classes) {
        if (cls.universe() != colouring.n()) throw InvalidArgument("class universe mismatch");
        if (cls.empty()) throw InvalidArgument("empty vertex class");
        if (cls.intersects(seen)) throw InvalidArgument("vertex classes overlap");
        seen |= cls;
    }
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            for (Vertex u : classes[i])
                for (Vertex v : classes[j]) {
                    const Colour c = colouring.colour(u, v);
                    if (c != p && c != q)
                        throw InvalidArgument("pair " + std::to_string(u) + "," + std::to_string(v) +
                                              " is missing or coloured outside the two colours");
                }
}

Colour other_of(Colour c, Colour p, Colour q) { return c == p ? q : p; }

std::string dump_classes(const EdgeColouring& colouring, const std::vector<VertexSet>& classes) {
    std::ostringstream out;
    for (const auto& cls : classes) out << cls.to_string() << " ";
    out << "\n";
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            for (Vertex u : classes[i])
                for (Vertex v : classes[j]) out << u << " " << v << " " << int(colouring.colour(u, v)) << "\n";
    return out.str();
}

bool split_holds(const EdgeColouring& colouring, const VertexSet& x, const VertexSet& y, Colour p, Colour q,
                 const Split& s) {
    if (s.colour_aa != p && s.colour_aa != q) return false;
    if (!((s.a1 | s.b1) == x) || s.a1.intersects(s.b1)) return false;
    if (!((s.a2 | s.b2) == y) || s.a2.intersects(s.b2)) return false;
    const Colour cross = other_of(s.colour_aa, p, q);
    for (Vertex u : x)
        for (Vertex v : y) {
            const bool same = s.a1.contains(u) == s.a2.contains(v);
            if (colouring.colour(u, v) != (same ? s.colour_aa : cross)) return false;
        }
    return true;
}

// The unique sign pattern s with colour(uv) == p iff s(u) == s(v), if any.
Split split_by_parity(const EdgeColouring& colouring, const VertexSet& x, const VertexSet& y, Colour p) {
    const std::size_t n = colouring.n();
    Split s{VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n), p};
    const Vertex x0 = x.first();
    for (Vertex v : y) (colouring.colour(x0, v) == p ? s.a2 : s.b2).insert(v);
    const Vertex y0 = y.first();
    const bool y0_in_a = s.a2.contains(y0);
    for (Vertex u : x) {
        const bool same = colouring.colour(u, y0) == p;
        (same == y0_in_a ? s.a1 : s.b1).insert(u);
    }
    return s;
}

MultipartiteOutcome first_valid(const SubgraphView& view, const std::vector<std::pair<Colour, std::string>>& candidates,
                                std::uint32_t bound) {
    for (const auto& [c, route] : candidates) {
        const Diameter d = view.diameter(c);
        if (d.connected() && d.value() <= bound) return {c, d.value(), bound, route};
    }
    return {};
}

MultipartiteOutcome three_classes(const EdgeColouring& colouring, const std::vector<VertexSet>& cls, Colour p,
                                  Colour q) {
    const auto view = SubgraphView::partite(colouring, cls);
    BipartiteOutcome pair[3][3];
    try {
        pair[0][1] = bipartite_outcome(colouring, cls[0], cls[1], p, q);
        pair[0][2] = bipartite_outcome(colouring, cls[0], cls[2], p, q);
        pair[1][2] = bipartite_outcome(colouring, cls[1], cls[2], p, q);
    } catch (const ImpossibleByLemma&) {
        // Some pair has neither outcome; only a measured colour can close it.
        auto result = first_valid(view, {{p, "measured"}, {q, "measured"}}, 20);
        if (result.colour != kNoColour) return result;
        throw ImpossibleByLemma("three-class two-colour lemma: a pair has no bipartite outcome and no colour "
                                "has diameter <= 20",
                                dump_classes(colouring, cls));
    }
    auto outcome = [&](int i, int j) -> const BipartiteOutcome& { return i < j ? pair[i][j] : pair[j][i]; };
    auto mono = [&](int i, int j) { return std::get_if<MonoSpanning>(&outcome(i, j)); };

    std::vector<std::pair<Colour, std::string>> candidates;
    const int perms[3][3] = {{0, 1, 2}, {1, 0, 2}, {2, 0, 1}};
    for (const auto& ds : perms) {
        const int d = ds[0], e = ds[1], f = ds[2];
        const auto* de = mono(d, e);
        const auto* df = mono(d, f);
        if ((de == nullptr) != (df == nullptr)) {
            candidates.emplace_back(de ? de->colour : df->colour, "case 1");
        } else if (de && df) {
            if (de->colour == df->colour) {
                candidates.emplace_back(de->colour, "case 2, one colour");
            } else if (const auto* ef = mono(e, f)) {
                candidates.emplace_back(ef->colour, "case 2, third pair spans");
            } else {
                candidates.emplace_back(de->colour, "case 2, third pair splits");
                candidates.emplace_back(df->colour, "case 2, third pair splits");
            }
        }
    }
    if (candidates.empty()) {
        candidates.emplace_back(p, "case 3");
        candidates.emplace_back(q, "case 3");
    }
    // Splits with an empty part fall outside the case analysis.
    candidates.emplace_back(p, "measured");
    candidates.emplace_back(q, "measured");
    auto result = first_valid(view, candidates, 20);
    if (result.colour != kNoColour) return result;
    throw ImpossibleByLemma("three-class two-colour lemma found no colour of diameter <= 20",
                            dump_classes(colouring, cls));
}

} // namespace

BipartiteOutcome bipartite_outcome(const EdgeColouring& colouring, const VertexSet& x, const VertexSet& y, Colour p,
                                   Colour q) {
    check_cross_pairs(colouring, {x, y}, p, q);
    const auto view = SubgraphView::partite(colouring, {x, y});
    const ColourShape shape[2] = {shape_of(view, p), shape_of(view, q)};
    const Colour colours[2] = {p, q};
    auto spanning = [&](int t, const char* why) -> BipartiteOutcome {
        const auto& s = shape[t];
        if (s.diameter.connected() && s.diameter.value() <= 10) return MonoSpanning{colours[t], s.diameter.value()};
        // A class whose vertices all see one side pattern gives a split with
        // an empty part; the component counts alone cannot tell.
        Split degenerate = split_by_parity(colouring, x, y, p);
        if (split_holds(colouring, x, y, p, q, degenerate)) return degenerate;
        throw ImpossibleByLemma(std::string("bipartite lemma: ") + why + " but the colour does not span within 10",
                                dump_classes(colouring, {x, y}));
    };
    for (int t = 0; t < 2; ++t)
        if (shape[t].largest_component_diameter >= 7) return spanning(1 - t, "long component in the other colour");
    for (int t = 0; t < 2; ++t)
        if (shape[t].components == 1) return spanning(t, "single component");
    for (int t = 0; t < 2; ++t)
        if (shape[t].components >= 3) return spanning(1 - t, "three components in the other colour");
    Split s = split_by_parity(colouring, x, y, p);
    if (!split_holds(colouring, x, y, p, q, s))
        throw ImpossibleByLemma("bipartite lemma: two components per colour without a split",
                                dump_classes(colouring, {x, y}));
    return s;
}

bool check_bipartite_outcome(const EdgeColouring& colouring, const VertexSet& x, const VertexSet& y, Colour p,
                             Colour q, const BipartiteOutcome& outcome) {
    if (const auto* m = std::get_if<MonoSpanning>(&outcome)) {
        if (m->colour != p && m->colour != q) return false;
        const Diameter d = SubgraphView::partite(colouring, {x, y}).diameter(m->colour);
        return d.connected() && d.value() <= 10 && d.value() == m->diameter;
    }
    return split_holds(colouring, x, y, p, q, std::get<Split>(outcome));
}

MultipartiteOutcome multipartite_outcome(const EdgeColouring& colouring, const std::vector<VertexSet>& classes,
                                         Colour p, Colour q) {
    if (classes.size() < 3) throw InvalidArgument("multipartite lemma needs at least three classes");
    check_cross_pairs(colouring, classes, p, q);
    const auto view = SubgraphView::partite(colouring, classes);

    // Only one colour used between classes.
    bool only_p = true, only_q = true;
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            for (Vertex u : classes[i])
                for (Vertex v : classes[j]) {
                    only_p = only_p && colouring.colour(u, v) == p;
                    only_q = only_q && colouring.colour(u, v) == q;
                }
    const std::uint32_t bound = classes.size() == 3 ? 20 : 60;
    if (only_p || only_q) {
        auto r = first_valid(view, {{only_p ? p : q, "one colour"}}, bound);
        if (r.colour != kNoColour) return r;
    }
    if (classes.size() == 3) return three_classes(colouring, classes, p, q);

    // Auxiliary colouring of K_{r-1}: ij gets the colour the three-class case
    // returns on V_i, V_j and the last class.
    const std::size_t r = classes.size();
    std::vector<Colour> aux((r - 1) * (r - 1), 0);
    for (std::size_t i = 0; i + 1 < r; ++i)
        for (std::size_t j = i + 1; j + 1 < r; ++j) {
            MultipartiteOutcome o;
            try {
                o = three_classes(colouring, {classes[i], classes[j], classes[r - 1]}, p, q);
            } catch (const ImpossibleByLemma&) {
                auto result = first_valid(view, {{p, "measured"}, {q, "measured"}}, 60);
                if (result.colour != kNoColour) return result;
                throw;
            }
            aux[i * (r - 1) + j] = aux[j * (r - 1) + i] = o.colour == p ? 1 : 2;
        }
    const EdgeColouring chi(HostGraph::complete(r - 1), 2, [&](Vertex i, Vertex j) { return aux[i * (r - 1) + j]; });
    const Colour c = erdos_rado_cover(chi) == 1 ? p : q;
    auto result = first_valid(view, {{c, "auxiliary colouring"}, {c == p ? q : p, "measured"}}, 60);
    if (result.colour != kNoColour) return result;
    throw ImpossibleByLemma("multipartite lemma: auxiliary colour exceeds diameter 60", dump_classes(colouring, classes));
}

Colour erdos_rado_cover(const EdgeColouring& colouring) {
    if (!colouring.host().is_complete()) throw InvalidArgument("erdos_rado_cover needs a complete host");
    if (colouring.k() != 2) throw InvalidArgument("erdos_rado_cover needs k = 2");
    const auto view = SubgraphView::induced(colouring, VertexSet::full(colouring.n()));
    for (Colour c = 1; c <= 2; ++c) {
        const Diameter d = view.diameter(c);
        if (d.connected() && d.value() <= 3) return c;
    }
    std::ostringstream dump;
    for (Vertex u = 0; u < colouring.n(); ++u)
        for (Vertex v = u + 1; v < colouring.n(); ++v) dump << u << " " << v << " " << int(colouring.colour(u, v)) << "\n";
    throw ImpossibleByLemma("no colour spans with diameter <= 3", dump.str());
}

namespace {

std::vector<VertexSet> host_classes(const EdgeColouring& colouring) {
    if (colouring.k() != 2) throw InvalidArgument("two-colour lemma needs k = 2");
    auto classes = colouring.host().classes();
    if (!classes) classes = colouring.host().infer_classes();
    if (!classes) throw InvalidArgument("host is not complete multipartite");
    return *classes;
}

} // namespace

BipartiteOutcome bipartite_two_colour(const EdgeColouring& colouring) {
    const auto classes = host_classes(colouring);
    if (classes.size() != 2) throw InvalidArgument("host is not complete bipartite");
    return bipartite_outcome(colouring, classes[0], classes[1], 1, 2);
}

MultipartiteOutcome multipartite_two_colour(const EdgeColouring& colouring) {
    const auto classes = host_classes(colouring);
    if (classes.size() < 3) throw InvalidArgument("host has fewer than three classes");
    return multipartite_outcome(colouring, classes, 1, 2);
}

} // namespace mcover
