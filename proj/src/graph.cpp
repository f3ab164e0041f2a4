// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#include "mcover/graph.hpp"

#include <algorithm>
#include <string>

namespace mcover {

// ---------------------------------------------------------------------------
// HostGraph

HostGraph HostGraph::complete(std::size_t n) { return with_missing(n, {}); }

HostGraph HostGraph::with_missing(std::size_t n, std::vector<VertexPair> missing) {
    HostGraph h;
    h.n_ = n;
    h.missing_rows_.assign(n, VertexSet(n));
    for (auto& p : missing) {
        if (p.u == p.v) throw InvalidArgument("missing pair (v,v)");
        if (p.u >= n || p.v >= n) throw InvalidArgument("missing pair out of range");
        if (p.u > p.v) std::swap(p.u, p.v);
    }
    std::sort(missing.begin(), missing.end());
    if (std::adjacent_find(missing.begin(), missing.end()) != missing.end())
        throw InvalidArgument("duplicate missing pair");
    for (const auto& p : missing) {
        h.missing_rows_[p.u].insert(p.v);
        h.missing_rows_[p.v].insert(p.u);
    }
    h.missing_ = std::move(missing);
    return h;
}

HostGraph HostGraph::multipartite(const std::vector<std::size_t>& sizes) {
    std::size_t n = 0;
    for (auto s : sizes) n += s;
    std::vector<VertexSet> classes;
    Vertex next = 0;
    for (auto s : sizes) {
        VertexSet c(n);
        for (std::size_t i = 0; i < s; ++i) c.insert(next++);
        classes.push_back(std::move(c));
    }
    return multipartite(n, std::move(classes));
}

HostGraph HostGraph::multipartite(std::size_t n, std::vector<VertexSet> classes) {
    VertexSet seen(n);
    std::vector<VertexPair> missing;
    for (const auto& c : classes) {
        if (c.universe() != n) throw InvalidArgument("class universe mismatch");
        if (c.empty()) throw InvalidArgument("empty class");
        if (c.intersects(seen)) throw InvalidArgument("classes overlap");
        seen |= c;
        auto members = c.to_vector();
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) missing.push_back({members[i], members[j]});
    }
    if (seen.count() != n) throw InvalidArgument("classes do not cover the vertex set");
    HostGraph h = with_missing(n, std::move(missing));
    h.classes_ = std::move(classes);
    return h;
}

bool HostGraph::has_edge(Vertex u, Vertex v) const {
    if (u == v || u >= n_ || v >= n_) return false;
    return !missing_rows_[u].contains(v);
}

std::optional<std::vector<VertexSet>> HostGraph::infer_classes() const {
    if (classes_) return classes_;
    std::vector<VertexSet> classes;
    VertexSet assigned(n_);
    for (Vertex v = 0; v < n_; ++v) {
        if (assigned.contains(v)) continue;
        VertexSet cls = missing_rows_[v];
        cls.insert(v);
        // A clique component: every member sees exactly the rest of the class.
        for (Vertex u : cls) {
            VertexSet row = missing_rows_[u];
            row.insert(u);
            if (!(row == cls)) return std::nullopt;
        }
        assigned |= cls;
        classes.push_back(std::move(cls));
    }
    return classes;
}

// ---------------------------------------------------------------------------
// EdgeColouring

EdgeColouring::EdgeColouring(HostGraph host, Colour k, const std::function<Colour(Vertex, Vertex)>& colour_of)
    : host_(std::move(host)), k_(k) {
    if (k_ < 1) throw InvalidArgument("k must be at least 1");
    const std::size_t n = host_.n();
    matrix_.assign(n * n, kNoColour);
    rows_.assign(static_cast<std::size_t>(k_) * n, VertexSet(n));
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!host_.has_edge(u, v)) continue;
            const Colour c = colour_of(u, v);
            if (c < 1 || c > k_)
                throw InvalidArgument("colour " + std::to_string(c) + " of pair " + std::to_string(u) + "," +
                                      std::to_string(v) + " outside 1.." + std::to_string(k_));
            matrix_[u * n + v] = c;
            matrix_[v * n + u] = c;
            rows_[(c - 1) * n + u].insert(v);
            rows_[(c - 1) * n + v].insert(u);
        }
    }
}

void EdgeColouring::check_colour(Colour c) const {
    if (c < 1 || c > k_)
        throw InvalidArgument("colour " + std::to_string(c) + " outside 1.." + std::to_string(k_));
}

void EdgeColouring::check_vertex(Vertex v) const {
    if (v >= n()) throw InvalidArgument("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n()) + "-1");
}

EdgeColouring EdgeColouring::permuted(const std::vector<Colour>& perm) const {
    if (perm.size() != k_) throw InvalidArgument("colour permutation has wrong length");
    std::vector<Colour> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i + 1) throw InvalidArgument("not a permutation of 1..k");
    return EdgeColouring(host_, k_, [&](Vertex u, Vertex v) { return perm[colour(u, v) - 1]; });
}

// ---------------------------------------------------------------------------
// SubgraphView

SubgraphView SubgraphView::induced(const EdgeColouring& colouring, VertexSet vertices) {
    if (vertices.universe() != colouring.n()) throw InvalidArgument("vertex set universe mismatch");
    SubgraphView view;
    view.colouring_ = &colouring;
    view.group_.assign(colouring.n(), -1);
    for (Vertex v : vertices) view.group_[v] = 0;
    view.masks_.push_back(vertices);
    view.vertices_ = std::move(vertices);
    return view;
}

SubgraphView SubgraphView::partite(const EdgeColouring& colouring, std::vector<VertexSet> classes) {
    SubgraphView view;
    view.colouring_ = &colouring;
    view.group_.assign(colouring.n(), -1);
    view.vertices_ = VertexSet(colouring.n());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].universe() != colouring.n()) throw InvalidArgument("vertex set universe mismatch");
        if (classes[i].intersects(view.vertices_)) throw InvalidArgument("partite classes overlap");
        view.vertices_ |= classes[i];
        for (Vertex v : classes[i]) view.group_[v] = static_cast<std::int32_t>(i);
    }
    for (const auto& cls : classes) view.masks_.push_back(view.vertices_ - cls);
    return view;
}

void SubgraphView::bfs(Colour c, VertexSet frontier, std::vector<std::uint32_t>& dist) const {
    const auto& col = *colouring_;
    col.check_colour(c);
    dist.assign(col.n(), kUnreached);
    frontier &= vertices_;
    VertexSet visited = frontier;
    VertexSet next(col.n());
    std::uint32_t level = 0;
    while (!frontier.empty()) {
        for (Vertex v : frontier) dist[v] = level;
        next.clear();
        for (Vertex v : frontier) next.or_and(col.neighbours(c, v), masks_[static_cast<std::size_t>(group_[v])]);
        next -= visited;
        visited |= next;
        std::swap(frontier, next);
        ++level;
    }
}

std::vector<std::uint32_t> SubgraphView::distances(Colour c, const VertexSet& sources) const {
    std::vector<std::uint32_t> dist;
    bfs(c, sources, dist);
    return dist;
}

std::vector<std::uint32_t> SubgraphView::distances(Colour c, std::span<const Vertex> sources) const {
    VertexSet s(colouring_->n());
    for (Vertex v : sources) {
        colouring_->check_vertex(v);
        s.insert(v);
    }
    return distances(c, s);
}

std::vector<std::uint32_t> SubgraphView::distances(Colour c, Vertex source) const {
    return distances(c, std::span<const Vertex>(&source, 1));
}

Components SubgraphView::components(Colour c) const {
    colouring_->check_colour(c);
    Components out;
    out.label.assign(colouring_->n(), -1);
    VertexSet remaining = vertices_;
    std::vector<std::uint32_t> dist;
    while (!remaining.empty()) {
        const Vertex root = remaining.first();
        bfs(c, VertexSet(colouring_->n(), {root}), dist);
        VertexSet part(colouring_->n());
        for (Vertex v : remaining)
            if (dist[v] != kUnreached) part.insert(v);
        const auto id = static_cast<std::int32_t>(out.parts.size());
        for (Vertex v : part) out.label[v] = id;
        remaining -= part;
        out.parts.push_back(std::move(part));
    }
    return out;
}

Diameter SubgraphView::diameter(Colour c) const {
    colouring_->check_colour(c);
    std::uint32_t best = 0;
    std::vector<std::uint32_t> dist;
    for (Vertex s : vertices_) {
        bfs(c, VertexSet(colouring_->n(), {s}), dist);
        for (Vertex v : vertices_) {
            if (dist[v] == kUnreached) return Diameter::disconnected();
            best = std::max(best, dist[v]);
        }
    }
    return Diameter(best);
}

// ---------------------------------------------------------------------------
// MonoMetrics

MonoMetrics::MonoMetrics(const EdgeColouring& colouring)
    : colouring_(&colouring),
      full_(SubgraphView::induced(colouring, VertexSet::full(colouring.n()))),
      per_colour_(new ColourData[colouring.k()]) {
    for (Colour c = 1; c <= colouring.k(); ++c) {
        auto& d = per_colour_[c - 1];
        d.components = full_.components(c);
        d.rows.resize(colouring.n());
        d.row_once.reset(new std::once_flag[colouring.n()]);
    }
}

MonoMetrics::ColourData& MonoMetrics::data(Colour c) const {
    colouring_->check_colour(c);
    return per_colour_[c - 1];
}

std::span<const std::uint32_t> MonoMetrics::row(Colour c, Vertex source) const {
    auto& d = data(c);
    colouring_->check_vertex(source);
    std::call_once(d.row_once[source], [&] { d.rows[source] = full_.distances(c, source); });
    return d.rows[source];
}

Distance MonoMetrics::distance(Colour c, Vertex u, Vertex v) const {
    colouring_->check_vertex(v);
    const auto r = row(c, u);
    return r[v] == kUnreached ? Distance::infinite() : Distance(r[v]);
}

const Components& MonoMetrics::components(Colour c) const { return data(c).components; }

std::int32_t MonoMetrics::component_of(Colour c, Vertex v) const {
    colouring_->check_vertex(v);
    return data(c).components.label[v];
}

std::uint32_t MonoMetrics::component_diameter(Colour c, std::size_t id) const {
    auto& d = data(c);
    std::call_once(d.diameters_once, [&] {
        d.component_diameters.assign(d.components.parts.size(), 0);
        for (Vertex s = 0; s < colouring_->n(); ++s) {
            auto& best = d.component_diameters[static_cast<std::size_t>(d.components.label[s])];
            for (auto x : row(c, s))
                if (x != kUnreached) best = std::max(best, x);
        }
    });
    if (id >= d.component_diameters.size()) throw InvalidArgument("component id out of range");
    return d.component_diameters[id];
}

std::uint32_t MonoMetrics::colour_diameter(Colour c) const {
    std::uint32_t best = 0;
    const auto parts = components(c).parts.size();
    for (std::size_t i = 0; i < parts; ++i) best = std::max(best, component_diameter(c, i));
    return best;
}

bool MonoMetrics::spans(Colour c) const { return components(c).parts.size() == 1; }

VertexSet MonoMetrics::ball(Colour c, Vertex x, std::uint32_t radius) const {
    VertexSet out(colouring_->n());
    const auto r = row(c, x);
    for (Vertex v = 0; v < colouring_->n(); ++v)
        if (r[v] <= radius) out.insert(v);
    return out;
}

VertexSet MonoMetrics::ball(Colour c, const VertexSet& centre, std::uint32_t radius) const {
    VertexSet out(colouring_->n());
    const auto dist = full_.distances(c, centre);
    for (Vertex v = 0; v < colouring_->n(); ++v)
        if (dist[v] <= radius) out.insert(v);
    return out;
}

// ---------------------------------------------------------------------------

std::vector<VertexSet> mono_components(const EdgeColouring& colouring, Colour c) {
    return SubgraphView::induced(colouring, VertexSet::full(colouring.n())).components(c).parts;
}

VertexSet mono_ball(const MonoMetrics& metrics, Colour c, Vertex x, std::uint32_t r) { return metrics.ball(c, x, r); }

Diameter set_diameter(const SubgraphView& view, Colour c) { return view.diameter(c); }

Diameter set_diameter(const EdgeColouring& colouring, Colour c, const VertexSet& a) {
    colouring.check_colour(c);
    if (a.universe() != colouring.n()) throw InvalidArgument("vertex set universe mismatch");
    if (a.empty()) throw InvalidArgument("set_diameter of an empty set");
    return SubgraphView::induced(colouring, a).diameter(c);
}

} // namespace mcover
