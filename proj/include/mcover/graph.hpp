// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Edge-coloured host graphs and the monochromatic metric primitives built on
// them: c-distances, c-balls, c-components and c-diameters of vertex sets.

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mcover/error.hpp"
#include "mcover/vertex_set.hpp"

namespace mcover {

// Colours are 1..k; 0 marks "no edge".
using Colour = std::uint8_t;
inline constexpr Colour kNoColour = 0;

// Raw BFS label for a vertex not reached.
inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// A monochromatic distance: a nonnegative integer or infinity (different
// components). Infinity is a distinct state, never a large number.
class Distance {
  public:
    static constexpr Distance infinite() noexcept { return Distance(); }
    constexpr explicit Distance(std::uint32_t value) noexcept : value_(value), finite_(true) {}

    constexpr bool is_finite() const noexcept { return finite_; }
    constexpr std::uint32_t value() const {
        if (!finite_) throw InvalidArgument("value() of an infinite distance");
        return value_;
    }
    // True iff finite and <= r.
    constexpr bool within(std::uint32_t r) const noexcept { return finite_ && value_ <= r; }

    constexpr bool operator==(const Distance&) const = default;
    constexpr std::strong_ordering operator<=>(const Distance& o) const noexcept {
        if (finite_ != o.finite_) return finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
        return finite_ ? value_ <=> o.value_ : std::strong_ordering::equal;
    }

  private:
    constexpr Distance() noexcept = default;
    std::uint32_t value_ = 0;
    bool finite_ = false;
};

// Diameter of a vertex set in one colour: a number, or "disconnected".
class Diameter {
  public:
    static constexpr Diameter disconnected() noexcept { return Diameter(); }
    constexpr explicit Diameter(std::uint32_t value) noexcept : value_(value), connected_(true) {}

    constexpr bool connected() const noexcept { return connected_; }
    constexpr std::uint32_t value() const {
        if (!connected_) throw InvalidArgument("value() of a disconnected diameter");
        return value_;
    }
    constexpr bool operator==(const Diameter&) const = default;

  private:
    constexpr Diameter() noexcept = default;
    std::uint32_t value_ = 0;
    bool connected_ = false;
};

// Diameter bound for covers; nullopt means connectivity only.
using Bound = std::optional<std::uint32_t>;

inline bool within_bound(const Diameter& d, const Bound& bound) {
    return d.connected() && (!bound || d.value() <= *bound);
}

struct VertexPair {
    Vertex u = 0;
    Vertex v = 0;
    auto operator<=>(const VertexPair&) const = default;
};

// K_n with an explicit set of absent pairs. When the host is complete
// multipartite, `classes()` records the parts and the missing pairs are
// exactly the within-class pairs.
class HostGraph {
  public:
    HostGraph() = default;
    static HostGraph complete(std::size_t n);
    static HostGraph with_missing(std::size_t n, std::vector<VertexPair> missing);
    // Consecutive classes of the given sizes: {0..s0-1}, {s0..s0+s1-1}, ...
    static HostGraph multipartite(const std::vector<std::size_t>& sizes);
    static HostGraph multipartite(std::size_t n, std::vector<VertexSet> classes);

    std::size_t n() const noexcept { return n_; }
    bool is_complete() const noexcept { return missing_.empty(); }
    const std::vector<VertexPair>& missing() const noexcept { return missing_; }
    bool has_edge(Vertex u, Vertex v) const;
    const std::optional<std::vector<VertexSet>>& classes() const noexcept { return classes_; }

    // Classes of a complete multipartite host, inferred from the missing
    // pairs (components of the missing graph, each required to be a clique).
    // Returns nullopt when the host is not complete multipartite.
    std::optional<std::vector<VertexSet>> infer_classes() const;

  private:
    std::size_t n_ = 0;
    std::vector<VertexPair> missing_;       // sorted, u < v
    std::vector<VertexSet> missing_rows_;   // adjacency of the missing graph
    std::optional<std::vector<VertexSet>> classes_;
};

// Colour of every present pair of a host graph, with per-colour adjacency
// bitsets. Immutable after construction.
class EdgeColouring {
  public:
    EdgeColouring() = default;
    // `colour_of(u, v)` is called once per present pair u < v.
    EdgeColouring(HostGraph host, Colour k, const std::function<Colour(Vertex, Vertex)>& colour_of);

    std::size_t n() const noexcept { return host_.n(); }
    Colour k() const noexcept { return k_; }
    const HostGraph& host() const noexcept { return host_; }
    // kNoColour for u == v and for missing pairs.
    Colour colour(Vertex u, Vertex v) const { return matrix_[static_cast<std::size_t>(u) * n() + v]; }
    // Vertices joined to v by a c-edge.
    const VertexSet& neighbours(Colour c, Vertex v) const { return rows_[(c - 1) * n() + v]; }

    void check_colour(Colour c) const;
    void check_vertex(Vertex v) const;

    // Same host; colour c becomes perm[c - 1] (perm is a permutation of 1..k).
    EdgeColouring permuted(const std::vector<Colour>& perm) const;

  private:
    HostGraph host_;
    Colour k_ = 0;
    std::vector<Colour> matrix_;
    std::vector<VertexSet> rows_;
};

// Partition of a vertex set into parts, ordered by lowest member.
struct Components {
    std::vector<std::int32_t> label; // -1 for vertices outside the view
    std::vector<VertexSet> parts;
};

// The colour-c graph restricted to a vertex set, optionally keeping only
// edges between different classes. All BFS in the library runs through here.
class SubgraphView {
  public:
    // Vertices A with every c-edge inside A.
    static SubgraphView induced(const EdgeColouring& colouring, VertexSet vertices);
    // Union of the classes, keeping only c-edges between different classes.
    static SubgraphView partite(const EdgeColouring& colouring, std::vector<VertexSet> classes);

    const EdgeColouring& colouring() const noexcept { return *colouring_; }
    const VertexSet& vertices() const noexcept { return vertices_; }

    // Multi-source BFS: entry v holds the c-distance from the nearest source,
    // kUnreached for unreachable vertices and vertices outside the view.
    std::vector<std::uint32_t> distances(Colour c, std::span<const Vertex> sources) const;
    std::vector<std::uint32_t> distances(Colour c, Vertex source) const;
    std::vector<std::uint32_t> distances(Colour c, const VertexSet& sources) const;

    Components components(Colour c) const;
    // Disconnected when some pair is unreachable; 0 on a single vertex.
    Diameter diameter(Colour c) const;

  private:
    SubgraphView() = default;
    void bfs(Colour c, VertexSet frontier, std::vector<std::uint32_t>& dist) const;

    const EdgeColouring* colouring_ = nullptr;
    VertexSet vertices_;
    std::vector<VertexSet> masks_;  // allowed neighbours per group
    std::vector<std::int32_t> group_;
};

// Memoized distances in the full colour graphs G[c]. Components are built
// eagerly; BFS rows and component diameters on first request. Safe for
// concurrent readers.
class MonoMetrics {
  public:
    explicit MonoMetrics(const EdgeColouring& colouring);

    const EdgeColouring& colouring() const noexcept { return *colouring_; }

    Distance distance(Colour c, Vertex u, Vertex v) const;
    // BFS labels from `source` in G[c] (kUnreached across components).
    std::span<const std::uint32_t> row(Colour c, Vertex source) const;

    const Components& components(Colour c) const;
    std::int32_t component_of(Colour c, Vertex v) const;
    std::uint32_t component_diameter(Colour c, std::size_t id) const;
    // Largest component diameter of colour c.
    std::uint32_t colour_diameter(Colour c) const;
    // True iff G[c] is connected and spans every vertex.
    bool spans(Colour c) const;

    VertexSet ball(Colour c, Vertex x, std::uint32_t radius) const;
    // { v : d_c(v, centre) <= radius }.
    VertexSet ball(Colour c, const VertexSet& centre, std::uint32_t radius) const;

  private:
    struct ColourData {
        Components components;
        std::vector<std::vector<std::uint32_t>> rows;
        std::unique_ptr<std::once_flag[]> row_once;
        std::vector<std::uint32_t> component_diameters;
        std::once_flag diameters_once;
    };
    ColourData& data(Colour c) const;

    const EdgeColouring* colouring_;
    SubgraphView full_;
    std::unique_ptr<ColourData[]> per_colour_;
};

// c-components of the whole colouring; isolated vertices are singletons.
std::vector<VertexSet> mono_components(const EdgeColouring& colouring, Colour c);

// B_c(x, r) = { y : d_c(x, y) <= r } measured in G[c].
VertexSet mono_ball(const MonoMetrics& metrics, Colour c, Vertex x, std::uint32_t r);

// Diameter of G[A, c] (induced on A, colour-c edges inside A only).
Diameter set_diameter(const EdgeColouring& colouring, Colour c, const VertexSet& a);

// Exposed for repeated queries on one colouring.
Diameter set_diameter(const SubgraphView& view, Colour c);

} // namespace mcover
