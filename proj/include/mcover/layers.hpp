// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// c3,c4-layer mappings: every vertex gets a point (D1, D2) in N_0^2 built
// from c1- and c2-distances, so that layers two apart in both coordinates
// only see the reserved colours c3, c4 between them. Distant sets of layers
// then yield covers through the two-colour lemmas.

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcover/cover.hpp"
#include "mcover/graph.hpp"
#include "mcover/two_colour.hpp"

namespace mcover {

struct LayerPoint {
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    std::uint32_t operator[](std::size_t axis) const { return axis == 0 ? x : y; }
    auto operator<=>(const LayerPoint&) const = default;
};

std::string to_string(const LayerPoint& p);

// Value given to an undefined coordinate when a new component is reached.
// Zero: always 0. Spread: kSpreadGap above the largest value assigned so far
// on that axis, so distinct components land far apart.
enum class ValuePolicy { Zero, Spread };
inline constexpr std::uint32_t kSpreadGap = 7;

class LayerMapping {
  public:
    // Vertices are processed as `seeds`, then the rest by index. Complete host only.
    static LayerMapping build(const MonoMetrics& metrics, Colour c1, Colour c2, std::span<const Vertex> seeds = {},
                              ValuePolicy policy = ValuePolicy::Zero);
    // Explicit coordinates; throws InvalidArgument unless every invariant holds.
    static LayerMapping from_coordinates(const EdgeColouring& colouring, Colour c1, Colour c2,
                                         std::vector<std::uint32_t> d1, std::vector<std::uint32_t> d2);

    const EdgeColouring& colouring() const noexcept { return *colouring_; }
    Colour c1() const noexcept { return c1_; }
    Colour c2() const noexcept { return c2_; }
    Colour c3() const noexcept { return c3_; }
    Colour c4() const noexcept { return c4_; }

    // Sorted layer index set P.
    const std::vector<LayerPoint>& points() const noexcept { return points_; }
    bool contains(const LayerPoint& p) const;
    const VertexSet& layer(const LayerPoint& p) const;
    VertexSet layers(std::span<const LayerPoint> ps) const;
    LayerPoint point_of(Vertex v) const { return {d1_[v], d2_[v]}; }
    const std::vector<std::uint32_t>& d1() const noexcept { return d1_; }
    const std::vector<std::uint32_t>& d2() const noexcept { return d2_; }
    // Number of distinct values of coordinate `axis` (0 or 1) over P.
    std::size_t distinct_values(std::size_t axis) const;

    // First violated invariant (partition, Lipschitz on c1/c2 edges, reserved
    // colours between 2-separated layers), checked edge by edge.
    std::optional<std::string> invariant_violation() const;

  private:
    LayerMapping() = default;
    void index_layers();

    const EdgeColouring* colouring_ = nullptr;
    Colour c1_ = 0, c2_ = 0, c3_ = 0, c4_ = 0;
    std::vector<std::uint32_t> d1_, d2_;
    std::vector<LayerPoint> points_;
    std::vector<VertexSet> layers_;
};

bool is_k_distant(std::span<const LayerPoint> points, std::uint32_t k);

// Lexicographically first k-distant subset of the sorted, deduplicated P of
// the given size, or nullopt.
std::optional<std::vector<LayerPoint>> find_k_distant(std::span<const LayerPoint> points, std::uint32_t k,
                                                      std::size_t size);

// Both coordinates take at least `values` distinct values over P.
bool meets_value_gate(const LayerMapping& lm, std::size_t values = 28);

enum class LayerRoute {
    TripleSinglePart,
    TripleThreeGraphs,
    QuadSinglePart,
    QuadIntersectingPairs,
    QuadDisjointPairs,
    FarPointQuad,          // some layer is 3-distant from the whole triple
    TripleOtherColour,     // a derived triple took the other reserved colour
    CrossPointsQuad,       // the two far points form a 3-distant quadruple
    CrossPointsOtherColour,
    BallOnly,
    BallAndSecondArm,
    BallAndThirdArm,
    BallAndJoinedArms,
    BallAndArmsInBaseColour,
};

const char* route_name(LayerRoute route);

struct LayerCover {
    Cover cover;
    LayerRoute route = LayerRoute::TripleSinglePart;
    std::vector<LayerPoint> distant_set;  // the distant set that closed the instance
    std::string detail;
};

// Colour of c3,c4 in which the union of three 3-distant layers is connected
// with diameter <= 20 (cross-layer edges only).
MultipartiteOutcome cover_from_dist3_triple(const LayerMapping& lm, std::span<const LayerPoint> triple);

// Given H, connected in the reserved colour other than the triple's colour
// with diameter <= n3 and containing the layers of two triple members,
// a cover by <= 3 parts with bound max(40, n3 + 20).
LayerCover cover_from_dist3_triple_ext(const LayerMapping& lm, std::span<const LayerPoint> triple, const VertexSet& h,
                                       std::uint32_t n3);

// Cover by <= 3 parts with bound 160 from a 3-distant quadruple.
LayerCover cover_from_dist3_quad(const LayerMapping& lm, std::span<const LayerPoint> quad);

// Cover by <= 3 parts with bound 160 from a 7-distant triple, when both
// coordinates take at least 28 values.
LayerCover cover_from_dist7_triple(const LayerMapping& lm, std::span<const LayerPoint> triple);

} // namespace mcover
