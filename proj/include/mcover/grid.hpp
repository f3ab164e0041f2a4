// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Finite point sets in G_l: vertices N_0^l, two points adjacent iff they
// differ in every coordinate. Lines and planes are axis-aligned only:
// a plane is {x : x_i = a}, a line is {x : x_i = a, x_j = b}.
// Axes are 0-based throughout the API.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcover/graph.hpp"

namespace mcover {

using GridPoint = std::vector<std::uint32_t>;

bool grid_adjacent(const GridPoint& x, const GridPoint& y);
std::string point_to_string(const GridPoint& p);

class GridPointSet {
  public:
    GridPointSet() = default;
    // Throws on arity mismatch or duplicate points. Order is preserved.
    GridPointSet(std::size_t arity, std::vector<GridPoint> points);

    std::size_t arity() const noexcept { return arity_; }
    std::size_t size() const noexcept { return points_.size(); }
    const GridPoint& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<GridPoint>& points() const noexcept { return points_; }

  private:
    std::size_t arity_ = 0;
    std::vector<GridPoint> points_;
};

// Components of G_l[X], as sorted index lists, ordered by lowest index.
std::vector<std::vector<std::size_t>> grid_components(const GridPointSet& x);

struct GridCoverPart {
    enum class Kind { Hyperplane, Connected };
    Kind kind = Kind::Connected;
    std::size_t axis = 0;      // Hyperplane only
    std::uint32_t value = 0;   // Hyperplane only
    std::vector<std::size_t> members;  // indices into the point set
};

// Hyperplane members share the axis value; Connected members induce a
// connected subgraph of G_l.
bool grid_part_ok(const GridPointSet& x, const GridCoverPart& part);
std::string describe_grid_part(const GridCoverPart& part);

// Connectivity cover of a finite subset of G_3 by at most three parts.
// Self-verified; throws ImpossibleByLemma with a dump on failure.
std::vector<GridCoverPart> cover_G3(const GridPointSet& x);

// Any: a part may lie in a hyperplane of any axis. Indexed: parts carry
// distinct axis indices and part i may only use a hyperplane {x_i = c}.
enum class PartAxes { Any, Indexed };

// Exhaustive check: does X admit a cover by at most `parts` grid parts?
// Tiny X only (|X| <= 12).
bool grid_cover_exists(const GridPointSet& x, std::size_t parts, PartAxes axes = PartAxes::Any);

// ---------------------------------------------------------------------------
// Structure of small independent sets in G_3.

struct Coplanar {
    std::size_t axis = 0;
    std::uint32_t value = 0;
};

// I = {(a,b,c), (a',b',c), (a',b,c'), (a,b',c')}; `order[t]` is the index in
// the input of the t-th listed point.
struct AntipodalPattern {
    std::uint32_t a = 0, a2 = 0, b = 0, b2 = 0, c = 0, c2 = 0;
    std::array<std::size_t, 4> order{};
};

// After permuting coordinates by `perm` (new coordinate t is old perm[t]):
// I = {(a,b,c), (a,b,c'), (a,b',x), (a',b,x)} in input order `order`.
struct TwoLinePattern {
    std::array<std::size_t, 3> perm{};
    std::uint32_t a = 0, a2 = 0, b = 0, b2 = 0, c = 0, c2 = 0, x = 0;
    std::array<std::size_t, 4> order{};
};

using Independent4 = std::variant<Coplanar, AntipodalPattern, TwoLinePattern>;

// Every point lies on an axis-parallel line through `centre`; line t frees
// coordinate t.
struct ThreeLines {
    GridPoint centre;
};

using Independent5 = std::variant<Coplanar, ThreeLines>;

bool independent(const std::vector<GridPoint>& points);

// First applicable of S1 (coplanar), S2 (antipodal), S3 (two lines).
Independent4 classify_independent4(const std::vector<GridPoint>& points);
bool check_independent4(const std::vector<GridPoint>& points, const Independent4& tag);
const char* independent4_name(const Independent4& tag);

Independent5 classify_independent5(const std::vector<GridPoint>& points);
bool check_independent5(const std::vector<GridPoint>& points, const Independent5& tag);

// ---------------------------------------------------------------------------
// Equivalence between colourings and point sets.

// K_|X| in fixed point order; an edge takes the smallest index of a shared
// coordinate (1-based), or l+1 when the points differ everywhere.
EdgeColouring colouring_from_points(const GridPointSet& x);

struct PointsOfColouring {
    GridPointSet points;               // arity k-1, component ids 1-based
    std::vector<VertexSet> fibres;     // fibres[i] = vertices with signature points[i]
    std::vector<std::size_t> point_of_vertex;
    // components[c-1][id-1] is the c-component with id `id`, c in 1..k-1.
    std::vector<std::vector<VertexSet>> components;
};

// Signature of v = (id of its c-component)_{c=1..k-1}; ids are ordinal by
// lowest contained vertex. Points appear in order of their lowest vertex.
PointsOfColouring points_from_colouring(const EdgeColouring& colouring);

// ---------------------------------------------------------------------------
// Exhaustive search for large induced subgraphs of G_l with bounded degree.

enum class SearchMode { Path, AnyConnected };

struct SearchResult {
    std::size_t best_size = 0;
    std::vector<GridPoint> witness;  // a set attaining best_size (path order in Path mode)
    bool complete = true;            // false when the step budget ran out
    bool uses_all_values = false;    // witness uses all m values on some axis
    std::uint64_t steps = 0;
};

// Coordinates range over 0..m-1. Canonical labelling: values on each axis
// appear in first-use order, so relabelled duplicates are not revisited.
SearchResult bounded_degree_search(std::size_t l, std::size_t d, std::uint32_t m, SearchMode mode,
                                   std::uint64_t step_budget = 2'000'000'000ULL);

// Plain DFS over all induced paths, no canonical labelling. Cross-check only.
SearchResult naive_path_search(std::size_t l, std::uint32_t m);

bool is_induced_path(const std::vector<GridPoint>& path);

} // namespace mcover
