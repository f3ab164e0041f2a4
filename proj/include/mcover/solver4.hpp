// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// The 4-colour solver: a cascade of verified stages, each returning a cover
// by at most three monochromatic sets of diameter <= 160, plus the
// connectivity-only cover through the G_3 point-set picture.

#include <optional>
#include <string>
#include <vector>

#include "mcover/cover.hpp"
#include "mcover/graph.hpp"
#include "mcover/layers.hpp"

namespace mcover {

inline constexpr std::uint32_t kMainBound = 160;

enum class Branch {
    SpanningColour,     // one colour spans with diameter <= 160
    MissingColourStar,  // some vertex misses a colour: three stars
    SmallDiam,
    LayerQuad,
    LayerTriple7,
    SingleComponent,
    Intersecting,
    DisjointCorollary,
    ConnectivityFallback,
};

const char* branch_name(Branch b);

struct SolveTrace {
    Branch branch = Branch::ConnectivityFallback;
    std::optional<std::pair<Colour, Colour>> colour_pair;  // generating colours of the closing layer mapping
    std::vector<Vertex> seeds;
    std::vector<LayerPoint> distant_set;
    std::string layer_route;
    std::optional<int> recoloured_diameter;  // colour-4 diameter after recolouring (-1: disconnected)
    std::vector<std::string> notes;          // rejected attempts, caught lemma failures
    std::string diagnostic;                  // filled on fallback
};

struct SolveOptions {
    std::uint32_t small_diameter = kMainBound;   // N1 of the small-diameter reduction
    std::uint32_t connected_gate = 480;          // every colour must exceed this in the connected case
    std::uint32_t large_diameter = kMainBound;   // "large component" threshold of the intersecting case
};

struct Solution {
    Cover cover;
    SolveTrace trace;
    CoverReport report;
};

// Connectivity-only cover by <= 3 parts (claimed_bound = nullopt). k = 4,
// complete host.
Cover gyarfas_connectivity_cover(const EdgeColouring& colouring);

// Three colours with all components of diameter <= n1: recolour colour-4
// edges inside those components, cover the result, map back. Bound
// max(n1, 30).
std::optional<Cover> reduce_small_diameters(const EdgeColouring& colouring, std::uint32_t n1,
                                            SolveTrace* trace = nullptr);

// Every colour connected with diameter above `gate`.
std::optional<Cover> solve_connected_case(const EdgeColouring& colouring, const MonoMetrics& metrics,
                                          std::uint32_t gate = 480, SolveTrace* trace = nullptr);

// Every large component meets every component of another colour.
std::optional<Cover> solve_intersecting_case(const EdgeColouring& colouring, const MonoMetrics& metrics,
                                             std::uint32_t large = kMainBound, SolveTrace* trace = nullptr);

// A component of diameter >= 30 disjoint from a component of another colour.
std::optional<Cover> solve_disjoint_case(const EdgeColouring& colouring, const MonoMetrics& metrics,
                                         SolveTrace* trace = nullptr);

// k = 4, complete host. Deterministic.
Solution solve4(const EdgeColouring& colouring, const SolveOptions& options = {});

} // namespace mcover
