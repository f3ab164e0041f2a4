// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Two-colour covering lemmas on complete, complete bipartite and complete
// multipartite hosts. The core entry points work on vertex classes inside
// any colouring, restricted to two colours {p, q} and to edges between
// different classes; the wrappers below take a whole 2-coloured host.

#include <string>
#include <variant>
#include <vector>

#include "mcover/graph.hpp"

namespace mcover {

struct MonoSpanning {
    Colour colour = kNoColour;
    std::uint32_t diameter = 0;  // measured, cross-class edges only
};

// a1 ∪ b1 = first class, a2 ∪ b2 = second class. Edges in a1×a2 ∪ b1×b2
// have colour_aa, edges in a1×b2 ∪ b1×a2 the other colour. Parts may be empty.
struct Split {
    VertexSet a1, b1, a2, b2;
    Colour colour_aa = kNoColour;
};

using BipartiteOutcome = std::variant<MonoSpanning, Split>;

// Every x-y pair present and coloured p or q; x, y disjoint and nonempty.
BipartiteOutcome bipartite_outcome(const EdgeColouring& colouring, const VertexSet& x, const VertexSet& y, Colour p,
                                   Colour q);
// Edge-by-edge check of either variant (MonoSpanning: connected, diameter <= 10).
bool check_bipartite_outcome(const EdgeColouring& colouring, const VertexSet& x, const VertexSet& y, Colour p,
                             Colour q, const BipartiteOutcome& outcome);

struct MultipartiteOutcome {
    Colour colour = kNoColour;
    std::uint32_t diameter = 0;  // measured, cross-class edges only
    std::uint32_t bound = 0;     // 20 for three classes, 60 beyond
    std::string route;           // which case produced the colour
};

// At least three nonempty disjoint classes, all cross pairs coloured p or q.
MultipartiteOutcome multipartite_outcome(const EdgeColouring& colouring, const std::vector<VertexSet>& classes,
                                         Colour p, Colour q);

// Whole-host wrappers (k = 2).
// Colour spanning K_n with diameter <= 3; smaller index on ties.
Colour erdos_rado_cover(const EdgeColouring& colouring);
BipartiteOutcome bipartite_two_colour(const EdgeColouring& colouring);
MultipartiteOutcome multipartite_two_colour(const EdgeColouring& colouring);

} // namespace mcover
