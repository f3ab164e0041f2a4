// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mcover/graph.hpp"

namespace mcover {

struct CoverPart {
    VertexSet set;
    Colour colour = kNoColour;
};

// Parts may overlap. claimed_bound is what the producer promises; nullopt
// promises connectivity only.
struct Cover {
    std::vector<CoverPart> parts;
    Bound claimed_bound;
};

struct PartReport {
    bool connected = false;
    Diameter diameter = Diameter::disconnected();
};

struct CoverReport {
    bool valid = false;
    std::vector<PartReport> parts;
    VertexSet uncovered;
    bool part_count_ok = false;
    bool diameters_ok = false;

    // Largest part diameter; nullopt if some part is disconnected.
    std::optional<std::uint32_t> worst_diameter() const;
    std::string describe() const;
};

// Judges `cover` against `bound` (nullopt: connectivity only) and
// `max_parts`. Diameters are induced-subgraph diameters of each (A, c).
CoverReport verify_cover(const EdgeColouring& colouring, const Cover& cover, const Bound& bound,
                         std::size_t max_parts);

std::string describe_cover(const Cover& cover);

} // namespace mcover
