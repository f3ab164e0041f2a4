// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Brute-force ground truth at desk scale: minimum covers by exhaustive
// enumeration of vertex subsets, colouring scans, and independent metric
// computations (union-find components, Floyd-Warshall diameters) that share
// no code with the BFS core.

#include <cstdint>
#include <optional>
#include <vector>

#include "mcover/cover.hpp"
#include "mcover/graph.hpp"

namespace mcover {

inline constexpr std::size_t kOracleMaxVertices = 14;

// A cover by <= max_parts sets meeting `bound` (nullopt: connectivity only),
// or nullopt when none exists. n <= 14.
std::optional<Cover> min_cover_bruteforce(const EdgeColouring& colouring, std::size_t max_parts, const Bound& bound);

// Smallest bound admitting a cover by <= max_parts sets; nullopt when even
// connected sets cannot cover.
std::optional<std::uint32_t> min_bound_bruteforce(const EdgeColouring& colouring, std::size_t max_parts);

enum class Sampler { Exhaustive, Random };

struct ScanSpec {
    std::size_t n = 4;
    Colour k = 2;
    Bound bound;                   // nullopt: connectivity only
    std::size_t max_parts = 1;
    Sampler sampler = Sampler::Exhaustive;
    std::uint64_t seed = 1;
    std::uint64_t count = 1000;    // random mode
    std::uint64_t budget = 100'000'000;  // colourings examined before giving up
    unsigned threads = 0;          // 0: hardware concurrency
};

struct ScanReport {
    ScanSpec spec;
    std::uint64_t instances_checked = 0;
    // Largest needed bound over checked instances; nullopt if some instance
    // had no cover at all with max_parts sets.
    std::optional<std::uint32_t> worst_bound_needed = 0;
    std::vector<EdgeColouring> witnesses;  // instances needing more than spec.bound (first 16)
    std::uint64_t witness_count = 0;
    std::uint64_t fallbacks = 0;            // solver fallbacks (random mode, n above oracle reach)
    bool complete = true;
};

// Exhaustive mode enumerates colourings of K_n up to colour permutation
// (first appearances of colours in increasing order along the edge order).
// Random mode draws `count` uniform colourings; above oracle reach it runs
// the 4-colour solver and measures its cover instead. Results do not
// depend on the thread count.
ScanReport exhaustive_colouring_scan(const ScanSpec& spec);

// Independent oracles.
std::vector<VertexSet> union_find_components(const EdgeColouring& colouring, Colour c);
Diameter floyd_set_diameter(const EdgeColouring& colouring, Colour c, const VertexSet& a);

// True iff the colour sequence uses colours in order of first appearance.
bool is_canonical_colour_sequence(const std::vector<Colour>& seq);

} // namespace mcover
