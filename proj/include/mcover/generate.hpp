// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Instance generators. Every random generator is a pure function of its
// arguments (std::mt19937_64 seeded with `seed`).

#include <cstdint>
#include <vector>

#include "mcover/graph.hpp"
#include "mcover/grid.hpp"

namespace mcover {

// Uniform colour per pair of K_n.
EdgeColouring random_uniform(std::size_t n, Colour k, std::uint64_t seed);

// Uniform colours on a complete multipartite host with consecutive classes.
EdgeColouring random_multipartite(const std::vector<std::size_t>& sizes, Colour k, std::uint64_t seed);

// Vertices on a planar walk; nearby pairs take the two generating colours,
// 2-separated pairs a noisy split pattern in the other two. Colours are
// shuffled afterwards.
EdgeColouring layered_adversarial(std::size_t n, std::uint64_t seed);

// Two Hamiltonian paths in colours 1 and 2, the remaining pairs split
// between colours 3 and 4 by a random bisection.
EdgeColouring twin_path(std::size_t n, std::uint64_t seed);

// Blow-up of a random point set in {0..m-1}^3 via the smallest shared
// coordinate rule; fibres of size 1..3. Colours are shuffled afterwards.
EdgeColouring component_blowup(std::size_t n, std::uint64_t seed);

// {0, e1, e2, e3, e1+e2, e1+e3, e2+e3}: needs three parts.
GridPointSet sharpness_points();
EdgeColouring sharpness_colouring();

// Three colours on K_{m+6} minus the matching v1v2, v3v4, v5v6 that no two
// monochromatic components cover. Vertices 0..5 are v1..v6, then u1..um;
// u-u pairs are coloured uniformly from `seed`.
EdgeColouring matching_gap_example(std::size_t m, std::uint64_t seed);

} // namespace mcover
