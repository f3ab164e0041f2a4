// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#include "mcover/simd/bitops.hpp"

#include <bit>

namespace mcover::simd::scalar {
namespace {

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] &= src[i];
}

void andnot_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] &= ~src[i];
}

void or_and_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                 std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] |= a[i] & b[i];
}

std::size_t popcount(const std::uint64_t* a, std::size_t words) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

std::size_t popcount_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words; ++i)
        total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

bool any_andnot(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i)
        if (a[i] & ~b[i]) return true;
    return false;
}

} // namespace

const BitopsTable table{or_into, and_into, andnot_into, or_and_into, popcount, popcount_and, any_andnot};

} // namespace mcover::simd::scalar
