// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#include "mcover/simd/bitops.hpp"

#if defined(MCOVER_HAVE_AVX2)

#include <immintrin.h>

#include <bit>

namespace mcover::simd::avx2 {
namespace {

inline __m256i load(const std::uint64_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}
inline void store(std::uint64_t* p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
    for (; i < words; ++i) dst[i] |= src[i];
}

void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
    for (; i < words; ++i) dst[i] &= src[i];
}

void andnot_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t i = 0;
    // _mm256_andnot_si256(a, b) computes ~a & b.
    for (; i + 4 <= words; i += 4) store(dst + i, _mm256_andnot_si256(load(src + i), load(dst + i)));
    for (; i < words; ++i) dst[i] &= ~src[i];
}

void or_and_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                 std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4)
        store(dst + i, _mm256_or_si256(load(dst + i), _mm256_and_si256(load(a + i), load(b + i))));
    for (; i < words; ++i) dst[i] |= a[i] & b[i];
}

// No native 64-bit lane popcount in AVX2; sum hardware popcnt over the lanes.
inline std::size_t lane_popcount(__m256i v) {
    return static_cast<std::size_t>(_mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 0))) +
                                    _mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 1))) +
                                    _mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 2))) +
                                    _mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 3))));
}

std::size_t popcount(const std::uint64_t* a, std::size_t words) {
    std::size_t total = 0, i = 0;
    for (; i + 4 <= words; i += 4) total += lane_popcount(load(a + i));
    for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

std::size_t popcount_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::size_t total = 0, i = 0;
    for (; i + 4 <= words; i += 4) total += lane_popcount(_mm256_and_si256(load(a + i), load(b + i)));
    for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

bool any_andnot(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i v = _mm256_andnot_si256(load(b + i), load(a + i));
        if (!_mm256_testz_si256(v, v)) return true;
    }
    for (; i < words; ++i)
        if (a[i] & ~b[i]) return true;
    return false;
}

} // namespace

const BitopsTable table{or_into, and_into, andnot_into, or_and_into, popcount, popcount_and, any_andnot};

bool compiled() noexcept { return true; }

} // namespace mcover::simd::avx2

#else

namespace mcover::simd::avx2 {
const BitopsTable table{nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr};
bool compiled() noexcept { return false; }
} // namespace mcover::simd::avx2

#endif
