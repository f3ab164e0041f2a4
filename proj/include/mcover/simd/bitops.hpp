// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Word-parallel kernels over packed 64-bit bitsets. These are the inner loops
// of every BFS in the library. Each kernel has a scalar reference version and
// an AVX2 version; `active()` picks one at first use from the CPU's feature
// bits, and tests may pin a backend with `set_backend`.

#include <cstddef>
#include <cstdint>

namespace mcover::simd {

enum class Backend { Scalar, Avx2 };

struct BitopsTable {
    // dst |= src
    void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
    // dst &= src
    void (*and_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
    // dst &= ~src
    void (*andnot_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
    // dst |= a & b
    void (*or_and_into)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                        std::size_t words);
    // popcount(a)
    std::size_t (*popcount)(const std::uint64_t* a, std::size_t words);
    // popcount(a & b)
    std::size_t (*popcount_and)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
    // (a & ~b) != 0
    bool (*any_andnot)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
};

namespace scalar {
extern const BitopsTable table;
}
namespace avx2 {
// Null members when the library was built without AVX2 support.
extern const BitopsTable table;
bool compiled() noexcept;
}

bool cpu_has_avx2() noexcept;

// Throws InvalidArgument when asking for a backend the CPU or build lacks.
void set_backend(Backend backend);
Backend backend() noexcept;
const char* backend_name(Backend backend) noexcept;

const BitopsTable& active() noexcept;

} // namespace mcover::simd
