// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#include "mcover/simd/bitops.hpp"

#include <atomic>

#include "mcover/error.hpp"

namespace mcover::simd {
namespace {

Backend detect() noexcept {
    if (avx2::compiled() && cpu_has_avx2()) return Backend::Avx2;
    return Backend::Scalar;
}

std::atomic<const BitopsTable*>& slot() noexcept {
    static std::atomic<const BitopsTable*> current{detect() == Backend::Avx2 ? &avx2::table : &scalar::table};
    return current;
}

} // namespace

bool cpu_has_avx2() noexcept {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
    return false;
#endif
}

void set_backend(Backend b) {
    if (b == Backend::Avx2) {
        if (!avx2::compiled() || !cpu_has_avx2())
            throw InvalidArgument("AVX2 backend not available on this build or CPU");
        slot().store(&avx2::table);
    } else {
        slot().store(&scalar::table);
    }
}

Backend backend() noexcept { return slot().load() == &avx2::table ? Backend::Avx2 : Backend::Scalar; }

const char* backend_name(Backend b) noexcept { return b == Backend::Avx2 ? "avx2" : "scalar"; }

const BitopsTable& active() noexcept { return *slot().load(std::memory_order_relaxed); }

} // namespace mcover::simd
