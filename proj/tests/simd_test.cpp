// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "mcover/generate.hpp"
#include "mcover/graph.hpp"
#include "mcover/simd/bitops.hpp"

namespace {

using namespace mcover;
using Words = std::vector<std::uint64_t>;

Words random_words(std::mt19937_64& rng, std::size_t n, int density) {
    Words w(n);
    for (auto& x : w) {
        x = rng();
        // Sparse and dense patterns hit different popcount paths.
        if (density == 0) x &= rng() & rng();
        if (density == 2) x |= rng() | rng();
    }
    return w;
}

bool avx2_usable() { return simd::avx2::compiled() && simd::cpu_has_avx2(); }

class BackendGuard {
  public:
    BackendGuard() : saved_(simd::backend()) {}
    ~BackendGuard() { simd::set_backend(saved_); }

  private:
    simd::Backend saved_;
};

TEST(Simd, ScalarAndAvx2KernelsAgree) {
    if (!avx2_usable()) GTEST_SKIP() << "no AVX2 on this host";
    const auto& s = simd::scalar::table;
    const auto& v = simd::avx2::table;
    std::mt19937_64 rng(7);
    // Lengths straddle the 4-word vector width and its tail handling.
    for (std::size_t n : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 64, 65, 157}) {
        for (int density = 0; density < 3; ++density) {
            const Words a = random_words(rng, n, density), b = random_words(rng, n, density);
            Words x = a, y = a;
            s.or_into(x.data(), b.data(), n);
            v.or_into(y.data(), b.data(), n);
            EXPECT_EQ(x, y) << "or n=" << n;
            x = a, y = a;
            s.and_into(x.data(), b.data(), n);
            v.and_into(y.data(), b.data(), n);
            EXPECT_EQ(x, y) << "and n=" << n;
            x = a, y = a;
            s.andnot_into(x.data(), b.data(), n);
            v.andnot_into(y.data(), b.data(), n);
            EXPECT_EQ(x, y) << "andnot n=" << n;
            const Words c = random_words(rng, n, density);
            x = c, y = c;
            s.or_and_into(x.data(), a.data(), b.data(), n);
            v.or_and_into(y.data(), a.data(), b.data(), n);
            EXPECT_EQ(x, y) << "or_and n=" << n;
            EXPECT_EQ(s.popcount(a.data(), n), v.popcount(a.data(), n));
            EXPECT_EQ(s.popcount_and(a.data(), b.data(), n), v.popcount_and(a.data(), b.data(), n));
            EXPECT_EQ(s.any_andnot(a.data(), b.data(), n), v.any_andnot(a.data(), b.data(), n));
            EXPECT_EQ(s.any_andnot(a.data(), a.data(), n), false);
        }
    }
}

TEST(Simd, ScalarKernelsMatchBitByBit) {
    const auto& s = simd::scalar::table;
    std::mt19937_64 rng(11);
    const Words a = random_words(rng, 9, 1), b = random_words(rng, 9, 1);
    std::size_t pop = 0, pop_and = 0;
    for (std::size_t i = 0; i < 9; ++i)
        for (int bit = 0; bit < 64; ++bit) {
            pop += (a[i] >> bit) & 1U;
            pop_and += ((a[i] & b[i]) >> bit) & 1U;
        }
    EXPECT_EQ(s.popcount(a.data(), 9), pop);
    EXPECT_EQ(s.popcount_and(a.data(), b.data(), 9), pop_and);
}

TEST(Simd, BackendSwitchKeepsMetricsIdentical) {
    BackendGuard guard;
    const auto col = random_uniform(140, 4, 3);
    auto snapshot = [&] {
        const MonoMetrics m(col);
        std::vector<std::uint32_t> out;
        for (Colour c = 1; c <= 4; ++c) {
            out.push_back(m.colour_diameter(c));
            out.push_back(static_cast<std::uint32_t>(m.components(c).parts.size()));
            for (Vertex v = 0; v < col.n(); v += 13) out.push_back(m.ball(c, v, 1).count());
        }
        return out;
    };
    simd::set_backend(simd::Backend::Scalar);
    EXPECT_EQ(simd::backend(), simd::Backend::Scalar);
    const auto scalar = snapshot();
    if (!avx2_usable()) {
        EXPECT_THROW(simd::set_backend(simd::Backend::Avx2), InvalidArgument);
        return;
    }
    simd::set_backend(simd::Backend::Avx2);
    EXPECT_EQ(simd::backend(), simd::Backend::Avx2);
    EXPECT_EQ(scalar, snapshot());
}

TEST(Simd, BackendNames) {
    EXPECT_STREQ(simd::backend_name(simd::Backend::Scalar), "scalar");
    EXPECT_STREQ(simd::backend_name(simd::Backend::Avx2), "avx2");
}

} // namespace
