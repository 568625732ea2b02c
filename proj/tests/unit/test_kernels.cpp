#include <gtest/gtest.h>

#include <random>

#include "cgeo/kernels.hpp"

using namespace cgeo;

namespace {

std::vector<const Kernels*> vector_tables() {
    std::vector<const Kernels*> out;
    if (auto* k = kernels_avx2()) out.push_back(k);
    if (auto* k = kernels_neon()) out.push_back(k);
    return out;
}

}  // namespace

TEST(Kernels, DispatchReturnsATable) { EXPECT_NE(kernels().name, nullptr); }

TEST(Kernels, VectorTablesMatchScalar) {
    const auto tables = vector_tables();
    if (tables.empty()) GTEST_SKIP() << "no vector instruction set on this CPU";
    const Kernels& ref = kernels_scalar();
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(-2, 2);
    for (const Kernels* k : tables) {
        for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 16u, 33u, 1000u}) {
            std::vector<double> m(n), d2(n), m2;
            for (std::size_t i = 0; i < n; ++i) {
                m[i] = std::abs(U(rng)) * 5;
                d2[i] = std::floor(std::abs(U(rng)) * 20);
            }
            m2 = m;
            ref.minplus_sqrt(m.data(), d2.data(), 0.75, n);
            k->minplus_sqrt(m2.data(), d2.data(), 0.75, n);
            EXPECT_EQ(m, m2) << k->name;

            std::vector<std::uint8_t> a(n), b(n);
            ref.mask_le(m.data(), 2.5, a.data(), n);
            k->mask_le(m.data(), 2.5, b.data(), n);
            EXPECT_EQ(a, b);
            ref.mask_lt(m.data(), m.empty() ? 0 : m[0], a.data(), n);
            k->mask_lt(m.data(), m.empty() ? 0 : m[0], b.data(), n);
            EXPECT_EQ(a, b);

            if (n >= 2) {
                std::vector<double> prev(n), u(n), no(n), so(n), o1(n), o2(n);
                for (std::size_t i = 0; i < n; ++i) {
                    prev[i] = U(rng);
                    u[i] = U(rng);
                    no[i] = U(rng);
                    so[i] = U(rng);
                }
                ref.leapfrog_row(prev.data(), u.data(), no.data(), so.data(), 0.5, o1.data(), n);
                k->leapfrog_row(prev.data(), u.data(), no.data(), so.data(), 0.5, o2.data(), n);
                for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(o1[i], o2[i], 1e-15);
                EXPECT_EQ(o2[0], 0);
                EXPECT_EQ(o2[n - 1], 0);
            }

            std::vector<double> dt(n), r2(n);
            for (std::size_t i = 0; i < n; ++i) {
                dt[i] = U(rng);
                r2[i] = i % 5 == 0 ? dt[i] * dt[i] : std::abs(U(rng)) * 4;
            }
            std::vector<std::int8_t> s1(n), s2(n);
            ref.interval_sign(dt.data(), r2.data(), 1e-9, s1.data(), n);
            k->interval_sign(dt.data(), r2.data(), 1e-9, s2.data(), n);
            EXPECT_EQ(s1, s2);
        }
    }
}

TEST(Kernels, ScalarLeapfrogStencil) {
    const double prev[5] = {0, 1, 2, 3, 0}, u[5] = {0, 1, 1, 1, 0}, no[5] = {0, 0, 0, 0, 0}, so[5] = {0, 0, 0, 0, 0};
    double out[5];
    kernels_scalar().leapfrog_row(prev, u, no, so, 0.25, out, 5);
    // 2u - prev + c2 (w + e + n + s - 4u)
    EXPECT_DOUBLE_EQ(out[1], 2 - 1 + 0.25 * (0 + 1 - 4));
    EXPECT_DOUBLE_EQ(out[2], 2 - 2 + 0.25 * (1 + 1 - 4));
    EXPECT_EQ(out[0], 0);
    EXPECT_EQ(out[4], 0);
}
