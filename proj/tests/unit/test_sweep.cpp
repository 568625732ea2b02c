#include <gtest/gtest.h>

#include <random>

#include "../support.hpp"
#include "cgeo/sweep.hpp"

using namespace cgeo;
using namespace cgeo::testing;

namespace {

Bitmap random_sparse(const GridWindow& g, std::mt19937_64& rng, double p) {
    std::bernoulli_distribution B(p);
    Bitmap b(g.size());
    for (auto& x : b) x = B(rng);
    return b;
}

// brute force J+/I+ in lattice units
Bitmap brute_sweep(const Bitmap& set, const GridWindow& g, bool future, bool strict) {
    Bitmap out(g.size(), 0);
    std::vector<I3> pts;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (set[i]) pts.push_back(to_int(g, i));
    for (std::size_t i = 0; i < g.size(); ++i) {
        const I3 x = to_int(g, i);
        for (const auto& p : pts) {
            const int dt = future ? x[0] - p[0] : p[0] - x[0];
            const int r2 = (x[1] - p[1]) * (x[1] - p[1]) + (x[2] - p[2]) * (x[2] - p[2]);
            if (dt < 0) continue;
            if (strict ? (dt * dt > r2 && dt > 0) : dt * dt >= r2) {
                out[i] = 1;
                break;
            }
        }
    }
    return out;
}

}  // namespace

class SweepProperty : public ::testing::TestWithParam<int> {};

TEST_P(SweepProperty, MatchesBruteForce) {
    std::mt19937_64 rng(GetParam());
    const GridWindow g(1.5, 1.5, 0.25, 2);
    const Bitmap set = random_sparse(g, rng, 0.01 + 0.01 * GetParam());
    for (bool future : {true, false})
        for (bool strict : {true, false})
            EXPECT_EQ(causal_sweep(set, g, future, strict), brute_sweep(set, g, future, strict))
                << "future " << future << " strict " << strict;
}

INSTANTIATE_TEST_SUITE_P(Seeds, SweepProperty, ::testing::Range(1, 9));

TEST(Sweep, EdtMatchesBruteForce) {
    std::mt19937_64 rng(17);
    const GridWindow g(1, 1, 0.25, 2);
    const Bitmap set = random_sparse(g, rng, 0.03);
    const auto d = edt_window(set, g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const I3 x = to_int(g, i);
        double best = INFINITY;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (!set[j]) continue;
            const I3 p = to_int(g, j);
            best = std::min<double>(best, (x[0] - p[0]) * (x[0] - p[0]) + (x[1] - p[1]) * (x[1] - p[1]) +
                                              (x[2] - p[2]) * (x[2] - p[2]));
        }
        EXPECT_EQ(d[i], best);
    }
}

TEST(Sweep, TimelikeBetweenOfTwoPoints) {
    const GridWindow g(2, 2, 0.5, 2);
    Bitmap set(g.size(), 0);
    std::size_t a, b;
    ASSERT_TRUE(to_flat(g, {-2, 0, 0}, a));
    ASSERT_TRUE(to_flat(g, {2, 0, 0}, b));
    set[a] = set[b] = 1;
    const Bitmap t = timelike_between(set, g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const I3 p = to_int(g, i);
        EXPECT_EQ(static_cast<bool>(t[i]), int_cone_closed({-2, 0, 0}, {2, 0, 0}, p) &&
                                               (p[0] + 2) * (p[0] + 2) > p[1] * p[1] + p[2] * p[2] &&
                                               (2 - p[0]) * (2 - p[0]) > p[1] * p[1] + p[2] * p[2]);
    }
}
