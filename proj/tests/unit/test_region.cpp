#include <gtest/gtest.h>

#include <random>

#include "cgeo/complement.hpp"
#include "cgeo/poincare.hpp"
#include "cgeo/region.hpp"

using namespace cgeo;

namespace {
Point rand_point(std::mt19937_64& rng, double r = 3) {
    std::uniform_real_distribution<double> U(-r, r);
    return {U(rng), U(rng), U(rng)};
}
}  // namespace

TEST(Region, W1Membership) {
    const RegionPtr w = make_w1(3);
    EXPECT_TRUE(member(w, {0, 1, 0}));
    EXPECT_TRUE(member(w, {0.5, 1, 5}));
    EXPECT_FALSE(member(w, {1, 1, 0}));  // edge excluded for the open wedge
    EXPECT_FALSE(member(w, {0, -1, 0}));
    EXPECT_TRUE(member(with_closed(w, true), {1, 1, 0}));
}

TEST(Region, DoubleConeMembership) {
    const RegionPtr o = make_double_cone({-1, 0, 0}, {1, 0, 0});
    EXPECT_TRUE(member(o, {0, 0.5, 0.4}));
    EXPECT_FALSE(member(o, {0, 1, 0}));
    EXPECT_TRUE(member(closure_of(o), {0, 1, 0}));
    EXPECT_FALSE(member(o, {0.9, 0.2, 0}));
}

TEST(Region, InvalidPrimitivesThrow) {
    EXPECT_ANY_THROW(make_double_cone({0, 0, 0}, {0, 1, 0}));
    EXPECT_ANY_THROW(make_double_cone({1, 0, 0}, {0, 0, 0}));
    EXPECT_ANY_THROW(make_wedge({{-1, 2, 0}, 0}, {{1, 1, 0}, 0}));
    EXPECT_ANY_THROW(make_wedge({{-1, 1, 0}, 0}, {{1, -1, 0}, 0}));
    EXPECT_ANY_THROW(make_time_slice(3, 1, 0));
}

TEST(Region, TranslateCommutesWithMembershipProperty) {
    std::mt19937_64 rng(3);
    const RegionPtr o = make_double_cone({-1, 0, 0}, {1.5, 0.5, 0});
    for (int i = 0; i < 1000; ++i) {
        const Point v = rand_point(rng), x = rand_point(rng);
        EXPECT_EQ(member(make_translate(o, v), x), member(o, x - v));
    }
}

TEST(Region, LinearMapCommutesWithMembershipProperty) {
    std::mt19937_64 rng(4);
    const Matrix m = mat_mul(rotation_matrix(3, 1, 2, 0.7), boost_matrix(3, 0.4), 3);
    const Matrix inv = mat_inverse(m, 3);
    const RegionPtr w = make_w1(3), mw = make_linear_map(w, m);
    for (int i = 0; i < 1000; ++i) {
        const Point x = rand_point(rng);
        EXPECT_EQ(member(mw, x), member(w, mat_apply(inv, x)));
    }
}

TEST(Region, PoincareImageOfW1IsExactWedge) {
    std::mt19937_64 rng(5);
    const RegionPtr w = wedge_from_poincare(2, 0.3, 1, 2, 1.1, {0.2, -0.4, 0.5});
    ASSERT_EQ(w->kind, Kind::Wedge);
    EXPECT_TRUE(is_lightlike_covector(w->plus.n));
    EXPECT_TRUE(is_lightlike_covector(w->minus.n));
}

TEST(Region, WedgeComplementIsOppositeWedgeProperty) {
    // a point is in the closed complement of W1 iff it is causally disjoint from W1 samples
    const RegionPtr w = make_w1(3), wc = closed_complement(w);
    ASSERT_TRUE(wc);
    std::mt19937_64 rng(6);
    for (int i = 0; i < 500; ++i) {
        const Point x = rand_point(rng);
        EXPECT_EQ(member(wc, x), -x[1] >= std::abs(x[0]));
    }
}

TEST(Region, ConeComplementClosedForm) {
    const RegionPtr o = make_double_cone({-1, 0, 0}, {1, 0, 0});
    const RegionPtr oc = closed_complement(o);
    ASSERT_TRUE(oc);
    EXPECT_TRUE(member(oc, {0, 1, 0}));      // on the rim: spacelike to the open cone
    EXPECT_TRUE(member(oc, {0, 3, 0}));
    EXPECT_FALSE(member(oc, {0, 0.9, 0}));
    EXPECT_FALSE(member(oc, {2, 0.5, 0}));   // timelike to the upper tip region
}

TEST(Region, DoubleComplementOfLeavesProperty) {
    std::mt19937_64 rng(7);
    const std::vector<RegionPtr> leaves = {make_w1(3), make_double_cone({-1, 0, 0}, {1, 0.3, 0}),
                                           wedge_from_poincare(2, -0.2, 1, 2, 2.0, {0, 0.5, 0})};
    for (const auto& r : leaves) {
        const RegionPtr cc = closed_complement(closed_complement(r));
        ASSERT_TRUE(cc);
        for (int i = 0; i < 500; ++i) {
            const Point x = rand_point(rng);
            EXPECT_EQ(member(cc, x), member(r, x)) << format_point(x);
        }
    }
}

TEST(Region, UnionComplementRewrite) {
    const GridWindow g(2, 2, 0.25, 2);
    const RegionPtr a = make_double_cone({-0.5, -1, 0}, {0.5, -1, 0});
    const RegionPtr b = make_double_cone({-0.5, 1, 0}, {0.5, 1, 0});
    const RegionPtr c = causal_complement(make_union({a, b}), g);
    EXPECT_EQ(c->kind, Kind::Intersection);
}

TEST(Region, StructuralHashStable) {
    const RegionPtr a = make_union({make_w1(3), make_double_cone({-1, 0, 0}, {1, 0, 0})});
    const RegionPtr b = make_union({make_w1(3), make_double_cone({-1, 0, 0}, {1, 0, 0})});
    EXPECT_TRUE(structurally_equal(a, b));
    EXPECT_EQ(region_hash(a), region_hash(b));
}

TEST(Grid, EnumerationIsLexicographic) {
    const GridWindow g(1, 1, 0.5, 2);
    EXPECT_EQ(g.size(), 125u);
    int prev[3] = {-99, 0, 0};
    for (std::size_t i = 0; i < g.size(); ++i) {
        int idx[3];
        g.indices(i, idx);
        EXPECT_EQ(g.index(idx), i);
        if (i) { EXPECT_TRUE(std::lexicographical_compare(prev, prev + 3, idx, idx + 3)); }
        std::copy(idx, idx + 3, prev);
    }
    EXPECT_DOUBLE_EQ(g.point(0)[0], -1);
}

TEST(Grid, RejectsBadParameters) {
    EXPECT_ANY_THROW(GridWindow(1, 1, 0, 2));
    EXPECT_ANY_THROW(GridWindow(-1, 1, 0.1, 2));
}
