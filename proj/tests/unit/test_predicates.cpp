#include <gtest/gtest.h>

#include <random>

#include "cgeo/complement.hpp"
#include "cgeo/dsl.hpp"
#include "cgeo/fixtures.hpp"
#include "cgeo/hull.hpp"
#include "cgeo/poincare.hpp"
#include "cgeo/predicates.hpp"

using namespace cgeo;

namespace {
const GridWindow kG(2, 2, 0.2, 2);

RegionPtr random_cone(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(-1.5, 1.5), H(0.3, 1.2);
    const Point a{U(rng), U(rng), U(rng)};
    const double t = H(rng);
    return make_double_cone(a, a + Point{t, t * 0.3 * U(rng) / 1.5, t * 0.3 * U(rng) / 1.5});
}
}  // namespace

TEST(Predicates, ConesAndWedgesAreTimelikeConvex) {
    EXPECT_TRUE(is_timelike_convex(make_double_cone({-1, 0, 0}, {1, 0.2, 0}), kG).verdict);
    EXPECT_TRUE(is_timelike_convex(make_w1(3), kG).verdict);
    EXPECT_TRUE(is_timelike_convex(wedge_from_poincare(2, 0.4, 1, 2, 0.8, {0, 0.3, 0}), kG).verdict);
}

TEST(Predicates, FailingWitnessReproducesProperty) {
    std::mt19937_64 rng(21);
    int failures = 0;
    for (int i = 0; i < 40; ++i) {
        const RegionPtr r = make_union({random_cone(rng), random_cone(rng)});
        const PredicateReport rep = is_timelike_convex(r, kG);
        if (!rep.verdict) {
            ++failures;
            EXPECT_EQ(rep.witness.size(), 3u);
            EXPECT_TRUE(witness_reproduces(rep, r, kG)) << print_region(r);
        }
    }
    EXPECT_GT(failures, 0);
}

TEST(Predicates, TimelikeConvexImpliesAsgeirssonProperty) {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 20; ++i) {
        const RegionPtr r = make_intersection({random_cone(rng), make_w1(3)});
        const Bitmap s = sample_members(r, kG);
        if (timelike_convex_sampled(s, kG).verdict) {
            EXPECT_TRUE(asgeirsson_complete_sampled(s, kG).verdict);
        }
    }
}

TEST(Predicates, DisjointTimelikeConesAsgeirssonButNotConvex) {
    const RegionPtr r = fixture("timelike_cones");
    EXPECT_TRUE(is_asgeirsson_complete(r, GridWindow(3, 3, 0.2, 2)).verdict);
    const PredicateReport tc = is_timelike_convex(r, GridWindow(3, 3, 0.2, 2));
    EXPECT_FALSE(tc.verdict);
    EXPECT_TRUE(witness_reproduces(tc, r, GridWindow(3, 3, 0.2, 2)));
}

TEST(Predicates, CausalCompleteness) {
    EXPECT_TRUE(is_causally_complete(make_w1(3), kG).verdict);
    EXPECT_TRUE(is_causally_complete(make_double_cone({-1, 0, 0}, {1, 0, 0}), kG).verdict);
    const PredicateReport ts = is_causally_complete(fixture("time_slice"), kG);
    EXPECT_FALSE(ts.verdict);
    ASSERT_EQ(ts.witness.size(), 1u);
}

TEST(Predicates, NullHalfPlaneIsExactlyComplete) {
    const PredicateReport r = is_causally_complete(fixture("null_half_plane"), kG);
    EXPECT_TRUE(r.verdict);
    EXPECT_TRUE(r.exact);
}

TEST(Predicates, TimeSliceIsJld) {
    const PredicateReport r = is_jld_region(fixture("time_slice"), kG);
    EXPECT_TRUE(r.verdict) << r.note;
}

TEST(Predicates, ShellFailsJldWithCertifiedCurve) {
    const GridWindow g(3, 3, 0.2, 2);
    const RegionPtr sh = fixture("shell");
    EXPECT_TRUE(is_timelike_convex(sh, g).verdict);
    const PredicateReport r = is_jld_region(sh, g);
    ASSERT_FALSE(r.verdict);
    ASSERT_EQ(r.witness_kind, "curve");
    ASSERT_EQ(r.witness.size(), r.certificates.size());
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
        EXPECT_FALSE(member(sh, r.witness[i]));
        EXPECT_TRUE(member(sh, r.certificates[i]));
        EXPECT_TRUE(is_timelike(classify(r.witness[i], r.certificates[i])));
        // the curve itself is timelike
        if (i) { EXPECT_EQ(classify(r.witness[i - 1], r.witness[i]), CausalClass::TimelikeFuture); }
    }
}

TEST(Predicates, UnionPreconditionIsChecked) {
    const RegionPtr a = make_double_cone({-1, 0, 0}, {1, 0, 0});
    const RegionPtr b = make_double_cone({0, 0, 0}, {2, 0, 0});
    const RegionPtr bad_surface = make_points({Point{-0.8, 0, 0}});  // in a only
    ASSERT_EQ(popcount(sample_members(bad_surface, kG)), 1u);
    EXPECT_THROW(union_preserves_timelike_convexity(a, b, bad_surface, kG), PreconditionError);
}

TEST(Hull, ContainsInputIdempotentAndMonotone) {
    std::mt19937_64 rng(23);
    const GridWindow g(2, 2, 0.25, 2);
    for (int i = 0; i < 6; ++i) {
        const Bitmap a = sample_members(make_union({random_cone(rng), random_cone(rng)}), g);
        const HullResult h = asgeirsson_hull(a, g);
        EXPECT_TRUE(h.fixpoint);
        EXPECT_TRUE(bit_subset(a, h.hull.members));
        const HullResult h2 = asgeirsson_hull(h.hull.members, g);
        EXPECT_EQ(h2.added, 0u);
        EXPECT_TRUE(asgeirsson_complete_sampled(h.hull.members, g).verdict);
    }
}

TEST(Hull, CompleteSetIsItsOwnHull) {
    const GridWindow g(3, 3, 0.2, 2);
    const Bitmap a = sample_members(fixture("timelike_cones"), g);
    EXPECT_EQ(asgeirsson_hull(a, g).added, 0u);
}

// The union of the two slanted slabs is not Asgeirsson complete: its hull
// grows, but never enters the invariant future set {x0 > 1 + |x1|/2} or the
// past set {x0 < -|x1|/2}.
TEST(Hull, SlabUnionGrowsButAvoidsInvariantSets) {
    const GridWindow g(3, 3, 0.2, 2);
    EXPECT_TRUE(is_asgeirsson_complete(fixture("r_plus"), g).verdict);
    EXPECT_TRUE(is_asgeirsson_complete(fixture("r_minus"), g).verdict);
    const Bitmap u = sample_members(fixture("r_pm"), g);
    EXPECT_FALSE(asgeirsson_complete_sampled(u, g).verdict);
    const HullResult h = asgeirsson_hull(u, g);
    EXPECT_GT(h.added, 0u);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!h.hull.members[i]) continue;
        const Point p = g.point(i);
        EXPECT_LE(p[0], 1 + 0.5 * std::abs(p[1]) + 1e-9);
        EXPECT_GE(p[0], -0.5 * std::abs(p[1]) - 1e-9);
    }
}

TEST(Hull, DirectionSetsArePrimitiveTimelike) {
    const auto d = timelike_directions(2, 2);
    EXPECT_EQ(d.size(), 9u);
    for (const auto& v : d) {
        EXPECT_GT(v[0] * v[0], v[1] * v[1] + v[2] * v[2]);
        EXPECT_EQ(std::gcd(std::gcd(v[0], std::abs(v[1])), std::abs(v[2])), 1);
    }
}

TEST(LatticeConvex, HalfSpacesYesUnionsNo) {
    EXPECT_TRUE(lattice_convex(sample_members(parse_region("{x0 + x1 > 0.3}"), kG), kG).verdict);
    EXPECT_FALSE(
        lattice_convex(sample_members(parse_region("{x1 > 1} | {x1 < -1}"), kG), kG).verdict);
}
