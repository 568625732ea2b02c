#include <gtest/gtest.h>

#include "cgeo/dsl.hpp"
#include "cgeo/envelope.hpp"
#include "cgeo/fixtures.hpp"
#include "cgeo/localization.hpp"

using namespace cgeo;

namespace {
const GridWindow kG(3, 3, 0.2, 2);
}

TEST(Tags, JsonRoundTrip) {
    const ObservableTag t = random_consistent_tag(2, 7, Point(3));
    const ObservableTag u = load_tag_json(tag_to_json(t));
    EXPECT_EQ(u.id, t.id);
    ASSERT_EQ(u.cones.size(), t.cones.size());
    ASSERT_EQ(u.dual_wedges.size(), t.dual_wedges.size());
    for (std::size_t i = 0; i < t.cones.size(); ++i) EXPECT_TRUE(structurally_equal(u.cones[i], t.cones[i]));
    for (std::size_t i = 0; i < t.dual_wedges.size(); ++i)
        EXPECT_TRUE(structurally_equal(u.dual_wedges[i], t.dual_wedges[i]));
    EXPECT_EQ(tag_to_json(u), tag_to_json(t));
}

TEST(Tags, DocumentedSchemaLoads) {
    const ObservableTag t = load_tag_json(R"({"schema": 1, "id": "a",
        "cones": [[[-1, 0, 0], [1, 0, 0]]],
        "wedges": [{"nplus": [-1, 1, 0], "dplus": 0.5, "nminus": [1, 1, 0], "dminus": 0.5}]})");
    EXPECT_EQ(t.cones.size(), 1u);
    EXPECT_EQ(t.wedges.size(), 1u);
    EXPECT_EQ(t.dual_wedges.size(), 1u);  // dual defaults to the direct catalog
    EXPECT_ANY_THROW(load_tag_json(R"({"schema": 2})"));
    EXPECT_ANY_THROW(load_tag_json(R"({"cones": [[[0, 0, 0], [0, 1, 0]]]})"));
}

TEST(Localize, DiagramOnRandomCatalogsProperty) {
    for (unsigned seed = 100; seed < 110; ++seed) {
        const LocalizationResult l = localize(random_consistent_tag(2, seed, Point{0.2, -0.3, 0.1}), kG);
        EXPECT_FALSE(l.scalar);
        EXPECT_TRUE(l.diagram_holds()) << seed;
        for (int i = 0; i < 4; ++i) {
            EXPECT_TRUE(l.nonempty[i]);
            EXPECT_TRUE(l.compact[i]);
            EXPECT_TRUE(l.convex[i]);
            EXPECT_TRUE(bit_subset(l.region(3).members, l.region(i).members));
        }
    }
}

TEST(Localize, InconsistentCatalogIsScalar) {
    ObservableTag t;
    t.wedges = x120_wedges();
    t.dual_wedges = t.wedges;
    t.cones = {make_double_cone({-2, 0, 0}, {2, 0, 0})};
    const LocalizationResult l = localize(t, kG);
    EXPECT_TRUE(l.scalar);
    const EmptinessDecision d = empty_intersection_decide(t.dual_wedges, {}, kG);
    EXPECT_EQ(d.verdict, Emptiness::Empty);
}

TEST(EmptyIntersection, OverlappingConesAreNonempty) {
    const EmptinessDecision d = empty_intersection_decide(
        {}, {make_double_cone({-1, 0, 0}, {1, 0, 0}), make_double_cone({-0.5, 0.5, 0}, {1.5, 0.5, 0})}, kG);
    EXPECT_EQ(d.verdict, Emptiness::Nonempty);
    ASSERT_TRUE(d.witness);
}

TEST(Separation, DocumentedExample) {
    const Bitmap k1 = sample_members(parse_region("closed(ball((0,-2,0), 0.5))"), kG);
    const Bitmap k1s = bit_and(k1, sample_members(parse_region("closed(timeslice(-0.1, 0.1))"), kG));
    const Bitmap k2 = bit_and(sample_members(parse_region("closed(ball((0,2,0), 0.5))"), kG),
                              sample_members(parse_region("closed(timeslice(-0.1, 0.1))"), kG));
    const RegionPtr w = separating_wedge(k1s, k2, kG);
    const RegionPtr wc = closed_complement(w);
    for (std::size_t i = 0; i < kG.size(); ++i) {
        if (k1s[i]) { EXPECT_TRUE(member(w, kG.point(i))); }
        if (k2[i]) { EXPECT_TRUE(member(wc, kG.point(i))); }
    }
    // edge near x1 = 0
    EXPECT_TRUE(member(closure_of(w), {0, -0.2, 0}) != member(closure_of(w), {0, 0.2, 0}));
}

TEST(Separation, PreconditionErrorsCarryWitness) {
    const Bitmap k = sample_members(parse_region("closed(dcone((-0.4,0,0),(0.4,0,0)))"), kG);
    try {
        separating_wedge(k, k, kG);
        FAIL();
    } catch (const SeparationError& e) {
        EXPECT_TRUE(e.kind == CausalClass::Coincident || is_causal(e.kind));
    }
    const Bitmap later = sample_members(parse_region("closed(dcone((1,0,0),(1.6,0,0)))"), kG);
    try {
        separating_wedge(k, later, kG);
        FAIL();
    } catch (const SeparationError& e) {
        EXPECT_EQ(e.kind, CausalClass::TimelikeFuture);
        EXPECT_EQ(classify(e.p, e.q), CausalClass::TimelikeFuture);
    }
}

TEST(Subcover, SmallTriangleNeedsThreeWedges) {
    const auto w = x120_wedges();
    ObservableTag t;
    t.id = "triangle";
    // L = closed bipyramid around the origin, bounded by the three complements
    for (const auto& x : w) t.wedges.push_back(with_closed(closed_complement(x), false));
    t.dual_wedges = t.wedges;
    const SubcoverResult r = finite_subcover_select(t, 0.4, GridWindow(3, 3, 0.1, 2));
    EXPECT_TRUE(r.ok) << r.note;
    EXPECT_EQ(r.wedges.size(), 3u);
}

TEST(Subcover, SingleWedgeAndWindowGuards) {
    ObservableTag t;
    t.wedges = {make_w1(3)};
    t.dual_wedges = t.wedges;
    const SubcoverResult r = finite_subcover_select(t, 0.3, kG);
    EXPECT_FALSE(r.ok);
    EXPECT_FALSE(r.note.empty());
    EXPECT_ANY_THROW(finite_subcover_select(t, 10, kG));
}

TEST(Criterion, WedgesInsideRegion) {
    const auto w = x120_wedges();
    const RegionPtr big = make_double_cone({-6, 0, 0}, {6, 0, 0});
    EXPECT_FALSE(nonempty_intersection_criterion({}, big, kG).verdict);
    // X is W1 pushed inward along e1, so its closure sits in the open W1
    EXPECT_TRUE(nonempty_intersection_criterion({w[0]}, make_w1(3), kG).verdict);
    // the closed W1 reaches the boundary of the open W1
    const PredicateReport r = nonempty_intersection_criterion({make_w1(3)}, make_w1(3), kG);
    EXPECT_FALSE(r.verdict);
    ASSERT_EQ(r.witness.size(), 1u);
    EXPECT_FALSE(member(make_w1(3), r.witness[0]));
    EXPECT_TRUE(member(closure_of(make_w1(3)), r.witness[0]));
    // the rotated wedges leave W1
    EXPECT_FALSE(nonempty_intersection_criterion({w[1]}, make_w1(3), kG).verdict);
}

// a half-space is not an intersection of wedges and double cones
TEST(Criterion, HalfPlaneIsNotInTheRegionClass) {
    EXPECT_THROW(nonempty_intersection_criterion({make_w1(3)}, parse_region("{x1 > 0}"), kG), std::invalid_argument);
    EXPECT_THROW(nonempty_intersection_criterion({make_w1(3)}, parse_region("closed(w1)"), kG), std::invalid_argument);
}

TEST(Audit, FarApartConesCompleteTrivially) {
    ObservableTag a, b;
    a.cones = a.dual_cones = {make_double_cone({-0.4, -1.8, 0}, {0.4, -1.8, 0})};
    b.cones = b.dual_cones = {make_double_cone({-0.4, 1.8, 0}, {0.4, 1.8, 0})};
    const AuditReport r = locality_audit(a, b, GridWindow(3, 3, 0.15, 2));
    EXPECT_TRUE(r.spacelike);
    EXPECT_TRUE(r.separator_valid);
}

TEST(Audit, ScalarCatalogAborts) {
    ObservableTag a, b;
    a.wedges = a.dual_wedges = x120_wedges();
    b.cones = b.dual_cones = {make_double_cone({-0.4, 1.8, 0}, {0.4, 1.8, 0})};
    const AuditReport r = locality_audit(a, b, kG);
    EXPECT_TRUE(r.a_scalar);
    EXPECT_FALSE(r.chain_complete);
}

TEST(Envelope, StripConditionIsMonotone) {
    const auto w = x120_wedges();
    bool seen = false;
    for (double rho = 1.3; rho < 8; rho += 0.1) {
        const bool s = strip_condition(rho, 1.3, w);
        if (seen) { EXPECT_TRUE(s) << rho; }
        seen = seen || s;
    }
    EXPECT_TRUE(seen);
    const double rh = find_rho_hat(1.3, w, GridWindow(5, 5, 0.15, 2));
    EXPECT_TRUE(strip_condition(rh, 1.3, w));
    EXPECT_FALSE(strip_condition(rh - 0.15, 1.3, w));
}

TEST(Envelope, Guards) {
    const auto w = x120_wedges();
    const GridWindow g(5, 5, 0.15, 2);
    const RegionPtr o = make_double_cone({-1, 0, 0}, {1, 0, 0});
    EnvelopeOptions opt;
    EXPECT_ANY_THROW(jld_envelope(o, w, g, opt));  // no radii
    opt.radii = {0.5};
    EXPECT_ANY_THROW(jld_envelope(o, w, g, opt));  // all radii below the threshold
    opt.radii = {6};
    EXPECT_ANY_THROW(jld_envelope(make_double_cone({-1, 0.5, 0}, {1, 0.5, 0}), w, g, opt));
    EXPECT_ANY_THROW(jld_envelope(parse_region("dcone((-1,0),(1,0))"), {}, GridWindow(5, 5, 0.15, 1), opt));
}
