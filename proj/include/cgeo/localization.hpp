#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgeo/hyperboloid.hpp"
#include "cgeo/predicates.hpp"

namespace cgeo {

// Geometric tag of an observable: the regions whose algebras contain it
// (direct) and whose commutant algebras contain it (dual).
struct ObservableTag {
    std::string id;
    std::vector<RegionPtr> cones, wedges;
    std::vector<RegionPtr> dual_cones, dual_wedges;
};

// {"schema": 1, "id": str, "cones": [[lower], [upper]]..., "wedges": [{"nplus", "dplus",
// "nminus", "dminus"}], "dual": bool, "dual_cones": [...], "dual_wedges": [...]}
// With "dual" true (the default) direct entries are copied into the dual lists.
ObservableTag load_tag_json(const std::string& text);
std::string tag_to_json(const ObservableTag& tag);

struct LocalizationResult {
    // bold: direct catalogs; plain: dual catalogs. K: cones only; W: wedges and cones.
    SampledRegion boldK, K, boldW, W;
    bool nonempty[4] = {}, compact[4] = {}, convex[4] = {};
    bool boldK_contains_K = false, boldW_contains_W = false;
    bool boldK_contains_boldW = false, K_contains_W = false;
    bool scalar = false;  // closures of the catalog share no point
    std::string note;
    const SampledRegion& region(int i) const;
    bool diagram_holds() const { return boldK_contains_K && boldW_contains_W && boldK_contains_boldW && K_contains_W; }
};

LocalizationResult localize(const ObservableTag& a, const GridWindow& g);

struct EmptinessDecision {
    Emptiness verdict = Emptiness::Undecided;
    ApexRegion apex;
    std::optional<Point> witness;
    // certificate of emptiness
    std::optional<EpsilonResult> eps;
    RegionPtr shrink_cone;  // centered cone of radius eps/2
    std::vector<RegionPtr> shrunk;
    bool shrunk_empty = false;
    std::string note;
};

EmptinessDecision empty_intersection_decide(const std::vector<RegionPtr>& wedges, const std::vector<RegionPtr>& cones,
                                            const GridWindow& g);

// Points of `b` causally related to some point of `a`; returns false and a
// witness pair when one exists.
bool spacelike_separated(const Bitmap& a, const Bitmap& b, const GridWindow& g, Point* wa = nullptr,
                         Point* wb = nullptr);

struct SeparationError : std::runtime_error {
    Point p, q;
    CausalClass kind;
    SeparationError(const std::string& m, const Point& p_, const Point& q_, CausalClass k)
        : std::runtime_error(m), p(p_), q(q_), kind(k) {}
};

// Wedge X with k1 inside X and k2 inside its causal complement, validated on
// every lattice point. Throws SeparationError when the sets are causally related.
RegionPtr separating_wedge(const Bitmap& k1, const Bitmap& k2, const GridWindow& g, int directions = 720);

struct SubcoverResult {
    std::vector<RegionPtr> wedges;
    bool ok = false;
    std::string note;
};
// Greedy choice of wedges slightly larger than catalog entries whose closed
// intersection lies within eps of the localization region.
SubcoverResult finite_subcover_select(const ObservableTag& a, double eps, const GridWindow& g);

// Closed intersection of the wedges inside R on the lattice. R must be built
// from wedges, double cones, Full and Empty by intersection.
PredicateReport nonempty_intersection_criterion(const std::vector<RegionPtr>& wedges, const RegionPtr& r,
                                                const GridWindow& g);

struct AuditReport {
    bool a_scalar = false, b_scalar = false;
    bool spacelike = false;
    std::optional<Point> causal_pair[2];
    RegionPtr separator;
    bool separator_valid = false;
    double eps = 0;
    SubcoverResult cover_a, cover_b;
    bool covers_separated = false;
    bool catalog_pair_spacelike = false;
    bool chain_complete = false;
    std::vector<std::string> notes;
};
AuditReport locality_audit(const ObservableTag& a, const ObservableTag& b, const GridWindow& g);

// Catalogs of random cones and wedges around a common point.
ObservableTag random_consistent_tag(int s, unsigned seed, const Point& center, int ncones = 2, int nwedges = 2);

}  // namespace cgeo
