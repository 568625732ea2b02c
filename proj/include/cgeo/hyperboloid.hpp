#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgeo/grid.hpp"
#include "cgeo/lp.hpp"
#include "cgeo/predicates.hpp"
#include "cgeo/region.hpp"

namespace cgeo {

struct MassHyperboloid {
    Point apex;
    double sigma = 0;
    // (x-a)^2 = sigma^2 up to a band of width `band` measured along the surface normal.
    bool near(const Point& x, double band) const;
};

// True iff no lattice point of R lies in the band of width max(h, tau) around H.
PredicateReport is_admissible(const MassHyperboloid& H, const RegionPtr& r, const GridWindow& g);

enum class Emptiness { Empty, Nonempty, Undecided };
const char* to_string(Emptiness e);

// Intersection of the inputs (open), with an emptiness verdict for the
// intersection of their closures.
struct ApexRegion {
    RegionPtr expr;
    Emptiness exact = Emptiness::Undecided;  // polyhedral bracket
    bool lattice_found = false;
    std::optional<Point> witness;  // verified common point of the closures
    std::vector<double> farkas;    // row multipliers when exact == Empty
    double outer_margin = 0, inner_margin = 0;
    bool warning = false;
    std::string note;
    // Both halves of the bracket agree on emptiness.
    bool is_empty() const { return exact == Emptiness::Empty && !lattice_found; }
    bool is_nonempty() const { return exact == Emptiness::Nonempty || lattice_found; }
};

ApexRegion apex_region(const std::vector<RegionPtr>& wedges, const std::vector<RegionPtr>& cones, const GridWindow& g);

// Linear rows (A x + b >= 0) of an outer and inner polyhedral bracket of a
// closed double cone.
void cone_outer_rows(const RegionPtr& cone, std::vector<Row>& A, std::vector<double>& b);
void cone_inner_rows(const RegionPtr& cone, std::vector<Row>& A, std::vector<double>& b);

struct EpsilonResult {
    double eps = 0;       // h-quantized when that keeps it positive
    double eps_star = 0;  // min over lattice points of the largest distance to a region
    bool verified = false;
};
// Regions are taken as closures. Throws when the closures share a lattice
// point or fewer than two regions are given.
EpsilonResult epsilon_shrink(const std::vector<RegionPtr>& regions, const GridWindow& g);

// sup of the affine functional's linear part over a closed double cone.
double sup_over_cone(const Point& n, const RegionPtr& cone);

// (O - P)'' and (W - P)'' for double cones O, P and wedges W.
RegionPtr cone_minus_cone(const RegionPtr& o, const RegionPtr& p);
RegionPtr wedge_minus_cone(const RegionPtr& w, const RegionPtr& p);
// (O + P)^cc and (W + P)^cc.
RegionPtr cone_plus_cone(const RegionPtr& o, const RegionPtr& p);
RegionPtr wedge_plus_cone(const RegionPtr& w, const RegionPtr& p);

struct ShrunkInputs {
    RegionPtr cone;
    std::vector<RegionPtr> wedges;
};
ShrunkInputs shrink_inputs(const RegionPtr& o, const std::vector<RegionPtr>& wedges, const RegionPtr& p);

}  // namespace cgeo
