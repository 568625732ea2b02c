#pragma once

#include "cgeo/predicates.hpp"
#include "cgeo/region.hpp"

namespace cgeo {

// The cylinder |x| = rho around the time axis with its own (intrinsic)
// causal structure. The lattice uses equal time and arc steps so null
// directions are lattice diagonals.
struct CylinderSpacetime {
    double rho = 1;
    int angular = 64;
    double T = 1;
    int s = 2;

    double step() const;
    int nt() const;
    int time_len() const { return 2 * nt() + 1; }
    Point point(int ti, int j) const;  // ti in [-nt, nt], j in [0, angular)
};

struct CylinderRegion {
    CylinderSpacetime z;
    Bitmap members;  // (ti + nt) * angular + j
    bool at(int ti, int j) const;
    std::size_t count() const { return popcount(members); }
};

CylinderRegion cylinder_restrict(const RegionPtr& r, const CylinderSpacetime& z);
// Intrinsic timelike convexity via periodic 1+1 sweeps. Rejects s != 2.
PredicateReport cylinder_timelike_convex(const CylinderRegion& c);

}  // namespace cgeo
