#pragma once

#include <optional>

#include "cgeo/grid.hpp"
#include "cgeo/region.hpp"

namespace cgeo {

// Same cone tips or wedge functionals, one extra spatial coordinate (set to 0
// on tips, 0 coefficient on functionals). Composite input throws.
RegionPtr lift_hull(const RegionPtr& r);

// Intersection of two 1+1 double cones as a double cone (Empty when disjoint).
RegionPtr intersect_cones_1p1(const RegionPtr& o, const RegionPtr& p);

struct LiftWitness {
    bool found = false;
    Point x;           // in the lifted space
    RegionPtr meet;    // O ∩ P as a cone or Empty
    std::size_t checked = 0;
};

// Lattice search for a point of lift(O) ∩ lift(P) outside lift(O ∩ P).
// Both inputs are 1+1 double cones; g lives in the lifted dimension (s = 2).
LiftWitness lift_intersection_witness(const RegionPtr& o, const RegionPtr& p, const GridWindow& g);

}  // namespace cgeo
