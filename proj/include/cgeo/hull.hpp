#pragma once

#include <array>
#include <functional>
#include <vector>

#include "cgeo/grid.hpp"
#include "cgeo/region.hpp"

namespace cgeo {

using IVec = std::array<int, kMaxCoords>;

// Primitive future-timelike lattice directions with components in
// {-radius..radius}.
std::vector<IVec> timelike_directions(int s, int radius);
// Primitive lattice directions up to sign, components in {-radius..radius}.
std::vector<IVec> all_directions(int s, int radius);

struct Run {
    std::size_t start, end;  // flat indices of the first and last point
    int length;              // number of steps
};

// Maximal runs of the set along d (runs of a single point are skipped).
void for_each_run(const Bitmap& set, const GridWindow& g, const IVec& d, const std::function<void(const Run&)>& fn);

// Lattice points of the double cone spanned by p and q (index coordinates),
// as spans of the last axis: fn(flat index of span start, span length).
void raster_cone(const GridWindow& g, const int* p, const int* q, bool closed,
                 const std::function<void(std::size_t, int)>& fn);

struct HullResult {
    SampledRegion hull;
    bool fixpoint = false;        // no chord adds points any more
    bool window_limited = false;  // the hull reaches the window boundary
    bool converged = false;       // fixpoint and not window limited
    int iterations = 0;
    std::size_t added = 0;
};

HullResult asgeirsson_hull(const Bitmap& set, const GridWindow& g, int radius = 2, int max_iter = 10000);
HullResult asgeirsson_hull(const RegionPtr& r, const GridWindow& g, int radius = 2);

}  // namespace cgeo
