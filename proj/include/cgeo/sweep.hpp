#pragma once

#include <vector>

#include "cgeo/grid.hpp"

namespace cgeo {

// Squared Euclidean distance (grid units) from every cell of an axis-aligned
// block to the nearest set cell. `dims` lists the extent of each axis,
// slowest first. Cells are +inf when the mask is empty.
std::vector<double> edt_squared(const std::uint8_t* mask, const std::vector<int>& dims);

// Lattice causal future/past of a sampled set. With strict = false the
// result is J+(S) (coincident and lightlike pairs included); with strict = true
// it is I+(S). Exact for lattice pairs.
Bitmap causal_sweep(const Bitmap& set, const GridWindow& g, bool future, bool strict);

// Points strictly between two points of the set: I+(S) ∩ I-(S).
Bitmap timelike_between(const Bitmap& set, const GridWindow& g);

// Squared distance in the full 1+s lattice (grid units).
std::vector<double> edt_window(const Bitmap& set, const GridWindow& g);

}  // namespace cgeo
