#pragma once

#include <vector>

#include "cgeo/region.hpp"

namespace cgeo {

using Matrix = std::vector<double>;  // row-major n x n

Matrix identity_matrix(int n);
// Boost with the given rapidity in the 0-1 plane.
Matrix boost_matrix(int n, double rapidity);
// Rotation by `angle` in the spatial (i, j) plane, 1 <= i < j <= n-1.
Matrix rotation_matrix(int n, int i, int j, double angle);
Matrix mat_mul(const Matrix& a, const Matrix& b, int n);
Point mat_apply(const Matrix& m, const Point& x);
Matrix mat_inverse(const Matrix& m, int n);

// Image of {f > 0} under x -> M x + v.
Affine push_forward(const Affine& f, const Matrix& m, const Point& v);

// Image of a cone, exterior or wedge leaf under x -> M x + v (M Lorentz).
RegionPtr transform_leaf(const RegionPtr& r, const Matrix& m, const Point& v);

// W1 boosted in the 0-1 plane, rotated in the (i, j) plane, then translated.
// i = j = 0 means no rotation.
RegionPtr wedge_from_poincare(int s, double rapidity, int i, int j, double angle, const Point& translation);

}  // namespace cgeo
