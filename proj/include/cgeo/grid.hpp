#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cgeo/point.hpp"

namespace cgeo {

using Bitmap = std::vector<std::uint8_t>;

// Axis-aligned lattice {(i0 h, i1 h, ..., is h) : |i0 h| <= T, |ik h| <= X}.
// Storage is time-major and lexicographic in the indices.
struct GridWindow {
    double T = 1, X = 1, h = 1;
    int s = 2;

    GridWindow() = default;
    GridWindow(double T_, double X_, double h_, int s_);

    int nt() const { return nt_; }
    int nx() const { return nx_; }
    int ncoords() const { return s + 1; }
    int time_len() const { return 2 * nt_ + 1; }
    int space_len() const { return 2 * nx_ + 1; }
    std::size_t slice_size() const { return slice_; }
    std::size_t size() const { return slice_ * static_cast<std::size_t>(time_len()); }

    // idx[0] in [-nt, nt], idx[k] in [-nx, nx].
    std::size_t index(const int* idx) const;
    void indices(std::size_t flat, int* idx) const;
    Point point(std::size_t flat) const;
    // Nearest lattice point; false when x lies outside the window by more than h/2.
    bool nearest(const Point& x, std::size_t& flat) const;
    bool on_boundary(std::size_t flat) const;
    bool on_side_boundary(std::size_t flat) const;

    std::string describe() const;

private:
    int nt_ = 0, nx_ = 0;
    std::size_t slice_ = 0;
};

std::vector<Point> window_points(const GridWindow& g);

enum class Topology { Open, Closed, Unknown };
const char* to_string(Topology t);

// A lattice approximation of a region. `closure` holds samples of the
// closure when it is known to differ from `members`.
struct SampledRegion {
    GridWindow grid;
    Bitmap members;
    Bitmap closure;
    Topology topology = Topology::Unknown;
    std::string label;

    const Bitmap& closure_or_members() const { return closure.empty() ? members : closure; }
    std::size_t count() const;
    bool touches_boundary() const;
};

std::size_t popcount(const Bitmap& b);
Bitmap bit_or(const Bitmap& a, const Bitmap& b);
Bitmap bit_and(const Bitmap& a, const Bitmap& b);
Bitmap bit_not(const Bitmap& a);
// a \ b
Bitmap bit_minus(const Bitmap& a, const Bitmap& b);
bool bit_subset(const Bitmap& a, const Bitmap& b);
// First index set in a, or size() when none.
std::size_t first_set(const Bitmap& a);

}  // namespace cgeo
