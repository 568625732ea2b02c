#pragma once
// Independent lattice oracles shared by the unit tests and the acceptance runner.

#include <array>
#include <random>
#include <vector>

#include "cgeo/complement.hpp"
#include "cgeo/grid.hpp"
#include "cgeo/region.hpp"

namespace cgeo::testing {

using I3 = std::array<int, 3>;

// closed double cone with integer tips, in lattice units
inline bool int_cone_closed(const I3& a, const I3& b, const I3& p) {
    const int dt1 = p[0] - a[0], dt2 = b[0] - p[0];
    const int r1 = (p[1] - a[1]) * (p[1] - a[1]) + (p[2] - a[2]) * (p[2] - a[2]);
    const int r2 = (p[1] - b[1]) * (p[1] - b[1]) + (p[2] - b[2]) * (p[2] - b[2]);
    return dt1 >= 0 && dt2 >= 0 && dt1 * dt1 >= r1 && dt2 * dt2 >= r2;
}

inline std::vector<I3> int_cone_points(const I3& a, const I3& b) {
    std::vector<I3> out;
    const int R = b[0] - a[0];
    for (int t = a[0]; t <= b[0]; ++t)
        for (int x = a[1] - R; x <= a[1] + R; ++x)
            for (int y = a[2] - R; y <= a[2] + R; ++y)
                if (int_cone_closed(a, b, {t, x, y})) out.push_back({t, x, y});
    return out;
}

inline bool to_flat(const GridWindow& g, const I3& p, std::size_t& flat) {
    if (std::abs(p[0]) > g.nt() || std::abs(p[1]) > g.nx() || std::abs(p[2]) > g.nx()) return false;
    flat = g.index(p.data());
    return true;
}

inline I3 to_int(const GridWindow& g, std::size_t flat) {
    I3 p;
    g.indices(flat, p.data());
    return p;
}

inline Point to_point(const I3& p, double h) { return Point{p[0] * h, p[1] * h, p[2] * h}; }

// Lattice Minkowski sum A + B, clipped to the window. B is an explicit point list.
inline Bitmap minkowski_sum(const std::vector<I3>& a, const std::vector<I3>& b, const GridWindow& g) {
    Bitmap out(g.size(), 0);
    std::size_t f;
    for (const auto& p : a)
        for (const auto& q : b)
            if (to_flat(g, {p[0] + q[0], p[1] + q[1], p[2] + q[2]}, f)) out[f] = 1;
    return out;
}

inline Bitmap minkowski_sum(const Bitmap& a, const std::vector<I3>& b, const GridWindow& g) {
    std::vector<I3> pts;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) pts.push_back(to_int(g, i));
    return minkowski_sum(pts, b, g);
}

// Open completion of a set given by closure samples: complement of an open
// set, then complement of the resulting closed set.
inline Bitmap open_completion(const Bitmap& closure, const GridWindow& g) {
    SampledRegion s;
    s.grid = g;
    s.members = closure;
    s.closure = closure;
    s.topology = Topology::Open;
    return sampled_complement(sampled_complement(s)).members;
}

inline bool inner(const GridWindow& g, std::size_t flat, int n_inner) {
    const I3 p = to_int(g, flat);
    return std::abs(p[0]) <= n_inner && std::abs(p[1]) <= n_inner && std::abs(p[2]) <= n_inner;
}

inline std::pair<I3, I3> random_int_cone(std::mt19937_64& rng, int spread, int max_height) {
    std::uniform_int_distribution<int> A(-spread, spread), H(1, max_height), S(-3, 3);
    for (;;) {
        const I3 a{A(rng), A(rng), A(rng)};
        const I3 d{H(rng), S(rng), S(rng)};
        if (d[0] * d[0] > d[1] * d[1] + d[2] * d[2]) return {a, {a[0] + d[0], a[1] + d[1], a[2] + d[2]}};
    }
}

}  // namespace cgeo::testing
