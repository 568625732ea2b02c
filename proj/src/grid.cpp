#include "cgeo/grid.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cgeo {

GridWindow::GridWindow(double T_, double X_, double h_, int s_) : T(T_), X(X_), h(h_), s(s_) {
    if (!(h > 0) || !std::isfinite(h)) throw std::invalid_argument("grid spacing must be positive");
    if (!(T > 0) || !(X > 0)) throw std::invalid_argument("window half-widths must be positive");
    if (s < 1 || s + 1 > kMaxCoords) throw DimensionError("unsupported space dimension");
    nt_ = static_cast<int>(std::floor(T / h + 1e-9));
    nx_ = static_cast<int>(std::floor(X / h + 1e-9));
    slice_ = 1;
    for (int k = 0; k < s; ++k) slice_ *= static_cast<std::size_t>(space_len());
}

std::size_t GridWindow::index(const int* idx) const {
    std::size_t f = static_cast<std::size_t>(idx[0] + nt_);
    for (int k = 1; k <= s; ++k) f = f * space_len() + static_cast<std::size_t>(idx[k] + nx_);
    return f;
}

void GridWindow::indices(std::size_t flat, int* idx) const {
    for (int k = s; k >= 1; --k) {
        idx[k] = static_cast<int>(flat % space_len()) - nx_;
        flat /= space_len();
    }
    idx[0] = static_cast<int>(flat) - nt_;
}

Point GridWindow::point(std::size_t flat) const {
    int idx[kMaxCoords];
    indices(flat, idx);
    Point p(s + 1);
    for (int k = 0; k <= s; ++k) p.c[k] = idx[k] * h;
    return p;
}

bool GridWindow::nearest(const Point& x, std::size_t& flat) const {
    if (x.n != s + 1) throw DimensionError("point and window dimensions differ");
    int idx[kMaxCoords] = {};
    for (int k = 0; k <= s; ++k) {
        const long r = std::lround(x.c[k] / h);
        const int lim = k == 0 ? nt_ : nx_;
        if (r < -lim || r > lim) return false;
        idx[k] = static_cast<int>(r);
    }
    flat = index(idx);
    return true;
}

bool GridWindow::on_boundary(std::size_t flat) const {
    int idx[kMaxCoords];
    indices(flat, idx);
    if (idx[0] == -nt_ || idx[0] == nt_) return true;
    for (int k = 1; k <= s; ++k)
        if (idx[k] == -nx_ || idx[k] == nx_) return true;
    return false;
}

bool GridWindow::on_side_boundary(std::size_t flat) const {
    int idx[kMaxCoords];
    indices(flat, idx);
    for (int k = 1; k <= s; ++k)
        if (idx[k] == -nx_ || idx[k] == nx_) return true;
    return false;
}

std::string GridWindow::describe() const {
    char buf[128];
    std::snprintf(buf, sizeof buf, "T=%g X=%g h=%g s=%d", T, X, h, s);
    return buf;
}

std::vector<Point> window_points(const GridWindow& g) {
    std::vector<Point> out;
    out.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out.push_back(g.point(i));
    return out;
}

const char* to_string(Topology t) {
    switch (t) {
        case Topology::Open: return "open";
        case Topology::Closed: return "closed";
        default: return "unknown";
    }
}

std::size_t SampledRegion::count() const { return popcount(members); }

bool SampledRegion::touches_boundary() const {
    for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i] && grid.on_boundary(i)) return true;
    return false;
}

std::size_t popcount(const Bitmap& b) {
    std::size_t n = 0;
    for (auto v : b) n += v != 0;
    return n;
}

Bitmap bit_or(const Bitmap& a, const Bitmap& b) {
    Bitmap r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] | b[i];
    return r;
}

Bitmap bit_and(const Bitmap& a, const Bitmap& b) {
    Bitmap r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
    return r;
}

Bitmap bit_not(const Bitmap& a) {
    Bitmap r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = !a[i];
    return r;
}

Bitmap bit_minus(const Bitmap& a, const Bitmap& b) {
    Bitmap r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] && !b[i];
    return r;
}

bool bit_subset(const Bitmap& a, const Bitmap& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

std::size_t first_set(const Bitmap& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) return i;
    return a.size();
}

}  // namespace cgeo
