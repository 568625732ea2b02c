#include "cgeo/point.hpp"

#include <cmath>
#include <cstdio>

namespace cgeo {

Point::Point(int ncoords) : n(ncoords) {
    if (ncoords < 2 || ncoords > kMaxCoords)
        throw DimensionError("point needs between 2 and " + std::to_string(kMaxCoords) +
                             " coordinates");
}

Point::Point(std::initializer_list<double> v) : Point(static_cast<int>(v.size())) {
    int i = 0;
    for (double x : v) c[i++] = x;
}

Point Point::from(const std::vector<double>& v) {
    Point p(static_cast<int>(v.size()));
    for (int i = 0; i < p.n; ++i) {
        if (!std::isfinite(v[i])) throw std::invalid_argument("non-finite coordinate");
        p.c[i] = v[i];
    }
    return p;
}

Point Point::operator+(const Point& o) const {
    require_same_dim(*this, o);
    Point r(n);
    for (int i = 0; i < n; ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

Point Point::operator-(const Point& o) const {
    require_same_dim(*this, o);
    Point r(n);
    for (int i = 0; i < n; ++i) r.c[i] = c[i] - o.c[i];
    return r;
}

Point Point::operator*(double k) const {
    Point r(n);
    for (int i = 0; i < n; ++i) r.c[i] = c[i] * k;
    return r;
}

Point Point::operator-() const { return *this * -1.0; }

bool Point::operator==(const Point& o) const {
    if (n != o.n) return false;
    for (int i = 0; i < n; ++i)
        if (c[i] != o.c[i]) return false;
    return true;
}

void require_same_dim(const Point& a, const Point& b) {
    if (a.n != b.n)
        throw DimensionError("dimension mismatch: " + std::to_string(a.n) + " vs " +
                             std::to_string(b.n) + " coordinates");
}

double mdot(const Point& a, const Point& b) {
    require_same_dim(a, b);
    double s = a.c[0] * b.c[0];
    for (int i = 1; i < a.n; ++i) s -= a.c[i] * b.c[i];
    return s;
}

double msq(const Point& a) { return mdot(a, a); }

double edot(const Point& a, const Point& b) {
    require_same_dim(a, b);
    double s = 0;
    for (int i = 0; i < a.n; ++i) s += a.c[i] * b.c[i];
    return s;
}

double enorm(const Point& a) { return std::sqrt(edot(a, a)); }

double spatial_norm(const Point& a) {
    double s = 0;
    for (int i = 1; i < a.n; ++i) s += a.c[i] * a.c[i];
    return std::sqrt(s);
}

const char* to_string(CausalClass k) {
    switch (k) {
        case CausalClass::TimelikeFuture: return "TimelikeFuture";
        case CausalClass::TimelikePast: return "TimelikePast";
        case CausalClass::LightlikeFuture: return "LightlikeFuture";
        case CausalClass::LightlikePast: return "LightlikePast";
        case CausalClass::Spacelike: return "Spacelike";
        case CausalClass::Coincident: return "Coincident";
    }
    return "?";
}

CausalClass time_reverse(CausalClass k) {
    switch (k) {
        case CausalClass::TimelikeFuture: return CausalClass::TimelikePast;
        case CausalClass::TimelikePast: return CausalClass::TimelikeFuture;
        case CausalClass::LightlikeFuture: return CausalClass::LightlikePast;
        case CausalClass::LightlikePast: return CausalClass::LightlikeFuture;
        default: return k;
    }
}

CausalClass classify_displacement(const Point& d) {
    double sp = 0, amax = std::fabs(d.c[0]);
    for (int i = 1; i < d.n; ++i) {
        sp += d.c[i] * d.c[i];
        amax = std::fmax(amax, std::fabs(d.c[i]));
    }
    if (amax <= 1e-12) return CausalClass::Coincident;
    const double t2 = d.c[0] * d.c[0];
    const double interval = t2 - sp;
    if (std::fabs(interval) <= kTau * (t2 + sp))
        return d.c[0] > 0 ? CausalClass::LightlikeFuture : CausalClass::LightlikePast;
    if (interval > 0) return d.c[0] > 0 ? CausalClass::TimelikeFuture : CausalClass::TimelikePast;
    return CausalClass::Spacelike;
}

CausalClass classify(const Point& x, const Point& y) { return classify_displacement(y - x); }

bool timelike_future(const Point& x, const Point& y) {
    return classify(x, y) == CausalClass::TimelikeFuture;
}

bool causal_future(const Point& x, const Point& y) {
    const CausalClass k = classify(x, y);
    return k == CausalClass::TimelikeFuture || k == CausalClass::LightlikeFuture ||
           k == CausalClass::Coincident;
}

std::string format_point(const Point& p) {
    std::string s = "(";
    char buf[64];
    for (int i = 0; i < p.n; ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", p.c[i]);
        if (i) s += ",";
        s += buf;
    }
    return s + ")";
}

}  // namespace cgeo
