#include "cgeo/lift.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgeo {

namespace {

Point pad(const Point& p) {
    if (p.n + 1 > kMaxCoords) throw DimensionError("lifted dimension exceeds the supported maximum");
    Point q(p.n + 1);
    for (int i = 0; i < p.n; ++i) q.c[i] = p.c[i];
    return q;
}

}  // namespace

RegionPtr lift_hull(const RegionPtr& r) {
    switch (r->kind) {
        case Kind::DoubleCone:
            return make_double_cone(pad(r->a), pad(r->b), r->closed);
        case Kind::Wedge:
            return make_wedge({pad(r->plus.n), r->plus.d}, {pad(r->minus.n), r->minus.d}, r->closed);
        default:
            throw std::invalid_argument(std::string("lift_hull needs a double cone or wedge, got ") + to_string(r->kind));
    }
}

RegionPtr intersect_cones_1p1(const RegionPtr& o, const RegionPtr& p) {
    if (o->kind != Kind::DoubleCone || p->kind != Kind::DoubleCone) throw std::invalid_argument("double cones expected");
    if (o->n != 2 || p->n != 2) throw DimensionError("1+1 double cones expected");
    // null coordinates u = t + x, v = t - x; a cone is a box in (u, v)
    auto u = [](const Point& q) { return q[0] + q[1]; };
    auto v = [](const Point& q) { return q[0] - q[1]; };
    const double u0 = std::max(u(o->a), u(p->a)), u1 = std::min(u(o->b), u(p->b));
    const double v0 = std::max(v(o->a), v(p->a)), v1 = std::min(v(o->b), v(p->b));
    if (!(u0 < u1) || !(v0 < v1)) return make_empty(2);
    const Point lo{(u0 + v0) / 2, (u0 - v0) / 2}, hi{(u1 + v1) / 2, (u1 - v1) / 2};
    return make_double_cone(lo, hi, o->closed && p->closed);
}

LiftWitness lift_intersection_witness(const RegionPtr& o, const RegionPtr& p, const GridWindow& g) {
    if (g.ncoords() != 3) throw DimensionError("lifted window must have s = 2");
    LiftWitness w;
    w.meet = intersect_cones_1p1(o, p);
    const RegionPtr lo = lift_hull(o), lp = lift_hull(p);
    const RegionPtr lm = w.meet->kind == Kind::Empty ? make_empty(3) : lift_hull(w.meet);
    for (std::size_t f = 0; f < g.size(); ++f) {
        const Point x = g.point(f);
        if (!member(lo, x) || !member(lp, x)) continue;
        ++w.checked;
        if (!member(lm, x)) {
            w.found = true;
            w.x = x;
            return w;
        }
    }
    return w;
}

}  // namespace cgeo
