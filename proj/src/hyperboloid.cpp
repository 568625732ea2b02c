#include "cgeo/hyperboloid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cgeo/poincare.hpp"
#include "cgeo/sweep.hpp"

namespace cgeo {

bool MassHyperboloid::near(const Point& x, double band) const {
    const Point d = x - apex;
    const double q = msq(d) - sigma * sigma;
    // |grad (x-a)^2| = 2 |x-a|_E
    return std::abs(q) <= 2 * enorm(d) * band + band * band;
}

PredicateReport is_admissible(const MassHyperboloid& H, const RegionPtr& r, const GridWindow& g) {
    if (H.apex.n != g.ncoords() || r->n != g.ncoords()) throw DimensionError("hyperboloid, region and window dimensions differ");
    if (!(H.sigma >= 0)) throw std::invalid_argument("mass must be nonnegative");
    PredicateReport rep;
    rep.predicate = "is_admissible";
    rep.resolution = g;
    const double band = std::max(g.h, kTau);
    EvalContext ctx;
    ctx.grid = g;
    const Bitmap m = sample_members(r, g, &ctx);
    for (std::size_t f = 0; f < g.size(); ++f) {
        if (!m[f]) continue;
        const Point x = g.point(f);
        if (H.near(x, band)) {
            rep.verdict = false;
            rep.witness = {x};
            rep.witness_kind = "point";
            rep.window_limited = g.on_boundary(f);
            return rep;
        }
    }
    rep.verdict = true;
    return rep;
}

const char* to_string(Emptiness e) {
    switch (e) {
        case Emptiness::Empty: return "empty";
        case Emptiness::Nonempty: return "nonempty";
        default: return "undecided";
    }
}

namespace {

// Lorentz map taking the cone axis to the time axis; y = L (x - c) puts the
// closed cone at {|y0| + |y| <= r}.
struct ConeFrame {
    Matrix L;
    Point c;
    double r;
    int n;
};

ConeFrame cone_frame(const RegionPtr& cone) {
    if (cone->kind != Kind::DoubleCone) throw std::invalid_argument("double cone expected");
    const int n = cone->n;
    const Point ax = cone->b - cone->a;
    const double tau = std::sqrt(std::max(0.0, msq(ax)));
    ConeFrame f{identity_matrix(n), (cone->a + cone->b) * 0.5, tau / 2, n};
    const double g = ax[0] / tau;
    double v2 = 0;
    Point v(n);
    for (int i = 1; i < n; ++i) {
        v.c[i] = ax[i] / ax[0];
        v2 += v.c[i] * v.c[i];
    }
    if (v2 > 0) {
        f.L[0] = g;
        for (int i = 1; i < n; ++i) {
            f.L[i] = -g * v.c[i];
            f.L[i * n] = -g * v.c[i];
            for (int j = 1; j < n; ++j) f.L[i * n + j] = (i == j ? 1.0 : 0.0) + (g - 1) * v.c[i] * v.c[j] / v2;
        }
    }
    return f;
}

// Row for r + w . L (x - c) >= 0 written as A x + b >= 0.
void frame_row(const ConeFrame& f, const std::vector<double>& w, std::vector<Row>& A, std::vector<double>& b) {
    Row row(f.n, 0.0);
    for (int j = 0; j < f.n; ++j)
        for (int i = 0; i < f.n; ++i) row[j] += w[i] * f.L[i * f.n + j];
    double off = f.r;
    for (int j = 0; j < f.n; ++j) off -= row[j] * f.c[j];
    A.push_back(std::move(row));
    b.push_back(off);
}

std::vector<std::vector<double>> sphere_directions(int s) {
    std::vector<std::vector<double>> out;
    if (s == 1) return {{1}, {-1}};
    if (s == 2) {
        const int k = 24;
        for (int i = 0; i < k; ++i) {
            const double a = 2 * std::numbers::pi * i / k;
            out.push_back({std::cos(a), std::sin(a)});
        }
        return out;
    }
    // nonzero vectors of {-2..2}^s, normalized
    std::vector<int> v(s, -2);
    for (;;) {
        double nn = 0;
        for (int x : v) nn += x * x;
        if (nn > 0) {
            std::vector<double> d(s);
            for (int i = 0; i < s; ++i) d[i] = v[i] / std::sqrt(nn);
            out.push_back(d);
        }
        int k = s - 1;
        while (k >= 0 && v[k] == 2) v[k--] = -2;
        if (k < 0) break;
        ++v[k];
    }
    return out;
}

void wedge_rows(const RegionPtr& w, std::vector<Row>& A, std::vector<double>& b) {
    if (w->kind != Kind::Wedge) throw std::invalid_argument("wedge expected");
    for (const Affine* f : {&w->plus, &w->minus}) {
        A.push_back(f->n.to_vector());
        b.push_back(f->d);
    }
}

}  // namespace

void cone_outer_rows(const RegionPtr& cone, std::vector<Row>& A, std::vector<double>& b) {
    const ConeFrame f = cone_frame(cone);
    const int s = f.n - 1;
    // tangent null half-spaces at both tips: r -/+ y0 - e.y >= 0
    for (const auto& e : sphere_directions(s))
        for (double sg : {1.0, -1.0}) {
            std::vector<double> w(f.n);
            w[0] = -sg;
            for (int i = 0; i < s; ++i) w[i + 1] = -e[i];
            frame_row(f, w, A, b);
        }
}

void cone_inner_rows(const RegionPtr& cone, std::vector<Row>& A, std::vector<double>& b) {
    const ConeFrame f = cone_frame(cone);
    // l1 ball {sum |y_i| <= r}: the bipyramid over the cross-polytope
    for (int mask = 0; mask < (1 << f.n); ++mask) {
        std::vector<double> w(f.n);
        for (int i = 0; i < f.n; ++i) w[i] = (mask >> i & 1) ? 1.0 : -1.0;
        frame_row(f, w, A, b);
    }
}

ApexRegion apex_region(const std::vector<RegionPtr>& wedges, const std::vector<RegionPtr>& cones, const GridWindow& g) {
    ApexRegion out;
    std::vector<RegionPtr> kids = cones;
    kids.insert(kids.end(), wedges.begin(), wedges.end());
    for (const auto& k : kids)
        if (k->n != g.ncoords()) throw DimensionError("input and window dimensions differ");
    if (kids.empty()) {
        out.expr = make_full(g.ncoords());
        out.exact = Emptiness::Nonempty;
        out.witness = Point(g.ncoords());
        return out;
    }
    out.expr = kids.size() == 1 ? kids[0] : make_intersection(kids);

    std::vector<RegionPtr> closures;
    for (const auto& k : kids) closures.push_back(with_closed(k, true));
    auto in_all = [&](const Point& x) {
        for (const auto& c : closures) {
            bool ok = member(c, x);
            if (!ok) {
                // accept round-off on the boundary
                for (int i = 0; i < x.n && !ok; ++i)
                    for (double sg : {1e-9, -1e-9}) {
                        Point y = x;
                        y.c[i] += sg * (1 + std::abs(x.c[i]));
                        if (member(c, y)) {
                            ok = true;
                            break;
                        }
                    }
            }
            if (!ok) return false;
        }
        return true;
    };

    std::vector<Row> A;
    std::vector<double> b;
    for (const auto& w : wedges) wedge_rows(w, A, b);
    const std::size_t nw = A.size();
    for (const auto& c : cones) cone_outer_rows(c, A, b);
    const MarginResult outer = max_margin(A, b);
    out.outer_margin = outer.t;
    if (outer.t < -1e-9 && farkas_valid(A, b, outer.y)) {
        out.exact = Emptiness::Empty;
        out.farkas = outer.y;
    } else {
        if (outer.t >= -1e-12 && in_all(Point::from(outer.x))) {
            out.exact = Emptiness::Nonempty;
            out.witness = Point::from(outer.x);
        } else {
            A.resize(nw);
            b.resize(nw);
            for (const auto& c : cones) cone_inner_rows(c, A, b);
            const MarginResult inner = max_margin(A, b);
            out.inner_margin = inner.t;
            if (inner.t >= -1e-12 && in_all(Point::from(inner.x))) {
                out.exact = Emptiness::Nonempty;
                out.witness = Point::from(inner.x);
            }
        }
    }

    Bitmap all(g.size(), 1);
    EvalContext ctx;
    for (const auto& c : closures) all = bit_and(all, sample_members(c, g, &ctx));
    const std::size_t f = first_set(all);
    out.lattice_found = f < all.size();
    if (out.lattice_found && !out.witness) out.witness = g.point(f);

    if (out.exact == Emptiness::Empty && out.lattice_found) {
        out.warning = true;
        out.note = "exact bracket says empty but a lattice point lies in every closure";
    } else if (out.exact == Emptiness::Undecided && !out.lattice_found) {
        out.warning = true;
        out.note = "polyhedral bracket inconclusive and no lattice point found";
    } else if (out.exact == Emptiness::Nonempty && !out.lattice_found) {
        out.note = "nonempty below lattice resolution";
    }
    return out;
}

EpsilonResult epsilon_shrink(const std::vector<RegionPtr>& regions, const GridWindow& g) {
    if (regions.size() < 2) throw std::invalid_argument("epsilon_shrink needs a family of at least two regions");
    std::vector<std::vector<double>> dist;
    EvalContext ctx;
    ctx.grid = g;
    Bitmap all(g.size(), 1);
    for (const auto& r : regions) {
        if (r->n != g.ncoords()) throw DimensionError("region and window dimensions differ");
        RegionPtr c = closure_of(r);
        if (!c) c = r;
        const Bitmap m = sample_members(c, g, &ctx);
        if (first_set(m) == m.size()) throw std::invalid_argument("a region has no lattice points");
        all = bit_and(all, m);
        dist.push_back(edt_window(m, g));
    }
    if (first_set(all) < all.size())
        throw std::invalid_argument("closures share lattice point " + format_point(g.point(first_set(all))));
    EpsilonResult res;
    double best = INFINITY;
    for (std::size_t f = 0; f < g.size(); ++f) {
        double worst = 0;
        for (const auto& d : dist) worst = std::max(worst, d[f]);
        best = std::min(best, worst);
    }
    res.eps_star = std::sqrt(best) * g.h;
    // Three-way split of the smallest gap: the neighborhoods keep a gap of eps_star / 3.
    const double raw = res.eps_star * 2.0 / 3.0;
    const double q = std::floor(raw / g.h + 1e-9) * g.h;
    res.eps = q > 0 ? q : raw;
    // re-verify: no lattice point within eps of every closure
    res.verified = true;
    const double e2 = (res.eps / g.h) * (res.eps / g.h);
    for (std::size_t f = 0; f < g.size() && res.verified; ++f) {
        bool inside = true;
        for (const auto& d : dist) inside = inside && d[f] <= e2 + 1e-9;
        if (inside) res.verified = false;
    }
    return res;
}

double sup_over_cone(const Point& n, const RegionPtr& cone) {
    if (cone->kind != Kind::DoubleCone) throw std::invalid_argument("double cone expected");
    // a linear functional on a double cone peaks at a tip or on the equator sphere
    const ConeFrame f = cone_frame(cone);
    const Matrix Li = mat_inverse(f.L, f.n);
    // n . x = n . c + (Li^T n) . y over {|y0| + |y| <= r}
    Point m(f.n);
    for (int j = 0; j < f.n; ++j)
        for (int i = 0; i < f.n; ++i) m.c[j] += Li[i * f.n + j] * n[i];
    double sp = 0;
    for (int j = 1; j < f.n; ++j) sp += m.c[j] * m.c[j];
    return edot(n, f.c) + f.r * std::max(std::abs(m.c[0]), std::sqrt(sp));
}

RegionPtr cone_minus_cone(const RegionPtr& o, const RegionPtr& p) {
    if (o->kind != Kind::DoubleCone || p->kind != Kind::DoubleCone) throw std::invalid_argument("double cones expected");
    return make_double_cone(o->a - p->b, o->b - p->a, o->closed);
}

RegionPtr cone_plus_cone(const RegionPtr& o, const RegionPtr& p) {
    if (o->kind != Kind::DoubleCone || p->kind != Kind::DoubleCone) throw std::invalid_argument("double cones expected");
    return make_double_cone(o->a + p->a, o->b + p->b, o->closed && p->closed);
}

RegionPtr wedge_minus_cone(const RegionPtr& w, const RegionPtr& p) {
    if (w->kind != Kind::Wedge) throw std::invalid_argument("wedge expected");
    Affine fp = w->plus, fm = w->minus;
    fp.d += sup_over_cone(fp.n, p);
    fm.d += sup_over_cone(fm.n, p);
    return make_wedge(fp, fm, w->closed);
}

RegionPtr wedge_plus_cone(const RegionPtr& w, const RegionPtr& p) {
    if (w->kind != Kind::Wedge) throw std::invalid_argument("wedge expected");
    Affine fp = w->plus, fm = w->minus;
    fp.d += sup_over_cone(-fp.n, p);
    fm.d += sup_over_cone(-fm.n, p);
    return make_wedge(fp, fm, w->closed && p->closed);
}

ShrunkInputs shrink_inputs(const RegionPtr& o, const std::vector<RegionPtr>& wedges, const RegionPtr& p) {
    ShrunkInputs out;
    out.cone = cone_minus_cone(o, p);
    for (const auto& w : wedges) out.wedges.push_back(wedge_minus_cone(w, p));
    return out;
}

}  // namespace cgeo
