#include "cgeo/region.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "cgeo/complement.hpp"

namespace cgeo {

namespace {

std::shared_ptr<Region> node(Kind k, int n) {
    auto r = std::make_shared<Region>();
    r->kind = k;
    r->n = n;
    return r;
}

bool strictly_pos(double v, double scale) { return v > kTau * scale; }
bool nonneg(double v, double scale) { return v >= -kTau * scale; }

double affine_scale(const Affine& f, const Point& x) {
    return 1.0 + enorm(f.n) * enorm(x) + std::fabs(f.d);
}

bool affine_in(const Affine& f, const Point& x, bool closed) {
    const double v = f(x), sc = affine_scale(f, x);
    return closed ? nonneg(v, sc) : strictly_pos(v, sc);
}

bool invert(const std::vector<double>& m, int n, std::vector<double>& inv) {
    std::vector<double> a(m);
    inv.assign(static_cast<std::size_t>(n * n), 0.0);
    for (int i = 0; i < n; ++i) inv[i * n + i] = 1.0;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::fabs(a[r * n + c]) > std::fabs(a[piv * n + c])) piv = r;
        if (std::fabs(a[piv * n + c]) < 1e-12) return false;
        for (int k = 0; k < n; ++k) {
            std::swap(a[c * n + k], a[piv * n + k]);
            std::swap(inv[c * n + k], inv[piv * n + k]);
        }
        const double p = a[c * n + c];
        for (int k = 0; k < n; ++k) {
            a[c * n + k] /= p;
            inv[c * n + k] /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            const double f = a[r * n + c];
            if (f == 0) continue;
            for (int k = 0; k < n; ++k) {
                a[r * n + k] -= f * a[c * n + k];
                inv[r * n + k] -= f * inv[c * n + k];
            }
        }
    }
    return true;
}

Point mat_apply(const std::vector<double>& m, const Point& x) {
    Point y(x.n);
    for (int i = 0; i < x.n; ++i) {
        double s = 0;
        for (int j = 0; j < x.n; ++j) s += m[i * x.n + j] * x.c[j];
        y.c[i] = s;
    }
    return y;
}

void check_dims(const std::vector<RegionPtr>& kids) {
    if (kids.empty()) throw std::invalid_argument("union/intersection needs at least one operand");
    for (auto& k : kids) {
        if (!k) throw std::invalid_argument("null region operand");
        if (k->n != kids[0]->n) throw DimensionError("mixed dimensions in region expression");
    }
}

}  // namespace

const char* to_string(Kind k) {
    switch (k) {
        case Kind::DoubleCone: return "dcone";
        case Kind::Wedge: return "wedge";
        case Kind::TimeSlice: return "timeslice";
        case Kind::HalfSpace: return "half";
        case Kind::Plane: return "plane";
        case Kind::Shell: return "shell";
        case Kind::Box: return "box";
        case Kind::Ball: return "ball";
        case Kind::Points: return "points";
        case Kind::Exterior: return "exterior";
        case Kind::Full: return "full";
        case Kind::Empty: return "empty";
        case Kind::Sampled: return "sampled";
        case Kind::Union: return "union";
        case Kind::Intersection: return "inter";
        case Kind::Complement: return "compl";
        case Kind::Translate: return "translate";
        case Kind::LinearMap: return "map";
    }
    return "?";
}

bool is_lightlike_covector(const Point& n) {
    const double t2 = n.c[0] * n.c[0];
    double sp = 0;
    for (int i = 1; i < n.n; ++i) sp += n.c[i] * n.c[i];
    return t2 > 0 && std::fabs(t2 - sp) <= kTau * (t2 + sp);
}

void validate_wedge(const Affine& plus, const Affine& minus) {
    require_same_dim(plus.n, minus.n);
    if (!is_lightlike_covector(plus.n) || !is_lightlike_covector(minus.n))
        throw std::invalid_argument("wedge normals must be lightlike and nonzero");
    if (plus.n.c[0] * minus.n.c[0] >= 0)
        throw std::invalid_argument("wedge normals must have opposite time orientation");
    const double pp = edot(plus.n, plus.n), mm = edot(minus.n, minus.n), pm = edot(plus.n, minus.n);
    if (pp * mm - pm * pm <= 1e-12 * pp * mm)
        throw std::invalid_argument("wedge normals must be linearly independent");
}

RegionPtr make_double_cone(const Point& lower, const Point& upper, bool closed) {
    require_same_dim(lower, upper);
    if (classify(lower, upper) != CausalClass::TimelikeFuture)
        throw std::invalid_argument("double cone tips must be timelike separated (upper in the future of lower)");
    auto r = node(Kind::DoubleCone, lower.n);
    r->a = lower;
    r->b = upper;
    r->closed = closed;
    return r;
}

RegionPtr make_wedge(const Affine& plus, const Affine& minus, bool closed) {
    validate_wedge(plus, minus);
    auto r = node(Kind::Wedge, plus.n.n);
    if (plus.n.c[0] < 0) {
        r->plus = plus;
        r->minus = minus;
    } else {
        r->plus = minus;
        r->minus = plus;
    }
    r->closed = closed;
    return r;
}

RegionPtr make_w1(int ncoords) {
    Affine p{Point(ncoords), 0}, m{Point(ncoords), 0};
    p.n.c[0] = -1;
    p.n.c[1] = 1;
    m.n.c[0] = 1;
    m.n.c[1] = 1;
    return make_wedge(p, m);
}

RegionPtr make_time_slice(int ncoords, double t0, double t1, bool closed) {
    if (!(t0 < t1)) throw std::invalid_argument("time slice needs t0 < t1");
    auto r = node(Kind::TimeSlice, ncoords);
    (void)Point(ncoords);
    r->lo = t0;
    r->hi = t1;
    r->closed = closed;
    return r;
}

RegionPtr make_half_space(const Affine& f, bool closed) {
    if (enorm(f.n) == 0) throw std::invalid_argument("half-space normal must be nonzero");
    auto r = node(Kind::HalfSpace, f.n.n);
    r->plus = f;
    r->closed = closed;
    return r;
}

RegionPtr make_plane(const Affine& f) {
    if (enorm(f.n) == 0) throw std::invalid_argument("plane normal must be nonzero");
    auto r = node(Kind::Plane, f.n.n);
    r->plus = f;
    r->closed = true;
    return r;
}

RegionPtr make_shell(int ncoords, double lo, double hi, bool closed) {
    if (!(lo < hi)) throw std::invalid_argument("shell needs lo < hi");
    (void)Point(ncoords);
    auto r = node(Kind::Shell, ncoords);
    r->lo = lo;
    r->hi = hi;
    r->closed = closed;
    return r;
}

RegionPtr make_box(const Point& lo, const Point& hi, bool closed) {
    require_same_dim(lo, hi);
    for (int i = 0; i < lo.n; ++i)
        if (!(lo.c[i] < hi.c[i])) throw std::invalid_argument("box corners must be ordered");
    auto r = node(Kind::Box, lo.n);
    r->a = lo;
    r->b = hi;
    r->closed = closed;
    return r;
}

RegionPtr make_ball(const Point& center, double radius, bool closed) {
    if (!(radius > 0)) throw std::invalid_argument("ball radius must be positive");
    auto r = node(Kind::Ball, center.n);
    r->a = center;
    r->lo = radius;
    r->closed = closed;
    return r;
}

RegionPtr make_points(std::vector<Point> pts) {
    if (pts.empty()) throw std::invalid_argument("points needs at least one point");
    for (auto& p : pts) require_same_dim(p, pts[0]);
    auto r = node(Kind::Points, pts[0].n);
    r->pts = std::move(pts);
    r->closed = true;
    return r;
}

RegionPtr make_exterior(const Point& lower, const Point& upper, bool closed) {
    require_same_dim(lower, upper);
    if (classify(lower, upper) != CausalClass::TimelikeFuture)
        throw std::invalid_argument("exterior tips must be timelike separated");
    auto r = node(Kind::Exterior, lower.n);
    r->a = lower;
    r->b = upper;
    r->closed = closed;
    return r;
}

RegionPtr make_full(int ncoords) {
    (void)Point(ncoords);
    return node(Kind::Full, ncoords);
}

RegionPtr make_empty(int ncoords) {
    (void)Point(ncoords);
    return node(Kind::Empty, ncoords);
}

RegionPtr make_sampled(std::shared_ptr<const SampledRegion> s) {
    auto r = node(Kind::Sampled, s->grid.ncoords());
    r->closed = s->topology == Topology::Closed;
    r->sampled = std::move(s);
    return r;
}

RegionPtr make_union(std::vector<RegionPtr> kids) {
    check_dims(kids);
    auto r = node(Kind::Union, kids[0]->n);
    r->kids = std::move(kids);
    return r;
}

RegionPtr make_intersection(std::vector<RegionPtr> kids) {
    check_dims(kids);
    auto r = node(Kind::Intersection, kids[0]->n);
    r->kids = std::move(kids);
    return r;
}

RegionPtr make_complement(RegionPtr kid) {
    if (!kid) throw std::invalid_argument("null region operand");
    auto r = node(Kind::Complement, kid->n);
    r->kids = {std::move(kid)};
    return r;
}

RegionPtr make_translate(RegionPtr kid, const Point& v) {
    if (!kid) throw std::invalid_argument("null region operand");
    if (kid->n != v.n) throw DimensionError("translation vector dimension mismatch");
    auto r = node(Kind::Translate, kid->n);
    r->a = v;
    r->kids = {std::move(kid)};
    return r;
}

RegionPtr make_linear_map(RegionPtr kid, std::vector<double> matrix) {
    if (!kid) throw std::invalid_argument("null region operand");
    const int n = kid->n;
    if (static_cast<int>(matrix.size()) != n * n) throw DimensionError("matrix size mismatch");
    auto r = node(Kind::LinearMap, n);
    if (!invert(matrix, n, r->inv)) throw std::invalid_argument("linear map must be invertible");
    r->mat = std::move(matrix);
    r->kids = {std::move(kid)};
    return r;
}

RegionPtr with_closed(const RegionPtr& leaf, bool closed) {
    if (leaf->closed == closed) return leaf;
    auto r = std::make_shared<Region>(*leaf);
    r->closed = closed;
    return r;
}

bool is_lorentz(const std::vector<double>& m, int n, double tol) {
    // M^T eta M = eta
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0;
            for (int k = 0; k < n; ++k) s += (k == 0 ? 1.0 : -1.0) * m[k * n + i] * m[k * n + j];
            const double want = i != j ? 0.0 : (i == 0 ? 1.0 : -1.0);
            if (std::fabs(s - want) > tol) return false;
        }
    return true;
}

MemberResult member_ex(const RegionPtr& r, const Point& x, EvalContext* ctx) {
    if (x.n != r->n) throw DimensionError("point and region dimensions differ");
    MemberResult res;
    switch (r->kind) {
        case Kind::DoubleCone:
            res.in = r->closed ? causal_future(r->a, x) && causal_future(x, r->b)
                               : timelike_future(r->a, x) && timelike_future(x, r->b);
            break;
        case Kind::Exterior:
            res.in = r->closed ? !timelike_future(r->a, x) && !timelike_future(x, r->b)
                               : !causal_future(r->a, x) && !causal_future(x, r->b);
            break;
        case Kind::Wedge:
            res.in = affine_in(r->plus, x, r->closed) && affine_in(r->minus, x, r->closed);
            break;
        case Kind::TimeSlice: {
            const double sc = 1 + std::fabs(x.c[0]) + std::fabs(r->lo) + std::fabs(r->hi);
            res.in = r->closed ? nonneg(x.c[0] - r->lo, sc) && nonneg(r->hi - x.c[0], sc)
                               : strictly_pos(x.c[0] - r->lo, sc) && strictly_pos(r->hi - x.c[0], sc);
            break;
        }
        case Kind::HalfSpace:
            res.in = affine_in(r->plus, x, r->closed);
            break;
        case Kind::Plane:
            res.in = std::fabs(r->plus(x)) <= kTau * affine_scale(r->plus, x);
            break;
        case Kind::Shell: {
            const double q = msq(x), sc = 1 + edot(x, x) + std::fabs(r->lo) + std::fabs(r->hi);
            res.in = r->closed ? nonneg(q - r->lo, sc) && nonneg(r->hi - q, sc)
                               : strictly_pos(q - r->lo, sc) && strictly_pos(r->hi - q, sc);
            break;
        }
        case Kind::Box:
            res.in = true;
            for (int i = 0; i < x.n && res.in; ++i) {
                const double sc = 1 + std::fabs(x.c[i]) + std::fabs(r->a.c[i]) + std::fabs(r->b.c[i]);
                res.in = r->closed ? nonneg(x.c[i] - r->a.c[i], sc) && nonneg(r->b.c[i] - x.c[i], sc)
                                   : strictly_pos(x.c[i] - r->a.c[i], sc) && strictly_pos(r->b.c[i] - x.c[i], sc);
            }
            break;
        case Kind::Ball: {
            const Point d = x - r->a;
            const double q = edot(d, d), rr = r->lo * r->lo, sc = 1 + q + rr;
            res.in = r->closed ? nonneg(rr - q, sc) : strictly_pos(rr - q, sc);
            break;
        }
        case Kind::Points:
            for (auto& p : r->pts) {
                bool eq = true;
                for (int i = 0; i < x.n; ++i)
                    if (std::fabs(x.c[i] - p.c[i]) > 1e-9 * (1 + std::fabs(p.c[i]))) eq = false;
                if (eq) {
                    res.in = true;
                    break;
                }
            }
            break;
        case Kind::Full: res.in = true; break;
        case Kind::Empty: res.in = false; break;
        case Kind::Sampled: {
            const auto& s = *r->sampled;
            std::size_t f;
            res.in = s.grid.nearest(x, f) && s.members[f];
            res.resolution_limited = true;
            res.h = s.grid.h;
            break;
        }
        case Kind::Union:
        case Kind::Intersection: {
            const bool uni = r->kind == Kind::Union;
            res.in = !uni;
            for (auto& k : r->kids) {
                const MemberResult m = member_ex(k, x, ctx);
                res.resolution_limited |= m.resolution_limited;
                res.h = std::fmax(res.h, m.h);
                if (uni && m.in) {
                    res.in = true;
                    if (!res.resolution_limited) break;
                } else if (!uni && !m.in) {
                    res.in = false;
                    if (!res.resolution_limited) break;
                }
            }
            break;
        }
        case Kind::Complement: {
            if (auto cf = closed_complement(r->kids[0])) return member_ex(cf, x, ctx);
            EvalContext local;
            EvalContext* c = ctx ? ctx : &local;
            if (!c->grid) c->grid = GridWindow(3, 3, 0.1, r->n - 1);
            auto it = c->cache.find(r.get());
            if (it == c->cache.end())
                it = c->cache.emplace(r.get(), causal_complement(r->kids[0], *c->grid, c)).first;
            return member_ex(it->second, x, c);
        }
        case Kind::Translate:
            return member_ex(r->kids[0], x - r->a, ctx);
        case Kind::LinearMap:
            return member_ex(r->kids[0], mat_apply(r->inv, x), ctx);
    }
    return res;
}

bool member(const RegionPtr& r, const Point& x, EvalContext* ctx) { return member_ex(r, x, ctx).in; }

RegionPtr closed_complement(const RegionPtr& r) {
    const int n = r->n;
    switch (r->kind) {
        case Kind::Full: return make_empty(n);
        case Kind::Empty: return make_full(n);
        case Kind::Wedge:
            return make_wedge(r->minus.negated(), r->plus.negated(), !r->closed);
        case Kind::DoubleCone: return make_exterior(r->a, r->b, !r->closed);
        case Kind::Exterior: return make_double_cone(r->a, r->b, !r->closed);
        case Kind::TimeSlice:
        case Kind::HalfSpace:
        case Kind::Plane: return make_empty(n);
        case Kind::Union: {
            std::vector<RegionPtr> parts;
            for (auto& k : r->kids) {
                auto c = closed_complement(k);
                if (!c) return nullptr;
                parts.push_back(c);
            }
            return parts.size() == 1 ? parts[0] : make_intersection(parts);
        }
        case Kind::Intersection: {
            if (r->kids.size() == 1) return closed_complement(r->kids[0]);
            // Null hyperplane cut by one half-space invariant along the null generator.
            if (r->kids.size() != 2) return nullptr;
            for (int i = 0; i < 2; ++i) {
                const auto& pl = r->kids[i];
                const auto& hs = r->kids[1 - i];
                if (pl->kind != Kind::Plane || hs->kind != Kind::HalfSpace) continue;
                if (!is_lightlike_covector(pl->plus.n)) continue;
                Point gen = pl->plus.n;
                gen.c[0] = -gen.c[0];
                if (std::fabs(edot(hs->plus.n, gen)) > 1e-12 * enorm(hs->plus.n) * enorm(gen)) continue;
                return make_intersection({pl, make_half_space(hs->plus.negated(), !hs->closed)});
            }
            return nullptr;
        }
        case Kind::Complement: {
            auto c = closed_complement(r->kids[0]);
            return c ? closed_complement(c) : nullptr;
        }
        case Kind::Translate: {
            auto c = closed_complement(r->kids[0]);
            return c ? make_translate(c, r->a) : nullptr;
        }
        case Kind::LinearMap: {
            if (!is_lorentz(r->mat, n)) return nullptr;
            auto c = closed_complement(r->kids[0]);
            return c ? make_linear_map(c, r->mat) : nullptr;
        }
        default: return nullptr;
    }
}

RegionPtr closure_of(const RegionPtr& r) {
    switch (r->kind) {
        case Kind::Sampled: {
            if (r->sampled->topology == Topology::Closed) return r;
            auto s = std::make_shared<SampledRegion>(*r->sampled);
            s->members = r->sampled->closure_or_members();
            s->closure.clear();
            s->topology = Topology::Closed;
            return make_sampled(s);
        }
        case Kind::Union:
        case Kind::Intersection: {
            std::vector<RegionPtr> parts;
            for (auto& k : r->kids) {
                auto c = closure_of(k);
                if (!c) return nullptr;
                parts.push_back(c);
            }
            return r->kind == Kind::Union ? make_union(parts) : make_intersection(parts);
        }
        case Kind::Complement: {
            auto c = closed_complement(r->kids[0]);
            return c ? closure_of(c) : nullptr;
        }
        case Kind::Translate: {
            auto c = closure_of(r->kids[0]);
            return c ? make_translate(c, r->a) : nullptr;
        }
        case Kind::LinearMap: {
            auto c = closure_of(r->kids[0]);
            return c ? make_linear_map(c, r->mat) : nullptr;
        }
        case Kind::Full:
        case Kind::Empty:
        case Kind::Plane:
        case Kind::Points: return r;
        default: return with_closed(r, true);
    }
}

Topology topology_of(const RegionPtr& r) {
    switch (r->kind) {
        case Kind::Full:
        case Kind::Empty: return Topology::Open;
        case Kind::Plane:
        case Kind::Points: return Topology::Closed;
        case Kind::Sampled: return r->sampled->topology;
        case Kind::Union:
        case Kind::Intersection: {
            bool all_open = true, all_closed = true;
            for (auto& k : r->kids) {
                const Topology t = topology_of(k);
                all_open &= t == Topology::Open || k->kind == Kind::Full || k->kind == Kind::Empty;
                all_closed &= t == Topology::Closed || k->kind == Kind::Full || k->kind == Kind::Empty;
            }
            if (all_open) return Topology::Open;
            if (all_closed) return Topology::Closed;
            return Topology::Unknown;
        }
        case Kind::Complement: {
            if (auto c = closed_complement(r->kids[0])) return topology_of(c);
            const Topology t = topology_of(r->kids[0]);
            return t == Topology::Open ? Topology::Closed : t == Topology::Closed ? Topology::Open : Topology::Unknown;
        }
        case Kind::Translate:
        case Kind::LinearMap: return topology_of(r->kids[0]);
        default: return r->closed ? Topology::Closed : Topology::Open;
    }
}

bool is_exact(const RegionPtr& r) {
    if (r->kind == Kind::Sampled) return false;
    if (r->kind == Kind::Complement && !closed_complement(r->kids[0])) return false;
    for (auto& k : r->kids)
        if (!is_exact(k)) return false;
    return true;
}

bool contains_kind(const RegionPtr& r, Kind k) {
    if (r->kind == k) return true;
    for (auto& c : r->kids)
        if (contains_kind(c, k)) return true;
    return false;
}

namespace {

bool pt_eq(const Point& x, const Point& y) { return x == y; }

}  // namespace

bool structurally_equal(const RegionPtr& x, const RegionPtr& y) {
    if (x->kind != y->kind || x->n != y->n || x->closed != y->closed) return false;
    switch (x->kind) {
        case Kind::DoubleCone:
        case Kind::Exterior:
        case Kind::Box: return pt_eq(x->a, y->a) && pt_eq(x->b, y->b);
        case Kind::Wedge: return x->plus == y->plus && x->minus == y->minus;
        case Kind::HalfSpace:
        case Kind::Plane: return x->plus == y->plus;
        case Kind::TimeSlice:
        case Kind::Shell: return x->lo == y->lo && x->hi == y->hi;
        case Kind::Ball: return pt_eq(x->a, y->a) && x->lo == y->lo;
        case Kind::Points: {
            if (x->pts.size() != y->pts.size()) return false;
            for (std::size_t i = 0; i < x->pts.size(); ++i)
                if (!pt_eq(x->pts[i], y->pts[i])) return false;
            return true;
        }
        case Kind::Sampled: return x->sampled == y->sampled;
        case Kind::Translate:
            if (!pt_eq(x->a, y->a)) return false;
            break;
        case Kind::LinearMap:
            if (x->mat != y->mat) return false;
            break;
        default: break;
    }
    if (x->kids.size() != y->kids.size()) return false;
    for (std::size_t i = 0; i < x->kids.size(); ++i)
        if (!structurally_equal(x->kids[i], y->kids[i])) return false;
    return true;
}

namespace {

struct Fnv {
    std::uint64_t h = 1469598103934665603ull;
    void bytes(const void* p, std::size_t n) {
        auto c = static_cast<const unsigned char*>(p);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= c[i];
            h *= 1099511628211ull;
        }
    }
    void num(double v) {
        if (v == 0) v = 0;  // fold -0
        bytes(&v, sizeof v);
    }
    void pt(const Point& p) {
        for (int i = 0; i < p.n; ++i) num(p.c[i]);
    }
};

void hash_into(Fnv& f, const RegionPtr& r) {
    const int tag[3] = {static_cast<int>(r->kind), r->n, r->closed ? 1 : 0};
    f.bytes(tag, sizeof tag);
    if (r->a.n) f.pt(r->a);
    if (r->b.n) f.pt(r->b);
    if (r->plus.n.n) {
        f.pt(r->plus.n);
        f.num(r->plus.d);
    }
    if (r->minus.n.n) {
        f.pt(r->minus.n);
        f.num(r->minus.d);
    }
    f.num(r->lo);
    f.num(r->hi);
    for (auto& p : r->pts) f.pt(p);
    for (double v : r->mat) f.num(v);
    if (r->sampled) {
        f.bytes(r->sampled->members.data(), r->sampled->members.size());
        f.num(r->sampled->grid.h);
    }
    for (auto& k : r->kids) hash_into(f, k);
}

}  // namespace

std::uint64_t region_hash(const RegionPtr& r) {
    Fnv f;
    hash_into(f, r);
    return f.h;
}

Bitmap sample_members(const RegionPtr& r, const GridWindow& g, EvalContext* ctx) {
    if (r->n != g.ncoords()) throw DimensionError("region and window dimensions differ");
    EvalContext local;
    EvalContext* c = ctx ? ctx : &local;
    if (!c->grid) c->grid = g;
    Bitmap out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = member_ex(r, g.point(i), c).in;
    return out;
}

SampledRegion sample(const RegionPtr& r, const GridWindow& g, EvalContext* ctx) {
    SampledRegion s;
    s.grid = g;
    s.members = sample_members(r, g, ctx);
    s.topology = topology_of(r);
    if (s.topology != Topology::Closed) {
        if (auto cl = closure_of(r)) {
            Bitmap c = sample_members(cl, g, ctx);
            if (c != s.members) s.closure = std::move(c);
        }
    }
    return s;
}

}  // namespace cgeo
