#include "cgeo/predicates.hpp"

#include <cmath>

#include "cgeo/complement.hpp"
#include "cgeo/hull.hpp"
#include "cgeo/sweep.hpp"

namespace cgeo {

namespace {

bool index_timelike(const int* from, const int* to, int n) {
    const long dt = to[0] - from[0];
    if (dt <= 0) return false;
    long sp = 0;
    for (int k = 1; k < n; ++k) sp += static_cast<long>(to[k] - from[k]) * (to[k] - from[k]);
    return dt * dt > sp;
}

// Points p, q of the set with p << v << q.
bool find_pair(const Bitmap& set, const GridWindow& g, std::size_t v, std::size_t& p, std::size_t& q) {
    const int n = g.ncoords();
    int iv[kMaxCoords], ix[kMaxCoords];
    g.indices(v, iv);
    bool gotp = false, gotq = false;
    for (std::size_t f = 0; f < set.size() && !(gotp && gotq); ++f) {
        if (!set[f]) continue;
        g.indices(f, ix);
        if (!gotp && index_timelike(ix, iv, n)) {
            p = f;
            gotp = true;
        }
        if (!gotq && index_timelike(iv, ix, n)) {
            q = f;
            gotq = true;
        }
    }
    return gotp && gotq;
}

PredicateReport base(const char* name, const GridWindow& g) {
    PredicateReport r;
    r.predicate = name;
    r.resolution = g;
    return r;
}

bool touches(const Bitmap& set, const GridWindow& g) {
    for (std::size_t i = 0; i < set.size(); ++i)
        if (set[i] && g.on_boundary(i)) return true;
    return false;
}

}  // namespace

PredicateReport timelike_convex_sampled(const Bitmap& set, const GridWindow& g) {
    PredicateReport rep = base("timelike_convex", g);
    const Bitmap viol = bit_minus(timelike_between(set, g), set);
    const std::size_t v = first_set(viol);
    rep.window_limited = touches(set, g);
    if (v == viol.size()) {
        rep.verdict = true;
        return rep;
    }
    std::size_t p = 0, q = 0;
    find_pair(set, g, v, p, q);
    rep.verdict = false;
    rep.witness = {g.point(p), g.point(q), g.point(v)};
    rep.witness_kind = "pair";
    rep.note = "lattice point strictly between a timelike pair of region points lies outside the region";
    return rep;
}

PredicateReport is_timelike_convex(const RegionPtr& r, const GridWindow& g) {
    return timelike_convex_sampled(sample_members(r, g), g);
}

PredicateReport asgeirsson_complete_sampled(const Bitmap& set, const GridWindow& g, int radius) {
    PredicateReport rep = base("asgeirsson_complete", g);
    rep.window_limited = touches(set, g);
    const Bitmap viol = bit_minus(timelike_between(set, g), set);
    if (first_set(viol) == viol.size()) {
        rep.verdict = true;
        rep.note = "timelike convex on the lattice";
        return rep;
    }
    rep.verdict = true;
    int ps[kMaxCoords], qs[kMaxCoords];
    for (const auto& d : timelike_directions(g.s, radius)) {
        for_each_run(set, g, d, [&](const Run& run) {
            if (!rep.verdict) return;
            g.indices(run.start, ps);
            g.indices(run.end, qs);
            raster_cone(g, ps, qs, false, [&](std::size_t f, int len) {
                if (!rep.verdict) return;
                for (int k = 0; k < len; ++k)
                    if (!set[f + k]) {
                        rep.verdict = false;
                        rep.witness = {g.point(run.start), g.point(run.end), g.point(f + k)};
                        rep.witness_kind = "chord";
                        rep.note = "double cone of a chord contained in the region leaves the region";
                        return;
                    }
            });
        });
        if (!rep.verdict) break;
    }
    return rep;
}

PredicateReport is_asgeirsson_complete(const RegionPtr& r, const GridWindow& g, int radius) {
    return asgeirsson_complete_sampled(sample_members(r, g), g, radius);
}

PredicateReport is_causally_complete(const RegionPtr& r, const GridWindow& g) {
    PredicateReport rep = base("causally_complete", g);
    EvalContext ctx;
    ctx.grid = g;
    const RegionPtr cc = causal_completion(r, g, &ctx);
    rep.exact = is_exact(cc) && is_exact(r);
    const Bitmap a = sample_members(r, g, &ctx), b = sample_members(cc, g, &ctx);
    rep.verdict = true;
    std::size_t interior_bad = a.size(), any_bad = a.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        if (any_bad == a.size()) any_bad = i;
        if (!g.on_boundary(i)) {
            interior_bad = i;
            break;
        }
    }
    if (any_bad == a.size()) return rep;
    rep.verdict = false;
    const std::size_t w = interior_bad != a.size() ? interior_bad : any_bad;
    rep.window_limited = interior_bad == a.size() && !rep.exact;
    rep.witness = {g.point(w)};
    rep.witness_kind = a[w] ? "in-region-not-in-completion" : "in-completion-not-in-region";
    return rep;
}

PredicateReport lattice_convex(const Bitmap& set, const GridWindow& g, int radius) {
    PredicateReport rep = base("lattice_convex", g);
    rep.verdict = true;
    rep.window_limited = touches(set, g);
    const int n = g.ncoords();
    auto inside = [&](const int* idx) {
        if (idx[0] < -g.nt() || idx[0] > g.nt()) return false;
        for (int k = 1; k < n; ++k)
            if (idx[k] < -g.nx() || idx[k] > g.nx()) return false;
        return true;
    };
    int idx[kMaxCoords], prev[kMaxCoords];
    for (const auto& d : all_directions(g.s, radius)) {
        for (std::size_t f = 0; f < g.size(); ++f) {
            g.indices(f, idx);
            for (int k = 0; k < n; ++k) prev[k] = idx[k] - d[k];
            if (inside(prev)) continue;
            // walk the line: in ... out ... in is a violation
            int state = 0;  // 0 before, 1 inside, 2 left
            std::size_t a = 0, b = 0;
            for (;;) {
                const std::size_t cur = g.index(idx);
                const bool in = set[cur];
                if (state == 0 && in) {
                    state = 1;
                    a = cur;
                } else if (state == 1 && in) {
                    a = cur;
                } else if (state == 1 && !in) {
                    state = 2;
                    b = cur;
                } else if (state == 2 && in) {
                    rep.verdict = false;
                    rep.witness = {g.point(a), g.point(b), g.point(cur)};
                    rep.witness_kind = "collinear";
                    rep.note = "a lattice line meets the region in more than one run";
                    return rep;
                }
                for (int k = 0; k < n; ++k) idx[k] += d[k];
                if (!inside(idx)) break;
            }
        }
    }
    return rep;
}

PredicateReport jld_sampled(const Bitmap& set, const Bitmap& comp, const GridWindow& g, int radius) {
    PredicateReport rep = timelike_convex_sampled(set, g);
    rep.predicate = "jld_region";
    if (!rep.verdict) {
        rep.note = "not timelike convex: " + rep.note;
        return rep;
    }
    rep.window_limited = false;
    const int n = g.ncoords();
    auto in_space = [&](const int* idx) {
        for (int k = 1; k < n; ++k)
            if (idx[k] < -g.nx() || idx[k] > g.nx()) return false;
        return true;
    };
    auto inside = [&](const int* idx) { return idx[0] >= -g.nt() && idx[0] <= g.nt() && in_space(idx); };
    int idx[kMaxCoords], prev[kMaxCoords];
    std::size_t limited = 0;
    for (const auto& d : timelike_directions(g.s, radius)) {
        for (std::size_t f = 0; f < g.size(); ++f) {
            g.indices(f, idx);
            for (int k = 0; k < n; ++k) prev[k] = idx[k] - d[k];
            if (inside(prev)) continue;
            const bool from_bottom = prev[0] < -g.nt() && in_space(prev);
            bool hit = false, side = false;
            std::vector<std::size_t> pts;
            for (;;) {
                const std::size_t cur = g.index(idx);
                pts.push_back(cur);
                hit |= set[cur] || comp[cur];
                side |= g.on_side_boundary(cur);
                for (int k = 0; k < n; ++k) idx[k] += d[k];
                if (!inside(idx)) break;
            }
            if (hit) continue;
            const bool to_top = idx[0] > g.nt() && in_space(idx);
            if (from_bottom && to_top && !side) {
                rep.verdict = false;
                rep.witness.clear();
                for (auto p : pts) rep.witness.push_back(g.point(p));
                rep.witness_kind = "line";
                rep.note = "a timelike lattice line crosses the window without meeting the region or its complement";
                return rep;
            }
            ++limited;
        }
    }
    if (limited) {
        rep.window_limited = true;
        rep.note = std::to_string(limited) + " lines missing both sets enter or leave through a side face";
    }
    return rep;
}

ParamCurve hyperbola_curve(const GridWindow& g) {
    ParamCurve c;
    c.name = "hyperbola (sinh t, cosh t, 0)";
    const int n = g.ncoords();
    c.at = [n](double t) {
        Point p(n);
        p.c[0] = std::sinh(t);
        p.c[1] = std::cosh(t);
        return p;
    };
    // keep a unit margin so the end samples still see region points in the window
    const double tm = std::fmin(std::acosh(std::fmax(1.0, g.X - 1)), std::asinh(std::fmax(0.0, g.T - 1)));
    c.t0 = -tm;
    c.t1 = tm;
    return c;
}

namespace {

// Refute a curve: no sample lies in R and each sample is timelike to a
// lattice point of R, hence outside R^c.
bool refute_with_curve(const RegionPtr& r, const Bitmap& set, const GridWindow& g, const ParamCurve& c,
                       std::vector<Point>& samples, std::vector<Point>& certs) {
    std::vector<Point> members;
    for (std::size_t i = 0; i < set.size(); ++i)
        if (set[i]) members.push_back(g.point(i));
    if (members.empty()) return false;
    // speed bound of the hyperbola-like curves used here
    double speed = 0;
    for (int k = 0; k <= 16; ++k) {
        const double t = c.t0 + (c.t1 - c.t0) * k / 16.0, e = 1e-6;
        speed = std::fmax(speed, enorm(c.at(t + e) - c.at(t - e)) / (2 * e));
    }
    const int steps = std::max(2, static_cast<int>(std::ceil((c.t1 - c.t0) * speed / g.h)));
    samples.clear();
    certs.clear();
    std::size_t hint = 0;
    for (int k = 0; k <= steps; ++k) {
        const Point x = c.at(c.t0 + (c.t1 - c.t0) * k / steps);
        if (member(r, x)) return false;
        bool ok = false;
        for (std::size_t j = 0; j < members.size() && !ok; ++j) {
            const Point& y = members[(hint + j) % members.size()];
            if (is_timelike(classify(x, y))) {
                certs.push_back(y);
                hint = (hint + j) % members.size();
                ok = true;
            }
        }
        if (!ok) return false;
        samples.push_back(x);
    }
    return true;
}

}  // namespace

PredicateReport is_jld_region(const RegionPtr& r, const GridWindow& g, const JldOptions& opt) {
    EvalContext ctx;
    ctx.grid = g;
    const Bitmap set = sample_members(r, g, &ctx);
    const RegionPtr rc = causal_complement(r, g, &ctx);
    const Bitmap comp = sample_members(rc, g, &ctx);
    PredicateReport rep = jld_sampled(set, comp, g, opt.radius);
    // Curve refutations are exact, so they take precedence over a lattice line.
    std::vector<ParamCurve> curves = opt.curves;
    if (opt.auto_curves && contains_kind(r, Kind::Shell) && g.s >= 1) curves.push_back(hyperbola_curve(g));
    for (const auto& c : curves) {
        std::vector<Point> samples, certs;
        if (refute_with_curve(r, set, g, c, samples, certs)) {
            rep.verdict = false;
            rep.witness = samples;
            rep.certificates = certs;
            rep.witness_kind = "curve";
            rep.exact = true;
            rep.window_limited = false;
            rep.note = "timelike curve '" + c.name +
                       "' misses the region (closed form) and each sample is timelike to a region point";
            return rep;
        }
    }
    return rep;
}

PredicateReport union_preserves_timelike_convexity(const RegionPtr& r, const RegionPtr& s, const RegionPtr& surface,
                                                   const GridWindow& g) {
    const Bitmap a = sample_members(r, g), b = sample_members(s, g), t = sample_members(surface, g);
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] && !(a[i] && b[i]))
            throw PreconditionError("surface sample is not contained in both regions", g.point(i));
    PredicateReport rep = timelike_convex_sampled(bit_or(a, b), g);
    rep.predicate = "union_timelike_convex";
    return rep;
}

bool witness_reproduces(const PredicateReport& rep, const RegionPtr& r, const GridWindow& g) {
    if (rep.verdict || rep.witness.empty()) return false;
    const auto& w = rep.witness;
    if (rep.witness_kind == "pair" || rep.witness_kind == "chord") {
        if (w.size() != 3) return false;
        if (!member(r, w[0]) || !member(r, w[1]) || member(r, w[2])) return false;
        if (classify(w[0], w[2]) != CausalClass::TimelikeFuture) return false;
        if (classify(w[2], w[1]) != CausalClass::TimelikeFuture) return false;
        if (rep.witness_kind == "chord") {
            const Point d = w[1] - w[0];
            const int steps = static_cast<int>(std::lround(std::fabs(d.c[0]) / g.h));
            for (int k = 0; k <= steps; ++k)
                if (!member(r, w[0] + d * (static_cast<double>(k) / std::max(steps, 1)))) return false;
        }
        return true;
    }
    if (rep.witness_kind == "collinear") {
        return w.size() == 3 && member(r, w[0]) && !member(r, w[1]) && member(r, w[2]);
    }
    if (rep.witness_kind == "line") {
        EvalContext ctx;
        ctx.grid = g;
        const RegionPtr rc = causal_complement(r, g, &ctx);
        for (auto& p : w)
            if (member(r, p, &ctx) || member(rc, p, &ctx)) return false;
        return true;
    }
    if (rep.witness_kind == "curve") {
        if (rep.certificates.size() != w.size()) return false;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (member(r, w[i]) || !member(r, rep.certificates[i])) return false;
            if (!is_timelike(classify(w[i], rep.certificates[i]))) return false;
        }
        return true;
    }
    if (rep.witness_kind == "in-region-not-in-completion" || rep.witness_kind == "in-completion-not-in-region") {
        EvalContext ctx;
        ctx.grid = g;
        const RegionPtr cc = causal_completion(r, g, &ctx);
        return member(r, w[0], &ctx) != member(cc, w[0], &ctx);
    }
    return false;
}

}  // namespace cgeo
