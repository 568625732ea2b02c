#include "cgeo/hull.hpp"

#include <cmath>
#include <numeric>
#include <unordered_set>

namespace cgeo {

namespace {

int gcd_all(const IVec& v, int n) {
    int g = 0;
    for (int i = 0; i < n; ++i) g = std::gcd(g, std::abs(v[i]));
    return g;
}

void enumerate(int n, int radius, const std::function<void(const IVec&)>& fn) {
    IVec v{};
    for (int i = 0; i < n; ++i) v[i] = -radius;
    for (;;) {
        fn(v);
        int k = n - 1;
        while (k >= 0 && v[k] == radius) v[k--] = -radius;
        if (k < 0) break;
        ++v[k];
    }
}

// Largest m >= 0 with m*m < a (strict) or m*m <= a; -1 when none.
long isqrt_bound(long a, bool closed) {
    if (closed ? a < 0 : a <= 0) return -1;
    long m = static_cast<long>(std::sqrt(static_cast<double>(a)));
    while (closed ? m * m > a : m * m >= a) --m;
    while (closed ? (m + 1) * (m + 1) <= a : (m + 1) * (m + 1) < a) ++m;
    return m;
}

}  // namespace

std::vector<IVec> timelike_directions(int s, int radius) {
    std::vector<IVec> out;
    enumerate(s + 1, radius, [&](const IVec& v) {
        if (v[0] <= 0) return;
        long sp = 0;
        for (int i = 1; i <= s; ++i) sp += static_cast<long>(v[i]) * v[i];
        if (static_cast<long>(v[0]) * v[0] <= sp) return;
        if (gcd_all(v, s + 1) != 1) return;
        out.push_back(v);
    });
    return out;
}

std::vector<IVec> all_directions(int s, int radius) {
    std::vector<IVec> out;
    enumerate(s + 1, radius, [&](const IVec& v) {
        int first = 0;
        for (int i = 0; i <= s && !first; ++i) first = v[i];
        if (first <= 0) return;
        if (gcd_all(v, s + 1) != 1) return;
        out.push_back(v);
    });
    return out;
}

void for_each_run(const Bitmap& set, const GridWindow& g, const IVec& d, const std::function<void(const Run&)>& fn) {
    const int n = g.ncoords();
    long stride = 0;  // flat offset of one step
    {
        int zero[kMaxCoords] = {0};
        int dd[kMaxCoords];
        for (int i = 0; i < n; ++i) dd[i] = d[i];
        stride = static_cast<long>(g.index(dd)) - static_cast<long>(g.index(zero));
    }
    auto inside = [&](const int* idx) {
        if (idx[0] < -g.nt() || idx[0] > g.nt()) return false;
        for (int k = 1; k < n; ++k)
            if (idx[k] < -g.nx() || idx[k] > g.nx()) return false;
        return true;
    };
    int idx[kMaxCoords], prev[kMaxCoords];
    for (std::size_t f = 0; f < g.size(); ++f) {
        if (!set[f]) continue;
        g.indices(f, idx);
        for (int k = 0; k < n; ++k) prev[k] = idx[k] - d[k];
        if (inside(prev) && set[g.index(prev)]) continue;
        int len = 0;
        long cur = static_cast<long>(f);
        for (;;) {
            for (int k = 0; k < n; ++k) idx[k] += d[k];
            if (!inside(idx)) break;
            const long nxt = cur + stride;
            if (!set[static_cast<std::size_t>(nxt)]) break;
            cur = nxt;
            ++len;
        }
        if (len > 0) fn(Run{f, static_cast<std::size_t>(cur), len});
    }
}

void raster_cone(const GridWindow& g, const int* p, const int* q, bool closed,
                 const std::function<void(std::size_t, int)>& fn) {
    const int s = g.s;
    const int nx = g.nx();
    int idx[kMaxCoords];
    const int t_lo = closed ? p[0] : p[0] + 1, t_hi = closed ? q[0] : q[0] - 1;
    for (int t = std::max(t_lo, -g.nt()); t <= std::min(t_hi, g.nt()); ++t) {
        const long r1 = t - p[0], r2 = q[0] - t;
        idx[0] = t;
        // Recurse over spatial axes 1..s-1, last axis as a span.
        std::function<void(int, long, long)> rec = [&](int k, long a1, long a2) {
            // a1, a2: remaining squared radii budgets
            if (k == s) {
                const long m1 = isqrt_bound(a1, closed), m2 = isqrt_bound(a2, closed);
                if (m1 < 0 || m2 < 0) return;
                long lo = std::max<long>(p[s] - m1, q[s] - m2), hi = std::min<long>(p[s] + m1, q[s] + m2);
                lo = std::max<long>(lo, -nx);
                hi = std::min<long>(hi, nx);
                if (lo > hi) return;
                idx[s] = static_cast<int>(lo);
                fn(g.index(idx), static_cast<int>(hi - lo + 1));
                return;
            }
            const long m1 = isqrt_bound(a1, true), m2 = isqrt_bound(a2, true);
            if (m1 < 0 || m2 < 0) return;
            const long lo = std::max<long>({p[k] - m1, q[k] - m2, -nx});
            const long hi = std::min<long>({p[k] + m1, q[k] + m2, nx});
            for (long z = lo; z <= hi; ++z) {
                idx[k] = static_cast<int>(z);
                rec(k + 1, a1 - (z - p[k]) * (z - p[k]), a2 - (z - q[k]) * (z - q[k]));
            }
        };
        rec(1, r1 * r1, r2 * r2);
    }
}

HullResult asgeirsson_hull(const Bitmap& set, const GridWindow& g, int radius, int max_iter) {
    HullResult res;
    Bitmap S = set;
    const auto dirs = timelike_directions(g.s, radius);
    std::unordered_set<std::uint64_t> done;
    int ps[kMaxCoords], qs[kMaxCoords];
    for (res.iterations = 0; res.iterations < max_iter; ++res.iterations) {
        Bitmap next = S;
        std::size_t added = 0;
        for (const auto& d : dirs) {
            for_each_run(S, g, d, [&](const Run& r) {
                const std::uint64_t key = (static_cast<std::uint64_t>(r.start) << 32) | r.end;
                if (!done.insert(key).second) return;
                g.indices(r.start, ps);
                g.indices(r.end, qs);
                raster_cone(g, ps, qs, false, [&](std::size_t f, int len) {
                    for (int k = 0; k < len; ++k)
                        if (!next[f + k]) {
                            next[f + k] = 1;
                            ++added;
                        }
                });
            });
        }
        if (added == 0) break;
        res.added += added;
        S.swap(next);
    }
    res.hull.grid = g;
    res.hull.members = std::move(S);
    res.hull.topology = Topology::Open;
    res.hull.label = "asgeirsson_hull";
    res.fixpoint = res.iterations < max_iter;
    res.window_limited = res.hull.touches_boundary();
    res.converged = res.fixpoint && !res.window_limited;
    return res;
}

HullResult asgeirsson_hull(const RegionPtr& r, const GridWindow& g, int radius) {
    return asgeirsson_hull(sample_members(r, g), g, radius);
}

}  // namespace cgeo
