#include "cgeo/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cgeo/complement.hpp"

namespace cgeo {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

// Wedge in the normalized form {-t + u.x + dp > 0, t + v.x + dm > 0}.
struct NullWedge {
    double ux, uy, vx, vy, dp, dm;
};

NullWedge normalize(const RegionPtr& w) {
    if (w->kind != Kind::Wedge || w->n != 3) throw std::invalid_argument("1+2 wedge expected");
    const double sp = -w->plus.n[0], sm = w->minus.n[0];
    if (!(sp > 0) || !(sm > 0)) throw std::invalid_argument("wedge functionals have unexpected orientation");
    return {w->plus.n[1] / sp, w->plus.n[2] / sp, w->minus.n[1] / sm, w->minus.n[2] / sm, w->plus.d / sp, w->minus.d / sm};
}

// Angles where the wedge complement meets the cylinder: lo(th) <= hi(th)
// with lo = rho u.e + dp and hi = -rho v.e - dm. Returns false when empty.
bool arc_of(const NullWedge& w, double rho, double& a0, double& a1) {
    const double wx = w.ux + w.vx, wy = w.uy + w.vy, wn = std::hypot(wx, wy);
    const double c = -(w.dp + w.dm);
    if (wn < 1e-15) {
        if (c < 0) return false;
        a0 = 0;
        a1 = kTwoPi;
        return true;
    }
    const double q = c / (rho * wn);
    if (q >= 1) {
        a0 = 0;
        a1 = kTwoPi;
        return true;
    }
    if (q < -1) return false;
    const double alpha = std::atan2(wy, wx), beta = std::acos(q);
    a0 = alpha + beta;
    a1 = alpha + kTwoPi - beta;
    return true;
}

// min over [a, b] of f, sampled then refined by golden section.
template <class F>
double minimize_on(F f, double a, double b, int samples) {
    const int k = std::max(samples, 2);
    double best = INFINITY;
    int bi = 0;
    for (int i = 0; i <= k; ++i) {
        const double v = f(a + (b - a) * i / k);
        if (v < best) {
            best = v;
            bi = i;
        }
    }
    double lo = a + (b - a) * std::max(bi - 1, 0) / k, hi = a + (b - a) * std::min(bi + 1, k) / k;
    const double gr = (std::sqrt(5.0) - 1) / 2;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo), f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = f(x2);
        }
    }
    return std::min({best, f1, f2});
}

}  // namespace

bool strip_condition(double rho, double rho0, const std::vector<RegionPtr>& wedges, int theta_samples) {
    if (rho < rho0) return false;
    for (const auto& wr : wedges) {
        const NullWedge w = normalize(wr);
        // surface {3 phi+ = phi-}: spacelike, contains the edge
        auto tc = [&](double th) {
            const double ex = std::cos(th), ey = std::sin(th);
            return (3 * rho * (w.ux * ex + w.uy * ey) + 3 * w.dp - rho * (w.vx * ex + w.vy * ey) - w.dm) / 4;
        };
        const double worst = -minimize_on([&](double th) { return -std::abs(tc(th)); }, 0, kTwoPi, theta_samples);
        if (worst > rho - rho0 + 1e-12) return false;
    }
    return true;
}

double find_rho_hat(double rho0, const std::vector<RegionPtr>& wedges, const GridWindow& g, int theta_samples) {
    const double cap = g.X * std::sqrt(static_cast<double>(g.s));
    double lo = rho0, hi = std::max(rho0, g.h);
    if (strip_condition(hi, rho0, wedges, theta_samples)) return hi;
    while (!strip_condition(hi, rho0, wedges, theta_samples)) {
        lo = hi;
        hi *= 2;
        if (lo > cap) throw std::runtime_error("window too small: no cylinder radius up to " + std::to_string(cap) +
                                               " satisfies the strip condition");
    }
    while (hi - lo > g.h) {
        const double mid = (lo + hi) / 2;
        (strip_condition(mid, rho0, wedges, theta_samples) ? hi : lo) = mid;
    }
    return hi;
}

std::vector<double> default_envelope_radii(double rho_hat) { return {rho_hat + 1, rho_hat + 2, rho_hat + 4}; }

EnvelopeReport jld_envelope(const RegionPtr& o, const std::vector<RegionPtr>& wedges, const GridWindow& g,
                            const EnvelopeOptions& opt) {
    if (g.s != 2) throw std::invalid_argument("jld_envelope needs s = 2");
    if (o->kind != Kind::DoubleCone || o->n != 3) throw std::invalid_argument("a 1+2 double cone is required");
    if (std::abs(o->a[0] + o->b[0]) > 1e-12 || o->a[1] != 0 || o->a[2] != 0 || o->b[1] != 0 || o->b[2] != 0)
        throw std::invalid_argument("the double cone must be centered at the origin");
    if (opt.radii.empty()) throw std::invalid_argument("empty radius list");
    if (opt.shrink_radius < 0) throw std::invalid_argument("negative shrink radius");

    EnvelopeReport rep;
    const Point pa{-opt.shrink_radius, 0, 0}, pb{opt.shrink_radius, 0, 0};
    if (opt.shrink_radius > 0) {
        rep.shrunk = shrink_inputs(o, wedges, make_double_cone(pa, pb, true));
    } else {
        rep.shrunk = {o, wedges};
    }
    rep.rho0 = rep.shrunk.cone->b[0];
    rep.rho_hat = find_rho_hat(rep.rho0, rep.shrunk.wedges, g, opt.theta_samples);
    for (double r : opt.radii)
        if (r > rep.rho_hat) rep.radii_used.push_back(r);
    if (rep.radii_used.empty()) throw std::invalid_argument("all radii are at or below rho_hat");
    const double rho_max = *std::max_element(rep.radii_used.begin(), rep.radii_used.end());
    rep.window_in_cylinder = g.X * std::sqrt(2.0) < rho_max;

    std::vector<NullWedge> nw;
    for (const auto& w : rep.shrunk.wedges) nw.push_back(normalize(w));

    const int nx = g.nx(), nt = g.nt(), len = g.space_len();
    Bitmap N(g.size(), 0);
    std::size_t cross = 0;
    const double tol = 1e-9, rho0 = rep.rho0;
    for (double rho : rep.radii_used) {
        for (int ix = -nx; ix <= nx; ++ix)
            for (int iy = -nx; iy <= nx; ++iy) {
                const double x = ix * g.h, y = iy * g.h, r = std::hypot(x, y);
                if (r > rho) continue;
                auto dist = [&](double th) { return std::hypot(x - rho * std::cos(th), y - rho * std::sin(th)); };
                // strip |t| <= rho - rho0: nearest cylinder point is radial
                double lo_strip = rho0 - r, hi_strip = r - rho0;
                double lo_arc = INFINITY, hi_arc = -INFINITY;
                for (const auto& w : nw) {
                    double a0, a1;
                    if (!arc_of(w, rho, a0, a1)) continue;
                    lo_arc = std::min(lo_arc, minimize_on(
                                                  [&](double th) {
                                                      return dist(th) + rho * (w.ux * std::cos(th) + w.uy * std::sin(th)) + w.dp;
                                                  },
                                                  a0, a1, opt.theta_samples));
                    hi_arc = std::max(hi_arc, -minimize_on(
                                                   [&](double th) {
                                                       return dist(th) + rho * (w.vx * std::cos(th) + w.vy * std::sin(th)) + w.dm;
                                                   },
                                                   a0, a1, opt.theta_samples));
                }
                const double lo = std::min(lo_strip, lo_arc), hi = std::max(hi_strip, hi_arc);
                for (int it = -nt; it <= nt; ++it) {
                    const double t = it * g.h;
                    if (!(lo <= t + tol && t <= hi + tol)) continue;
                    const std::size_t f = static_cast<std::size_t>(it + nt) * g.slice_size() +
                                          static_cast<std::size_t>(ix + nx) * len + (iy + nx);
                    if (N[f]) continue;
                    N[f] = 1;
                    const bool strip_only = lo_strip <= t + tol && t <= hi_strip + tol;
                    const bool arc_only = lo_arc <= t + tol && t <= hi_arc + tol;
                    if (!strip_only && !arc_only) ++cross;
                }
            }
    }
    rep.cross_term_points = cross;
    rep.N.grid = g;
    rep.N.members = std::move(N);
    rep.N.topology = Topology::Closed;
    rep.N.label = "envelope";

    std::vector<RegionPtr> parts{closed_complement(rep.shrunk.cone)};
    for (const auto& w : rep.shrunk.wedges) parts.push_back(closed_complement(w));
    rep.target = make_union(parts);
    const Bitmap R = sample_members(rep.target, g);
    rep.target_points = popcount(R);
    rep.target_missing = popcount(bit_minus(R, rep.N.members));

    rep.timelike_convex = timelike_convex_sampled(rep.N.members, g);
    const SampledRegion Nc = sampled_complement(rep.N);
    rep.jld = jld_sampled(rep.N.members, Nc.members, g, opt.jld_radius);
    rep.apex = apex_region(rep.shrunk.wedges, {rep.shrunk.cone}, g);
    return rep;
}

}  // namespace cgeo
