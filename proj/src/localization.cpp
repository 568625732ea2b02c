#include "cgeo/localization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "cgeo/poincare.hpp"
#include "cgeo/sweep.hpp"

namespace cgeo {

using nlohmann::json;

namespace {

Point point_of(const json& j) { return Point::from(j.get<std::vector<double>>()); }

json wedge_json(const RegionPtr& w) {
    return {{"nplus", w->plus.n.to_vector()}, {"dplus", w->plus.d}, {"nminus", w->minus.n.to_vector()}, {"dminus", w->minus.d}};
}

std::vector<RegionPtr> load_cones(const json& arr) {
    std::vector<RegionPtr> out;
    for (const auto& c : arr) {
        if (!c.is_array() || c.size() != 2) throw std::invalid_argument("a cone entry is [[lower], [upper]]");
        out.push_back(make_double_cone(point_of(c[0]), point_of(c[1])));
    }
    return out;
}

std::vector<RegionPtr> load_wedges(const json& arr) {
    std::vector<RegionPtr> out;
    for (const auto& w : arr)
        out.push_back(make_wedge({point_of(w.at("nplus")), w.at("dplus").get<double>()},
                                 {point_of(w.at("nminus")), w.at("dminus").get<double>()}));
    return out;
}

Bitmap closure_sample(const RegionPtr& r, const GridWindow& g) { return sample_members(with_closed(r, true), g); }

Bitmap intersect_closures(const std::vector<RegionPtr>& rs, const GridWindow& g) {
    Bitmap out(g.size(), 1);
    for (const auto& r : rs) out = bit_and(out, closure_sample(r, g));
    return out;
}

SampledRegion as_region(Bitmap b, const GridWindow& g, const std::string& label) {
    SampledRegion s;
    s.grid = g;
    s.members = std::move(b);
    s.topology = Topology::Closed;
    s.label = label;
    return s;
}

std::vector<std::vector<double>> unit_directions(int s, int count) {
    std::vector<std::vector<double>> out;
    if (s == 1) return {{1.0}, {-1.0}};
    if (s == 2) {
        for (int i = 0; i < count; ++i) {
            const double a = 2 * std::numbers::pi * i / count;
            out.push_back({std::cos(a), std::sin(a)});
        }
        return out;
    }
    // Fibonacci sphere
    for (int i = 0; i < count; ++i) {
        const double z = 1 - 2.0 * (i + 0.5) / count, r = std::sqrt(1 - z * z);
        const double a = i * std::numbers::pi * (3 - std::sqrt(5.0));
        std::vector<double> d(s, 0.0);
        d[0] = r * std::cos(a);
        d[1] = r * std::sin(a);
        d[2] = z;
        out.push_back(d);
    }
    return out;
}

Point covector(double n0, const std::vector<double>& u) {
    Point p(static_cast<int>(u.size()) + 1);
    p.c[0] = n0;
    for (std::size_t i = 0; i < u.size(); ++i) p.c[i + 1] = u[i];
    return p;
}

RegionPtr enlarge(const RegionPtr& w, double eta) {
    return make_wedge({w->plus.n, w->plus.d + eta * std::abs(w->plus.n[0])},
                      {w->minus.n, w->minus.d + eta * std::abs(w->minus.n[0])}, w->closed);
}

bool structurally_complete(const RegionPtr& r) {
    switch (r->kind) {
        case Kind::Wedge:
        case Kind::DoubleCone:
        case Kind::Full:
        case Kind::Empty:
            return true;
        case Kind::Intersection:
            return std::all_of(r->kids.begin(), r->kids.end(), structurally_complete);
        default:
            return false;
    }
}

bool all_open(const RegionPtr& r) {
    if (r->kind == Kind::Intersection) return std::all_of(r->kids.begin(), r->kids.end(), all_open);
    return !r->closed;
}

}  // namespace

ObservableTag load_tag_json(const std::string& text) {
    const json j = json::parse(text);
    if (j.contains("schema") && j["schema"].get<int>() != 1) throw std::invalid_argument("unsupported catalog schema");
    ObservableTag t;
    t.id = j.value("id", "");
    if (j.contains("cones")) t.cones = load_cones(j["cones"]);
    if (j.contains("wedges")) t.wedges = load_wedges(j["wedges"]);
    if (j.contains("dual_cones")) t.dual_cones = load_cones(j["dual_cones"]);
    if (j.contains("dual_wedges")) t.dual_wedges = load_wedges(j["dual_wedges"]);
    if (j.value("dual", true)) {
        t.dual_cones.insert(t.dual_cones.end(), t.cones.begin(), t.cones.end());
        t.dual_wedges.insert(t.dual_wedges.end(), t.wedges.begin(), t.wedges.end());
    }
    return t;
}

std::string tag_to_json(const ObservableTag& t) {
    json j;
    j["schema"] = 1;
    j["id"] = t.id;
    j["dual"] = false;
    auto cones = [](const std::vector<RegionPtr>& cs) {
        json a = json::array();
        for (const auto& c : cs) a.push_back({c->a.to_vector(), c->b.to_vector()});
        return a;
    };
    auto wedges = [](const std::vector<RegionPtr>& ws) {
        json a = json::array();
        for (const auto& w : ws) a.push_back(wedge_json(w));
        return a;
    };
    j["cones"] = cones(t.cones);
    j["wedges"] = wedges(t.wedges);
    j["dual_cones"] = cones(t.dual_cones);
    j["dual_wedges"] = wedges(t.dual_wedges);
    return j.dump();
}

const SampledRegion& LocalizationResult::region(int i) const {
    switch (i) {
        case 0: return boldK;
        case 1: return K;
        case 2: return boldW;
        default: return W;
    }
}

LocalizationResult localize(const ObservableTag& a, const GridWindow& g) {
    if (a.cones.empty() && a.wedges.empty() && a.dual_cones.empty() && a.dual_wedges.empty())
        throw std::invalid_argument("empty catalogs");
    for (const auto* list : {&a.cones, &a.wedges, &a.dual_cones, &a.dual_wedges})
        for (const auto& r : *list)
            if (r->n != g.ncoords()) throw DimensionError("catalog entry and window dimensions differ");
    LocalizationResult res;
    // Dual catalogs include the direct ones (locality).
    std::vector<RegionPtr> dc = a.dual_cones, dw = a.dual_wedges;
    for (const auto& c : a.cones)
        if (std::find(dc.begin(), dc.end(), c) == dc.end()) dc.push_back(c);
    for (const auto& w : a.wedges)
        if (std::find(dw.begin(), dw.end(), w) == dw.end()) dw.push_back(w);

    const Bitmap bk = intersect_closures(a.cones, g);
    const Bitmap k = intersect_closures(dc, g);
    res.boldK = as_region(bk, g, "bold L^K");
    res.K = as_region(k, g, "L^K");
    res.boldW = as_region(bit_and(bk, intersect_closures(a.wedges, g)), g, "bold L^W");
    res.W = as_region(bit_and(k, intersect_closures(dw, g)), g, "L^W");

    for (int i = 0; i < 4; ++i) {
        const SampledRegion& r = res.region(i);
        res.nonempty[i] = first_set(r.members) < r.members.size();
        res.compact[i] = res.nonempty[i] && !r.touches_boundary();
        res.convex[i] = lattice_convex(r.members, g).verdict;
    }
    res.boldK_contains_K = bit_subset(res.K.members, res.boldK.members);
    res.boldW_contains_W = bit_subset(res.W.members, res.boldW.members);
    res.boldK_contains_boldW = bit_subset(res.boldW.members, res.boldK.members);
    res.K_contains_W = bit_subset(res.W.members, res.K.members);

    if (!dw.empty()) {
        const EmptinessDecision d = empty_intersection_decide(dw, dc, g);
        if (d.verdict == Emptiness::Empty) {
            res.scalar = true;
            res.note = "violates the localization premise: inconsistent catalog for a non-scalar observable";
        }
    }
    if (!res.scalar) {
        if (a.cones.empty() && dc.empty())
            res.note = "unbounded at window scale";
        else if (!res.nonempty[3])
            res.note = "localization region has no lattice point at this resolution";
    }
    return res;
}

EmptinessDecision empty_intersection_decide(const std::vector<RegionPtr>& wedges, const std::vector<RegionPtr>& cones,
                                            const GridWindow& g) {
    EmptinessDecision d;
    d.apex = apex_region(wedges, cones, g);
    if (d.apex.is_nonempty()) {
        d.verdict = Emptiness::Nonempty;
        d.witness = d.apex.witness;
        return d;
    }
    if (!d.apex.is_empty()) {
        d.note = d.apex.note;
        return d;
    }
    std::vector<RegionPtr> regions = cones;
    regions.insert(regions.end(), wedges.begin(), wedges.end());
    if (regions.size() < 2) {
        d.verdict = Emptiness::Empty;
        d.note = "single empty input";
        return d;
    }
    try {
        d.eps = epsilon_shrink(regions, g);
    } catch (const std::invalid_argument& e) {
        d.note = e.what();
        return d;
    }
    const int n = g.ncoords();
    Point pa(n), pb(n);
    pa.c[0] = -d.eps->eps / 2;
    pb.c[0] = d.eps->eps / 2;
    d.shrink_cone = make_double_cone(pa, pb, true);
    std::vector<RegionPtr> sw, sc;
    for (const auto& w : wedges) sw.push_back(wedge_minus_cone(w, d.shrink_cone));
    for (const auto& c : cones) sc.push_back(cone_minus_cone(c, d.shrink_cone));
    d.shrunk = sc;
    d.shrunk.insert(d.shrunk.end(), sw.begin(), sw.end());
    d.shrunk_empty = apex_region(sw, sc, g).is_empty();
    d.verdict = d.eps->verified && d.shrunk_empty ? Emptiness::Empty : Emptiness::Undecided;
    if (d.verdict != Emptiness::Empty) d.note = "epsilon certificate did not re-verify";
    return d;
}

bool spacelike_separated(const Bitmap& a, const Bitmap& b, const GridWindow& g, Point* wa, Point* wb) {
    const Bitmap fut = causal_sweep(a, g, true, false), past = causal_sweep(a, g, false, false);
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (!b[i] || !(fut[i] || past[i])) continue;
        if (wa || wb) {
            const Point q = g.point(i);
            for (std::size_t j = 0; j < a.size(); ++j)
                if (a[j] && is_causal(classify(g.point(j), q))) {
                    if (wa) *wa = g.point(j);
                    break;
                }
            if (wb) *wb = q;
        }
        return false;
    }
    return true;
}

RegionPtr separating_wedge(const Bitmap& k1, const Bitmap& k2, const GridWindow& g, int directions) {
    if (first_set(k1) == k1.size() || first_set(k2) == k2.size()) throw std::invalid_argument("empty input set");
    Point p, q;
    if (!spacelike_separated(k1, k2, g, &p, &q))
        throw SeparationError("sets are not spacelike separated", p, q, classify(p, q));
    std::vector<Point> a, b;
    for (std::size_t i = 0; i < k1.size(); ++i) {
        if (k1[i]) a.push_back(g.point(i));
        if (k2[i]) b.push_back(g.point(i));
    }
    const auto dirs = unit_directions(g.s, directions);
    struct Cand {
        double margin, offset;
        std::size_t dir;
    };
    // phi = sign * x0 + u.x + d must be positive on a and nonpositive on b
    auto margins = [&](double sign) {
        std::vector<Cand> out;
        for (std::size_t k = 0; k < dirs.size(); ++k) {
            const Point n = covector(sign, dirs[k]);
            double lo = INFINITY, hi = -INFINITY;
            for (const auto& x : a) lo = std::min(lo, edot(n, x));
            for (const auto& x : b) hi = std::max(hi, edot(n, x));
            if (lo - hi > 0) out.push_back({lo - hi, -(lo + hi) / 2, k});
        }
        std::sort(out.begin(), out.end(), [](const Cand& x, const Cand& y) { return x.margin > y.margin; });
        return out;
    };
    const auto mp = margins(-1), mm = margins(1);
    const std::size_t limit = 8;
    for (std::size_t i = 0; i < std::min(mp.size(), limit); ++i)
        for (std::size_t j = 0; j < std::min(mm.size(), limit); ++j) {
            const auto& u = dirs[mp[i].dir];
            const auto& v = dirs[mm[j].dir];
            double dev = 0;
            for (std::size_t c = 0; c < u.size(); ++c) dev += std::abs(u[c] + v[c]);
            if (dev < 1e-9) continue;  // v = -u gives parallel null planes
            RegionPtr w;
            try {
                w = make_wedge({covector(-1, u), mp[i].offset}, {covector(1, v), mm[j].offset});
            } catch (const std::invalid_argument&) {
                continue;
            }
            const RegionPtr wc = closed_complement(w);
            bool ok = true;
            for (const auto& x : a)
                if (!member(w, x)) {
                    ok = false;
                    break;
                }
            for (std::size_t k = 0; ok && k < b.size(); ++k)
                if (!member(wc, b[k])) ok = false;
            if (ok) return w;
        }
    throw std::runtime_error("no lattice-validated separating wedge found at this direction resolution");
}

SubcoverResult finite_subcover_select(const ObservableTag& a, double eps, const GridWindow& g) {
    if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
    if (eps > g.X) throw std::invalid_argument("eps exceeds the window");
    SubcoverResult res;
    const LocalizationResult loc = localize(a, g);
    if (loc.scalar) throw std::invalid_argument("catalog is inconsistent (scalar observable)");
    const Bitmap& L = loc.W.members;
    if (first_set(L) == L.size()) throw std::invalid_argument("localization region is empty");
    const auto d2 = edt_window(L, g);
    const double e2 = (eps / g.h) * (eps / g.h) + 1e-9;
    Bitmap ball(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) ball[i] = d2[i] <= e2;

    const double eta = eps / 4;
    std::vector<RegionPtr> cand;
    std::vector<RegionPtr> ws = a.dual_wedges;
    ws.insert(ws.end(), a.wedges.begin(), a.wedges.end());
    for (const auto& w : ws) cand.push_back(enlarge(w, eta));
    std::vector<RegionPtr> cs = a.dual_cones;
    cs.insert(cs.end(), a.cones.begin(), a.cones.end());
    for (const auto& c : cs)
        for (const auto& u : unit_directions(g.s, 36)) {
            const Point np = covector(-1, u), nm = covector(1, u);
            cand.push_back(make_wedge({np, sup_over_cone(-np, c) + eta}, {nm, sup_over_cone(-nm, c) + eta}));
        }
    std::vector<Bitmap> samples;
    for (const auto& c : cand) samples.push_back(closure_sample(c, g));

    Bitmap cur(g.size(), 1);
    auto bad_count = [&](const Bitmap& s) {
        std::size_t n = 0;
        for (std::size_t i = 0; i < s.size(); ++i) n += s[i] && (!ball[i] || g.on_boundary(i));
        return n;
    };
    std::size_t bad = bad_count(cur);
    while (bad > 0) {
        std::size_t best = bad, bi = cand.size();
        for (std::size_t k = 0; k < cand.size(); ++k) {
            const std::size_t b = bad_count(bit_and(cur, samples[k]));
            if (b < best) {
                best = b;
                bi = k;
            }
        }
        if (bi == cand.size()) {
            res.note = "catalog insufficient to cover at this eps and resolution";
            return res;
        }
        cur = bit_and(cur, samples[bi]);
        res.wedges.push_back(cand[bi]);
        bad = best;
    }
    res.ok = bit_subset(cur, ball) && bit_subset(L, cur);
    if (!res.ok) res.note = "selected intersection failed re-verification";
    return res;
}

PredicateReport nonempty_intersection_criterion(const std::vector<RegionPtr>& wedges, const RegionPtr& r,
                                                const GridWindow& g) {
    PredicateReport rep;
    rep.predicate = "nonempty_intersection_criterion";
    rep.resolution = g;
    if (!structurally_complete(r) || !all_open(r))
        throw std::invalid_argument("R must be an open intersection of wedges and double cones");
    const Bitmap rs = sample_members(r, g);
    const PredicateReport conv = lattice_convex(rs, g);
    if (!conv.verdict) throw std::invalid_argument("R is not convex on the lattice");
    if (wedges.empty()) {
        rep.verdict = false;
        rep.note = "empty wedge list: the full space is never inside a proper region";
        return rep;
    }
    for (const auto& w : wedges)
        if (w->kind != Kind::Wedge) throw std::invalid_argument("wedges expected");
    const Bitmap meet = intersect_closures(wedges, g);
    for (std::size_t i = 0; i < g.size(); ++i)
        if (meet[i] && !rs[i]) {
            rep.verdict = false;
            rep.witness = {g.point(i)};
            rep.witness_kind = "point";
            rep.window_limited = g.on_boundary(i);
            rep.note = "a point of the closed wedge intersection lies outside R";
            return rep;
        }
    rep.verdict = true;
    SampledRegion m = as_region(meet, g, "");
    rep.window_limited = m.touches_boundary();
    return rep;
}

AuditReport locality_audit(const ObservableTag& a, const ObservableTag& b, const GridWindow& g) {
    AuditReport rep;
    const LocalizationResult la = localize(a, g), lb = localize(b, g);
    rep.a_scalar = la.scalar;
    rep.b_scalar = lb.scalar;
    if (la.scalar || lb.scalar) {
        rep.notes.push_back("aborted: scalar observable (inconsistent catalog)");
        return rep;
    }
    const Bitmap& A = la.W.members;
    const Bitmap& B = lb.W.members;
    Point p, q;
    rep.spacelike = spacelike_separated(A, B, g, &p, &q);
    if (!rep.spacelike) {
        rep.causal_pair[0] = p;
        rep.causal_pair[1] = q;
        rep.notes.push_back("localization regions are causally related");
        return rep;
    }
    try {
        rep.separator = separating_wedge(A, B, g);
        rep.separator_valid = true;
    } catch (const std::exception& e) {
        rep.notes.push_back(std::string("separation failed: ") + e.what());
    }

    // eps: half the lattice gap, halved until the neighborhoods stay spacelike
    const auto da = edt_window(A, g), db = edt_window(B, g);
    double gap2 = INFINITY;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (B[i]) gap2 = std::min(gap2, da[i]);
    double eps = std::sqrt(gap2) * g.h / 2;
    for (int k = 0; k < 12 && eps >= g.h; ++k, eps /= 2) {
        Bitmap na(g.size()), nb(g.size());
        const double e2 = (eps / g.h) * (eps / g.h) + 1e-9;
        for (std::size_t i = 0; i < g.size(); ++i) {
            na[i] = da[i] <= e2;
            nb[i] = db[i] <= e2;
        }
        if (spacelike_separated(na, nb, g)) {
            rep.eps = eps;
            break;
        }
    }
    if (rep.eps > 0) {
        rep.cover_a = finite_subcover_select(a, rep.eps, g);
        rep.cover_b = finite_subcover_select(b, rep.eps, g);
        if (rep.cover_a.ok && rep.cover_b.ok)
            rep.covers_separated = spacelike_separated(intersect_closures(rep.cover_a.wedges, g),
                                                       intersect_closures(rep.cover_b.wedges, g), g);
    } else {
        rep.notes.push_back("no eps >= h keeps the neighborhoods spacelike separated");
    }

    for (const auto& wa : a.wedges)
        for (const auto& wb : b.wedges)
            if (spacelike_separated(closure_sample(wa, g), closure_sample(wb, g), g)) rep.catalog_pair_spacelike = true;
    if (!rep.catalog_pair_spacelike) rep.notes.push_back("no pairwise spacelike catalog wedges");

    rep.chain_complete =
        rep.spacelike && rep.separator_valid && rep.eps > 0 && rep.cover_a.ok && rep.cover_b.ok && rep.covers_separated;
    return rep;
}

ObservableTag random_consistent_tag(int s, unsigned seed, const Point& center, int ncones, int nwedges) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0, 1);
    const int n = s + 1;
    auto rand_cone = [&]() {
        Point lo(n), hi(n);
        const double t1 = 0.6 + U(rng), t2 = 0.6 + U(rng);
        lo.c[0] = center[0] - t1;
        hi.c[0] = center[0] + t2;
        for (int i = 1; i < n; ++i) {
            lo.c[i] = center[i] + (U(rng) - 0.5) * t1 / std::sqrt(2.0 * s);
            hi.c[i] = center[i] + (U(rng) - 0.5) * t2 / std::sqrt(2.0 * s);
        }
        return make_double_cone(lo, hi);
    };
    auto rand_wedge = [&]() {
        const double rap = (U(rng) - 0.5), ang = 2 * std::numbers::pi * U(rng), depth = 0.3 + U(rng);
        Matrix m = boost_matrix(n, rap);
        if (s >= 2) m = mat_mul(rotation_matrix(n, 1, 2, ang), m, n);
        Point inside(n);
        inside.c[1] = depth;
        const Point shift = center - mat_apply(m, inside);
        return wedge_from_poincare(s, rap, s >= 2 ? 1 : 0, s >= 2 ? 2 : 0, s >= 2 ? ang : 0, shift);
    };
    ObservableTag t;
    t.id = "random-" + std::to_string(seed);
    for (int i = 0; i < ncones; ++i) t.cones.push_back(rand_cone());
    for (int i = 0; i < nwedges; ++i) t.wedges.push_back(rand_wedge());
    t.dual_cones = t.cones;
    t.dual_wedges = t.wedges;
    t.dual_cones.push_back(rand_cone());
    t.dual_wedges.push_back(rand_wedge());
    return t;
}

}  // namespace cgeo
