#include "cgeo/fixtures.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cgeo/dsl.hpp"
#include "cgeo/hull.hpp"
#include "cgeo/poincare.hpp"

namespace cgeo {

std::vector<RegionPtr> x120_wedges() {
    std::vector<RegionPtr> out;
    for (int k = 0; k < 3; ++k) {
        const double a = 2 * std::numbers::pi * k / 3;
        out.push_back(wedge_from_poincare(2, 0, k ? 1 : 0, k ? 2 : 0, a, Point{0, std::cos(a), std::sin(a)}));
    }
    return out;
}

std::vector<Fixture> fixture_corpus() {
    std::vector<Fixture> out;
    auto add = [&](const std::string& name, const std::string& script) {
        out.push_back({name, script, parse_region(script, 3)});
    };
    add("time_slice", "closed(timeslice(0, 1))");
    add("timelike_cones", "dcone((-2,0,0),(-1,0,0)) ∪ dcone((1,0,0),(2,0,0))");
    add("r_plus", "{x0 - 0.5*x1 > 0} ∩ {1 + 0.5*x1 - x0 > 0}");
    add("r_minus", "{x0 + 0.5*x1 > 0} ∩ {1 - 0.5*x1 - x0 > 0}");
    add("r_pm", "union({x0 - 0.5*x1 > 0} ∩ {1 + 0.5*x1 - x0 > 0}, {x0 + 0.5*x1 > 0} ∩ {1 - 0.5*x1 - x0 > 0})");
    add("shell", "shell(1, 2) ∩ {x₀ > 0}");
    add("null_half_plane", "{x1 = x0} ∩ {x2 > 0}");
    add("w1", "w1");
    add("centered_cone", "dcone((-1,0,0),(1,0,0))");
    add("landau_o", "dcone((-1,0),(1,0))");
    add("landau_p", "dcone((-1,1.5),(1,1.5))");
    const char* names[] = {"x", "y", "z"};
    const auto w = x120_wedges();
    for (int k = 0; k < 3; ++k) out.push_back({names[k], print_region(w[k]), w[k]});
    // inner bipyramid {1 - x.e_k > |x0|} for the three directions
    std::string bip = "inter(";
    for (int k = 0; k < 3; ++k) {
        const RegionPtr c = closed_complement(w[k]);
        bip += (k ? ", " : "") + print_region(with_closed(c, false));
    }
    add("bipyramid", bip + ")");
    return out;
}

RegionPtr fixture(const std::string& name) {
    for (const auto& f : fixture_corpus())
        if (f.name == name) return f.region;
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::vector<FixtureCheck> run_fixture_suite(const GridWindow& g) {
    std::vector<FixtureCheck> out;
    auto add = [&](const std::string& f, const std::string& c, bool expected, const PredicateReport& r) {
        out.push_back({f, c, expected, r.verdict, r.note});
    };
    const RegionPtr ts = fixture("time_slice");
    add("time_slice", "timelike_convex", true, is_timelike_convex(ts, g));
    add("time_slice", "jld", true, is_jld_region(ts, g));
    add("time_slice", "causally_complete", false, is_causally_complete(ts, g));

    const RegionPtr tc = fixture("timelike_cones");
    add("timelike_cones", "asgeirsson_complete", true, is_asgeirsson_complete(tc, g));
    add("timelike_cones", "timelike_convex", false, is_timelike_convex(tc, g));

    add("r_plus", "asgeirsson_complete", true, is_asgeirsson_complete(fixture("r_plus"), g));
    add("r_minus", "asgeirsson_complete", true, is_asgeirsson_complete(fixture("r_minus"), g));
    {
        const HullResult h = asgeirsson_hull(fixture("r_pm"), g);
        const std::size_t n = h.hull.count();
        out.push_back({"r_pm", "hull_saturates_window", true, n == g.size(),
                       std::to_string(n) + " of " + std::to_string(g.size()) + " lattice points, fixpoint=" +
                           (h.fixpoint ? "true" : "false")});
    }

    const RegionPtr sh = fixture("shell");
    add("shell", "timelike_convex", true, is_timelike_convex(sh, g));
    {
        const PredicateReport j = is_jld_region(sh, g);
        out.push_back({"shell", "jld", false, j.verdict, j.note});
        out.push_back({"shell", "hyperbola_witness", true, !j.verdict && j.witness_kind == "curve", j.witness_kind});
    }

    const RegionPtr hp = fixture("null_half_plane");
    add("null_half_plane", "causally_complete", true, is_causally_complete(hp, g));
    add("null_half_plane", "lattice_convex", true, lattice_convex(sample_members(hp, g), g));
    return out;
}

}  // namespace cgeo
