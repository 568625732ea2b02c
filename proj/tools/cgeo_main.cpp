#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cgeo/complement.hpp"
#include "cgeo/dsl.hpp"
#include "cgeo/envelope.hpp"
#include "cgeo/fixtures.hpp"
#include "cgeo/hull.hpp"
#include "cgeo/hyperboloid.hpp"
#include "cgeo/localization.hpp"
#include "cgeo/predicates.hpp"
#include "cgeo/report_json.hpp"
#include "cgeo/wave.hpp"

using namespace cgeo;

namespace {

struct Globals {
    int dim = 2;
    std::vector<double> window{3, 3};
    double h = 0.1;
    unsigned seed = 0;
    bool json = false;
    bool timing = false;

    GridWindow grid() const { return GridWindow(window[0], window[1], h, dim); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool ends_with(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

// A region argument is either an inline script or a path to a .rgn file.
RegionPtr load_region(const std::string& arg, int ncoords) {
    if (ends_with(arg, ".rgn")) return parse_region(slurp(arg), ncoords);
    return parse_region(arg, ncoords);
}

Point parse_point(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != '(' && c != ')') t += c == ',' ? ' ' : c;
    std::istringstream ss(t);
    std::vector<double> v;
    double x;
    while (ss >> x) v.push_back(x);
    if (!ss.eof() || v.size() < 2) throw std::invalid_argument("bad point: " + text);
    return Point::from(v);
}

// Region list file: a JSON array of scripts, or an object with "wedges" and
// optionally "cones" arrays.
struct RegionLists {
    std::vector<RegionPtr> wedges, cones;
};

RegionLists load_region_lists(const std::string& path, int ncoords) {
    const json j = json::parse(slurp(path));
    RegionLists out;
    auto read = [&](const json& arr, std::vector<RegionPtr>& dst) {
        for (const auto& s : arr) dst.push_back(parse_region(s.get<std::string>(), ncoords));
    };
    if (j.is_array()) {
        read(j, out.wedges);
    } else {
        if (j.contains("schema") && j["schema"] != kSchemaVersion) throw std::invalid_argument("unsupported schema");
        if (j.contains("wedges")) read(j["wedges"], out.wedges);
        if (j.contains("cones")) read(j["cones"], out.cones);
    }
    return out;
}

class Runner {
   public:
    explicit Runner(const Globals& g) : g_(g) {}

    int emit(const std::string& cmd, json body, bool success = true) {
        json out = envelope_json(cmd, std::move(body));
        if (g_.timing) {
            const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_);
            out["timing"] = {{"wall_ms", ms.count()}};
        }
        std::cout << (g_.json ? out.dump() : out.dump(2)) << "\n";
        return success ? 0 : 1;
    }

    void start() { start_ = std::chrono::steady_clock::now(); }

   private:
    const Globals& g_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Causal geometry engine for Minkowski space"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");
    app.fallthrough();
    Globals gl;
    app.add_option("--dim", gl.dim, "spatial dimension s")->check(CLI::Range(1, 3));
    app.add_option("--window", gl.window, "time and space half-widths T X")->expected(2);
    app.add_option("--h", gl.h, "lattice spacing")->check(CLI::PositiveNumber);
    app.add_option("--seed", gl.seed, "random seed");
    app.add_flag("--json", gl.json, "compact single-line JSON");
    app.add_flag("--timing", gl.timing, "add wall-clock timing to the output");

    Runner run(gl);
    std::string cmd;
    std::function<int()> action;

    // classify
    auto* c_classify = app.add_subcommand("classify", "causal class of y relative to x");
    std::string px, py;
    c_classify->add_option("x", px)->required();
    c_classify->add_option("y", py)->required();
    c_classify->callback([&] {
        action = [&] {
            const Point x = parse_point(px), y = parse_point(py);
            return run.emit("classify", {{"x", to_json(x)}, {"y", to_json(y)}, {"class", to_string(classify(x, y))}});
        };
    });

    // pred
    auto* c_pred = app.add_subcommand("pred", "region predicate on the window lattice");
    std::string region_arg;
    bool p_tc = false, p_as = false, p_cc = false, p_jld = false;
    int radius = 2;
    c_pred->add_option("--region", region_arg, "script or .rgn file")->required();
    c_pred->add_flag("--timelike-convex", p_tc);
    c_pred->add_flag("--asgeirsson", p_as);
    c_pred->add_flag("--causally-complete", p_cc);
    c_pred->add_flag("--jld", p_jld);
    c_pred->add_option("--radius", radius, "chord direction radius")->check(CLI::Range(1, 4));
    c_pred->callback([&] {
        action = [&] {
            if (p_tc + p_as + p_cc + p_jld != 1)
                throw std::invalid_argument("choose exactly one predicate flag");
            const RegionPtr r = load_region(region_arg, gl.dim + 1);
            const GridWindow g = gl.grid();
            PredicateReport rep;
            if (p_tc) rep = is_timelike_convex(r, g);
            if (p_as) rep = is_asgeirsson_complete(r, g, radius);
            if (p_cc) rep = is_causally_complete(r, g);
            if (p_jld) {
                JldOptions o;
                o.radius = radius;
                rep = is_jld_region(r, g, o);
            }
            return run.emit("pred", {{"region", region_json(r)}, {"report", to_json(rep)}});
        };
    });

    // hull
    auto* c_hull = app.add_subcommand("hull", "Asgeirsson hull on the window lattice");
    c_hull->add_option("--region", region_arg)->required();
    c_hull->add_option("--radius", radius)->check(CLI::Range(1, 4));
    c_hull->callback([&] {
        action = [&] {
            const RegionPtr r = load_region(region_arg, gl.dim + 1);
            const HullResult hr = asgeirsson_hull(r, gl.grid(), radius);
            return run.emit("hull", {{"region", region_json(r)},
                                     {"converged", hr.converged},
                                     {"fixpoint", hr.fixpoint},
                                     {"window_limited", hr.window_limited},
                                     {"iterations", hr.iterations},
                                     {"added", hr.added},
                                     {"hull", sampled_summary(hr.hull)},
                                     {"saturates_window", hr.hull.count() == hr.hull.grid.size()}});
        };
    });

    // complement / completion
    auto* c_compl = app.add_subcommand("complement", "causal complement");
    c_compl->add_option("--region", region_arg)->required();
    c_compl->callback([&] {
        action = [&] {
            const RegionPtr r = load_region(region_arg, gl.dim + 1);
            return run.emit("complement", {{"region", region_json(r)},
                                           {"result", region_json(causal_complement(r, gl.grid()))}});
        };
    });
    auto* c_compln = app.add_subcommand("completion", "causal completion");
    c_compln->add_option("--region", region_arg)->required();
    c_compln->callback([&] {
        action = [&] {
            const RegionPtr r = load_region(region_arg, gl.dim + 1);
            return run.emit("completion", {{"region", region_json(r)},
                                           {"result", region_json(causal_completion(r, gl.grid()))}});
        };
    });

    // apex / empty-intersection
    std::string wedges_file;
    auto* c_apex = app.add_subcommand("apex", "apex region of a wedge (and cone) family");
    c_apex->add_option("--wedges", wedges_file, "JSON list of region scripts")->required();
    c_apex->callback([&] {
        action = [&] {
            const RegionLists l = load_region_lists(wedges_file, gl.dim + 1);
            const ApexRegion a = apex_region(l.wedges, l.cones, gl.grid());
            return run.emit("apex", {{"apex", to_json(a)}});
        };
    });
    auto* c_empty = app.add_subcommand("empty-intersection", "decide emptiness of the closure intersection");
    c_empty->add_option("--wedges", wedges_file)->required();
    c_empty->callback([&] {
        action = [&] {
            const RegionLists l = load_region_lists(wedges_file, gl.dim + 1);
            const EmptinessDecision d = empty_intersection_decide(l.wedges, l.cones, gl.grid());
            return run.emit("empty-intersection", {{"decision", to_json(d)}},
                            d.verdict != Emptiness::Undecided);
        };
    });

    // localize
    std::string catalog_file;
    bool random_catalog = false;
    auto* c_loc = app.add_subcommand("localize", "four localization regions of an observable catalog");
    auto* o_cat = c_loc->add_option("--catalog", catalog_file, "observable catalog JSON");
    c_loc->add_flag("--random", random_catalog, "use a random consistent catalog from --seed")->excludes(o_cat);
    c_loc->callback([&] {
        action = [&] {
            if (!random_catalog && catalog_file.empty()) throw std::invalid_argument("--catalog or --random required");
            const ObservableTag tag = random_catalog ? random_consistent_tag(gl.dim, gl.seed, Point(gl.dim + 1))
                                                     : load_tag_json(slurp(catalog_file));
            const LocalizationResult l = localize(tag, gl.grid());
            return run.emit("localize", {{"id", tag.id}, {"localization", to_json(l)}});
        };
    });

    // audit
    std::string cat_b;
    auto* c_audit = app.add_subcommand("audit", "locality audit of two observable catalogs");
    c_audit->add_option("a", catalog_file)->required();
    c_audit->add_option("b", cat_b)->required();
    c_audit->callback([&] {
        action = [&] {
            const AuditReport a = locality_audit(load_tag_json(slurp(catalog_file)), load_tag_json(slurp(cat_b)),
                                                 gl.grid());
            return run.emit("audit", {{"audit", to_json(a)}});
        };
    });

    // envelope
    std::string cone_arg = "dcone((-1,0,0),(1,0,0))";
    std::vector<double> radii;
    auto* c_env = app.add_subcommand("envelope", "cylinder envelope for a wedge family and a centered cone");
    c_env->add_option("--wedges", wedges_file, "JSON list of wedge scripts (default: the 120 degree triple)");
    c_env->add_option("--cone", cone_arg, "centered double cone");
    c_env->add_option("--radii", radii, "cylinder radii (default rho_hat + 1, 2, 4)");
    c_env->callback([&] {
        action = [&] {
            if (gl.dim != 2) throw std::invalid_argument("envelope needs --dim 2");
            const std::vector<RegionPtr> w =
                wedges_file.empty() ? x120_wedges() : load_region_lists(wedges_file, 3).wedges;
            const RegionPtr cone = parse_region(cone_arg, 3);
            EnvelopeOptions o;
            o.radii = radii;
            if (o.radii.empty()) {
                const RegionPtr p = make_double_cone(Point{-o.shrink_radius, 0, 0}, Point{o.shrink_radius, 0, 0}, true);
                const ShrunkInputs sh = shrink_inputs(cone, w, p);
                o.radii = default_envelope_radii(find_rho_hat(sh.cone->b[0], sh.wedges, gl.grid(), o.theta_samples));
            }
            const EnvelopeReport e = jld_envelope(cone, w, gl.grid(), o);
            return run.emit("envelope", {{"envelope", to_json(e)}}, e.ok());
        };
    });

    // separate
    std::string sep_a, sep_b;
    auto* c_sep = app.add_subcommand("separate", "separating wedge for two spacelike separated regions");
    c_sep->add_option("a", sep_a)->required();
    c_sep->add_option("b", sep_b)->required();
    c_sep->callback([&] {
        action = [&] {
            const GridWindow g = gl.grid();
            const Bitmap a = sample_members(load_region(sep_a, gl.dim + 1), g);
            const Bitmap b = sample_members(load_region(sep_b, gl.dim + 1), g);
            try {
                return run.emit("separate", {{"wedge", region_json(separating_wedge(a, b, g))}});
            } catch (const SeparationError& e) {
                std::cout << error_json("separate", e.what(),
                                        {{"p", to_json(e.p)}, {"q", to_json(e.q)}, {"class", to_string(e.kind)}})
                                 .dump(gl.json ? -1 : 2)
                          << "\n";
                return 1;
            }
        };
    });

    // wave
    auto* c_wave = app.add_subcommand("wave", "wave-equation verification");
    c_wave->require_subcommand(1);
    int max_points = 8;
    std::string csv_path;
    auto* c_res = c_wave->add_subcommand("residual", "d'Alembertian residual of a random spectral measure");
    c_res->add_option("--points", max_points)->check(CLI::Range(1, 64));
    c_res->add_option("--csv", csv_path, "write per-point residuals");
    c_res->callback([&] {
        action = [&] {
            const SpectralMeasure m = random_measure(gl.dim, gl.seed, max_points);
            const GridWindow g = gl.grid();
            const double r1 = wave_residual(m, g, gl.h), r2 = wave_residual(m, g, gl.h / 2);
            if (!csv_path.empty()) {
                std::ofstream os(csv_path);
                write_residual_csv(os, m, g, gl.h);
            }
            double sup = 0;
            for (const Point& x : window_points(g)) sup = std::max(sup, std::abs(evaluate_f(m, x) - evaluate_F(m, x, 0)));
            return run.emit("wave", {{"mode", "residual"},
                                     {"masses", m.masses.size()},
                                     {"residual_h", r1},
                                     {"residual_h2", r2},
                                     {"ratio", r2 > 0 ? r1 / r2 : 0.0},
                                     {"initial_slice_error", sup}});
        };
    });
    int n_fd = 80, steps = 0;
    double cfl = 0, bump_radius = 1, bump_width = 2.5;
    auto* c_dep = c_wave->add_subcommand("dependence", "finite-difference domain-of-dependence leakage");
    c_dep->add_option("--n", n_fd, "half-width in cells")->check(CLI::Range(4, 2000));
    c_dep->add_option("--cfl", cfl, "Courant number (default 1 for s=1, 1/sqrt(2) for s=2)");
    c_dep->add_option("--radius", bump_radius, "inner radius of the initial bump")->check(CLI::PositiveNumber);
    c_dep->add_option("--width", bump_width, "radial width of the initial bump")->check(CLI::PositiveNumber);
    c_dep->callback([&] {
        action = [&] {
            if (gl.dim > 2) throw std::invalid_argument("wave dependence supports --dim 1 or 2");
            const double c = cfl > 0 ? cfl : (gl.dim == 1 ? 1.0 : 1 / std::sqrt(2.0));
            const double dx = gl.h;
            const std::size_t side = 2 * n_fd + 1, total = gl.dim == 1 ? side : side * side;
            std::vector<double> u0(total, 0), v0(total, 0);
            // smooth bump supported on the annulus radius < r < radius + width
            for (std::size_t i = 0; i < total; ++i) {
                const double x = (static_cast<int>(i % side) - n_fd) * dx;
                const double y = gl.dim == 1 ? 0 : (static_cast<int>(i / side) - n_fd) * dx;
                const double a = (std::hypot(x, y) - bump_radius) / bump_width;
                if (a > 0 && a < 1) u0[i] = std::exp(-3 / (a * (1 - a)));
            }
            if (bump_radius + bump_width > n_fd * dx) throw std::invalid_argument("bump does not fit the domain");
            steps = static_cast<int>(bump_radius / (c * dx));
            const FdSolution sol = fd_wave_solve(u0, v0, gl.dim, n_fd, dx, steps, c);
            const PredicateReport rep = domain_of_dependence_check(sol, std::vector<double>(gl.dim, 0.0), bump_radius);
            return run.emit("wave", {{"mode", "dependence"}, {"cfl", c}, {"steps", steps}, {"report", to_json(rep)}},
                            rep.verdict);
        };
    });

    // fixtures
    auto* c_fix = app.add_subcommand("fixtures", "named counterexample suite");
    c_fix->callback([&] {
        action = [&] {
            const std::vector<FixtureCheck> checks = run_fixture_suite(gl.grid());
            json arr = json::array();
            bool ok = true;
            for (const auto& c : checks) {
                arr.push_back(to_json(c));
                ok = ok && c.pass();
            }
            return run.emit("fixtures", {{"window", to_json(gl.grid())}, {"checks", arr}, {"all_pass", ok}}, ok);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << error_json("", e.what()).dump(gl.json ? -1 : 2) << "\n";
        return 2;
    }
    for (auto* sub : app.get_subcommands()) cmd = sub->get_name();
    run.start();
    try {
        return action();
    } catch (const ParseError& e) {
        std::cout << error_json(cmd, e.what(), {{"line", e.line}, {"column", e.column}, {"expected", e.expected}})
                         .dump(gl.json ? -1 : 2)
                  << "\n";
    } catch (const std::exception& e) {
        std::cout << error_json(cmd, e.what()).dump(gl.json ? -1 : 2) << "\n";
    }
    return 1;
}
