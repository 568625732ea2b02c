#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cgeo/grid.hpp"
#include "cgeo/point.hpp"

namespace cgeo {

// x -> n.x + d with the Euclidean pairing.
struct Affine {
    Point n;
    double d = 0;
    double operator()(const Point& x) const { return edot(n, x) + d; }
    Affine negated() const { return {-n, -d}; }
    bool operator==(const Affine& o) const { return n == o.n && d == o.d; }
};

enum class Kind {
    DoubleCone,
    Wedge,
    TimeSlice,
    HalfSpace,
    Plane,
    Shell,
    Box,
    Ball,
    Points,
    Exterior,
    Full,
    Empty,
    Sampled,
    Union,
    Intersection,
    Complement,
    Translate,
    LinearMap,
};

const char* to_string(Kind k);

struct Region;
using RegionPtr = std::shared_ptr<const Region>;

// Immutable expression tree. Leaves are open unless `closed` is set.
struct Region {
    Kind kind = Kind::Empty;
    int n = 0;  // number of coordinates
    bool closed = false;

    Point a, b;            // cone/exterior tips, box corners, ball center, translation
    Affine plus, minus;    // wedge functionals; half-space and plane use `plus`
    double lo = 0, hi = 0; // time slice, shell bounds; ball radius in `lo`
    std::vector<Point> pts;
    std::vector<double> mat, inv;  // row-major n x n and its inverse
    std::vector<RegionPtr> kids;
    std::shared_ptr<const SampledRegion> sampled;

    bool is_leaf() const { return kind < Kind::Union; }
};

// Constructors validate their invariants and throw std::invalid_argument.
RegionPtr make_double_cone(const Point& lower, const Point& upper, bool closed = false);
RegionPtr make_wedge(const Affine& plus, const Affine& minus, bool closed = false);
RegionPtr make_w1(int ncoords);
RegionPtr make_time_slice(int ncoords, double t0, double t1, bool closed = false);
RegionPtr make_half_space(const Affine& f, bool closed = false);
RegionPtr make_plane(const Affine& f);
RegionPtr make_shell(int ncoords, double lo, double hi, bool closed = false);
RegionPtr make_box(const Point& lo, const Point& hi, bool closed = false);
RegionPtr make_ball(const Point& center, double r, bool closed = false);
RegionPtr make_points(std::vector<Point> pts);
RegionPtr make_exterior(const Point& lower, const Point& upper, bool closed);
RegionPtr make_full(int ncoords);
RegionPtr make_empty(int ncoords);
RegionPtr make_sampled(std::shared_ptr<const SampledRegion> s);
RegionPtr make_union(std::vector<RegionPtr> kids);
RegionPtr make_intersection(std::vector<RegionPtr> kids);
RegionPtr make_complement(RegionPtr kid);
RegionPtr make_translate(RegionPtr kid, const Point& v);
RegionPtr make_linear_map(RegionPtr kid, std::vector<double> matrix);
RegionPtr with_closed(const RegionPtr& leaf, bool closed);

// Lightlike, nonzero, independent, opposite time orientation.
void validate_wedge(const Affine& plus, const Affine& minus);
bool is_lightlike_covector(const Point& n);

struct MemberResult {
    bool in = false;
    bool resolution_limited = false;
    double h = 0;
};

// Window used when membership needs a sampled complement. Results are cached
// per node, so one context should not be shared across threads.
struct EvalContext {
    std::optional<GridWindow> grid;
    std::map<const Region*, RegionPtr> cache;
};

MemberResult member_ex(const RegionPtr& r, const Point& x, EvalContext* ctx = nullptr);
bool member(const RegionPtr& r, const Point& x, EvalContext* ctx = nullptr);

// Closed-form causal complement, or nullptr when none is known.
RegionPtr closed_complement(const RegionPtr& r);
// Expression for the closure, or nullptr when unknown.
RegionPtr closure_of(const RegionPtr& r);
Topology topology_of(const RegionPtr& r);
// True when the tree is built only from leaves with exact membership.
bool is_exact(const RegionPtr& r);
bool contains_kind(const RegionPtr& r, Kind k);

bool structurally_equal(const RegionPtr& x, const RegionPtr& y);
std::uint64_t region_hash(const RegionPtr& r);

// Sample membership (and the closure when known) on every lattice point.
SampledRegion sample(const RegionPtr& r, const GridWindow& g, EvalContext* ctx = nullptr);
Bitmap sample_members(const RegionPtr& r, const GridWindow& g, EvalContext* ctx = nullptr);

bool is_lorentz(const std::vector<double>& m, int n, double tol = 1e-9);

}  // namespace cgeo
