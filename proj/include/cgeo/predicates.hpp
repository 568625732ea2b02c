#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgeo/grid.hpp"
#include "cgeo/region.hpp"

namespace cgeo {

struct PredicateReport {
    std::string predicate;
    bool verdict = false;
    // Counterexample when verdict is false: a point pair plus the offending
    // point, a line sample, or curve samples (see witness_kind).
    std::vector<Point> witness;
    std::string witness_kind;
    std::vector<Point> certificates;  // curve refutations: a region point timelike to each sample
    GridWindow resolution;
    bool exact = false;           // decided by a closed form
    bool window_limited = false;  // the window boundary affected the decision
    std::string note;
};

// A parametric curve checked by the JLD predicate in addition to lattice lines.
struct ParamCurve {
    std::string name;
    std::function<Point(double)> at;
    double t0 = 0, t1 = 0;
};

struct JldOptions {
    int radius = 2;
    std::vector<ParamCurve> curves;
    bool auto_curves = true;  // add the spacelike-hyperbola curve for shell regions
};

PredicateReport timelike_convex_sampled(const Bitmap& set, const GridWindow& g);
PredicateReport is_timelike_convex(const RegionPtr& r, const GridWindow& g);
PredicateReport is_asgeirsson_complete(const RegionPtr& r, const GridWindow& g, int radius = 2);
PredicateReport asgeirsson_complete_sampled(const Bitmap& set, const GridWindow& g, int radius = 2);
PredicateReport is_causally_complete(const RegionPtr& r, const GridWindow& g);
PredicateReport is_jld_region(const RegionPtr& r, const GridWindow& g, const JldOptions& opt = {});
// JLD check for a sampled set with a sampled complement.
PredicateReport jld_sampled(const Bitmap& set, const Bitmap& complement, const GridWindow& g, int radius = 2);

// Every lattice line (directions with components up to radius) meets the set
// in one contiguous run.
PredicateReport lattice_convex(const Bitmap& set, const GridWindow& g, int radius = 2);

// Precondition failure throws PreconditionError carrying the witness.
struct PreconditionError : std::runtime_error {
    Point witness;
    PreconditionError(const std::string& m, const Point& w) : std::runtime_error(m), witness(w) {}
};
PredicateReport union_preserves_timelike_convexity(const RegionPtr& r, const RegionPtr& s, const RegionPtr& surface,
                                                   const GridWindow& g);

// Re-check a failing report against the lattice definition; true when the
// witness reproduces the failure.
bool witness_reproduces(const PredicateReport& rep, const RegionPtr& r, const GridWindow& g);

ParamCurve hyperbola_curve(const GridWindow& g);

}  // namespace cgeo
