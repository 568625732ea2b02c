#pragma once

#include <string>
#include <vector>

#include "cgeo/hyperboloid.hpp"
#include "cgeo/predicates.hpp"

namespace cgeo {

struct EnvelopeOptions {
    std::vector<double> radii;  // cylinder radii; those <= rho_hat are skipped
    double shrink_radius = 0.3; // radius of the centered cone subtracted from the inputs
    int theta_samples = 720;
    int jld_radius = 2;
};

struct EnvelopeReport {
    double rho0 = 0;      // radius of the shrunk cone
    double rho_hat = 0;   // smallest radius passing the strip condition (to within h)
    std::vector<double> radii_used;
    ShrunkInputs shrunk;
    RegionPtr target;     // complement of the shrunk cone united with the shrunk wedge complements
    SampledRegion N;
    std::size_t target_points = 0, target_missing = 0;
    std::size_t cross_term_points = 0;  // points needing a lower and an upper bound from different pieces
    bool window_in_cylinder = false;
    PredicateReport timelike_convex, jld;
    ApexRegion apex;
    bool ok() const {
        return target_missing == 0 && timelike_convex.verdict && jld.verdict && apex.is_empty();
    }
};

// Strip condition on the cylinder of radius rho: the tilted surface through
// each wedge edge meets the cylinder inside |t| <= rho - rho0.
bool strip_condition(double rho, double rho0, const std::vector<RegionPtr>& wedges, int theta_samples = 720);
// Doubling search from rho0 then bisection to within h; throws when the
// condition fails up to the window radius.
double find_rho_hat(double rho0, const std::vector<RegionPtr>& wedges, const GridWindow& g, int theta_samples = 720);
std::vector<double> default_envelope_radii(double rho_hat);

// O is a centered double cone. Requires s = 2.
EnvelopeReport jld_envelope(const RegionPtr& o, const std::vector<RegionPtr>& wedges, const GridWindow& g,
                            const EnvelopeOptions& opt);

}  // namespace cgeo
