#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "cgeo/predicates.hpp"

namespace cgeo {

// Finite sum of point masses on the closed forward cone.
struct SpectralMeasure {
    struct Mass {
        Point k;
        std::complex<double> c;
    };
    std::vector<Mass> masses;
    int ncoords = 0;
    void validate() const;  // throws std::invalid_argument
};

// F(x, sigma) = sum c cos(sigma sqrt(k^2)) exp(i k.x) with the Minkowski pairing.
std::complex<double> evaluate_F(const SpectralMeasure& m, const Point& x, double sigma);
inline std::complex<double> evaluate_f(const SpectralMeasure& m, const Point& x) { return evaluate_F(m, x, 0); }

// max |d00 F - sum dii F - dss F| over the window points and sigma in
// [-X, X] on the window spacing, central differences of step h.
double wave_residual(const SpectralMeasure& m, const GridWindow& g, double h);
void write_residual_csv(std::ostream& os, const SpectralMeasure& m, const GridWindow& g, double h);

SpectralMeasure random_measure(int s, unsigned seed, int max_points = 8);

// Spatial lattice {i dx : |i| <= n}^s, leapfrog in time with dt = cfl dx and
// zero values on the outer ring.
struct FdSolution {
    int s = 1, n = 0;
    double dx = 0, dt = 0;
    std::vector<std::vector<double>> frames;  // frames[k] at t = k dt
    std::size_t side() const { return static_cast<std::size_t>(2 * n + 1); }
    double coord(std::size_t flat, int axis) const;
};

FdSolution fd_wave_solve(const std::vector<double>& u0, const std::vector<double>& v0, int s, int n, double dx,
                         int steps, double cfl);
void write_solution_csv(std::ostream& os, const FdSolution& sol);

// Data vanishing on the ball |x - center| < radius forces |u| <= tol on
// {t + |x - center| < radius}. Reports false with a witness when the data
// does not vanish there or the bound fails. tol < 0 picks the default
// (1e-10 for s = 1, 1e-8 times the data max-norm for s = 2).
PredicateReport domain_of_dependence_check(const FdSolution& sol, const std::vector<double>& center, double radius,
                                           double tol = -1);

}  // namespace cgeo
