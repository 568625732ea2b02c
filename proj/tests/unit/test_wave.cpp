#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "cgeo/wave.hpp"

using namespace cgeo;

TEST(Spectral, ValidateRejectsSpacelikeMomentum) {
    SpectralMeasure m;
    m.ncoords = 3;
    m.masses.push_back({{1, 2, 0}, {1, 0}});
    EXPECT_THROW(m.validate(), std::invalid_argument);
    m.masses[0].k = {2, 1, 0};
    EXPECT_NO_THROW(m.validate());
    m.masses[0].k = {1, 1};
    EXPECT_THROW(m.validate(), DimensionError);
}

TEST(Spectral, RandomMeasuresAreValidAndBounded) {
    for (unsigned seed = 0; seed < 20; ++seed) {
        const SpectralMeasure m = random_measure(2, seed, 8);
        EXPECT_NO_THROW(m.validate());
        EXPECT_GE(m.masses.size(), 1u);
        EXPECT_LE(m.masses.size(), 8u);
    }
}

TEST(Spectral, SingleMassPlaneWave) {
    SpectralMeasure m;
    m.ncoords = 2;
    m.masses.push_back({{5, 3}, {1, 0}});  // mass 4
    const Point x{0.3, -0.2};
    const auto v = evaluate_F(m, x, 0.7);
    const double ph = 5 * 0.3 - 3 * -0.2;
    EXPECT_NEAR(v.real(), std::cos(0.7 * 4) * std::cos(ph), 1e-14);
    EXPECT_NEAR(v.imag(), std::cos(0.7 * 4) * std::sin(ph), 1e-14);
}

TEST(Spectral, ResidualConvergesAtSecondOrder) {
    const SpectralMeasure m = random_measure(1, 3, 6);
    const GridWindow g(1, 1, 0.25, 1);
    const double r1 = wave_residual(m, g, 0.2), r2 = wave_residual(m, g, 0.1), r3 = wave_residual(m, g, 0.05);
    EXPECT_NEAR(r1 / r2, 4, 0.8);
    EXPECT_NEAR(r2 / r3, 4, 0.8);
}

TEST(Spectral, ResidualCsvHasHeaderAndRows) {
    const SpectralMeasure m = random_measure(1, 1, 2);
    std::ostringstream os;
    write_residual_csv(os, m, GridWindow(0.5, 0.5, 0.25, 1), 0.1);
    const std::string s = os.str();
    EXPECT_EQ(s.rfind("x0,x1,sigma,value,residual\n", 0), 0u);
    EXPECT_GT(std::count(s.begin(), s.end(), '\n'), 10);
}

TEST(Fd, RejectsCflViolation) {
    std::vector<double> u(9, 0), v(9, 0);
    EXPECT_THROW(fd_wave_solve(u, v, 1, 4, 0.1, 3, 1.01), std::invalid_argument);
    std::vector<double> u2(81, 0), v2(81, 0);
    EXPECT_THROW(fd_wave_solve(u2, v2, 2, 4, 0.1, 3, 0.75), std::invalid_argument);
    EXPECT_THROW(fd_wave_solve(u, v, 3, 4, 0.1, 3, 0.5), std::invalid_argument);
}

TEST(Fd, OneDimensionalUnitCflIsExactDAlembert) {
    const int n = 100;
    const double dx = 0.05;
    std::vector<double> u0(2 * n + 1), v0(2 * n + 1, 0);
    auto f = [](double x) { return std::exp(-4 * x * x) * (1 + x); };
    for (int i = -n; i <= n; ++i) u0[i + n] = f(i * dx);
    const int steps = 30;
    const FdSolution s = fd_wave_solve(u0, v0, 1, n, dx, steps, 1.0);
    ASSERT_EQ(s.frames.size(), static_cast<std::size_t>(steps + 1));
    for (int k = 0; k <= steps; ++k)
        for (int i = -n + k + 1; i <= n - k - 1; ++i) {
            const double exact = 0.5 * (u0[i - k + n] + u0[i + k + n]);
            EXPECT_NEAR(s.frames[k][i + n], exact, 1e-13) << k << " " << i;
        }
}

TEST(Fd, TwoDimensionalSymmetryPreserved) {
    const int n = 30;
    const double dx = 0.1;
    const std::size_t side = 2 * n + 1;
    std::vector<double> u0(side * side), v0(side * side, 0);
    for (std::size_t i = 0; i < u0.size(); ++i) {
        const double x = (static_cast<int>(i % side) - n) * dx, y = (static_cast<int>(i / side) - n) * dx;
        u0[i] = std::exp(-3 * (x * x + y * y));
    }
    const FdSolution s = fd_wave_solve(u0, v0, 2, n, dx, 20, 0.7);
    const auto& last = s.frames.back();
    for (std::size_t j = 0; j < side; ++j)
        for (std::size_t i = 0; i < side; ++i) EXPECT_NEAR(last[j * side + i], last[i * side + j], 1e-14);
}

TEST(Fd, DependenceCheckFlagsDataInsideBall) {
    const int n = 40;
    std::vector<double> u0(2 * n + 1, 0), v0(2 * n + 1, 0);
    u0[n] = 1;  // data at the center
    const FdSolution s = fd_wave_solve(u0, v0, 1, n, 0.05, 5, 1.0);
    const PredicateReport r = domain_of_dependence_check(s, {0.0}, 0.5);
    EXPECT_FALSE(r.verdict);
    EXPECT_EQ(r.witness.size(), 1u);
}

TEST(Fd, SolutionCsv) {
    std::vector<double> u0(9, 0), v0(9, 0);
    u0[4] = 1;
    std::ostringstream os;
    write_solution_csv(os, fd_wave_solve(u0, v0, 1, 4, 0.1, 2, 1.0));
    EXPECT_NE(os.str().find('\n'), std::string::npos);
}
