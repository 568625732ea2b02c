#include "cgeo/wave.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>

#include "cgeo/kernels.hpp"

namespace cgeo {

void SpectralMeasure::validate() const {
    for (const auto& m : masses) {
        if (m.k.n != ncoords) throw DimensionError("momentum dimension differs from the measure");
        const double sp = spatial_norm(m.k), scale = 1 + edot(m.k, m.k);
        if (m.k[0] < sp - kTau * scale) throw std::invalid_argument("momentum outside the closed forward cone");
        if (!std::isfinite(m.c.real()) || !std::isfinite(m.c.imag())) throw std::invalid_argument("non-finite weight");
    }
}

std::complex<double> evaluate_F(const SpectralMeasure& m, const Point& x, double sigma) {
    std::complex<double> sum = 0;
    for (const auto& p : m.masses) {
        const double mass = std::sqrt(std::max(0.0, msq(p.k)));
        const double ph = mdot(p.k, x);
        sum += p.c * std::cos(sigma * mass) * std::complex<double>(std::cos(ph), std::sin(ph));
    }
    return sum;
}

namespace {

template <class Fn>
void for_each_sample(const GridWindow& g, Fn fn) {
    const int nsig = static_cast<int>(std::floor(g.X / g.h + 1e-9));
    for (std::size_t f = 0; f < g.size(); ++f) {
        const Point x = g.point(f);
        for (int k = -nsig; k <= nsig; ++k) fn(x, k * g.h);
    }
}

double residual_at(const SpectralMeasure& m, const Point& x, double sigma, double h) {
    const std::complex<double> c = evaluate_F(m, x, sigma);
    auto d2 = [&](int axis) {
        Point a = x, b = x;
        a.c[axis] += h;
        b.c[axis] -= h;
        return (evaluate_F(m, a, sigma) - 2.0 * c + evaluate_F(m, b, sigma)) / (h * h);
    };
    std::complex<double> r = d2(0);
    for (int i = 1; i < x.n; ++i) r -= d2(i);
    r -= (evaluate_F(m, x, sigma + h) - 2.0 * c + evaluate_F(m, x, sigma - h)) / (h * h);
    return std::abs(r);
}

}  // namespace

double wave_residual(const SpectralMeasure& m, const GridWindow& g, double h) {
    if (!(h > 0)) throw std::invalid_argument("step must be positive");
    m.validate();
    if (m.masses.empty()) return 0;
    double worst = 0;
    for_each_sample(g, [&](const Point& x, double s) { worst = std::max(worst, residual_at(m, x, s, h)); });
    return worst;
}

void write_residual_csv(std::ostream& os, const SpectralMeasure& m, const GridWindow& g, double h) {
    for (int i = 0; i < g.ncoords(); ++i) os << "x" << i << ",";
    os << "sigma,value,residual\n";
    char buf[96];
    for_each_sample(g, [&](const Point& x, double s) {
        for (int i = 0; i < x.n; ++i) {
            std::snprintf(buf, sizeof buf, "%.17g,", x[i]);
            os << buf;
        }
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", s, evaluate_F(m, x, s).real(), residual_at(m, x, s, h));
        os << buf;
    });
}

SpectralMeasure random_measure(int s, unsigned seed, int max_points) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0, 1);
    SpectralMeasure m;
    m.ncoords = s + 1;
    const int count = 1 + static_cast<int>(U(rng) * max_points) % max_points;
    for (int j = 0; j < count; ++j) {
        Point k(s + 1);
        for (int i = 1; i <= s; ++i) k.c[i] = 3 * U(rng) - 1.5;
        k.c[0] = spatial_norm(k) + U(rng);
        m.masses.push_back({k, {2 * U(rng) - 1, 2 * U(rng) - 1}});
    }
    return m;
}

double FdSolution::coord(std::size_t flat, int axis) const {
    std::size_t stride = 1;
    for (int a = s; a > axis; --a) stride *= side();
    return (static_cast<int>(flat / stride % side()) - n) * dx;
}

FdSolution fd_wave_solve(const std::vector<double>& u0, const std::vector<double>& v0, int s, int n, double dx,
                         int steps, double cfl) {
    if (s < 1 || s > 2) throw std::invalid_argument("the solver supports s = 1 and s = 2");
    if (!(cfl > 0) || cfl > 1 / std::sqrt(static_cast<double>(s)) + 1e-12)
        throw std::invalid_argument("CFL number exceeds 1/sqrt(s)");
    if (n < 1 || !(dx > 0) || steps < 0) throw std::invalid_argument("invalid grid");
    FdSolution sol;
    sol.s = s;
    sol.n = n;
    sol.dx = dx;
    sol.dt = cfl * dx;
    const std::size_t side = sol.side(), size = s == 1 ? side : side * side;
    if (u0.size() != size || v0.size() != size) throw std::invalid_argument("initial data size mismatch");
    const double c2 = cfl * cfl;
    const Kernels& K = kernels();

    // One leapfrog update of all rows; u_prev = nullptr gives the first step
    // u1 = u0 + dt v0 + c2/2 lap u0.
    auto step = [&](const std::vector<double>* prev, const std::vector<double>& u, std::vector<double>& out) {
        if (s == 1) {
            K.leapfrog_row(prev ? prev->data() : u.data(), u.data(), u.data(), u.data(), c2, out.data(), side);
        } else {
            std::fill(out.begin(), out.begin() + side, 0.0);
            std::fill(out.end() - side, out.end(), 0.0);
            for (std::size_t r = 1; r + 1 < side; ++r) {
                const double* p = prev ? prev->data() + r * side : u.data() + r * side;
                K.leapfrog_row(p, u.data() + r * side, u.data() + (r - 1) * side, u.data() + (r + 1) * side, c2,
                               out.data() + r * side, side);
            }
        }
    };
    sol.frames.push_back(u0);
    if (steps == 0) return sol;
    // With prev = u the update gives u + c2 lap u; halve the Laplacian term and add dt v0.
    std::vector<double> u1(size);
    step(nullptr, u0, u1);
    for (std::size_t i = 0; i < size; ++i) u1[i] = u0[i] + 0.5 * (u1[i] - u0[i]) + sol.dt * v0[i];
    // outer ring stays zero
    auto zero_ring = [&](std::vector<double>& u) {
        for (std::size_t i = 0; i < size; ++i) {
            const std::size_t a = s == 1 ? i : i / side, b = s == 1 ? 1 : i % side;
            if (a == 0 || a + 1 == side || (s == 2 && (b == 0 || b + 1 == side))) u[i] = 0;
        }
    };
    zero_ring(u1);
    sol.frames.push_back(std::move(u1));
    for (int k = 1; k < steps; ++k) {
        std::vector<double> next(size);
        step(&sol.frames[k - 1], sol.frames[k], next);
        sol.frames.push_back(std::move(next));
    }
    return sol;
}

void write_solution_csv(std::ostream& os, const FdSolution& sol) {
    os << "t";
    for (int a = 1; a <= sol.s; ++a) os << ",x" << a;
    os << ",value\n";
    char buf[64];
    for (std::size_t k = 0; k < sol.frames.size(); ++k)
        for (std::size_t i = 0; i < sol.frames[k].size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", k * sol.dt);
            os << buf;
            for (int a = 1; a <= sol.s; ++a) {
                std::snprintf(buf, sizeof buf, ",%.17g", sol.coord(i, a));
                os << buf;
            }
            std::snprintf(buf, sizeof buf, ",%.17g\n", sol.frames[k][i]);
            os << buf;
        }
}

PredicateReport domain_of_dependence_check(const FdSolution& sol, const std::vector<double>& center, double radius,
                                           double tol) {
    if (static_cast<int>(center.size()) != sol.s) throw DimensionError("center dimension differs from the solution");
    PredicateReport rep;
    rep.predicate = "domain_of_dependence";
    rep.resolution = GridWindow(sol.dt * std::max<std::size_t>(sol.frames.size() - 1, 1), sol.n * sol.dx, sol.dx, sol.s);
    auto dist = [&](std::size_t i) {
        double d2 = 0;
        for (int a = 1; a <= sol.s; ++a) {
            const double d = sol.coord(i, a) - center[a - 1];
            d2 += d * d;
        }
        return std::sqrt(d2);
    };
    auto at = [&](std::size_t k, std::size_t i) {
        Point p(sol.s + 1);
        p.c[0] = k * sol.dt;
        for (int a = 1; a <= sol.s; ++a) p.c[a] = sol.coord(i, a);
        return p;
    };
    // Cauchy data: u0 and the first difference
    double norm = 0;
    const auto& u0 = sol.frames[0];
    for (std::size_t i = 0; i < u0.size(); ++i) {
        norm = std::max(norm, std::abs(u0[i]));
        if (dist(i) < radius && u0[i] != 0) {
            rep.verdict = false;
            rep.witness = {at(0, i)};
            rep.witness_kind = "point";
            rep.note = "initial data does not vanish on the ball";
            return rep;
        }
    }
    if (sol.frames.size() > 1) {
        for (std::size_t i = 0; i < u0.size(); ++i)
            if (dist(i) < radius - sol.dx - 1e-12 && sol.frames[1][i] != 0) {
                rep.verdict = false;
                rep.witness = {at(1, i)};
                rep.witness_kind = "point";
                rep.note = "initial velocity does not vanish on the ball";
                return rep;
            }
    }
    if (tol < 0) tol = sol.s == 1 ? 1e-10 : 1e-8 * norm;
    double worst = 0;
    for (std::size_t k = 0; k < sol.frames.size(); ++k)
        for (std::size_t i = 0; i < sol.frames[k].size(); ++i) {
            if (!(k * sol.dt + dist(i) < radius - 1e-12)) continue;
            const double v = std::abs(sol.frames[k][i]);
            if (v > worst) worst = v;
            if (v > tol) {
                rep.verdict = false;
                rep.witness = {at(k, i)};
                rep.witness_kind = "point";
                char buf[128];
                std::snprintf(buf, sizeof buf, "|u| = %.3g exceeds %.3g inside the dependence cone", v, tol);
                rep.note = buf;
                return rep;
            }
        }
    rep.verdict = true;
    rep.exact = sol.s == 1 && worst == 0;
    char buf[96];
    std::snprintf(buf, sizeof buf, "max |u| in cone %.3g (tol %.3g)", worst, tol);
    rep.note = buf;
    return rep;
}

}  // namespace cgeo
