#include "cgeo/lp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cgeo {

MarginResult max_margin(const std::vector<Row>& A, const std::vector<double>& b, double cap) {
    const int m = static_cast<int>(A.size());
    if (static_cast<int>(b.size()) != m) throw std::invalid_argument("row count mismatch");
    const int n = m ? static_cast<int>(A[0].size()) : 0;
    for (const auto& r : A)
        if (static_cast<int>(r.size()) != n) throw std::invalid_argument("ragged constraint matrix");

    // Shift t = tau + t_low so that tau >= 0 and the slack basis is feasible.
    double bmin = cap;
    for (double v : b) bmin = std::min(bmin, v);
    const double t_low = bmin - 1;

    // columns: x+ (n), x- (n), tau, slacks (m + 1), rhs
    const int rows = m + 1, tau = 2 * n, s0 = 2 * n + 1, cols = s0 + rows + 1, rhs = cols - 1;
    std::vector<double> T(static_cast<std::size_t>(rows + 1) * cols, 0.0);
    auto at = [&](int r, int c) -> double& { return T[static_cast<std::size_t>(r) * cols + c]; };
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            at(i, j) = -A[i][j];
            at(i, n + j) = A[i][j];
        }
        at(i, tau) = 1;
        at(i, s0 + i) = 1;
        at(i, rhs) = b[i] - t_low;
    }
    at(m, tau) = 1;
    at(m, s0 + m) = 1;
    at(m, rhs) = cap - t_low;
    at(rows, tau) = -1;  // objective row: z - tau = 0

    std::vector<int> basis(rows);
    std::iota(basis.begin(), basis.end(), s0);
    const double eps = 1e-12;
    MarginResult res;
    for (int iter = 0;; ++iter) {
        if (iter > 100000) throw std::runtime_error("simplex did not terminate");
        int enter = -1;
        for (int j = 0; j < rhs; ++j)
            if (at(rows, j) < -eps) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        double best = 0;
        for (int i = 0; i < rows; ++i) {
            const double a = at(i, enter);
            if (a <= eps) continue;
            const double ratio = at(i, rhs) / a;
            if (leave < 0 || ratio < best - eps || (ratio <= best + eps && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) throw std::runtime_error("margin LP unbounded");
        const double piv = at(leave, enter);
        for (int c = 0; c < cols; ++c) at(leave, c) /= piv;
        for (int r = 0; r <= rows; ++r) {
            if (r == leave) continue;
            const double f = at(r, enter);
            if (f == 0) continue;
            for (int c = 0; c < cols; ++c) at(r, c) -= f * at(leave, c);
        }
        basis[leave] = enter;
        ++res.pivots;
    }
    std::vector<double> val(rhs, 0.0);
    for (int i = 0; i < rows; ++i) val[basis[i]] = at(i, rhs);
    res.x.resize(n);
    for (int j = 0; j < n; ++j) res.x[j] = val[j] - val[n + j];
    res.y.resize(m);
    for (int i = 0; i < m; ++i) res.y[i] = std::max(0.0, at(rows, s0 + i));
    res.cap_active = at(rows, s0 + m) > eps;
    // Recompute the margin from x so the result is consistent with the rows.
    double t = cap;
    for (int i = 0; i < m; ++i) t = std::min(t, std::inner_product(A[i].begin(), A[i].end(), res.x.begin(), b[i]));
    res.t = t;
    return res;
}

bool farkas_valid(const std::vector<Row>& A, const std::vector<double>& b, const std::vector<double>& y, double tol) {
    if (y.size() != A.size() || A.empty()) return false;
    const std::size_t n = A[0].size();
    double sy = 0, yb = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] < 0) return false;
        sy += y[i];
        yb += y[i] * b[i];
    }
    if (sy <= 0) return false;
    for (std::size_t j = 0; j < n; ++j) {
        double c = 0;
        for (std::size_t i = 0; i < y.size(); ++i) c += y[i] * A[i][j];
        if (std::abs(c) > tol * sy) return false;
    }
    return yb < -tol * sy;
}

}  // namespace cgeo
