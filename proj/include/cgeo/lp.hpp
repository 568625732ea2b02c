#pragma once

#include <vector>

namespace cgeo {

using Row = std::vector<double>;

// max t subject to A_i . x + b_i >= t for every row, x free, t <= cap.
struct MarginResult {
    double t = 0;
    std::vector<double> x;
    // Nonnegative row multipliers summing to 1 (when the cap is inactive).
    // If t < 0 they certify infeasibility of A x + b >= 0:
    // sum y_i A_i = 0 and sum y_i b_i = t < 0.
    std::vector<double> y;
    bool cap_active = false;
    int pivots = 0;
};

MarginResult max_margin(const std::vector<Row>& A, const std::vector<double>& b, double cap = 1.0);

// |sum y_i A_i| <= tol per coordinate, y >= 0, sum y_i b_i < -tol.
bool farkas_valid(const std::vector<Row>& A, const std::vector<double>& b, const std::vector<double>& y,
                  double tol = 1e-9);

}  // namespace cgeo
