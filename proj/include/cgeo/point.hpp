#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgeo {

// Largest supported number of coordinates (time + space). Lifted regions of a
// 1+3 problem need 5.
inline constexpr int kMaxCoords = 6;

// Relative tolerance for deciding that an interval is null.
inline constexpr double kTau = 1e-9;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Event in R^{1+s}. c[0] is time.
struct Point {
    int n = 0;  // number of coordinates, 1+s
    std::array<double, kMaxCoords> c{};

    Point() = default;
    explicit Point(int ncoords);
    Point(std::initializer_list<double> v);
    static Point from(const std::vector<double>& v);

    int space_dim() const { return n - 1; }
    double& operator[](int i) { return c[i]; }
    double operator[](int i) const { return c[i]; }
    std::vector<double> to_vector() const { return {c.begin(), c.begin() + n}; }

    Point operator+(const Point& o) const;
    Point operator-(const Point& o) const;
    Point operator*(double k) const;
    Point operator-() const;
    bool operator==(const Point& o) const;
};

void require_same_dim(const Point& a, const Point& b);

// Minkowski product with signature (+,-,...,-).
double mdot(const Point& a, const Point& b);
// Minkowski square x^2 = x0^2 - |x|^2.
double msq(const Point& a);
// Euclidean products, used for affine functionals and distances.
double edot(const Point& a, const Point& b);
double enorm(const Point& a);
double spatial_norm(const Point& a);

enum class CausalClass {
    TimelikeFuture,
    TimelikePast,
    LightlikeFuture,
    LightlikePast,
    Spacelike,
    Coincident,
};

const char* to_string(CausalClass k);
CausalClass time_reverse(CausalClass k);

// Classification of the displacement y - x.
CausalClass classify(const Point& x, const Point& y);
CausalClass classify_displacement(const Point& d);

inline bool is_timelike(CausalClass k) {
    return k == CausalClass::TimelikeFuture || k == CausalClass::TimelikePast;
}
inline bool is_causal(CausalClass k) { return k != CausalClass::Spacelike; }
inline bool is_future(CausalClass k) {
    return k == CausalClass::TimelikeFuture || k == CausalClass::LightlikeFuture;
}

// y in I+(x), y in J+(x) with tolerance.
bool timelike_future(const Point& x, const Point& y);
bool causal_future(const Point& x, const Point& y);

std::string format_point(const Point& p);

}  // namespace cgeo
