#include "cgeo/poincare.hpp"

#include <cmath>
#include <stdexcept>

namespace cgeo {

Matrix identity_matrix(int n) {
    Matrix m(static_cast<std::size_t>(n * n), 0.0);
    for (int i = 0; i < n; ++i) m[i * n + i] = 1.0;
    return m;
}

Matrix boost_matrix(int n, double rapidity) {
    Matrix m = identity_matrix(n);
    const double ch = std::cosh(rapidity), sh = std::sinh(rapidity);
    m[0] = ch;
    m[1] = sh;
    m[n] = sh;
    m[n + 1] = ch;
    return m;
}

Matrix rotation_matrix(int n, int i, int j, double angle) {
    if (i < 1 || j <= i || j > n - 1) throw std::invalid_argument("degenerate rotation plane indices");
    Matrix m = identity_matrix(n);
    const double c = std::cos(angle), s = std::sin(angle);
    m[i * n + i] = c;
    m[i * n + j] = -s;
    m[j * n + i] = s;
    m[j * n + j] = c;
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, int n) {
    Matrix r(static_cast<std::size_t>(n * n), 0.0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) r[i * n + j] += a[i * n + k] * b[k * n + j];
    return r;
}

Point mat_apply(const Matrix& m, const Point& x) {
    Point y(x.n);
    for (int i = 0; i < x.n; ++i) {
        double s = 0;
        for (int j = 0; j < x.n; ++j) s += m[i * x.n + j] * x.c[j];
        y.c[i] = s;
    }
    return y;
}

Matrix mat_inverse(const Matrix& m, int n) {
    // Lorentz inverse is eta M^T eta; fall back to the region helper otherwise.
    if (is_lorentz(m, n)) {
        Matrix r(static_cast<std::size_t>(n * n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r[i * n + j] = (i == 0 ? 1 : -1) * (j == 0 ? 1 : -1) * m[j * n + i];
        return r;
    }
    auto tmp = make_linear_map(make_full(n), m);
    return tmp->inv;
}

Affine push_forward(const Affine& f, const Matrix& m, const Point& v) {
    const int n = f.n.n;
    const Matrix inv = mat_inverse(m, n);
    Affine g{Point(n), 0};
    for (int j = 0; j < n; ++j) {
        double s = 0;
        for (int i = 0; i < n; ++i) s += f.n.c[i] * inv[i * n + j];
        g.n.c[j] = s;
    }
    g.d = f.d - edot(g.n, v);
    return g;
}

RegionPtr transform_leaf(const RegionPtr& r, const Matrix& m, const Point& v) {
    switch (r->kind) {
        case Kind::DoubleCone:
            return make_double_cone(mat_apply(m, r->a) + v, mat_apply(m, r->b) + v, r->closed);
        case Kind::Exterior:
            return make_exterior(mat_apply(m, r->a) + v, mat_apply(m, r->b) + v, r->closed);
        case Kind::Wedge:
            return make_wedge(push_forward(r->plus, m, v), push_forward(r->minus, m, v), r->closed);
        default: throw std::invalid_argument("transform_leaf supports cones, exteriors and wedges");
    }
}

RegionPtr wedge_from_poincare(int s, double rapidity, int i, int j, double angle, const Point& translation) {
    const int n = s + 1;
    if (translation.n != n) throw DimensionError("translation dimension mismatch");
    Matrix m = boost_matrix(n, rapidity);
    if (!(i == 0 && j == 0)) m = mat_mul(rotation_matrix(n, i, j, angle), m, n);
    return transform_leaf(make_w1(n), m, translation);
}

}  // namespace cgeo
