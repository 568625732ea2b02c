#include "cgeo/sweep.hpp"

#include <cmath>
#include <limits>

#include "cgeo/kernels.hpp"

namespace cgeo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Lower envelope of parabolas; f may contain +inf.
void dt1d(const double* f, int n, double* d, int* v, double* z) {
    int k = 0;
    int first = -1;
    for (int q = 0; q < n; ++q)
        if (f[q] < kInf) {
            first = q;
            break;
        }
    if (first < 0) {
        for (int q = 0; q < n; ++q) d[q] = kInf;
        return;
    }
    v[0] = first;
    z[0] = -kInf;
    z[1] = kInf;
    for (int q = first + 1; q < n; ++q) {
        if (!(f[q] < kInf)) continue;
        double s;
        for (;;) {
            const int p = v[k];
            s = ((f[q] + double(q) * q) - (f[p] + double(p) * p)) / (2.0 * (q - p));
            if (s <= z[k] && k > 0)
                --k;
            else
                break;
        }
        if (s <= z[k]) {
            // k == 0 and the new parabola dominates everywhere
            v[0] = q;
            z[0] = -kInf;
            z[1] = kInf;
            continue;
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = kInf;
    }
    k = 0;
    for (int q = 0; q < n; ++q) {
        while (z[k + 1] < q) ++k;
        const double dq = q - v[k];
        d[q] = dq * dq + f[v[k]];
    }
}

}  // namespace

std::vector<double> edt_squared(const std::uint8_t* mask, const std::vector<int>& dims) {
    std::size_t total = 1;
    for (int d : dims) total *= static_cast<std::size_t>(d);
    std::vector<double> g(total);
    for (std::size_t i = 0; i < total; ++i) g[i] = mask[i] ? 0.0 : kInf;
    int maxd = 1;
    for (int d : dims) maxd = std::max(maxd, d);
    std::vector<double> f(maxd), out(maxd), z(maxd + 1);
    std::vector<int> v(maxd);
    const int nd = static_cast<int>(dims.size());
    for (int ax = 0; ax < nd; ++ax) {
        std::size_t stride = 1;
        for (int k = ax + 1; k < nd; ++k) stride *= static_cast<std::size_t>(dims[k]);
        const int len = dims[ax];
        const std::size_t block = stride * static_cast<std::size_t>(len);
        for (std::size_t base = 0; base < total; base += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                const std::size_t start = base + off;
                for (int q = 0; q < len; ++q) f[q] = g[start + q * stride];
                dt1d(f.data(), len, out.data(), v.data(), z.data());
                for (int q = 0; q < len; ++q) g[start + q * stride] = out[q];
            }
        }
    }
    return g;
}

Bitmap causal_sweep(const Bitmap& set, const GridWindow& g, bool future, bool strict) {
    const Kernels& K = kernels();
    const std::size_t S = g.slice_size();
    const int nT = g.time_len();
    std::vector<int> dims(g.s, g.space_len());
    std::vector<double> M(S, kInf);
    Bitmap out(g.size(), 0);
    for (int step = 0; step < nT; ++step) {
        const int ti = future ? step : nT - 1 - step;
        const double t = step;  // time measured along the sweep direction
        const std::uint8_t* sl = set.data() + static_cast<std::size_t>(ti) * S;
        std::uint8_t* o = out.data() + static_cast<std::size_t>(ti) * S;
        bool any = false;
        for (std::size_t i = 0; i < S && !any; ++i) any = sl[i];
        if (strict) K.mask_lt(M.data(), t - 1e-9, o, S);
        if (any) {
            const std::vector<double> d2 = edt_squared(sl, dims);
            K.minplus_sqrt(M.data(), d2.data(), t, S);
        }
        if (!strict) K.mask_le(M.data(), t + 1e-9, o, S);
    }
    return out;
}

Bitmap timelike_between(const Bitmap& set, const GridWindow& g) {
    return bit_and(causal_sweep(set, g, true, true), causal_sweep(set, g, false, true));
}

std::vector<double> edt_window(const Bitmap& set, const GridWindow& g) {
    std::vector<int> dims(g.s + 1, g.space_len());
    dims[0] = g.time_len();
    return edt_squared(set.data(), dims);
}

}  // namespace cgeo
