#pragma once

#include <cstddef>
#include <cstdint>

namespace cgeo {

// Hot inner loops. Each table entry has a scalar reference version and, where
// the CPU supports it, a vector version with identical results.
struct Kernels {
    const char* name;
    // m[i] = min(m[i], sqrt(d2[i]) + t)
    void (*minplus_sqrt)(double* m, const double* d2, double t, std::size_t n);
    // out[i] = m[i] <= thr
    void (*mask_le)(const double* m, double thr, std::uint8_t* out, std::size_t n);
    // out[i] = m[i] < thr
    void (*mask_lt)(const double* m, double thr, std::uint8_t* out, std::size_t n);
    // out[i] = 2 u[i] - prev[i] + c2 * (w[i] + e[i] + north[i] + south[i] - 4 u[i])
    // where w/e are u shifted by one; i runs over 1..n-2, ends copy zero.
    void (*leapfrog_row)(const double* prev, const double* u, const double* north, const double* south,
                         double c2, double* out, std::size_t n);
    // Interval sign of (dt[i], r2[i]) with r2 the squared spatial length:
    // +1 timelike, -1 spacelike, 0 lightlike within the relative tolerance tau.
    void (*interval_sign)(const double* dt, const double* r2, double tau, std::int8_t* out, std::size_t n);
};

const Kernels& kernels_scalar();
// nullptr when the running CPU lacks the instruction set.
const Kernels* kernels_avx2();
const Kernels* kernels_neon();
// Best available; CGEO_KERNELS=scalar forces the reference path.
const Kernels& kernels();

}  // namespace cgeo
