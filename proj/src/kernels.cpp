#include "cgeo/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define CGEO_X86 1
#endif
#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace cgeo {

namespace {

void minplus_sqrt_scalar(double* m, const double* d2, double t, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double v = std::sqrt(d2[i]) + t;
        if (v < m[i]) m[i] = v;
    }
}

void mask_le_scalar(const double* m, double thr, std::uint8_t* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = m[i] <= thr;
}

void mask_lt_scalar(const double* m, double thr, std::uint8_t* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = m[i] < thr;
}

void leapfrog_row_scalar(const double* prev, const double* u, const double* north, const double* south,
                         double c2, double* out, std::size_t n) {
    if (n == 0) return;
    out[0] = 0;
    out[n - 1] = 0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double lap = u[i - 1] + u[i + 1] + north[i] + south[i] - 4.0 * u[i];
        out[i] = 2.0 * u[i] - prev[i] + c2 * lap;
    }
}

void interval_sign_scalar(const double* dt, const double* r2, double tau, std::int8_t* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double t2 = dt[i] * dt[i];
        const double iv = t2 - r2[i];
        const double tol = tau * (t2 + r2[i]);
        out[i] = iv > tol ? 1 : (iv < -tol ? -1 : 0);
    }
}

const Kernels kScalar{"scalar", minplus_sqrt_scalar, mask_le_scalar, mask_lt_scalar, leapfrog_row_scalar,
                      interval_sign_scalar};

#ifdef CGEO_X86

__attribute__((target("avx2"))) void minplus_sqrt_avx2(double* m, const double* d2, double t, std::size_t n) {
    const __m256d vt = _mm256_set1_pd(t);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_add_pd(_mm256_sqrt_pd(_mm256_loadu_pd(d2 + i)), vt);
        const __m256d cur = _mm256_loadu_pd(m + i);
        // keep cur on ties and NaN-free inputs, matching the scalar branch
        const __m256d lt = _mm256_cmp_pd(v, cur, _CMP_LT_OQ);
        _mm256_storeu_pd(m + i, _mm256_blendv_pd(cur, v, lt));
    }
    minplus_sqrt_scalar(m + i, d2 + i, t, n - i);
}

__attribute__((target("avx2"))) void mask_cmp_avx2(const double* m, double thr, std::uint8_t* out, std::size_t n,
                                                   bool le) {
    const __m256d vthr = _mm256_set1_pd(thr);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(m + i);
        const __m256d c = le ? _mm256_cmp_pd(v, vthr, _CMP_LE_OQ) : _mm256_cmp_pd(v, vthr, _CMP_LT_OQ);
        const int bits = _mm256_movemask_pd(c);
        out[i] = bits & 1;
        out[i + 1] = (bits >> 1) & 1;
        out[i + 2] = (bits >> 2) & 1;
        out[i + 3] = (bits >> 3) & 1;
    }
    if (le)
        mask_le_scalar(m + i, thr, out + i, n - i);
    else
        mask_lt_scalar(m + i, thr, out + i, n - i);
}

__attribute__((target("avx2"))) void mask_le_avx2(const double* m, double thr, std::uint8_t* out, std::size_t n) {
    mask_cmp_avx2(m, thr, out, n, true);
}

__attribute__((target("avx2"))) void mask_lt_avx2(const double* m, double thr, std::uint8_t* out, std::size_t n) {
    mask_cmp_avx2(m, thr, out, n, false);
}

__attribute__((target("avx2"))) void leapfrog_row_avx2(const double* prev, const double* u, const double* north,
                                                       const double* south, double c2, double* out, std::size_t n) {
    if (n < 2) {
        leapfrog_row_scalar(prev, u, north, south, c2, out, n);
        return;
    }
    out[0] = 0;
    out[n - 1] = 0;
    const __m256d two = _mm256_set1_pd(2.0), four = _mm256_set1_pd(4.0), vc2 = _mm256_set1_pd(c2);
    std::size_t i = 1;
    for (; i + 4 <= n - 1; i += 4) {
        const __m256d uc = _mm256_loadu_pd(u + i);
        // same association order as the scalar loop
        __m256d lap = _mm256_add_pd(_mm256_loadu_pd(u + i - 1), _mm256_loadu_pd(u + i + 1));
        lap = _mm256_add_pd(lap, _mm256_loadu_pd(north + i));
        lap = _mm256_add_pd(lap, _mm256_loadu_pd(south + i));
        lap = _mm256_sub_pd(lap, _mm256_mul_pd(four, uc));
        __m256d r = _mm256_sub_pd(_mm256_mul_pd(two, uc), _mm256_loadu_pd(prev + i));
        r = _mm256_add_pd(r, _mm256_mul_pd(vc2, lap));
        _mm256_storeu_pd(out + i, r);
    }
    for (; i + 1 < n; ++i) {
        const double lap = u[i - 1] + u[i + 1] + north[i] + south[i] - 4.0 * u[i];
        out[i] = 2.0 * u[i] - prev[i] + c2 * lap;
    }
}

__attribute__((target("avx2"))) void interval_sign_avx2(const double* dt, const double* r2, double tau,
                                                        std::int8_t* out, std::size_t n) {
    const __m256d vtau = _mm256_set1_pd(tau);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d t = _mm256_loadu_pd(dt + i);
        const __m256d r = _mm256_loadu_pd(r2 + i);
        const __m256d t2 = _mm256_mul_pd(t, t);
        const __m256d iv = _mm256_sub_pd(t2, r);
        const __m256d tol = _mm256_mul_pd(vtau, _mm256_add_pd(t2, r));
        const int pos = _mm256_movemask_pd(_mm256_cmp_pd(iv, tol, _CMP_GT_OQ));
        const int neg = _mm256_movemask_pd(_mm256_cmp_pd(iv, _mm256_sub_pd(zero, tol), _CMP_LT_OQ));
        for (int k = 0; k < 4; ++k) out[i + k] = ((pos >> k) & 1) ? 1 : (((neg >> k) & 1) ? -1 : 0);
    }
    interval_sign_scalar(dt + i, r2 + i, tau, out + i, n - i);
}

const Kernels kAvx2{"avx2", minplus_sqrt_avx2, mask_le_avx2, mask_lt_avx2, leapfrog_row_avx2, interval_sign_avx2};

#endif

#if defined(__aarch64__)

void minplus_sqrt_neon(double* m, const double* d2, double t, std::size_t n) {
    const float64x2_t vt = vdupq_n_f64(t);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t v = vaddq_f64(vsqrtq_f64(vld1q_f64(d2 + i)), vt);
        const float64x2_t cur = vld1q_f64(m + i);
        vst1q_f64(m + i, vbslq_f64(vcltq_f64(v, cur), v, cur));
    }
    minplus_sqrt_scalar(m + i, d2 + i, t, n - i);
}

void mask_le_neon(const double* m, double thr, std::uint8_t* out, std::size_t n) {
    const float64x2_t vthr = vdupq_n_f64(thr);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint64x2_t c = vcleq_f64(vld1q_f64(m + i), vthr);
        out[i] = vgetq_lane_u64(c, 0) != 0;
        out[i + 1] = vgetq_lane_u64(c, 1) != 0;
    }
    mask_le_scalar(m + i, thr, out + i, n - i);
}

void mask_lt_neon(const double* m, double thr, std::uint8_t* out, std::size_t n) {
    const float64x2_t vthr = vdupq_n_f64(thr);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint64x2_t c = vcltq_f64(vld1q_f64(m + i), vthr);
        out[i] = vgetq_lane_u64(c, 0) != 0;
        out[i + 1] = vgetq_lane_u64(c, 1) != 0;
    }
    mask_lt_scalar(m + i, thr, out + i, n - i);
}

const Kernels kNeon{"neon", minplus_sqrt_neon, mask_le_neon, mask_lt_neon, leapfrog_row_scalar,
                    interval_sign_scalar};

#endif

const Kernels& select_kernels() {
    const char* force = std::getenv("CGEO_KERNELS");
    if (force && std::strcmp(force, "scalar") == 0) return kScalar;
    if (auto k = kernels_avx2()) return *k;
    if (auto k = kernels_neon()) return *k;
    return kScalar;
}

}  // namespace

const Kernels& kernels_scalar() { return kScalar; }

const Kernels* kernels_avx2() {
#ifdef CGEO_X86
    if (__builtin_cpu_supports("avx2")) return &kAvx2;
#endif
    return nullptr;
}

const Kernels* kernels_neon() {
#if defined(__aarch64__)
    return &kNeon;
#else
    return nullptr;
#endif
}

const Kernels& kernels() {
    static const Kernels& k = select_kernels();
    return k;
}

}  // namespace cgeo
