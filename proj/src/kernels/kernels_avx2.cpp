// AVX2+FMA variants of the array kernels. This translation unit is compiled
// with -mavx2 -mfma; nothing here runs unless the runtime CPU check in
// avx2_backend() passes.

#include "mnlab/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#define MNLAB_HAVE_AVX2_BUILD 1
#include <immintrin.h>

#include <algorithm>
#include <cmath>
#endif

namespace mnlab::kernels {

#if MNLAB_HAVE_AVX2_BUILD

namespace {

void scale_powers_avx2(const double* re, const double* im, std::size_t n,
                       double r, double* out_re, double* out_im) {
    const double r2 = r * r;
    const __m256d step = _mm256_set1_pd(r2 * r2);
    __m256d p = _mm256_set_pd(r2 * r, r2, r, 1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out_re + i, _mm256_mul_pd(_mm256_loadu_pd(re + i), p));
        _mm256_storeu_pd(out_im + i, _mm256_mul_pd(_mm256_loadu_pd(im + i), p));
        p = _mm256_mul_pd(p, step);
    }
    double tail = 1.0;
    for (std::size_t m = 0; m < i; ++m) tail *= r;
    for (; i < n; ++i) {
        out_re[i] = re[i] * tail;
        out_im[i] = im[i] * tail;
        tail *= r;
    }
}

void magnitude_squared_avx2(const double* re, const double* im, std::size_t n,
                            double* out) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d a = _mm256_loadu_pd(re + i);
        const __m256d b = _mm256_loadu_pd(im + i);
        _mm256_storeu_pd(out + i,
                         _mm256_fmadd_pd(a, a, _mm256_mul_pd(b, b)));
    }
    for (; i < n; ++i) out[i] = re[i] * re[i] + im[i] * im[i];
}

void horner_points_avx2(const double* cre, const double* cim, std::size_t nc,
                        const double* zre, const double* zim, std::size_t np,
                        double* out_re, double* out_im) {
    if (nc == 0) {
        std::fill(out_re, out_re + np, 0.0);
        std::fill(out_im, out_im + np, 0.0);
        return;
    }
    std::size_t k = 0;
    for (; k + 4 <= np; k += 4) {
        const __m256d zr = _mm256_loadu_pd(zre + k);
        const __m256d zi = _mm256_loadu_pd(zim + k);
        __m256d wr = _mm256_set1_pd(cre[nc - 1]);
        __m256d wi = _mm256_set1_pd(cim[nc - 1]);
        for (std::size_t m = nc - 1; m-- > 0;) {
            // w = w*z + c[m]
            const __m256d tr = _mm256_fmsub_pd(
                wr, zr, _mm256_fmsub_pd(wi, zi, _mm256_set1_pd(cre[m])));
            wi = _mm256_fmadd_pd(wr, zi,
                                 _mm256_fmadd_pd(wi, zr,
                                                 _mm256_set1_pd(cim[m])));
            wr = tr;
        }
        _mm256_storeu_pd(out_re + k, wr);
        _mm256_storeu_pd(out_im + k, wi);
    }
    for (; k < np; ++k) {
        double wr = cre[nc - 1], wi = cim[nc - 1];
        const double zr = zre[k], zi = zim[k];
        for (std::size_t m = nc - 1; m-- > 0;) {
            const double tr = wr * zr - wi * zi + cre[m];
            wi = wr * zi + wi * zr + cim[m];
            wr = tr;
        }
        out_re[k] = wr;
        out_im[k] = wi;
    }
}

void axpy_cplx_avx2(std::complex<double> alpha, const double* xre,
                    const double* xim, std::size_t n, double* yre,
                    double* yim) {
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xr = _mm256_loadu_pd(xre + i);
        const __m256d xi = _mm256_loadu_pd(xim + i);
        __m256d yr = _mm256_loadu_pd(yre + i);
        __m256d yi = _mm256_loadu_pd(yim + i);
        yr = _mm256_add_pd(yr, _mm256_fmsub_pd(ar, xr, _mm256_mul_pd(ai, xi)));
        yi = _mm256_add_pd(yi, _mm256_fmadd_pd(ar, xi, _mm256_mul_pd(ai, xr)));
        _mm256_storeu_pd(yre + i, yr);
        _mm256_storeu_pd(yim + i, yi);
    }
    const double a = alpha.real(), b = alpha.imag();
    for (; i < n; ++i) {
        yre[i] += a * xre[i] - b * xim[i];
        yim[i] += a * xim[i] + b * xre[i];
    }
}

double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double reduce_sum_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i];
    return s;
}

double reduce_max_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_max_pd(acc, _mm256_loadu_pd(x + i));
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    const __m128d m2 = _mm_max_pd(lo, hi);
    double m = _mm_cvtsd_f64(_mm_max_sd(m2, _mm_unpackhi_pd(m2, m2)));
    for (; i < n; ++i) m = std::max(m, x[i]);
    return m;
}

double pow_sum_avx2(const double* m2, std::size_t n, double e) {
    std::size_t i = 0;
    __m256d acc = _mm256_setzero_pd();
    if (e == 0.5) {
        for (; i + 4 <= n; i += 4)
            acc = _mm256_add_pd(acc, _mm256_sqrt_pd(_mm256_loadu_pd(m2 + i)));
        double s = hsum(acc);
        for (; i < n; ++i) s += std::sqrt(m2[i]);
        return s;
    }
    if (e == 1.0) return reduce_sum_avx2(m2, n);
    if (e == 2.0) {
        for (; i + 4 <= n; i += 4) {
            const __m256d v = _mm256_loadu_pd(m2 + i);
            acc = _mm256_fmadd_pd(v, v, acc);
        }
        double s = hsum(acc);
        for (; i < n; ++i) s += m2[i] * m2[i];
        return s;
    }
    double s = 0.0;
    for (; i < n; ++i) s += m2[i] > 0.0 ? std::pow(m2[i], e) : 0.0;
    return s;
}

const Backend kAvx2 = {
    scale_powers_avx2, magnitude_squared_avx2, horner_points_avx2,
    axpy_cplx_avx2,    reduce_sum_avx2,        reduce_max_avx2,
    pow_sum_avx2,
};

}  // namespace

const Backend* avx2_backend() {
    static const Backend* b = [] {
        return (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
                   ? &kAvx2
                   : nullptr;
    }();
    return b;
}

#else

const Backend* avx2_backend() { return nullptr; }

#endif

}  // namespace mnlab::kernels
