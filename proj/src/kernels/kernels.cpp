#include "mnlab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace mnlab::kernels {

namespace {

// ---------------------------------------------------------------------------
// Scalar reference kernels
// ---------------------------------------------------------------------------

void scale_powers_scalar(const double* re, const double* im, std::size_t n,
                         double r, double* out_re, double* out_im) {
    double p = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        out_re[i] = re[i] * p;
        out_im[i] = im[i] * p;
        p *= r;
    }
}

void magnitude_squared_scalar(const double* re, const double* im,
                              std::size_t n, double* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = re[i] * re[i] + im[i] * im[i];
}

void horner_points_scalar(const double* cre, const double* cim,
                          std::size_t nc, const double* zre, const double* zim,
                          std::size_t np, double* out_re, double* out_im) {
    if (nc == 0) {
        std::fill(out_re, out_re + np, 0.0);
        std::fill(out_im, out_im + np, 0.0);
        return;
    }
    for (std::size_t k = 0; k < np; ++k) {
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

void axpy_cplx_scalar(std::complex<double> alpha, const double* xre,
                      const double* xim, std::size_t n, double* yre,
                      double* yim) {
    const double ar = alpha.real(), ai = alpha.imag();
    for (std::size_t i = 0; i < n; ++i) {
        yre[i] += ar * xre[i] - ai * xim[i];
        yim[i] += ar * xim[i] + ai * xre[i];
    }
}

double reduce_sum_scalar(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
}

double reduce_max_scalar(const double* x, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, x[i]);
    return m;
}

double pow_sum_scalar(const double* m2, std::size_t n, double e) {
    double s = 0.0;
    if (e == 0.5) {
        for (std::size_t i = 0; i < n; ++i) s += std::sqrt(m2[i]);
    } else if (e == 1.0) {
        for (std::size_t i = 0; i < n; ++i) s += m2[i];
    } else if (e == 2.0) {
        for (std::size_t i = 0; i < n; ++i) s += m2[i] * m2[i];
    } else {
        for (std::size_t i = 0; i < n; ++i)
            s += m2[i] > 0.0 ? std::pow(m2[i], e) : 0.0;
    }
    return s;
}

const Backend kScalar = {
    scale_powers_scalar, magnitude_squared_scalar, horner_points_scalar,
    axpy_cplx_scalar,    reduce_sum_scalar,        reduce_max_scalar,
    pow_sum_scalar,
};

const Backend* pick_backend(std::string_view* name) {
    const char* env = std::getenv("MNLAB_SIMD");
    const std::string mode = env ? env : "auto";
    if (mode != "scalar") {
        if (const Backend* b = avx2_backend()) {
            if (mode == "auto" || mode == "avx2") {
                *name = "avx2";
                return b;
            }
        }
    }
    *name = "scalar";
    return &kScalar;
}

std::string_view g_name;
const Backend* g_active = nullptr;

}  // namespace

const Backend& scalar_backend() { return kScalar; }

const Backend& active() {
    if (!g_active) g_active = pick_backend(&g_name);
    return *g_active;
}

std::string_view backend_name() {
    active();
    return g_name;
}

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t ceil_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void fft_pow2(double* re, double* im, std::size_t n, int sign) {
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) {
            std::swap(re[i], re[j]);
            std::swap(im[i], im[j]);
        }
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * M_PI / static_cast<double>(len);
        const double wr0 = std::cos(ang), wi0 = std::sin(ang);
        for (std::size_t i = 0; i < n; i += len) {
            double wr = 1.0, wi = 0.0;
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::size_t a = i + k, b = i + k + len / 2;
                const double ur = re[a], ui = im[a];
                const double vr = re[b] * wr - im[b] * wi;
                const double vi = re[b] * wi + im[b] * wr;
                re[a] = ur + vr;
                im[a] = ui + vi;
                re[b] = ur - vr;
                im[b] = ui - vi;
                const double nwr = wr * wr0 - wi * wi0;
                wi = wr * wi0 + wi * wr0;
                wr = nwr;
            }
        }
    }
}

}  // namespace mnlab::kernels
