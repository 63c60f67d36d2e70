#pragma once

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

// Low-level array kernels used by the norm and series machinery. Every kernel
// has a scalar reference implementation and, on x86-64 with AVX2+FMA, a SIMD
// variant. The active backend is chosen once at startup (override with
// MNLAB_SIMD=scalar|avx2|auto) and the two are equivalence-tested against
// each other in tests/test_kernels.cpp.
//
// Complex arrays use split (SoA) layout: separate re[]/im[] pointers.

namespace mnlab::kernels {

struct Backend {
    // out[i] = in[i] * r^i   (split complex, geometric scaling)
    void (*scale_powers)(const double* re, const double* im, std::size_t n,
                         double r, double* out_re, double* out_im);
    // out[i] = re[i]^2 + im[i]^2
    void (*magnitude_squared)(const double* re, const double* im,
                              std::size_t n, double* out);
    // Horner evaluation of one polynomial at many points (split complex):
    // out[k] = sum_m coef[m] * z[k]^m
    void (*horner_points)(const double* coef_re, const double* coef_im,
                          std::size_t ncoef, const double* z_re,
                          const double* z_im, std::size_t npts,
                          double* out_re, double* out_im);
    // y += alpha * x (split complex)
    void (*axpy_cplx)(std::complex<double> alpha, const double* x_re,
                      const double* x_im, std::size_t n, double* y_re,
                      double* y_im);
    double (*reduce_sum)(const double* x, std::size_t n);
    double (*reduce_max)(const double* x, std::size_t n);
    // sum_i m2[i]^e  where m2 holds squared magnitudes; e = p/2.
    // Fast paths for e = 0.5, 1, 2; general exponent falls back to std::pow.
    double (*pow_sum)(const double* m2, std::size_t n, double e);
};

// Active backend (dispatch decided on first use).
const Backend& active();
std::string_view backend_name();

// Reference and SIMD tables, exposed for the equivalence tests.
const Backend& scalar_backend();
const Backend* avx2_backend();  // nullptr when unsupported at runtime

// In-place radix-2 complex FFT on split arrays, n a power of two.
// sign=+1 computes X[k] = sum_m x[m] e^{+2 pi i mk/n} (no 1/n factor).
void fft_pow2(double* re, double* im, std::size_t n, int sign);

bool is_pow2(std::size_t n);
std::size_t ceil_pow2(std::size_t n);

}  // namespace mnlab::kernels
