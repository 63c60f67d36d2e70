#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace mnlab {

using cplx = std::complex<double>;

/// Truncated Taylor series of an analytic function on the unit disc.
/// Immutable after construction; all operations below are pure.
class PowerSeries {
  public:
    PowerSeries() : coeffs_(1, cplx{0.0}) {}
    explicit PowerSeries(std::vector<cplx> coeffs);

    static PowerSeries constant(cplx c);
    static PowerSeries monomial(std::size_t n, cplx c = 1.0);

    const std::vector<cplx>& coeffs() const { return coeffs_; }
    std::size_t degree() const { return coeffs_.size() - 1; }
    cplx coeff(std::size_t m) const {
        return m < coeffs_.size() ? coeffs_[m] : cplx{0.0};
    }
    cplx at_zero() const { return coeffs_[0]; }

    /// Number of nonzero coefficients (sparse evaluation cutoff).
    std::size_t nnz() const;

    cplx evaluate(cplx z) const;

  private:
    std::vector<cplx> coeffs_;
};

/// Samples of a function on the circle |z| = r at theta_k = 2 pi (k+offset)/n.
struct CircleSamples {
    double radius = 0.0;
    double offset = 0.0;  // fraction of one grid step
    std::vector<double> re, im;
    std::size_t size() const { return re.size(); }
    cplx value(std::size_t k) const { return {re[k], im[k]}; }
};

/// Single atom of the atomic decomposition: the normalized kernel
///   (1-|w|)^{M-1/p} what(|w|)^{-1/q} (1 - conj(w) z)^{-M}
/// centered at a grid point w = z_{j,l}.
struct AtomSpec {
    cplx center;
    double exponent_M = 0.0;
    double p = 2.0, q = 2.0;
    double omega_hat_at_center = 1.0;
    // smallest admissible exponent for the hosting weight:
    // M must exceed 1 + 1/p + (alpha0+lambda)/q
    double threshold = 0.0;
};

/// Reproducible per-(j,l) random signs.
class SignPattern {
  public:
    explicit SignPattern(std::uint64_t seed) : state_(seed) {}
    /// Next sign in row-major (j, l) order; values are exactly +1 or -1.
    int next();

  private:
    std::uint64_t state_;
};

// --- evaluation --------------------------------------------------------

/// values[k] = f(r e^{i theta_k}), theta_k = 2 pi k / n. Rejects r outside
/// [0,1]. Uses the FFT when n is a power of two, Horner otherwise.
CircleSamples evaluate_on_circle(const PowerSeries& f, double r,
                                 std::size_t n);

/// Same, with theta_k = 2 pi (k + offset)/n. Internal grids use offset 0.5
/// so that arc partitions never straddle quadrature nodes.
CircleSamples evaluate_on_circle_offset(const PowerSeries& f, double r,
                                        std::size_t n, double offset);

/// Evaluate at an arbitrary set of points z[k] (Horner kernel).
std::vector<cplx> evaluate_at_points(const PowerSeries& f,
                                     std::span<const cplx> pts);

// --- calculus ----------------------------------------------------------

PowerSeries derivative(const PowerSeries& f, std::size_t order = 1);
/// Antiderivative with zero constant term: derivative(primitive(f)) == f.
PowerSeries primitive(const PowerSeries& f);
/// Coefficients of f*g truncated at max_degree (exact convolution below it).
PowerSeries cauchy_product(const PowerSeries& f, const PowerSeries& g,
                           std::size_t max_degree);

PowerSeries add(const PowerSeries& f, const PowerSeries& g);
PowerSeries scale(const PowerSeries& f, cplx alpha);

// --- test-function families ---------------------------------------------

/// Lacunary series sum_k coeffs[k] z^{2^{k0+k}}; gap ratio exactly 2.
/// Rejects 2^{k0+m-1} above degree_budget.
PowerSeries lacunary_series(std::size_t k0, std::size_t m,
                            std::span<const cplx> coeffs,
                            std::size_t degree_budget = 1u << 20);

/// Truncated binomial expansion of the single-atom kernel. Rejects
/// spec.exponent_M at or below spec.threshold.
PowerSeries atom_function(const AtomSpec& spec, std::size_t max_degree);

/// Coefficient-wise signed sum  sum_i a[i] * sign[i] * atom[i].
/// Index sets of atoms, weights and signs must agree.
PowerSeries rademacher_combination(std::span<const AtomSpec> atoms,
                                   std::span<const double> weights,
                                   std::span<const int> signs,
                                   std::size_t max_degree);

/// Center grid z_{j,l} = ((r_j + r_{j-1})/2) e^{2 pi i (l+1/2)/K^{j+2}},
/// rings j = 1..j_max.
std::vector<cplx> atom_center_grid(int K, int j_max);

double pseudohyperbolic_distance(cplx a, cplx b);

/// E(x): the integer with E(x) <= x < E(x)+1.
long paper_floor(double x);

}  // namespace mnlab
