#pragma once

#include <cstddef>
#include <vector>

#include "mnlab/power_series.hpp"

namespace mnlab {

/// Arc means (f_[p](r))_{N,l} over the uniform partition I_{N,l} of [0,2pi].
/// Invariant: sum_l values[l]^p equals M_p(r,f)^p on the shared quadrature
/// grid (each arc carries its own midpoint sub-grid; arcs never straddle
/// nodes).
struct ArcMeanVector {
    std::size_t N = 1;
    double r = 0.0;
    double p = 2.0;
    std::size_t samples_per_arc = 0;
    std::vector<double> values;
};

struct HLReport {
    double lhs = 0.0;             // M_q(r, f)
    double rhs_classical = 0.0;   // M_p(rho,f) / (rho-r)^{1/p-1/q}
    double rhs_improved = 0.0;    // amalgam form of the same bound
    long N = 1;                   // E(1/(rho-r)) arcs
    double const_classical = 0.0; // lhs / rhs_classical
    double const_improved = 0.0;  // lhs / rhs_improved
};

/// Number of circle samples guaranteeing trigonometric exactness for |f|^2:
/// 2*degree+1 rounded up to a power of two (and at least min_n).
std::size_t default_circle_samples(const PowerSeries& f,
                                   std::size_t min_n = 64);

/// M_p(r,f). For p < infinity: midpoint quadrature of |f|^p over the circle
/// at n samples (defaults to the trig-exact count). For p = infinity:
/// sampled max plus one golden-section refinement near the argmax.
double integral_mean(const PowerSeries& f, double r, double p,
                     std::size_t n_samples = 0);

ArcMeanVector arc_means(const PowerSeries& f, double r, double p,
                        std::size_t N, std::size_t samples_per_arc = 0);

/// (sum v^q)^{1/q}, max for q = infinity; quasi-norm accepted for q < 1.
double lq_norm(const std::vector<double>& v, double q);
double lq_norm(const ArcMeanVector& v, double q);

/// Both sides of the classical and improved Hardy-Littlewood bounds at
/// (r, rho) with N(r,rho) = E(1/(rho-r)). Requires 0 <= r < rho <= 1 and
/// 0 < p < q.
HLReport hl_report(const PowerSeries& f, double p, double q, double r,
                   double rho, std::size_t samples_per_arc = 0);

/// Arc means of the sampled radial maximal function R(f) on |z| = rho.
/// The radial sup uses the nested grid rho*(1 - 2^{-k}), k = 0..radial_steps,
/// so the result is monotone non-decreasing in radial_steps.
ArcMeanVector radial_maximal_arc_means(const PowerSeries& f, double rho,
                                       double p, std::size_t N,
                                       int radial_steps,
                                       std::size_t samples_per_arc = 0);

/// Nonnegative step function on a uniform grid over [x0, x1]; the carrier for
/// the real-line maximal-operator check.
struct StepFunction {
    double x0 = 0.0, x1 = 1.0;
    std::vector<double> values;  // cell c covers [x0 + c*h, x0 + (c+1)*h)
    double h() const { return (x1 - x0) / static_cast<double>(values.size()); }
};

struct MaximalAmalgamReport {
    double norm_in = 0.0;
    double norm_out = 0.0;
    StepFunction maximal;  // M(input) sampled exactly at cell midpoints
};

/// Hardy-Littlewood maximal function of a step function, evaluated exactly at
/// cell midpoints by an interval sweep over breakpoint-delimited candidates,
/// followed by the two block amalgam norms (l^q of per-block L^p means over
/// blocks of width 2pi/N). Requires p > 1, q > 1 and nonnegative input.
MaximalAmalgamReport hl_maximal_amalgam(const StepFunction& input, double p,
                                        double q, std::size_t N);

}  // namespace mnlab
