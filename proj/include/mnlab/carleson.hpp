#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mnlab/exponents.hpp"
#include "mnlab/power_series.hpp"
#include "mnlab/weights.hpp"

namespace mnlab {

/// Double-indexed sequence {a_{j,l}}: row j has exactly K^{j+2} entries,
/// j = 1..j_max.
struct DoubleIndexSeq {
    int K = 2;
    std::vector<std::vector<double>> rows;  // rows[j-1].size() == K^{j+2}

    static DoubleIndexSeq zeros(int K, int j_max);
    void validate() const;  // throws when a row length is wrong
    int j_max() const { return static_cast<int>(rows.size()); }
};

/// Inner l^p over l, outer l^q over j; max for the infinity branches.
double lpq_norm(const DoubleIndexSeq& a, double p, double q);

/// Angular measure per radius band plus a radial measure: the restricted
/// Borel-measure representation (atoms + piecewise-constant densities).
struct MeasureSpec {
    struct Band {
        double r_lo = 0.0, r_hi = 1.0;
        std::vector<std::pair<double, double>> atoms;  // (theta, mass)
        std::vector<double> density_breakpoints;       // ascending, in [0,2pi]
        std::vector<double> density_values;  // size = breakpoints.size()-1
    };
    std::vector<Band> bands;

    // radial measure: either a weight density or atoms (r, mass)
    bool nu_is_weight = true;
    RadialWeight nu_weight = RadialWeight::standard(0.0);
    std::vector<std::pair<double, double>> nu_atoms;

    const Band& band_at(double r) const;
    /// mu_r([theta_lo, theta_hi)) with wrap-around at 2pi
    double angular_mass(double r, double theta_lo, double theta_hi) const;

    static MeasureSpec lebesgue();  // d mu_r = dtheta/2pi, d nu = dr
    static MeasureSpec from_json_text(const std::string& text);
    std::string to_json_text() const;
};

struct DiscreteSeqResult {
    DoubleIndexSeq seq;
    double norm = 0.0;        // in the multiplier exponents of the profile
    bool tail_flagged = false;  // row contributions stopped decreasing
};

/// Rows K^{j(1/p-1)} what(r_j)^{1/t-1/q} (g'_[s](r_{j-1}))_{K^{j+2},l};
/// norm in l^{s(p/s)', t(q/t)'}.
DiscreteSeqResult tg_discrete_seq(const PowerSeries& g,
                                  const ExponentProfile& profile,
                                  const RadialWeight& w, int K, int j_max);

/// Rows K^{j/p} what(r_j)^{1/t-1/q} (g_[s](r_{j-1}))_{K^{j+2},l}.
DiscreteSeqResult sg_discrete_seq(const PowerSeries& g,
                                  const ExponentProfile& profile,
                                  const RadialWeight& w, int K, int j_max);

/// Rows K^{j(n+1/p)} nuhat(r_j)^{1/t} what(r_j)^{-1/q} (G_[s](r_{j-1}))_{K^{j+2},l}
/// (the G-nu special case of the Carleson problem).
DiscreteSeqResult g_nu_discrete_seq(const PowerSeries& G, int n,
                                    const ExponentProfile& profile,
                                    const RadialWeight& w,
                                    const RadialWeight& nu, int K, int j_max);

/// Discrete Carleson left-hand side
///   (sum_j int_{r_{j-1}}^{r_j} K^{jt(n+1/p)} what(r_j)^{-t/q}
///        (sum_l |a_{j,l}|^s mu_r(I_{K^{j+2},l}))^{t/s} d nu(r))^{1/t}
/// computed exactly for the band/atom measure representation.
double carleson_discrete_lhs(const DoubleIndexSeq& a,
                             const MeasureSpec& measures,
                             const ExponentProfile& profile,
                             const RadialWeight& w, int n);

/// Continuous left-hand side
///   (int_0^1 (int |f^{(n)}|^s |G|^s dtheta/2pi)^{t/s} nu(r) dr)^{1/t}.
double carleson_continuous_lhs(const PowerSeries& f, const PowerSeries& G,
                               int n, double s, double t,
                               const RadialWeight& nu, int radial_nodes = 128);

struct MultiplierEstimate {
    double brute = 0.0;    // max tested ratio (certified lower bound)
    double formula = 0.0;  // lpq_norm(b) in the multiplier exponents
};

/// Lower bound on the multiplier norm of b from l^{p,q} to l^{s,t}: max over
/// coordinate sequences, the Hoelder-extremal sequence, and seeded random
/// nonnegative sequences.
MultiplierEstimate multiplier_norm_bruteforce(const DoubleIndexSeq& b,
                                              const ExponentProfile& profile,
                                              int trials, std::uint64_t seed);

/// Seeded nonnegative random sequence on the (K, j_max) index set.
DoubleIndexSeq random_seq(int K, int j_max, std::uint64_t seed);

}  // namespace mnlab
