#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "mnlab/exponents.hpp"
#include "mnlab/means.hpp"
#include "mnlab/power_series.hpp"
#include "mnlab/weights.hpp"

namespace mnlab {

/// Radial quadrature grid r_k = 1 - 2^{-k/8}, k = 0..nodes, trapezoid per
/// cell. The tail beyond r_max is bounded by what(r_max) * sup-mean^q and
/// surfaced in ApqResult.
struct ApqResult {
    double norm = 0.0;
    double tail_bound = 0.0;  // bound on the omitted share of the q-th power
    double r_max = 0.0;
};

ApqResult apq_norm_detail(const PowerSeries& f, double p, double q,
                          const RadialWeight& w, int radial_nodes = 128,
                          std::size_t circle_samples = 0);

/// int_0^1 A(r) w(r) dr on the dyadic grid r_k = 1 - 2^{-k/8} (Simpson per
/// cell; the final cell [r_max, 1] pairs A's boundary trapezoid with the
/// exact remaining weight mass). `diverging` is set when the last-octave
/// cell contributions no longer decay.
struct WeightedRadialIntegral {
    double value = 0.0;
    double tail_bound = 0.0;
    bool diverging = false;
};
WeightedRadialIntegral weighted_radial_integral(
    const std::function<double(double)>& A, const RadialWeight& w,
    int radial_nodes);

/// || f ||_{A^{p,q}_w} = (int_0^1 M_p^q(r, f) w(r) dr)^{1/q}, q < inf.
double apq_norm(const PowerSeries& f, double p, double q,
                const RadialWeight& w, int radial_nodes = 128);

/// H^p norm. Truncated series have radially non-decreasing means, so this is
/// M_p(1, f); for p < 1 the max over a refining radial grid ending at 1 is
/// taken as a guard.
double hp_norm(const PowerSeries& f, double p);

/// Littlewood-Paley proxy (int_0^1 M_p^q(r,f')(1-r)^q w dr + |f(0)|^q)^{1/q}.
double littlewood_paley_norm(const PowerSeries& f, double p, double q,
                             const RadialWeight& w, int radial_nodes = 128);

/// (int_0^1 M_inf^{qt}(r, g) (1-r)^{power*qt} w(r) dr)^{1/qt} with a
/// divergence flag raised when the dyadic-cell contributions fail to decay
/// over the last octave.
struct LinfQResult {
    double norm = 0.0;
    bool divergent = false;
};
LinfQResult linf_q_norm(const PowerSeries& g, double power, double q_tilde,
                        const RadialWeight& w, int radial_nodes = 128);

/// Polar blocks Q_{j,l}: r_{j-1} <= |z| < r_j, arg z in I_{K^{j+2},l}.
struct BlockGrid {
    int K = 2;
    int j_max = 4;
    std::vector<double> radii;  // r_0..r_{j_max}
    static BlockGrid make(int K, int j_max);
    std::size_t arcs_in_ring(int j) const;  // K^{j+2}
    double ring_area(int j) const;
    double block_area(int j) const;
};

/// Lemma 3.5 quantity: the l^{p,q} norm of
///   sup_{Q_{j,l}} |f^{(n)}| * K^{-j(n+1/p)} what(r_j)^{1/q}
/// with per-block 3x3 sampled sups plus one refinement on the winning cell.
double block_sup_norm(const PowerSeries& f, std::size_t order,
                      const BlockGrid& grid, double p, double q,
                      const RadialWeight& w);

}  // namespace mnlab
