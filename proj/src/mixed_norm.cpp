#include "mnlab/mixed_norm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mnlab/kernels.hpp"

namespace mnlab {

namespace {

std::vector<double> radial_grid(int nodes) {
    std::vector<double> r(nodes + 1);
    for (int k = 0; k <= nodes; ++k) r[k] = 1.0 - std::pow(2.0, -k / 8.0);
    return r;
}

struct RadialIntegral {
    double value = 0.0;
    double tail_bound = 0.0;
    double r_max = 0.0;
    std::vector<double> cells;  // per-cell contributions, tail cell last
};

// int_0^1 A(r) w(r) dr on the dyadic grid, 4-point Gauss per cell, the last
// cell [r_max, 1] closed with the exact remaining weight mass. A must extend
// continuously to r = 1 (truncated series do).
template <class F>
RadialIntegral integrate_radial(const F& A, const RadialWeight& w,
                                int nodes) {
    static constexpr double gx[4] = {-0.8611363115940526, -0.3399810435848563,
                                     0.3399810435848563, 0.8611363115940526};
    static constexpr double gw[4] = {0.3478548451374538, 0.6521451548625461,
                                     0.6521451548625461, 0.3478548451374538};
    const std::vector<double> rs = radial_grid(nodes);
    RadialIntegral out;
    out.r_max = rs.back();
    out.cells.reserve(rs.size());
    const auto h = [&](double r) { return A(r) * w.density(r); };
    for (std::size_t k = 0; k + 1 < rs.size(); ++k) {
        const double mid = 0.5 * (rs[k] + rs[k + 1]);
        const double half = 0.5 * (rs[k + 1] - rs[k]);
        double cell = 0.0;
        for (int i = 0; i < 4; ++i) cell += gw[i] * h(mid + half * gx[i]);
        cell *= half;
        out.cells.push_back(cell);
        out.value += cell;
    }
    const double a_rmax = A(out.r_max);
    double a_one = A(1.0);
    if (!std::isfinite(a_one)) a_one = a_rmax;
    const double tail_mass = w.omega_hat(out.r_max);
    const double tail_cell = 0.5 * (a_rmax + a_one) * tail_mass;
    out.cells.push_back(tail_cell);
    out.value += tail_cell;
    out.tail_bound = 0.5 * std::abs(a_one - a_rmax) * tail_mass;
    return out;
}

// one octave of the dyadic radial grid spans 8 cells; non-decaying
// contributions over the last octave mean the integral has not stabilized
bool last_octave_diverges(const std::vector<double>& cells, double total) {
    if (cells.size() < 17 || total <= 0.0) return false;
    double last = 0.0, prev = 0.0;
    // skip the closing tail cell
    for (std::size_t k = cells.size() - 9; k < cells.size() - 1; ++k)
        last += cells[k];
    for (std::size_t k = cells.size() - 17; k < cells.size() - 9; ++k)
        prev += cells[k];
    return last >= prev * 0.999 && last > 1e-12 * total;
}

}  // namespace

WeightedRadialIntegral weighted_radial_integral(
    const std::function<double(double)>& A, const RadialWeight& w,
    int radial_nodes) {
    const RadialIntegral I = integrate_radial(A, w, radial_nodes);
    WeightedRadialIntegral out;
    out.value = I.value;
    out.tail_bound = I.tail_bound;
    out.diverging = last_octave_diverges(I.cells, I.value);
    return out;
}

ApqResult apq_norm_detail(const PowerSeries& f, double p, double q,
                          const RadialWeight& w, int radial_nodes,
                          std::size_t circle_samples) {
    if (!(p > 0.0) || !(q > 0.0) || q == kInf)
        throw std::invalid_argument("apq_norm: requires 0 < p, 0 < q < inf");
    if (radial_nodes < 64)
        throw std::invalid_argument("apq_norm: radial_nodes >= 64");

    const std::size_t n =
        circle_samples ? circle_samples : default_circle_samples(f);
    const RadialIntegral I = integrate_radial(
        [&](double r) { return std::pow(integral_mean(f, r, p, n), q); }, w,
        radial_nodes);

    ApqResult out;
    out.r_max = I.r_max;
    out.tail_bound = I.tail_bound;
    out.norm = std::pow(I.value, 1.0 / q);
    return out;
}

double apq_norm(const PowerSeries& f, double p, double q,
                const RadialWeight& w, int radial_nodes) {
    return apq_norm_detail(f, p, q, w, radial_nodes).norm;
}

double hp_norm(const PowerSeries& f, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("hp_norm: requires p > 0");
    if (p >= 1.0 || p == kInf) return integral_mean(f, 1.0, p);
    double best = integral_mean(f, 1.0, p);
    for (int k = 0; k <= 24; ++k)
        best = std::max(best,
                        integral_mean(f, 1.0 - std::pow(2.0, -k / 2.0), p));
    return best;
}

double littlewood_paley_norm(const PowerSeries& f, double p, double q,
                             const RadialWeight& w, int radial_nodes) {
    const RadialWeight shifted = weight_shift(w, q);
    const PowerSeries fp = derivative(f);
    const double main =
        std::pow(apq_norm(fp, p, q, shifted, radial_nodes), q);
    return std::pow(main + std::pow(std::abs(f.at_zero()), q), 1.0 / q);
}

LinfQResult linf_q_norm(const PowerSeries& g, double power, double q_tilde,
                        const RadialWeight& w, int radial_nodes) {
    if (!(q_tilde > 0.0) || q_tilde == kInf)
        throw std::invalid_argument("linf_q_norm: requires q_tilde < inf");
    const RadialIntegral I = integrate_radial(
        [&](double r) {
            return std::pow(integral_mean(g, r, kInf), q_tilde) *
                   std::pow(1.0 - r, power * q_tilde);
        },
        w, radial_nodes);
    LinfQResult out;
    out.norm = std::pow(I.value, 1.0 / q_tilde);
    out.divergent = last_octave_diverges(I.cells, I.value);
    return out;
}

BlockGrid BlockGrid::make(int K, int j_max) {
    BlockGrid g;
    g.K = K;
    g.j_max = j_max;
    g.radii = r_grid(K, j_max);
    return g;
}

std::size_t BlockGrid::arcs_in_ring(int j) const {
    std::size_t n = 1;
    for (int i = 0; i < j + 2; ++i) n *= static_cast<std::size_t>(K);
    return n;
}

double BlockGrid::ring_area(int j) const {
    return M_PI * (radii[j] * radii[j] - radii[j - 1] * radii[j - 1]);
}

double BlockGrid::block_area(int j) const {
    return ring_area(j) / static_cast<double>(arcs_in_ring(j));
}

double block_sup_norm(const PowerSeries& f, std::size_t order,
                      const BlockGrid& grid, double p, double q,
                      const RadialWeight& w) {
    if (q == kInf || p == kInf)
        throw std::invalid_argument("block_sup_norm: requires finite p, q");
    const PowerSeries fn = derivative(f, order);

    double out_q = 0.0;
    for (int j = 1; j <= grid.j_max; ++j) {
        const std::size_t nl = grid.arcs_in_ring(j);
        const double r_lo = grid.radii[j - 1], r_hi = grid.radii[j];
        const double dr = r_hi - r_lo;
        const double rad[3] = {r_lo, r_lo + 0.5 * dr, r_lo + 0.999 * dr};

        // 3 angular samples per block from three full-circle evaluations
        const std::size_t n = 3 * nl;
        std::vector<std::vector<double>> mag2(3);
        for (int a = 0; a < 3; ++a) {
            const CircleSamples s = evaluate_on_circle_offset(fn, rad[a], n, 0.5);
            mag2[a].resize(n);
            kernels::active().magnitude_squared(s.re.data(), s.im.data(), n,
                                                mag2[a].data());
        }

        double row_p = 0.0;
        for (std::size_t l = 0; l < nl; ++l) {
            double best2 = 0.0;
            int best_a = 0;
            std::size_t best_t = 0;
            for (int a = 0; a < 3; ++a)
                for (std::size_t t = 0; t < 3; ++t) {
                    const double v = mag2[a][3 * l + t];
                    if (v > best2) {
                        best2 = v;
                        best_a = a;
                        best_t = t;
                    }
                }
            // one refinement pass: 3x3 at one-third scale around the winner
            const double arc = 2.0 * M_PI / static_cast<double>(nl);
            const double th0 =
                arc * (static_cast<double>(l) +
                       (static_cast<double>(best_t) + 0.5) / 3.0);
            double sup = std::sqrt(best2);
            for (int dr3 = -1; dr3 <= 1; ++dr3)
                for (int dt3 = -1; dt3 <= 1; ++dt3) {
                    const double rr = std::clamp(rad[best_a] + dr3 * dr / 9.0,
                                                 r_lo, r_lo + 0.999 * dr);
                    const double tt = th0 + dt3 * arc / 9.0;
                    sup = std::max(sup, std::abs(fn.evaluate(std::polar(rr, tt))));
                }
            row_p += std::pow(sup, p);
        }
        const double weight =
            std::pow(static_cast<double>(grid.K),
                     -static_cast<double>(j) *
                         (static_cast<double>(order) + 1.0 / p)) *
            std::pow(w.omega_hat(grid.radii[j]), 1.0 / q);
        const double row = weight * std::pow(row_p, 1.0 / p);
        out_q += std::pow(row, q);
    }
    return std::pow(out_q, 1.0 / q);
}

}  // namespace mnlab
