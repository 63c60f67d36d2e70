#include "mnlab/means.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mnlab/exponents.hpp"
#include "mnlab/kernels.hpp"

namespace mnlab {

namespace {

constexpr double kArcOffset = 0.5;  // midpoint grids; arcs never straddle nodes

std::vector<double> circle_mag2(const PowerSeries& f, double r,
                                std::size_t n) {
    const CircleSamples s = evaluate_on_circle_offset(f, r, n, kArcOffset);
    std::vector<double> m2(n);
    kernels::active().magnitude_squared(s.re.data(), s.im.data(), n, m2.data());
    return m2;
}

double golden_max_modulus(const PowerSeries& f, double r, double lo,
                          double hi) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    const auto val = [&](double th) { return std::abs(f.evaluate(std::polar(r, th))); };
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = val(x1), f2 = val(x2);
    for (int it = 0; it < 48; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = val(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = val(x1);
        }
    }
    return std::max(f1, f2);
}

}  // namespace

std::size_t default_circle_samples(const PowerSeries& f, std::size_t min_n) {
    return kernels::ceil_pow2(std::max(2 * f.degree() + 1, min_n));
}

double integral_mean(const PowerSeries& f, double r, double p,
                     std::size_t n_samples) {
    if (r < 0.0 || r > 1.0)
        throw std::invalid_argument("integral_mean: radius outside [0,1]");
    if (!(p > 0.0)) throw std::invalid_argument("integral_mean: requires p > 0");
    std::size_t n = n_samples ? n_samples : default_circle_samples(f);
    if (p == kInf) {
        const CircleSamples s = evaluate_on_circle_offset(f, r, n, kArcOffset);
        std::vector<double> m2(n);
        kernels::active().magnitude_squared(s.re.data(), s.im.data(), n,
                                            m2.data());
        std::size_t k = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (m2[i] > m2[k]) k = i;
        const double step = 2.0 * M_PI / static_cast<double>(n);
        const double th = step * (static_cast<double>(k) + kArcOffset);
        const double refined = golden_max_modulus(f, r, th - step, th + step);
        return std::max(std::sqrt(m2[k]), refined);
    }
    const std::vector<double> m2 = circle_mag2(f, r, n);
    const double s = kernels::active().pow_sum(m2.data(), n, 0.5 * p);
    return std::pow(s / static_cast<double>(n), 1.0 / p);
}

ArcMeanVector arc_means(const PowerSeries& f, double r, double p,
                        std::size_t N, std::size_t samples_per_arc) {
    if (N == 0) throw std::invalid_argument("arc_means: N >= 1");
    if (!(p > 0.0) || p == kInf)
        throw std::invalid_argument("arc_means: requires 0 < p < inf");
    if (r < 0.0 || r > 1.0)
        throw std::invalid_argument("arc_means: radius outside [0,1]");
    std::size_t m = samples_per_arc;
    if (m == 0) {
        const std::size_t need = default_circle_samples(f);
        m = std::max<std::size_t>(16, (need + N - 1) / N);
    }
    if (kernels::is_pow2(N)) m = kernels::ceil_pow2(m);
    const std::size_t n = N * m;

    const std::vector<double> m2 = circle_mag2(f, r, n);
    ArcMeanVector out;
    out.N = N;
    out.r = r;
    out.p = p;
    out.samples_per_arc = m;
    out.values.resize(N);
    const auto& k = kernels::active();
    for (std::size_t l = 0; l < N; ++l) {
        const double s = k.pow_sum(m2.data() + l * m, m, 0.5 * p);
        out.values[l] = std::pow(s / static_cast<double>(n), 1.0 / p);
    }
    return out;
}

double lq_norm(const std::vector<double>& v, double q) {
    if (!(q > 0.0)) throw std::invalid_argument("lq_norm: requires q > 0");
    if (q == kInf) return kernels::active().reduce_max(v.data(), v.size());
    double s = 0.0;
    for (double x : v) s += std::pow(x, q);
    return std::pow(s, 1.0 / q);
}

double lq_norm(const ArcMeanVector& v, double q) { return lq_norm(v.values, q); }

HLReport hl_report(const PowerSeries& f, double p, double q, double r,
                   double rho, std::size_t samples_per_arc) {
    if (!(r >= 0.0) || !(r < rho) || !(rho <= 1.0))
        throw std::invalid_argument("hl_report: requires 0 <= r < rho <= 1");
    if (!(p > 0.0) || !(p < q))
        throw std::invalid_argument("hl_report: requires 0 < p < q");

    HLReport rep;
    rep.N = std::max<long>(1, paper_floor(1.0 / (rho - r)));
    const ArcMeanVector am =
        arc_means(f, rho, p, static_cast<std::size_t>(rep.N), samples_per_arc);

    // M_p(rho, f) regrouped from the same arc grid, so the partition identity
    // and the l^q <= l^p comparison are exact.
    double sum_p = 0.0;
    for (double v : am.values) sum_p += std::pow(v, p);
    const double mp_rho = std::pow(sum_p, 1.0 / p);

    const double gap_pow = std::pow(rho - r, 1.0 / p - (q == kInf ? 0.0 : 1.0 / q));
    rep.rhs_classical = mp_rho / gap_pow;
    rep.rhs_improved = lq_norm(am, q) / gap_pow;
    rep.lhs = integral_mean(f, r, q);
    rep.const_classical = rep.rhs_classical > 0.0 ? rep.lhs / rep.rhs_classical
                                                  : (rep.lhs > 0.0 ? kInf : 0.0);
    rep.const_improved = rep.rhs_improved > 0.0 ? rep.lhs / rep.rhs_improved
                                                : (rep.lhs > 0.0 ? kInf : 0.0);
    return rep;
}

ArcMeanVector radial_maximal_arc_means(const PowerSeries& f, double rho,
                                       double p, std::size_t N,
                                       int radial_steps,
                                       std::size_t samples_per_arc) {
    if (radial_steps < 2)
        throw std::invalid_argument("radial_maximal_arc_means: radial_steps >= 2");
    if (N == 0) throw std::invalid_argument("radial_maximal_arc_means: N >= 1");
    std::size_t m = samples_per_arc;
    if (m == 0) {
        const std::size_t need = default_circle_samples(f);
        m = std::max<std::size_t>(16, (need + N - 1) / N);
    }
    if (kernels::is_pow2(N)) m = kernels::ceil_pow2(m);
    const std::size_t n = N * m;

    // pointwise sup of |f|^2 over the nested radial grid rho (1 - 2^{-k})
    std::vector<double> sup2(n, 0.0);
    for (int k = 0; k <= radial_steps; ++k) {
        const double rk = rho * (1.0 - std::pow(2.0, -k));
        const std::vector<double> m2 = circle_mag2(f, rk, n);
        for (std::size_t i = 0; i < n; ++i) sup2[i] = std::max(sup2[i], m2[i]);
    }

    ArcMeanVector out;
    out.N = N;
    out.r = rho;
    out.p = p;
    out.samples_per_arc = m;
    out.values.resize(N);
    const auto& ker = kernels::active();
    for (std::size_t l = 0; l < N; ++l) {
        const double s = ker.pow_sum(sup2.data() + l * m, m, 0.5 * p);
        out.values[l] = std::pow(s / static_cast<double>(n), 1.0 / p);
    }
    return out;
}

MaximalAmalgamReport hl_maximal_amalgam(const StepFunction& input, double p,
                                        double q, std::size_t N) {
    if (!(p > 1.0) || !(q > 1.0))
        throw std::invalid_argument("hl_maximal_amalgam: requires p > 1, q > 1");
    if (N == 0) throw std::invalid_argument("hl_maximal_amalgam: N >= 1");
    const std::size_t m = input.values.size();
    if (m == 0) throw std::invalid_argument("hl_maximal_amalgam: empty input");
    for (double v : input.values)
        if (v < 0.0)
            throw std::invalid_argument("hl_maximal_amalgam: negative input");

    const double h = input.h();
    std::vector<double> prefix(m + 1, 0.0);
    for (std::size_t c = 0; c < m; ++c) prefix[c + 1] = prefix[c] + input.values[c] * h;

    // Exact maximal values at cell midpoints. Any interval average containing
    // x is a mediant of the two one-sided averages, so scanning one-sided
    // intervals with breakpoint endpoints suffices.
    MaximalAmalgamReport rep;
    rep.maximal = input;
    for (std::size_t c = 0; c < m; ++c) {
        const double x = (static_cast<double>(c) + 0.5) * h;
        const double px = prefix[c] + 0.5 * h * input.values[c];
        double best = input.values[c];
        for (std::size_t i = 0; i <= c; ++i) {  // [bp_i, x]
            const double len = x - static_cast<double>(i) * h;
            best = std::max(best, (px - prefix[i]) / len);
        }
        for (std::size_t j = c + 1; j <= m; ++j) {  // [x, bp_j]
            const double len = static_cast<double>(j) * h - x;
            best = std::max(best, (prefix[j] - px) / len);
        }
        rep.maximal.values[c] = best;
    }

    const double wblk = 2.0 * M_PI / static_cast<double>(N);
    const auto block_norm = [&](const StepFunction& f) {
        const long nblk =
            std::max<long>(1, std::lround((f.x1 - f.x0) / wblk));
        std::vector<double> blocks(static_cast<std::size_t>(nblk), 0.0);
        for (std::size_t c = 0; c < m; ++c) {
            const double mid = f.x0 + (static_cast<double>(c) + 0.5) * h;
            long b = static_cast<long>(std::floor((mid - f.x0) / wblk));
            b = std::clamp<long>(b, 0, nblk - 1);
            blocks[static_cast<std::size_t>(b)] += std::pow(f.values[c], p) * h;
        }
        double s = 0.0;
        for (double bv : blocks) s += std::pow(bv, q / p);
        return std::pow(s, 1.0 / q);
    };
    rep.norm_in = block_norm(input);
    rep.norm_out = block_norm(rep.maximal);
    return rep;
}

}  // namespace mnlab
