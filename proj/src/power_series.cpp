#include "mnlab/power_series.hpp"

#include <cmath>
#include <stdexcept>

#include "mnlab/kernels.hpp"

namespace mnlab {

PowerSeries::PowerSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.assign(1, cplx{0.0});
}

PowerSeries PowerSeries::constant(cplx c) { return PowerSeries({c}); }

PowerSeries PowerSeries::monomial(std::size_t n, cplx c) {
    std::vector<cplx> v(n + 1, cplx{0.0});
    v[n] = c;
    return PowerSeries(std::move(v));
}

std::size_t PowerSeries::nnz() const {
    std::size_t k = 0;
    for (const auto& c : coeffs_)
        if (c != cplx{0.0}) ++k;
    return k;
}

cplx PowerSeries::evaluate(cplx z) const {
    cplx w = coeffs_.back();
    for (std::size_t m = coeffs_.size() - 1; m-- > 0;) w = w * z + coeffs_[m];
    return w;
}

int SignPattern::next() {
    // splitmix64; top bit decides the sign, fully reproducible across builds
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    return (z >> 63) ? 1 : -1;
}

namespace {

void split(const std::vector<cplx>& c, std::vector<double>& re,
           std::vector<double>& im) {
    re.resize(c.size());
    im.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        re[i] = c[i].real();
        im[i] = c[i].imag();
    }
}

}  // namespace

CircleSamples evaluate_on_circle_offset(const PowerSeries& f, double r,
                                        std::size_t n, double offset) {
    if (r < 0.0 || r > 1.0)
        throw std::invalid_argument("evaluate_on_circle: radius outside [0,1]");
    if (n == 0) throw std::invalid_argument("evaluate_on_circle: n == 0");

    CircleSamples out;
    out.radius = r;
    out.offset = offset;
    out.re.assign(n, 0.0);
    out.im.assign(n, 0.0);

    const auto& k = kernels::active();
    const auto& c = f.coeffs();
    const std::size_t nc = c.size();

    // Sparse fast path: lacunary-type series accumulated term by term with
    // an incremental rotation per nonzero exponent.
    const std::size_t nz = f.nnz();
    if (nz * 8 < nc && nz * n <= (std::size_t{1} << 27)) {
        std::vector<double> tr(n), ti(n);
        for (std::size_t m = 0; m < nc; ++m) {
            if (c[m] == cplx{0.0}) continue;
            const cplx a = c[m] * std::pow(r, static_cast<double>(m));
            const double step = 2.0 * M_PI * static_cast<double>(m) /
                                static_cast<double>(n);
            const double cs = std::cos(step), sn = std::sin(step);
            double cr = std::cos(step * offset), ci = std::sin(step * offset);
            for (std::size_t j = 0; j < n; ++j) {
                tr[j] = cr;
                ti[j] = ci;
                const double nr = cr * cs - ci * sn;
                ci = cr * sn + ci * cs;
                cr = nr;
                if ((j & 1023u) == 1023u) {  // re-anchor against drift
                    const double th =
                        step * (static_cast<double>(j) + 1.0 + offset);
                    cr = std::cos(th);
                    ci = std::sin(th);
                }
            }
            k.axpy_cplx(a, tr.data(), ti.data(), n, out.re.data(),
                        out.im.data());
        }
        return out;
    }

    if (kernels::is_pow2(n)) {
        // Dense path: scale by r^m, twiddle by the grid offset, fold mod n, FFT.
        std::vector<double> cre, cim;
        split(c, cre, cim);
        std::vector<double> sre(nc), sim(nc);
        k.scale_powers(cre.data(), cim.data(), nc, r, sre.data(), sim.data());
        for (std::size_t m = 0; m < nc; ++m) {
            if (offset != 0.0) {
                const double th = 2.0 * M_PI * static_cast<double>(m) * offset /
                                  static_cast<double>(n);
                const double cr = std::cos(th), ci = std::sin(th);
                const double nr = sre[m] * cr - sim[m] * ci;
                sim[m] = sre[m] * ci + sim[m] * cr;
                sre[m] = nr;
            }
            out.re[m % n] += sre[m];
            out.im[m % n] += sim[m];
        }
        kernels::fft_pow2(out.re.data(), out.im.data(), n, +1);
        return out;
    }

    // General dense path: Horner at explicit circle points.
    std::vector<cplx> pts(n);
    for (std::size_t j = 0; j < n; ++j)
        pts[j] = std::polar(r, 2.0 * M_PI * (static_cast<double>(j) + offset) /
                                   static_cast<double>(n));
    const auto vals = evaluate_at_points(f, pts);
    for (std::size_t j = 0; j < n; ++j) {
        out.re[j] = vals[j].real();
        out.im[j] = vals[j].imag();
    }
    return out;
}

CircleSamples evaluate_on_circle(const PowerSeries& f, double r,
                                 std::size_t n) {
    return evaluate_on_circle_offset(f, r, n, 0.0);
}

std::vector<cplx> evaluate_at_points(const PowerSeries& f,
                                     std::span<const cplx> pts) {
    std::vector<double> cre, cim;
    split(f.coeffs(), cre, cim);
    std::vector<double> zr(pts.size()), zi(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        zr[i] = pts[i].real();
        zi[i] = pts[i].imag();
    }
    std::vector<double> outr(pts.size()), outi(pts.size());
    kernels::active().horner_points(cre.data(), cim.data(), cre.size(),
                                    zr.data(), zi.data(), pts.size(),
                                    outr.data(), outi.data());
    std::vector<cplx> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = {outr[i], outi[i]};
    return out;
}

PowerSeries derivative(const PowerSeries& f, std::size_t order) {
    std::vector<cplx> c = f.coeffs();
    for (std::size_t k = 0; k < order; ++k) {
        if (c.size() <= 1) return PowerSeries::constant(0.0);
        std::vector<cplx> d(c.size() - 1);
        for (std::size_t m = 0; m + 1 < c.size(); ++m)
            d[m] = c[m + 1] * static_cast<double>(m + 1);
        c = std::move(d);
    }
    return PowerSeries(std::move(c));
}

PowerSeries primitive(const PowerSeries& f) {
    std::vector<cplx> p(f.coeffs().size() + 1, cplx{0.0});
    for (std::size_t m = 0; m < f.coeffs().size(); ++m)
        p[m + 1] = f.coeffs()[m] / static_cast<double>(m + 1);
    return PowerSeries(std::move(p));
}

PowerSeries cauchy_product(const PowerSeries& f, const PowerSeries& g,
                           std::size_t max_degree) {
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::vector<cplx> out(std::min(max_degree, a.size() + b.size() - 2) + 1,
                          cplx{0.0});
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == cplx{0.0} || i >= out.size()) continue;
        const std::size_t jmax = std::min(b.size(), out.size() - i);
        for (std::size_t j = 0; j < jmax; ++j) out[i + j] += a[i] * b[j];
    }
    return PowerSeries(std::move(out));
}

PowerSeries add(const PowerSeries& f, const PowerSeries& g) {
    std::vector<cplx> out(std::max(f.coeffs().size(), g.coeffs().size()),
                          cplx{0.0});
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) out[i] += f.coeffs()[i];
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) out[i] += g.coeffs()[i];
    return PowerSeries(std::move(out));
}

PowerSeries scale(const PowerSeries& f, cplx alpha) {
    std::vector<cplx> out = f.coeffs();
    for (auto& c : out) c *= alpha;
    return PowerSeries(std::move(out));
}

PowerSeries lacunary_series(std::size_t k0, std::size_t m,
                            std::span<const cplx> coeffs,
                            std::size_t degree_budget) {
    if (m == 0 || coeffs.size() != m)
        throw std::invalid_argument("lacunary_series: need m >= 1 coefficients");
    const std::size_t top = k0 + m - 1;
    if (top >= 63 || (std::size_t{1} << top) > degree_budget)
        throw std::invalid_argument("lacunary_series: exponent exceeds budget");
    std::vector<cplx> c((std::size_t{1} << top) + 1, cplx{0.0});
    for (std::size_t k = 0; k < m; ++k) c[std::size_t{1} << (k0 + k)] = coeffs[k];
    return PowerSeries(std::move(c));
}

PowerSeries atom_function(const AtomSpec& spec, std::size_t max_degree) {
    if (spec.exponent_M <= spec.threshold)
        throw std::invalid_argument(
            "atom_function: exponent M at or below the admissible threshold");
    const double aw = std::abs(spec.center);
    const double pref = std::pow(1.0 - aw, spec.exponent_M - 1.0 / spec.p) *
                        std::pow(spec.omega_hat_at_center, -1.0 / spec.q);
    const cplx wbar = std::conj(spec.center);
    std::vector<cplx> c(max_degree + 1);
    // binomial recurrence for (1 - wbar z)^{-M}: b_{m+1} = b_m wbar (M+m)/(m+1)
    cplx b = 1.0;
    for (std::size_t m = 0; m <= max_degree; ++m) {
        c[m] = pref * b;
        b *= wbar * ((spec.exponent_M + static_cast<double>(m)) /
                     static_cast<double>(m + 1));
    }
    return PowerSeries(std::move(c));
}

PowerSeries rademacher_combination(std::span<const AtomSpec> atoms,
                                   std::span<const double> weights,
                                   std::span<const int> signs,
                                   std::size_t max_degree) {
    if (atoms.size() != weights.size() || atoms.size() != signs.size())
        throw std::invalid_argument(
            "rademacher_combination: mismatched index sets");
    std::vector<cplx> acc(max_degree + 1, cplx{0.0});
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const PowerSeries a = atom_function(atoms[i], max_degree);
        const double s = weights[i] * static_cast<double>(signs[i]);
        for (std::size_t m = 0; m <= max_degree; ++m) acc[m] += s * a.coeffs()[m];
    }
    return PowerSeries(std::move(acc));
}

std::vector<cplx> atom_center_grid(int K, int j_max) {
    std::vector<cplx> out;
    for (int j = 1; j <= j_max; ++j) {
        const double rj = 1.0 - std::pow(K, -j);
        const double rjm1 = 1.0 - std::pow(K, -(j - 1));
        const double rad = 0.5 * (rj + rjm1);
        const double n = std::pow(static_cast<double>(K), j + 2);
        const auto count = static_cast<std::size_t>(n);
        for (std::size_t l = 0; l < count; ++l) {
            const double th = 2.0 * M_PI * (static_cast<double>(l) + 0.5) / n;
            out.push_back(std::polar(rad, th));
        }
    }
    return out;
}

double pseudohyperbolic_distance(cplx a, cplx b) {
    return std::abs((a - b) / (1.0 - std::conj(a) * b));
}

long paper_floor(double x) { return static_cast<long>(std::floor(x)); }

}  // namespace mnlab
