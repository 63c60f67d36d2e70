#include "mnlab/carleson.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "mnlab/means.hpp"
#include "mnlab/mixed_norm.hpp"

namespace mnlab {

namespace {

std::size_t pow_int(int K, int e) {
    std::size_t n = 1;
    for (int i = 0; i < e; ++i) n *= static_cast<std::size_t>(K);
    return n;
}

double splitmix_unit(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

}  // namespace

DoubleIndexSeq DoubleIndexSeq::zeros(int K, int j_max) {
    DoubleIndexSeq s;
    s.K = K;
    s.rows.resize(j_max);
    for (int j = 1; j <= j_max; ++j)
        s.rows[j - 1].assign(pow_int(K, j + 2), 0.0);
    return s;
}

void DoubleIndexSeq::validate() const {
    for (int j = 1; j <= j_max(); ++j)
        if (rows[j - 1].size() != pow_int(K, j + 2))
            throw std::invalid_argument("DoubleIndexSeq: row " +
                                        std::to_string(j) +
                                        " must have K^(j+2) entries");
}

double lpq_norm(const DoubleIndexSeq& a, double p, double q) {
    if (!(p > 0.0) || !(q > 0.0))
        throw std::invalid_argument("lpq_norm: requires p, q > 0");
    double outer = 0.0;
    for (const auto& row : a.rows) {
        double rn;
        if (p == kInf) {
            rn = 0.0;
            for (double v : row) rn = std::max(rn, std::abs(v));
        } else {
            double s = 0.0;
            for (double v : row) s += std::pow(std::abs(v), p);
            rn = std::pow(s, 1.0 / p);
        }
        if (q == kInf)
            outer = std::max(outer, rn);
        else
            outer += std::pow(rn, q);
    }
    return q == kInf ? outer : std::pow(outer, 1.0 / q);
}

const MeasureSpec::Band& MeasureSpec::band_at(double r) const {
    for (const auto& b : bands)
        if (r >= b.r_lo && r < b.r_hi) return b;
    return bands.back();
}

double MeasureSpec::angular_mass(double r, double lo, double hi) const {
    const Band& b = band_at(r);
    const double two_pi = 2.0 * M_PI;
    const auto wrap = [&](double th) {
        th = std::fmod(th, two_pi);
        return th < 0.0 ? th + two_pi : th;
    };
    lo = wrap(lo);
    double len = hi - lo;  // caller passes hi > lo with len <= 2pi
    const auto mass_plain = [&](double a0, double a1) {
        double m = 0.0;
        for (const auto& [th, w] : b.atoms)
            if (th >= a0 && th < a1) m += w;
        for (std::size_t i = 0; i + 1 < b.density_breakpoints.size(); ++i) {
            const double s0 = std::max(a0, b.density_breakpoints[i]);
            const double s1 = std::min(a1, b.density_breakpoints[i + 1]);
            if (s1 > s0) m += b.density_values[i] * (s1 - s0);
        }
        return m;
    };
    const double end = lo + len;
    if (end <= two_pi) return mass_plain(lo, end);
    return mass_plain(lo, two_pi) + mass_plain(0.0, end - two_pi);
}

MeasureSpec MeasureSpec::lebesgue() {
    MeasureSpec m;
    Band b;
    b.r_lo = 0.0;
    b.r_hi = 1.0;
    b.density_breakpoints = {0.0, 2.0 * M_PI};
    b.density_values = {1.0 / (2.0 * M_PI)};
    m.bands.push_back(std::move(b));
    m.nu_is_weight = true;
    m.nu_weight = RadialWeight::standard(0.0);
    return m;
}

namespace {

// shared row machinery: weight_j * (H_[s](r_{j-1}))_{K^{j+2},l}
DiscreteSeqResult discrete_rows(const PowerSeries& H,
                                const std::vector<double>& row_weights,
                                double s, double u, double v, int K,
                                int j_max) {
    DiscreteSeqResult out;
    out.seq.K = K;
    out.seq.rows.resize(j_max);
    std::vector<double> row_contrib(j_max);
    for (int j = 1; j <= j_max; ++j) {
        const std::size_t N = pow_int(K, j + 2);
        const double r = 1.0 - std::pow(K, -(j - 1));
        const ArcMeanVector am = arc_means(H, r, s, N);
        auto& row = out.seq.rows[j - 1];
        row.resize(N);
        for (std::size_t l = 0; l < N; ++l)
            row[l] = row_weights[j - 1] * am.values[l];
        double rn;
        if (u == kInf) {
            rn = 0.0;
            for (double x : row) rn = std::max(rn, x);
        } else {
            double acc = 0.0;
            for (double x : row) acc += std::pow(x, u);
            rn = std::pow(acc, 1.0 / u);
        }
        row_contrib[j - 1] = rn;
    }
    out.norm = lq_norm(row_contrib, v);
    // trailing rows should fade; otherwise the truncation misses mass
    if (j_max >= 3) {
        const double a = row_contrib[j_max - 3], b = row_contrib[j_max - 2],
                     c = row_contrib[j_max - 1];
        out.tail_flagged = !(c < b || c < a) && c > 1e-14 * out.norm;
        if (v == kInf) out.tail_flagged = false;  // sup form has no tail
    }
    return out;
}

}  // namespace

DiscreteSeqResult tg_discrete_seq(const PowerSeries& g,
                                  const ExponentProfile& profile,
                                  const RadialWeight& w, int K, int j_max) {
    const auto [u, v] = profile.multiplier_exponents();
    std::vector<double> wts(j_max);
    for (int j = 1; j <= j_max; ++j)
        wts[j - 1] = std::pow(static_cast<double>(K),
                              j * (1.0 / profile.p - 1.0)) *
                     std::pow(w.omega_hat(1.0 - std::pow(K, -j)),
                              profile.inv_q_tilde());
    return discrete_rows(derivative(g), wts, profile.s, u, v, K, j_max);
}

DiscreteSeqResult sg_discrete_seq(const PowerSeries& g,
                                  const ExponentProfile& profile,
                                  const RadialWeight& w, int K, int j_max) {
    const auto [u, v] = profile.multiplier_exponents();
    std::vector<double> wts(j_max);
    for (int j = 1; j <= j_max; ++j)
        wts[j - 1] =
            std::pow(static_cast<double>(K), j / profile.p) *
            std::pow(w.omega_hat(1.0 - std::pow(K, -j)), profile.inv_q_tilde());
    return discrete_rows(g, wts, profile.s, u, v, K, j_max);
}

DiscreteSeqResult g_nu_discrete_seq(const PowerSeries& G, int n,
                                    const ExponentProfile& profile,
                                    const RadialWeight& w,
                                    const RadialWeight& nu, int K, int j_max) {
    const auto [u, v] = profile.multiplier_exponents();
    std::vector<double> wts(j_max);
    for (int j = 1; j <= j_max; ++j) {
        const double rj = 1.0 - std::pow(K, -j);
        wts[j - 1] = std::pow(static_cast<double>(K), j * (n + 1.0 / profile.p)) *
                     std::pow(nu.omega_hat(rj), 1.0 / profile.t) *
                     std::pow(w.omega_hat(rj), -1.0 / profile.q);
    }
    return discrete_rows(G, wts, profile.s, u, v, K, j_max);
}

double carleson_discrete_lhs(const DoubleIndexSeq& a,
                             const MeasureSpec& measures,
                             const ExponentProfile& profile,
                             const RadialWeight& w, int n) {
    a.validate();
    const double s = profile.s, t = profile.t;
    const int K = a.K;
    double total = 0.0;
    for (int j = 1; j <= a.j_max(); ++j) {
        const double r_lo = 1.0 - std::pow(K, -(j - 1));
        const double r_hi = 1.0 - std::pow(K, -j);
        const std::size_t N = pow_int(K, j + 2);
        const double arc = 2.0 * M_PI / static_cast<double>(N);
        const double wfac =
            std::pow(static_cast<double>(K), j * t * (n + 1.0 / profile.p)) *
            std::pow(w.omega_hat(r_hi), -t / profile.q);

        // integrand is band-wise constant in r; integrate exactly
        const auto inner_at = [&](double r) {
            double acc = 0.0;
            for (std::size_t l = 0; l < N; ++l) {
                const double al = std::abs(a.rows[j - 1][l]);
                if (al == 0.0) continue;
                acc += std::pow(al, s) *
                       measures.angular_mass(r, arc * static_cast<double>(l),
                                             arc * static_cast<double>(l + 1));
            }
            return std::pow(acc, t / s);
        };

        if (measures.nu_is_weight) {
            // split [r_lo, r_hi) at band boundaries
            std::vector<double> cuts = {r_lo, r_hi};
            for (const auto& b : measures.bands) {
                if (b.r_lo > r_lo && b.r_lo < r_hi) cuts.push_back(b.r_lo);
                if (b.r_hi > r_lo && b.r_hi < r_hi) cuts.push_back(b.r_hi);
            }
            std::sort(cuts.begin(), cuts.end());
            for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
                const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
                total += wfac * inner_at(mid) *
                         measures.nu_weight.integrate(cuts[i], cuts[i + 1]);
            }
        } else {
            for (const auto& [r, mass] : measures.nu_atoms)
                if (r >= r_lo && r < r_hi) total += wfac * inner_at(r) * mass;
        }
    }
    return std::pow(total, 1.0 / t);
}

double carleson_continuous_lhs(const PowerSeries& f, const PowerSeries& G,
                               int n, double s, double t,
                               const RadialWeight& nu, int radial_nodes) {
    const PowerSeries fn = derivative(f, n);
    const std::size_t nsamp =
        std::max(default_circle_samples(fn), default_circle_samples(G));
    const auto s_mean_pow = [&](double r) {
        const CircleSamples a = evaluate_on_circle_offset(fn, r, nsamp, 0.5);
        const CircleSamples b = evaluate_on_circle_offset(G, r, nsamp, 0.5);
        double acc = 0.0;
        for (std::size_t i = 0; i < nsamp; ++i) {
            const double m2a = a.re[i] * a.re[i] + a.im[i] * a.im[i];
            const double m2b = b.re[i] * b.re[i] + b.im[i] * b.im[i];
            acc += std::pow(m2a * m2b, 0.5 * s);
        }
        return std::pow(acc / static_cast<double>(nsamp), t / s);
    };
    const WeightedRadialIntegral I =
        weighted_radial_integral(s_mean_pow, nu, radial_nodes);
    return std::pow(I.value, 1.0 / t);
}

DoubleIndexSeq random_seq(int K, int j_max, std::uint64_t seed) {
    DoubleIndexSeq s = DoubleIndexSeq::zeros(K, j_max);
    std::uint64_t st = seed;
    for (auto& row : s.rows)
        for (auto& v : row) v = splitmix_unit(st);
    return s;
}

MultiplierEstimate multiplier_norm_bruteforce(const DoubleIndexSeq& b,
                                              const ExponentProfile& profile,
                                              int trials, std::uint64_t seed) {
    b.validate();
    const auto [u, v] = profile.multiplier_exponents();
    MultiplierEstimate out;
    out.formula = lpq_norm(b, u, v);

    const auto ratio_for = [&](const DoubleIndexSeq& a) {
        DoubleIndexSeq ab = a;
        for (int j = 0; j < a.j_max(); ++j)
            for (std::size_t l = 0; l < a.rows[j].size(); ++l)
                ab.rows[j][l] *= b.rows[j][l];
        const double den = lpq_norm(a, profile.p, profile.q);
        if (den == 0.0) return 0.0;
        return lpq_norm(ab, profile.s, profile.t) / den;
    };

    // coordinate sequences: ratio equals |b_{j,l}| directly
    for (const auto& row : b.rows)
        for (double x : row) out.brute = std::max(out.brute, std::abs(x));

    // Hoelder-extremal sequence per branch
    DoubleIndexSeq ext = DoubleIndexSeq::zeros(b.K, b.j_max());
    std::vector<double> row_mult(b.rows.size(), 0.0);
    for (int j = 0; j < b.j_max(); ++j) {
        const auto& row = b.rows[j];
        if (profile.p <= profile.s) {
            // inner multiplier norm is the sup; concentrate on the argmax
            std::size_t best = 0;
            for (std::size_t l = 1; l < row.size(); ++l)
                if (std::abs(row[l]) > std::abs(row[best])) best = l;
            ext.rows[j][best] = 1.0;
            row_mult[j] = std::abs(row[best]);
        } else {
            const double pt = u;  // s(p/s)' is the inner Hoelder exponent
            double norm_pt = 0.0;
            for (double x : row) norm_pt += std::pow(std::abs(x), pt);
            row_mult[j] = std::pow(norm_pt, 1.0 / pt);
            if (row_mult[j] > 0.0) {
                double np = 0.0;
                for (std::size_t l = 0; l < row.size(); ++l) {
                    ext.rows[j][l] = std::pow(std::abs(row[l]), pt / profile.p);
                    np += std::pow(ext.rows[j][l], profile.p);
                }
                const double inv = std::pow(np, -1.0 / profile.p);
                for (auto& x : ext.rows[j]) x *= inv;
            }
        }
    }
    // outer scaling: concentrate (q <= t) or Hoelder weights (t < q)
    if (profile.q <= profile.t) {
        int best = 0;
        for (int j = 1; j < b.j_max(); ++j)
            if (row_mult[j] > row_mult[best]) best = j;
        DoubleIndexSeq a = DoubleIndexSeq::zeros(b.K, b.j_max());
        a.rows[best] = ext.rows[best];
        out.brute = std::max(out.brute, ratio_for(a));
    } else {
        DoubleIndexSeq a = ext;
        for (int j = 0; j < b.j_max(); ++j) {
            const double c = row_mult[j] > 0.0
                                 ? std::pow(row_mult[j], v / profile.q)
                                 : 0.0;
            for (auto& x : a.rows[j]) x *= c;
        }
        out.brute = std::max(out.brute, ratio_for(a));
    }

    // seeded random sequences
    std::uint64_t st = seed;
    for (int tr = 0; tr < trials; ++tr) {
        DoubleIndexSeq a = DoubleIndexSeq::zeros(b.K, b.j_max());
        for (auto& row : a.rows)
            for (auto& x : row) x = splitmix_unit(st);
        out.brute = std::max(out.brute, ratio_for(a));
    }
    return out;
}

MeasureSpec MeasureSpec::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("measure file: ") + e.what());
    }
    MeasureSpec m;
    for (const auto& bj : j.at("bands")) {
        Band b;
        b.r_lo = bj.value("r_lo", 0.0);
        b.r_hi = bj.value("r_hi", 1.0);
        if (bj.contains("atoms"))
            for (const auto& a : bj["atoms"])
                b.atoms.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
        if (bj.contains("density")) {
            for (const auto& x : bj["density"].at("breakpoints"))
                b.density_breakpoints.push_back(x.get<double>());
            for (const auto& x : bj["density"].at("values"))
                b.density_values.push_back(x.get<double>());
            if (b.density_values.size() + 1 != b.density_breakpoints.size())
                throw std::invalid_argument(
                    "measure file: density values must be one fewer than "
                    "breakpoints");
        }
        for (const auto& [th, mass] : b.atoms)
            if (mass < 0.0)
                throw std::invalid_argument("measure file: negative atom mass");
        for (double vd : b.density_values)
            if (vd < 0.0)
                throw std::invalid_argument("measure file: negative density");
        m.bands.push_back(std::move(b));
    }
    if (m.bands.empty())
        throw std::invalid_argument("measure file: needs at least one band");
    if (j.contains("nu")) {
        const auto& nu = j["nu"];
        if (nu.contains("atoms")) {
            m.nu_is_weight = false;
            for (const auto& a : nu["atoms"]) {
                m.nu_atoms.emplace_back(a.at(0).get<double>(),
                                        a.at(1).get<double>());
                if (m.nu_atoms.back().second < 0.0)
                    throw std::invalid_argument(
                        "measure file: negative nu atom mass");
            }
        } else {
            m.nu_is_weight = true;
            m.nu_weight = weight_from_json_text(nu.dump());
        }
    }
    return m;
}

std::string MeasureSpec::to_json_text() const {
    nlohmann::json j;
    j["schema_version"] = 1;
    auto bandsj = nlohmann::json::array();
    for (const auto& b : bands) {
        nlohmann::json bj;
        bj["r_lo"] = b.r_lo;
        bj["r_hi"] = b.r_hi;
        auto atoms = nlohmann::json::array();
        for (const auto& [th, mass] : b.atoms) atoms.push_back({th, mass});
        bj["atoms"] = atoms;
        if (!b.density_values.empty()) {
            bj["density"]["breakpoints"] = b.density_breakpoints;
            bj["density"]["values"] = b.density_values;
        }
        bandsj.push_back(bj);
    }
    j["bands"] = bandsj;
    if (nu_is_weight) {
        j["nu"] = nlohmann::json::parse(weight_to_json_text(nu_weight));
    } else {
        auto atoms = nlohmann::json::array();
        for (const auto& [r, mass] : nu_atoms) atoms.push_back({r, mass});
        j["nu"]["atoms"] = atoms;
    }
    return j.dump(2);
}

}  // namespace mnlab
