#include "mnlab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mnlab {

namespace {

// 8-point Gauss-Legendre rule on [-1,1]
constexpr double kGx[8] = {-0.9602898564975363, -0.7966664774136267,
                           -0.5255324099163290, -0.1834346424956498,
                           0.1834346424956498,  0.5255324099163290,
                           0.7966664774136267,  0.9602898564975363};
constexpr double kGw[8] = {0.1012285362903763, 0.2223810344533745,
                           0.3137066458778873, 0.3626837833783620,
                           0.3626837833783620, 0.3137066458778873,
                           0.2223810344533745, 0.1012285362903763};

template <class F>
double gauss_cell(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 8; ++i) s += kGw[i] * f(mid + half * kGx[i]);
    return s * half;
}

// All internal tail arithmetic runs in the gap variable u = 1-r; the audit
// grids are exact dyadic gaps, which keeps the doubling ratios free of the
// 1-r cancellation that plain radii suffer near the boundary.

// integral of g over gaps [u_lo, u_hi], cells geometric from u_hi down
template <class G>
double gap_integral(const G& g, double u_lo, double u_hi) {
    if (u_hi <= u_lo) return 0.0;
    double s = 0.0;
    double hi = u_hi;
    for (int k = 0; k < 400 && hi > u_lo; ++k) {
        double lo = 0.5 * hi;
        if (lo < u_lo || hi - u_lo < 1e-300) lo = u_lo;
        s += gauss_cell(g, lo, hi);
        hi = lo;
        if (u_lo <= 0.0 && hi < 1e-30) break;
    }
    return s;
}

}  // namespace

RadialWeight RadialWeight::standard(double alpha) {
    if (alpha <= -1.0)
        throw std::invalid_argument("standard weight needs alpha > -1");
    RadialWeight w;
    w.kind_ = Kind::Standard;
    w.alpha_ = alpha;
    return w;
}

RadialWeight RadialWeight::log_tail(double gamma) {
    if (gamma <= 0.0)
        throw std::invalid_argument("log_tail weight needs gamma > 0");
    RadialWeight w;
    w.kind_ = Kind::LogTail;
    w.gamma_ = gamma;
    return w;
}

RadialWeight RadialWeight::tabulated(
    std::vector<std::pair<double, double>> knots) {
    if (knots.size() < 2)
        throw std::invalid_argument("tabulated weight needs >= 2 knots");
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (knots[i].second < 0.0)
            throw std::invalid_argument("tabulated weight: negative density");
        if (i && knots[i].first <= knots[i - 1].first)
            throw std::invalid_argument(
                "tabulated weight: knots must be strictly increasing in r");
    }
    if (knots.front().first != 0.0 || knots.back().first != 1.0)
        throw std::invalid_argument(
            "tabulated weight: knots must span [0,1] (first r=0, last r=1)");
    RadialWeight w;
    w.kind_ = Kind::Tabulated;
    w.knots_ = std::move(knots);
    w.rebuild_tabulated_tails();
    return w;
}

void RadialWeight::rebuild_tabulated_tails() {
    knot_tails_.assign(knots_.size(), 0.0);
    for (std::size_t i = knots_.size() - 1; i-- > 0;) {
        const auto [x0, y0] = knots_[i];
        const auto [x1, y1] = knots_[i + 1];
        knot_tails_[i] = knot_tails_[i + 1] + 0.5 * (y0 + y1) * (x1 - x0);
    }
}

double RadialWeight::density_gap(double u) const {
    if (u <= 0.0 || u > 1.0) return 0.0;
    double base = 0.0;
    switch (kind_) {
        case Kind::Standard:
            base = std::pow(u, alpha_);
            break;
        case Kind::LogTail: {
            const double L = 1.0 - std::log(u);
            base = gamma_ / (u * std::pow(L, gamma_ + 1.0));
            break;
        }
        case Kind::Tabulated: {
            const auto [xl, yl] = knots_[knots_.size() - 2];
            const double ul = 1.0 - xl;  // gap of the last interior knot
            if (u <= ul) {
                // last segment, linear in the gap: exact arbitrarily close to 1
                const double y1 = knots_.back().second;
                base = y1 + (yl - y1) * (u / ul);
                break;
            }
            const double r = 1.0 - u;
            auto it = std::upper_bound(
                knots_.begin(), knots_.end(), r,
                [](double v, const auto& k) { return v < k.first; });
            std::size_t i = static_cast<std::size_t>(it - knots_.begin());
            i = i == 0 ? 0 : i - 1;
            if (i + 1 >= knots_.size()) i = knots_.size() - 2;
            const auto [x0, y0] = knots_[i];
            const auto [x1, y1] = knots_[i + 1];
            base = y0 + (y1 - y0) * (r - x0) / (x1 - x0);
            break;
        }
    }
    if (beta_ != 0.0) base *= std::pow(u, beta_);
    return base;
}

double RadialWeight::density(double r) const {
    if (r < 0.0 || r >= 1.0) return 0.0;
    return density_gap(1.0 - r);
}

bool RadialWeight::has_closed_form_tail() const {
    return kind_ == Kind::Standard || beta_ == 0.0;
}

double RadialWeight::omega_hat_gap(double u) const {
    if (!(u > 0.0))
        throw std::invalid_argument("omega_hat: requires r < 1");
    u = std::min(u, 1.0);
    switch (kind_) {
        case Kind::Standard:
            return std::pow(u, alpha_ + 1.0) / (alpha_ + 1.0);
        case Kind::LogTail:
            if (beta_ == 0.0) return std::pow(1.0 - std::log(u), -gamma_);
            return gap_integral([this](double v) { return density_gap(v); },
                                0.0, u);
        case Kind::Tabulated: {
            if (beta_ != 0.0)
                return gap_integral(
                    [this](double v) { return density_gap(v); }, 0.0, u);
            const auto [xl, yl] = knots_[knots_.size() - 2];
            const double ul = 1.0 - xl;
            if (u <= ul) {
                // closed form on the last segment, exact in the gap
                const double y1 = knots_.back().second;
                return y1 * u + 0.5 * (yl - y1) * u * u / ul;
            }
            const double r = 1.0 - u;
            auto it = std::upper_bound(
                knots_.begin(), knots_.end(), r,
                [](double v, const auto& k) { return v < k.first; });
            std::size_t i = static_cast<std::size_t>(it - knots_.begin());
            i = i == 0 ? 0 : i - 1;
            if (i + 1 >= knots_.size()) i = knots_.size() - 2;
            const auto [x1, y1] = knots_[i + 1];
            // exact integral of the interpolant on [r, x1] plus suffix tail
            const double wr = density(r);
            return 0.5 * (wr + y1) * (x1 - r) + knot_tails_[i + 1];
        }
    }
    return 0.0;
}

double RadialWeight::omega_hat(double r) const {
    if (r >= 1.0) throw std::invalid_argument("omega_hat: requires r < 1");
    if (r < 0.0) r = 0.0;
    return omega_hat_gap(1.0 - r);
}

double RadialWeight::integrate(double a, double b) const {
    a = std::max(a, 0.0);
    b = std::min(b, 1.0);
    if (b <= a) return 0.0;
    if (b == 1.0) return omega_hat(a);
    return omega_hat(a) - omega_hat(b);
}

std::string RadialWeight::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Standard: os << "standard(alpha=" << alpha_ << ")"; break;
        case Kind::LogTail: os << "log_tail(gamma=" << gamma_ << ")"; break;
        case Kind::Tabulated:
            os << "tabulated(" << knots_.size() << " knots)";
            break;
    }
    if (beta_ != 0.0) os << "*(1-r)^" << beta_;
    return os.str();
}

RadialWeight weight_shift(const RadialWeight& w, double beta) {
    if (beta < 0.0) throw std::invalid_argument("weight_shift: beta >= 0");
    RadialWeight out = w;
    if (w.kind_ == RadialWeight::Kind::Standard)
        out.alpha_ += beta;
    else
        out.beta_ += beta;
    return out;
}

std::vector<double> audit_grid(int depth, int points_per_octave) {
    std::vector<double> g;
    g.reserve(depth + 1);
    for (int k = 0; k <= depth; ++k) {
        // past 2^-50 the radii are indistinguishable from 1 in doubles
        const double e =
            std::min(50.0, static_cast<double>(k) / points_per_octave);
        const double r = 1.0 - std::pow(2.0, -e);
        if (!g.empty() && r <= g.back()) break;
        g.push_back(r);
    }
    return g;
}

double audit_dhat(const RadialWeight& w, const std::vector<double>& grid) {
    double mx = 0.0;
    for (double r : grid) {
        const double u = 1.0 - r;
        mx = std::max(mx, w.omega_hat_gap(u) / w.omega_hat_gap(0.5 * u));
    }
    return mx;
}

double audit_dcheck(const RadialWeight& w, int K,
                    const std::vector<double>& grid) {
    if (K < 2) throw std::invalid_argument("audit_dcheck: K >= 2");
    double mn = std::numeric_limits<double>::infinity();
    for (double r : grid) {
        const double u = 1.0 - r;
        mn = std::min(mn, w.omega_hat_gap(u) / w.omega_hat_gap(u / K));
    }
    return mn;
}

namespace {

std::vector<double> gap_grid(int depth, int points_per_octave) {
    std::vector<double> g;
    for (int k = 0; k <= depth; ++k)
        g.push_back(std::pow(2.0, -static_cast<double>(k) / points_per_octave));
    return g;
}

double dhat_on_gaps(const RadialWeight& w, const std::vector<double>& gaps) {
    double mx = 0.0;
    for (double u : gaps)
        mx = std::max(mx, w.omega_hat_gap(u) / w.omega_hat_gap(0.5 * u));
    return mx;
}

double dcheck_on_gaps(const RadialWeight& w, int K,
                      const std::vector<double>& gaps) {
    double mn = std::numeric_limits<double>::infinity();
    for (double u : gaps)
        mn = std::min(mn, w.omega_hat_gap(u) / w.omega_hat_gap(u / K));
    return mn;
}

// Lemma A (iii) quantity in gap form: for r = 1-u,
//   int_0^r ((1-r)/(1-s))^lambda w(s) ds / what(r)
// with s = 1-v, ds = dv over v in [u, 1].
double lemma_a3_quantity(const RadialWeight& w, double lambda,
                         const std::vector<double>& gaps) {
    double mx = 0.0;
    for (double u : gaps) {
        if (u >= 1.0) continue;
        const auto f = [&](double v) {
            return std::pow(u / v, lambda) * w.density_gap(v);
        };
        const double I = gap_integral(f, u, 1.0);
        mx = std::max(mx, I / w.omega_hat_gap(u));
    }
    return mx;
}

}  // namespace

WeightAudit audit_weight(const RadialWeight& w, int grid_depth, int k_cap) {
    WeightAudit a;
    const auto gaps = gap_grid(grid_depth, 2);
    const auto fine = gap_grid(2 * grid_depth, 2);

    a.c_hat = dhat_on_gaps(w, gaps);
    const double c_hat_fine = dhat_on_gaps(w, fine);
    a.dhat_pass = std::isfinite(c_hat_fine) &&
                  std::abs(c_hat_fine - a.c_hat) <= 0.05 * a.c_hat;
    a.c_hat = std::max(a.c_hat, c_hat_fine);

    // smallest K >= 2 whose lower-doubling margin exceeds 1.1 and is stable
    for (int K = 2; K <= k_cap; ++K) {
        const double c = dcheck_on_gaps(w, K, gaps);
        const double cf = dcheck_on_gaps(w, K, fine);
        if (std::min(c, cf) > 1.1 && std::abs(cf - c) <= 0.05 * c) {
            a.K = K;
            a.c_check = std::min(c, cf);
            a.dcheck_pass = true;
            break;
        }
    }

    if (!a.dhat_pass) return a;

    // Lemma A (ii): alpha0 = max one-octave log-ratio slope
    const int ppo = 2;
    double alpha0 = 0.0;
    for (std::size_t k = 0; k + ppo < gaps.size(); ++k) {
        const double slope =
            std::log(w.omega_hat_gap(gaps[k]) /
                     w.omega_hat_gap(gaps[k + ppo])) /
            std::log(gaps[k] / gaps[k + ppo]);
        alpha0 = std::max(alpha0, slope);
    }
    a.alpha0 = alpha0;
    double c_alpha = 1.0;
    for (std::size_t i = 0; i < gaps.size(); ++i)
        for (std::size_t j = i + 1; j < gaps.size(); ++j) {
            const double bound = std::pow(gaps[i] / gaps[j], alpha0);
            c_alpha = std::max(c_alpha, w.omega_hat_gap(gaps[i]) /
                                            w.omega_hat_gap(gaps[j]) / bound);
        }
    a.c_alpha = c_alpha;

    // Lemma A (iii): bisect the smallest lambda whose quantity is stable
    const auto mid_gaps = gap_grid(grid_depth / 2, 1);
    const auto mid_fine = gap_grid(grid_depth, 1);
    const auto stable = [&](double lam) {
        const double q0 = lemma_a3_quantity(w, lam, mid_gaps);
        const double q1 = lemma_a3_quantity(w, lam, mid_fine);
        return std::isfinite(q1) && std::abs(q1 - q0) <= 0.05 * q0;
    };
    double lo = 0.0, hi = alpha0 + 4.0;
    if (stable(hi)) {
        for (int it = 0; it < 24; ++it) {
            const double mid = 0.5 * (lo + hi);
            (stable(mid) ? hi : lo) = mid;
        }
        a.lambda = hi;
        a.c_lambda = lemma_a3_quantity(w, hi, mid_fine);
    } else {
        a.lambda = hi;
        a.c_lambda = std::numeric_limits<double>::infinity();
    }
    return a;
}

std::vector<double> r_grid(int K, int j_max) {
    if (K < 2 || j_max < 1)
        throw std::invalid_argument("r_grid: K>=2, j_max>=1");
    std::vector<double> r(j_max + 1);
    for (int j = 0; j <= j_max; ++j) r[j] = 1.0 - std::pow(K, -j);
    return r;
}

Lemma32Check lemma_3_2_check(const RadialWeight& w, int K,
                             const std::vector<double>& grid) {
    Lemma32Check out;
    out.c1 = std::numeric_limits<double>::infinity();
    out.middle_ok = true;
    for (double r : grid) {
        const double u = 1.0 - r;
        const double hr = w.omega_hat_gap(u);
        const double hs = w.omega_hat_gap(u / K);
        const double mid = hr - hs;  // int_r^{1-(1-r)/K} w
        out.c1 = std::min(out.c1, mid / hs);
        out.c2 = std::max(out.c2, hr / hs);
        if (mid > hr * (1.0 + 1e-9)) out.middle_ok = false;
    }
    out.pass = out.middle_ok && out.c1 > 1e-3 && std::isfinite(out.c2);
    return out;
}

RadialWeight weight_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("weight file: ") + e.what());
    }
    const std::string kind = j.value("kind", "");
    RadialWeight w = [&] {
        if (kind == "standard")
            return RadialWeight::standard(j.at("alpha").get<double>());
        if (kind == "log_tail")
            return RadialWeight::log_tail(j.at("gamma").get<double>());
        if (kind == "tabulated") {
            std::vector<std::pair<double, double>> knots;
            for (const auto& k : j.at("knots"))
                knots.emplace_back(k.at(0).get<double>(),
                                   k.at(1).get<double>());
            return RadialWeight::tabulated(std::move(knots));
        }
        throw std::invalid_argument(
            "weight file: kind must be standard | log_tail | tabulated");
    }();
    if (j.contains("shift_beta"))
        w = weight_shift(w, j["shift_beta"].get<double>());
    return w;
}

std::string weight_to_json_text(const RadialWeight& w) {
    nlohmann::json j;
    j["schema_version"] = 1;
    switch (w.kind()) {
        case RadialWeight::Kind::Standard:
            j["kind"] = "standard";
            j["alpha"] = w.alpha();
            break;
        case RadialWeight::Kind::LogTail:
            j["kind"] = "log_tail";
            j["gamma"] = w.gamma();
            break;
        case RadialWeight::Kind::Tabulated: {
            j["kind"] = "tabulated";
            auto arr = nlohmann::json::array();
            for (const auto& [r, v] : w.knots()) arr.push_back({r, v});
            j["knots"] = arr;
            break;
        }
    }
    if (w.beta() != 0.0) j["shift_beta"] = w.beta();
    return j.dump(2);
}

}  // namespace mnlab
