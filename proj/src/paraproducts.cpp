#include "mnlab/paraproducts.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mnlab/means.hpp"
#include "mnlab/mixed_norm.hpp"

namespace mnlab {

const char* kind_name(ParaproductKind k) {
    switch (k) {
        case ParaproductKind::T: return "T";
        case ParaproductKind::S: return "S";
        default: return "M";
    }
}

ParaproductKind kind_from_name(const std::string& name) {
    if (name == "T") return ParaproductKind::T;
    if (name == "S") return ParaproductKind::S;
    if (name == "M") return ParaproductKind::M;
    throw std::invalid_argument("paraproduct kind must be T, S or M");
}

PowerSeries apply_paraproduct(ParaproductKind kind, const PowerSeries& g,
                              const PowerSeries& f, std::size_t max_degree) {
    switch (kind) {
        case ParaproductKind::T:
            return primitive(
                cauchy_product(f, derivative(g), max_degree ? max_degree - 1 : 0));
        case ParaproductKind::S:
            return primitive(
                cauchy_product(derivative(f), g, max_degree ? max_degree - 1 : 0));
        default:
            return cauchy_product(f, g, max_degree);
    }
}

namespace {

struct SupScan {
    double sup = 0.0;
    bool divergent = false;
};

// sup over r_k = 1 - 2^{-k/4} with midpoint refinement around the argmax;
// divergent when the last octave still pushes the running sup up by > 5%.
template <class F>
SupScan sup_over_radii(const F& value, int grid_points) {
    SupScan out;
    double sup_wo_tail = 0.0;
    int kbest = 0;
    for (int k = 0; k <= grid_points; ++k) {
        const double v = value(1.0 - std::pow(2.0, -k / 4.0));
        if (v > out.sup) {
            out.sup = v;
            kbest = k;
        }
        if (k <= grid_points - 4) sup_wo_tail = std::max(sup_wo_tail, v);
    }
    for (double dk : {-0.5, 0.5}) {
        const double r = 1.0 - std::pow(2.0, -(kbest + dk) / 4.0);
        if (r >= 0.0 && r < 1.0) out.sup = std::max(out.sup, value(r));
    }
    out.divergent = sup_wo_tail > 0.0 && out.sup > 1.05 * sup_wo_tail;
    return out;
}

}  // namespace

RhoResult rho(const PowerSeries& g, const ExponentProfile& profile,
              const RadialWeight& w, ParaproductKind kind,
              int sup_grid_points, int radial_nodes) {
    const bool is_t = kind == ParaproductKind::T;
    RhoResult out;
    out.case_tag = profile.case_tag();
    const double ipt = profile.inv_p_tilde();
    const double iqt = profile.inv_q_tilde();
    const PowerSeries h = is_t ? derivative(g) : g;
    const double extra = is_t ? 1.0 : 0.0;  // the (1-r) factor carried by T

    switch (out.case_tag) {
        case ExponentProfile::Case::A: {
            const auto val = [&](double r) {
                return integral_mean(h, r, kInf) *
                       std::pow(w.omega_hat(r), iqt) *
                       std::pow(1.0 - r, extra + ipt);
            };
            const SupScan s = sup_over_radii(val, sup_grid_points);
            out.value = s.sup;
            out.divergent = s.divergent;
            return out;
        }
        case ExponentProfile::Case::B: {
            const double pt = profile.p_tilde();
            const auto val = [&](double r) {
                return integral_mean(h, r, pt) *
                       std::pow(w.omega_hat(r), iqt) *
                       std::pow(1.0 - r, extra);
            };
            const SupScan s = sup_over_radii(val, sup_grid_points);
            out.value = s.sup;
            out.divergent = s.divergent;
            return out;
        }
        case ExponentProfile::Case::C: {
            const LinfQResult r =
                linf_q_norm(h, extra + ipt, profile.q_tilde(), w, radial_nodes);
            out.value = r.norm;
            out.divergent = r.divergent;
            return out;
        }
        default: {  // case (d)
            const double pt = profile.p_tilde(), qt = profile.q_tilde();
            if (is_t) {
                PowerSeries g0 = add(g, PowerSeries::constant(-g.at_zero()));
                out.value = littlewood_paley_norm(g0, pt, qt, w, radial_nodes);
            } else {
                out.value = apq_norm(g, pt, qt, w, radial_nodes);
            }
            return out;
        }
    }
}

namespace {

PowerSeries kernel_ladder(int j_top, double M, std::size_t max_degree) {
    PowerSeries f = PowerSeries::constant(0.0);
    for (int k = 1; k <= j_top; ++k) {
        AtomSpec spec;
        spec.center = 1.0 - std::pow(2.0, -k);
        spec.exponent_M = M;
        spec.p = 1.0;
        spec.q = 1.0;
        spec.omega_hat_at_center = 1.0;
        spec.threshold = 0.0;
        PowerSeries kern = atom_function(spec, max_degree);
        // prefactor (1-|w|)^{M-1} from the spec fields; rescale to the ladder
        // weight 2^{-k(M-3)}
        const double want = std::pow(2.0, -k * (M - 3.0));
        const double have = std::pow(std::pow(2.0, -k), M - 1.0);
        f = add(f, scale(kern, want / have));
    }
    return f;
}

}  // namespace

NormEstimate operator_norm_lower_bound(ParaproductKind kind,
                                       const PowerSeries& g,
                                       const ExponentProfile& profile,
                                       const RadialWeight& w,
                                       TestFamily family,
                                       const FamilyCaps& caps) {
    NormEstimate est;
    est.profile = profile;

    const auto ratio_of = [&](const PowerSeries& f) {
        const double den =
            apq_norm(f, profile.p, profile.q, w, caps.radial_nodes);
        if (den == 0.0) return 0.0;
        const PowerSeries Lf = apply_paraproduct(kind, g, f, caps.test_degree);
        return apq_norm(Lf, profile.s, profile.t, w, caps.radial_nodes) / den;
    };
    const auto consider = [&](double r, const std::string& tag) {
        if (r > est.lower_bound) {
            est.lower_bound = r;
            est.best_witness = tag;
        }
    };

    switch (family) {
        case TestFamily::Monomials: {
            est.family = "monomials";
            for (std::size_t n : caps.monomial_degrees) {
                std::ostringstream tag;
                tag << "monomial:" << n;
                consider(ratio_of(PowerSeries::monomial(n)), tag.str());
            }
            break;
        }
        case TestFamily::Atoms: {
            est.family = "atoms";
            const WeightAudit audit = audit_weight(w);
            const double threshold =
                1.0 + 1.0 / profile.p + (audit.alpha0 + audit.lambda) / profile.q;
            const double M = std::max(caps.atom_exponent_M, threshold + 0.5);
            const int K = audit.K > 0 ? audit.K : 2;
            SignPattern picker(caps.seed);
            for (int j = 1; j <= caps.atom_j_max; ++j) {
                const double rj = 1.0 - std::pow(K, -j);
                const double rjm1 = 1.0 - std::pow(K, -(j - 1));
                const std::size_t nl = [&] {
                    std::size_t v = 1;
                    for (int i = 0; i < j + 2; ++i) v *= static_cast<std::size_t>(K);
                    return v;
                }();
                for (int s = 0; s < caps.atoms_per_ring; ++s) {
                    const std::size_t l =
                        (static_cast<std::size_t>(s) * nl) /
                        static_cast<std::size_t>(caps.atoms_per_ring);
                    AtomSpec spec;
                    spec.center = std::polar(
                        0.5 * (rj + rjm1),
                        2.0 * M_PI * (static_cast<double>(l) + 0.5) /
                            static_cast<double>(nl));
                    spec.exponent_M = M;
                    spec.p = profile.p;
                    spec.q = profile.q;
                    spec.omega_hat_at_center = w.omega_hat(std::abs(spec.center));
                    spec.threshold = threshold;
                    std::ostringstream tag;
                    tag << "atom:j=" << j << ",l=" << l;
                    consider(ratio_of(atom_function(spec, caps.test_degree)),
                             tag.str());
                }
            }
            break;
        }
        case TestFamily::Rademacher: {
            est.family = "rademacher";
            const WeightAudit audit = audit_weight(w);
            const double threshold =
                1.0 + 1.0 / profile.p + (audit.alpha0 + audit.lambda) / profile.q;
            const double M = std::max(caps.atom_exponent_M, threshold + 0.5);
            const int K = audit.K > 0 ? audit.K : 2;
            // one atom per ring at a staggered angle, unit weights
            std::vector<AtomSpec> atoms;
            for (int j = 1; j <= caps.atom_j_max; ++j) {
                const double rj = 1.0 - std::pow(K, -j);
                const double rjm1 = 1.0 - std::pow(K, -(j - 1));
                std::size_t nl = 1;
                for (int i = 0; i < j + 2; ++i) nl *= static_cast<std::size_t>(K);
                AtomSpec spec;
                spec.center = std::polar(
                    0.5 * (rj + rjm1),
                    2.0 * M_PI *
                        (static_cast<double>((7 * j) % static_cast<int>(nl)) +
                         0.5) /
                        static_cast<double>(nl));
                spec.exponent_M = M;
                spec.p = profile.p;
                spec.q = profile.q;
                spec.omega_hat_at_center = w.omega_hat(std::abs(spec.center));
                spec.threshold = threshold;
                atoms.push_back(spec);
            }
            const std::vector<double> weights(atoms.size(), 1.0);
            for (int d = 0; d <= caps.rademacher_draws; ++d) {
                std::vector<int> signs(atoms.size(), 1);
                if (d > 0) {  // draw 0 is the aligned combination
                    SignPattern sp(caps.seed + static_cast<std::uint64_t>(d));
                    for (auto& s : signs) s = sp.next();
                }
                const PowerSeries f = rademacher_combination(
                    atoms, weights, signs, caps.test_degree);
                std::ostringstream tag;
                tag << "rademacher:draw=" << d;
                consider(ratio_of(f), tag.str());
            }
            break;
        }
        case TestFamily::KernelLadder: {
            est.family = "kernel_ladder";
            const double M = std::max(6.0, caps.atom_exponent_M);
            for (int j = 1; j <= caps.kernel_ladder_j_max; ++j) {
                std::ostringstream tag;
                tag << "ladder:j=" << j;
                consider(ratio_of(kernel_ladder(j, M, caps.test_degree)),
                         tag.str());
            }
            break;
        }
    }
    return est;
}

namespace {

// int_0^1 (1-r)^c w(r) dr over dyadic cells with a divergence probe
std::pair<double, bool> power_weight_integral(const RadialWeight& w, double c,
                                              int octaves) {
    double I = 0.0;
    std::vector<double> cells;
    double lo = 0.0;
    for (int k = 0; k < octaves; ++k) {
        const double hi = 1.0 - std::pow(2.0, -(k + 1));
        // 4-point composite midpoint per cell is enough for the probe
        double cell = 0.0;
        for (int i = 0; i < 4; ++i) {
            const double r = lo + (hi - lo) * (i + 0.5) / 4.0;
            cell += std::pow(1.0 - r, c) * w.density(r) * (hi - lo) / 4.0;
        }
        cells.push_back(cell);
        I += cell;
        lo = hi;
    }
    bool div = false;
    if (cells.size() >= 8) {
        double last = 0.0, prev = 0.0;
        for (std::size_t k = cells.size() - 4; k < cells.size(); ++k)
            last += cells[k];
        for (std::size_t k = cells.size() - 8; k < cells.size() - 4; ++k)
            prev += cells[k];
        div = last >= 0.999 * prev && last > 1e-14 * I;
    }
    return {I, div};
}

// does factor(r) -> infinity along r_k = 1 - 2^{-k/4}?
template <class F>
std::pair<double, bool> limit_probe(const F& factor, int grid_points) {
    double tail = 0.0, prev = 0.0;
    for (int k = 0; k <= grid_points; ++k) {
        const double v = factor(1.0 - std::pow(2.0, -k / 4.0));
        if (k > grid_points - 4)
            tail = std::max(tail, v);
        else if (k > grid_points - 8)
            prev = std::max(prev, v);
    }
    return {tail, tail > 1.05 * prev};
}

}  // namespace

DegeneracyReport degeneracy_check(const ExponentProfile& profile,
                                  const RadialWeight& w, ParaproductKind kind,
                                  int grid_depth) {
    DegeneracyReport rep;
    rep.case_tag = profile.case_tag();
    const bool is_t = kind == ParaproductKind::T;
    const double ipt = profile.inv_p_tilde();
    const double iqt = profile.inv_q_tilde();
    const double extra = is_t ? 1.0 : 0.0;

    switch (rep.case_tag) {
        case ExponentProfile::Case::A: {
            if (!is_t) {
                if (profile.p == profile.s && profile.q == profile.t) {
                    rep.detail = "bounded symbols are exactly H^inf";
                    return rep;
                }
                rep.verdict = DegeneracyVerdict::OnlyZero;
                rep.detail = "weight factor blows up; only g == 0 is bounded";
                return rep;
            }
            const auto [val, div] = limit_probe(
                [&](double r) {
                    return std::pow(w.omega_hat(r), iqt) *
                           std::pow(1.0 - r, extra + ipt);
                },
                grid_depth);
            rep.diagnostic = val;
            rep.diagnostic_divergent = div;
            if (div) {
                rep.verdict = DegeneracyVerdict::OnlyConstants;
                rep.detail = "limit of what^{1/q~}(1-r)^{1+1/p~} is infinite";
            }
            return rep;
        }
        case ExponentProfile::Case::B: {
            if (!is_t) {
                if (profile.q == profile.t) {
                    rep.detail = "bounded symbols are exactly H^{p~}";
                    return rep;
                }
                rep.verdict = DegeneracyVerdict::OnlyZero;
                rep.detail = "what^{1/q~} blows up; only g == 0 is bounded";
                return rep;
            }
            const auto [val, div] = limit_probe(
                [&](double r) {
                    return std::pow(w.omega_hat(r), iqt) * (1.0 - r);
                },
                grid_depth);
            rep.diagnostic = val;
            rep.diagnostic_divergent = div;
            if (div) {
                rep.verdict = DegeneracyVerdict::OnlyConstants;
                rep.detail = "limit of what^{1/q~}(1-r) is infinite";
            }
            return rep;
        }
        case ExponentProfile::Case::C: {
            const double qt = profile.q_tilde();
            const double c = (extra + ipt) * qt;
            const auto [I, div] = power_weight_integral(w, c, grid_depth / 4);
            rep.diagnostic = I;
            rep.diagnostic_divergent = div;
            if (div) {
                rep.verdict = is_t ? DegeneracyVerdict::OnlyConstants
                                   : DegeneracyVerdict::OnlyZero;
                std::ostringstream os;
                os << "int (1-r)^{" << c << "} w(r) dr diverges";
                rep.detail = os.str();
            }
            return rep;
        }
        default:
            rep.detail = "case (d) is never degenerate";
            return rep;
    }
}

}  // namespace mnlab
