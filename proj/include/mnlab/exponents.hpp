#pragma once

#include <limits>
#include <stdexcept>

namespace mnlab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// x' = x/(x-1) for x > 1, infinity for 0 < x <= 1.
inline double conjugate_exponent(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("conjugate: requires x > 0");
    return x > 1.0 ? x / (x - 1.0) : kInf;
}

/// Exponent bookkeeping for the four-case operator characterizations.
/// inv_p_tilde = 1/s - 1/p may be negative; p_tilde as an integral-mean index
/// is only used in the branches where it is positive (s < p).
struct ExponentProfile {
    double p = 2.0, q = 2.0, s = 2.0, t = 2.0;

    ExponentProfile() = default;
    ExponentProfile(double p_, double q_, double s_, double t_)
        : p(p_), q(q_), s(s_), t(t_) {
        if (!(p > 0.0) || !(q > 0.0) || !(s > 0.0) || !(t > 0.0))
            throw std::invalid_argument("ExponentProfile: exponents must be > 0");
    }

    double inv_p_tilde() const { return 1.0 / s - 1.0 / p; }
    double inv_q_tilde() const { return 1.0 / t - 1.0 / q; }
    /// p~ with 1/p~ = 1/s - 1/p; infinity when p = s. Only meaningful as an
    /// index when s < p.
    double p_tilde() const {
        const double v = inv_p_tilde();
        return v == 0.0 ? kInf : 1.0 / v;
    }
    double q_tilde() const {
        const double v = inv_q_tilde();
        return v == 0.0 ? kInf : 1.0 / v;
    }

    enum class Case { A, B, C, D };
    Case case_tag() const {
        if (p <= s) return q <= t ? Case::A : Case::C;
        return q <= t ? Case::B : Case::D;
    }
    static const char* case_name(Case c) {
        switch (c) {
            case Case::A: return "a";
            case Case::B: return "b";
            case Case::C: return "c";
            default: return "d";
        }
    }

    /// Multiplier exponents (s (p/s)', t (q/t)') of Lemma D.
    std::pair<double, double> multiplier_exponents() const {
        return {s * conjugate_exponent(p / s), t * conjugate_exponent(q / t)};
    }
};

}  // namespace mnlab
