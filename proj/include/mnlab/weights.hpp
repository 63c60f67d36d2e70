#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mnlab {

/// Radial weight on [0,1). Three families:
///  - standard:  w(r) = (1-r)^alpha, alpha > -1
///  - log_tail:  what(r) = log(e/(1-r))^{-gamma}  (density gamma/((1-r) L^{gamma+1}));
///               the classic upper-doubling weight that fails lower doubling
///  - tabulated: density linear between knots, tails integrate the interpolant
/// A pointwise factor (1-r)^beta (beta >= 0) can be layered on any of them.
class RadialWeight {
  public:
    enum class Kind { Standard, LogTail, Tabulated };

    static RadialWeight standard(double alpha);
    static RadialWeight log_tail(double gamma);
    static RadialWeight tabulated(std::vector<std::pair<double, double>> knots);

    Kind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    double gamma() const { return gamma_; }
    double beta() const { return beta_; }
    const std::vector<std::pair<double, double>>& knots() const { return knots_; }

    /// density w(r), r in [0,1)
    double density(double r) const;
    /// tail integral what(r) = int_r^1 w; closed form where available,
    /// otherwise dyadic-cell Gauss quadrature to ~1e-12 relative.
    double omega_hat(double r) const;
    /// int_a^b w(s) ds, 0 <= a <= b <= 1
    double integrate(double a, double b) const;

    // gap-variable forms (u = 1-r); exact on dyadic audit grids where the
    // radius form loses the last bits of 1-r
    double omega_hat_gap(double u) const;
    double density_gap(double u) const;

    bool has_closed_form_tail() const;
    std::string describe() const;

  private:
    Kind kind_ = Kind::Standard;
    double alpha_ = 0.0;
    double gamma_ = 1.0;
    double beta_ = 0.0;  // extra (1-r)^beta factor
    std::vector<std::pair<double, double>> knots_;
    // tabulated: per-knot suffix tail integrals of the interpolant
    std::vector<double> knot_tails_;

    void rebuild_tabulated_tails();
    friend RadialWeight weight_shift(const RadialWeight&, double);
};

/// w_[beta](r) = w(r) (1-r)^beta. For standard weights the result is the
/// standard weight alpha+beta.
RadialWeight weight_shift(const RadialWeight& w, double beta);

/// Empirical audit of the doubling classes and the Lemma-A constants.
struct WeightAudit {
    double c_hat = 0.0;            // max what(r)/what((1+r)/2)
    bool dhat_pass = false;
    int K = 0;                     // smallest K with the lower-doubling margin
    double c_check = 0.0;          // min what(r)/what(1-(1-r)/K) at that K
    bool dcheck_pass = false;
    double alpha0 = 0.0;           // exponent for Lemma A (ii)
    double c_alpha = 0.0;          // constant for Lemma A (ii)
    double lambda = 0.0;           // exponent for Lemma A (iii)
    double c_lambda = 0.0;         // constant for Lemma A (iii)
    bool in_doubling_class() const { return dhat_pass && dcheck_pass; }
};

/// Grid used by the audits: r_k = 1 - 2^{-k/points_per_octave}, k = 0..depth.
std::vector<double> audit_grid(int depth, int points_per_octave = 2);

/// max over the grid of what(r)/what((1+r)/2); equals 2^{alpha+1} exactly for
/// standard weights.
double audit_dhat(const RadialWeight& w, const std::vector<double>& grid);

/// min over the grid of what(r)/what(1-(1-r)/K); lower doubling holds iff > 1.
double audit_dcheck(const RadialWeight& w, int K,
                    const std::vector<double>& grid);

/// Full audit: upper doubling, smallest passing K (margin 1.1, stable under
/// grid doubling), Lemma A (ii) exponent via log-ratio slopes over nested
/// pairs, Lemma A (iii) lambda via bisection on the integral test.
WeightAudit audit_weight(const RadialWeight& w, int grid_depth = 80,
                         int k_cap = 16);

/// r_j = 1 - K^{-j}, j = 0..j_max (r_0 = 0).
std::vector<double> r_grid(int K, int j_max);

struct Lemma32Check {
    double c1 = 0.0;  // min (what(r) - what(r*))/what(r*) over the grid
    double c2 = 0.0;  // max what(r)/what(r*)
    bool middle_ok = false;  // int_r^{r*} w <= what(r) everywhere
    bool pass = false;
};

/// Three-way comparison of Lemma 3.2 with r* = 1 - (1-r)/K.
Lemma32Check lemma_3_2_check(const RadialWeight& w, int K,
                             const std::vector<double>& grid);

/// JSON (de)serialization of the weight definition file; see README for the
/// schema. Throws std::invalid_argument with a descriptive message on bad
/// input.
RadialWeight weight_from_json_text(const std::string& text);
std::string weight_to_json_text(const RadialWeight& w);

}  // namespace mnlab
