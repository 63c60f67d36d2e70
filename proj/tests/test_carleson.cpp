#include <doctest.h>

#include <cmath>

#include "mnlab/carleson.hpp"
#include "mnlab/corpus.hpp"
#include "mnlab/means.hpp"
#include "mnlab/mixed_norm.hpp"

using namespace mnlab;
using doctest::Approx;

TEST_SUITE_BEGIN("carleson");

TEST_CASE("lpq_norm") {
    DoubleIndexSeq a = DoubleIndexSeq::zeros(2, 1);
    a.rows[0][0] = 3.0;
    a.rows[0][1] = 4.0;
    CHECK(lpq_norm(a, 2.0, 7.0) == Approx(5.0));
    CHECK(lpq_norm(a, 2.0, kInf) == Approx(5.0));

    DoubleIndexSeq b = DoubleIndexSeq::zeros(2, 2);
    b.rows[0][0] = 1.0;
    b.rows[1][0] = 1.0;
    CHECK(lpq_norm(b, 1.0, 2.0) == Approx(std::sqrt(2.0)));

    CHECK(lpq_norm(DoubleIndexSeq::zeros(2, 3), 0.5, 0.5) == 0.0);
    CHECK_THROWS_AS(lpq_norm(a, 0.0, 2.0), std::invalid_argument);

    DoubleIndexSeq bad = a;
    bad.rows[0].pop_back();
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("tg_discrete_seq hand arithmetic for g = z") {
    // g' = 1: arc means are (1/N)^{1/s}; with p=s, q=t the row weight is
    // K^{j(1/p-1)}, so every entry of row j is 2^{-j-1} and the l^{inf,inf}
    // norm is 2^{-2} at j = 1
    const ExponentProfile pr(2, 2, 2, 2);
    const auto w = RadialWeight::standard(0.0);
    const DiscreteSeqResult res =
        tg_discrete_seq(PowerSeries::monomial(1), pr, w, 2, 3);
    for (int j = 1; j <= 3; ++j) {
        for (double v : res.seq.rows[j - 1])
            CHECK(v == Approx(std::pow(2.0, -j - 1)).epsilon(1e-12));
    }
    CHECK(res.norm == Approx(0.25).epsilon(1e-12));

    // constant symbols vanish
    const DiscreteSeqResult zero =
        tg_discrete_seq(PowerSeries::constant(5.0), pr, w, 2, 3);
    CHECK(zero.norm == 0.0);

    // homogeneity
    const DiscreteSeqResult dbl =
        tg_discrete_seq(PowerSeries::monomial(1, 2.0), pr, w, 2, 3);
    CHECK(dbl.norm == Approx(2.0 * res.norm).epsilon(1e-12));
}

TEST_CASE("sg_discrete_seq hand arithmetic for g = 1") {
    const ExponentProfile pr(2, 2, 2, 2);
    const auto w = RadialWeight::standard(0.0);
    const DiscreteSeqResult res =
        sg_discrete_seq(PowerSeries::constant(1.0), pr, w, 2, 3);
    // row j entries: 2^{j/p} (1/K^{j+2})^{1/s} = 2^{-2/p} for p = s = 2
    for (int j = 1; j <= 3; ++j)
        for (double v : res.seq.rows[j - 1])
            CHECK(v == Approx(std::pow(2.0, -1.0)).epsilon(1e-12));
    CHECK(res.norm == Approx(0.5).epsilon(1e-12));

    const DiscreteSeqResult zero =
        sg_discrete_seq(PowerSeries::constant(0.0), pr, w, 2, 3);
    CHECK(zero.norm == 0.0);

    const DiscreteSeqResult dbl =
        sg_discrete_seq(PowerSeries::constant(3.0), pr, w, 2, 3);
    CHECK(dbl.norm == Approx(3.0 * res.norm).epsilon(1e-12));
}

TEST_CASE("multiplier exponent examples") {
    const auto [a, b] = ExponentProfile(4, 6, 2, 3).multiplier_exponents();
    CHECK(a == Approx(4.0));
    CHECK(b == Approx(6.0));
}

TEST_CASE("multiplier_norm_bruteforce: exact cases") {
    // all-ones multiplier with p=s, q=t acts as the identity: norm 1
    DoubleIndexSeq ones = DoubleIndexSeq::zeros(2, 2);
    for (auto& row : ones.rows)
        for (auto& v : row) v = 1.0;
    const ExponentProfile pr(2, 2, 2, 2);
    const MultiplierEstimate id = multiplier_norm_bruteforce(ones, pr, 10, 3);
    CHECK(id.brute == Approx(1.0).epsilon(1e-12));
    CHECK(id.formula == Approx(1.0).epsilon(1e-12));

    // single nonzero entry: the norm is that entry, any profile
    for (const ExponentProfile& prof :
         {ExponentProfile(2, 2, 1, 1), ExponentProfile(1, 1, 2, 2),
          ExponentProfile(0.5, 3, 1, 2)}) {
        DoubleIndexSeq e = DoubleIndexSeq::zeros(2, 2);
        e.rows[1][5] = 0.37;
        const MultiplierEstimate est =
            multiplier_norm_bruteforce(e, prof, 5, 1);
        CHECK(est.brute == Approx(0.37).epsilon(1e-12));
    }
}

TEST_CASE("multiplier brute force brackets the formula over seeds") {
    // all four sign patterns of (p vs s, q vs t)
    const ExponentProfile profiles[4] = {
        ExponentProfile(1.5, 2.5, 2.5, 3.5),  // p<=s, q<=t
        ExponentProfile(2.5, 2.0, 1.5, 3.0),  // s<p,  q<=t
        ExponentProfile(1.0, 4.0, 2.0, 2.0),  // p<=s, t<q
        ExponentProfile(3.0, 4.0, 1.5, 2.0),  // s<p,  t<q
    };
    for (const auto& pr : profiles) {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const DoubleIndexSeq b = random_seq(2, 2, 1000 + seed);
            const MultiplierEstimate est =
                multiplier_norm_bruteforce(b, pr, 20, seed);
            REQUIRE(est.formula > 0.0);
            const double ratio = est.brute / est.formula;
            CHECK(ratio >= 0.3);
            CHECK(ratio <= 3.0);
        }
    }
}

TEST_CASE("carleson_discrete_lhs: zero, partition, cross-check") {
    const ExponentProfile pr(2, 2, 2, 2);
    const auto w = RadialWeight::standard(0.0);
    const MeasureSpec leb = MeasureSpec::lebesgue();

    CHECK(carleson_discrete_lhs(DoubleIndexSeq::zeros(2, 2), leb, pr, w, 0) ==
          0.0);

    // single row, constant sequence: the inner sum collapses to |a|^s because
    // the arcs tile the circle and mu_r is normalized Lebesgue
    DoubleIndexSeq a = DoubleIndexSeq::zeros(2, 1);
    for (auto& v : a.rows[0]) v = 0.7;
    // row j=1: K^{jt(n+1/p)} what(r_1)^{-t/q} |a|^t nu([r_0,r_1))
    const double want =
        std::pow(2.0, 2.0 * (0.0 + 0.5)) * std::pow(0.5, -1.0) *
        std::pow(0.7, 2.0) * 0.5;
    CHECK(carleson_discrete_lhs(a, leb, pr, w, 0) ==
          Approx(std::sqrt(want)).epsilon(1e-12));

    // atomic nu: a single atom at r = 0.25 with mass 2
    MeasureSpec atom_nu = leb;
    atom_nu.nu_is_weight = false;
    atom_nu.nu_atoms = {{0.25, 2.0}};
    const double want_atom = want / 0.5 * 2.0;
    CHECK(carleson_discrete_lhs(a, atom_nu, pr, w, 0) ==
          Approx(std::sqrt(want_atom)).epsilon(1e-12));
}

TEST_CASE("carleson_continuous_lhs basics") {
    const auto nu = RadialWeight::standard(0.0);
    CHECK(carleson_continuous_lhs(PowerSeries::constant(1.0),
                                  PowerSeries::constant(1.0), 0, 1.5, 2.5,
                                  nu) == Approx(1.0).epsilon(1e-6));
    CHECK(carleson_continuous_lhs(PowerSeries::constant(4.0),
                                  PowerSeries::constant(1.0), 1, 2.0, 2.0,
                                  nu) == 0.0);
    CHECK(carleson_continuous_lhs(PowerSeries::monomial(1),
                                  PowerSeries::constant(1.0), 0, 2.0, 2.0,
                                  nu) ==
          Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-6));
}

TEST_CASE("G-nu rows cross-check the arc-mean pathway") {
    // mu_r = |G|^s dtheta/2pi with G = 1 matches the Lebesgue measure rows
    const ExponentProfile pr(2, 2, 2, 2);
    const auto w = RadialWeight::standard(0.0);
    const auto nu = RadialWeight::standard(0.0);
    const DiscreteSeqResult rows = g_nu_discrete_seq(
        PowerSeries::constant(1.0), 0, pr, w, nu, 2, 3);
    for (int j = 1; j <= 3; ++j) {
        const double K_fac = std::pow(2.0, j * (0.0 + 0.5));
        const double nu_fac = std::pow(nu.omega_hat(1.0 - std::pow(2.0, -j)),
                                       1.0 / pr.t);
        const double w_fac = std::pow(w.omega_hat(1.0 - std::pow(2.0, -j)),
                                      -1.0 / pr.q);
        const double arc = std::pow(std::pow(2.0, -(j + 2.0)), 1.0 / pr.s);
        for (double v : rows.seq.rows[j - 1])
            CHECK(v == Approx(K_fac * nu_fac * w_fac * arc).epsilon(1e-12));
    }
}

TEST_CASE("discrete Carleson inequality holds on random sequences") {
    // With mu_r = Lebesgue/2pi and nu = omega, the continuous inequality
    // holds on the corpus with some constant C (max ratio); the discrete
    // inequality then holds on random sequences with a comparable constant.
    const ExponentProfile pr(2, 2, 2, 2);
    const auto w = RadialWeight::standard(0.0);
    const MeasureSpec leb = MeasureSpec::lebesgue();

    double C = 0.0;
    for (const auto& e : build_corpus(41, 64)) {
        const double den = apq_norm(e.f, pr.p, pr.q, w);
        if (den == 0.0) continue;
        const double num = carleson_continuous_lhs(
            e.f, PowerSeries::constant(1.0), 0, pr.s, pr.t, w);
        C = std::max(C, num / den);
    }
    REQUIRE(C > 0.0);

    double Cp = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const DoubleIndexSeq a = random_seq(2, 3, 777 + seed);
        const double lhs = carleson_discrete_lhs(a, leb, pr, w, 0);
        const double rhs = lpq_norm(a, pr.p, pr.q);
        Cp = std::max(Cp, lhs / rhs);
    }
    CHECK(Cp <= 4.0 * C);  // one uniform constant at desk scale
}

TEST_CASE("measure spec json round trip and validation") {
    MeasureSpec m = MeasureSpec::lebesgue();
    m.bands[0].atoms = {{1.0, 0.5}};
    const MeasureSpec back = MeasureSpec::from_json_text(m.to_json_text());
    CHECK(back.bands.size() == 1);
    CHECK(back.angular_mass(0.5, 0.9, 1.1) ==
          Approx(m.angular_mass(0.5, 0.9, 1.1)));

    CHECK_THROWS_AS(MeasureSpec::from_json_text("{"), std::invalid_argument);
    CHECK_THROWS_AS(MeasureSpec::from_json_text(R"({"bands":[]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(MeasureSpec::from_json_text(
                        R"({"bands":[{"atoms":[[0.0,-1.0]]}]})"),
                    std::invalid_argument);
}

TEST_SUITE_END();
