#include <doctest.h>

#include <cmath>

#include "mnlab/corpus.hpp"
#include "mnlab/mixed_norm.hpp"

using namespace mnlab;
using doctest::Approx;

TEST_SUITE_BEGIN("mixed_norm");

namespace {

// closed-form radial oracle for polynomial means against standard weights:
// int_0^1 r^k (1-r)^alpha dr via the beta-function recursion
double poly_weight_integral(const std::vector<double>& mono_coeffs,
                            double alpha) {
    double total = 0.0;
    for (std::size_t k = 0; k < mono_coeffs.size(); ++k) {
        double b = 1.0 / (alpha + 1.0);
        for (std::size_t i = 1; i <= k; ++i)
            b *= static_cast<double>(i) / (alpha + 1.0 + static_cast<double>(i));
        total += mono_coeffs[k] * b;
    }
    return total;
}

}  // namespace

TEST_CASE("ExponentProfile: conjugates, tildes, case tags, multipliers") {
    CHECK(conjugate_exponent(2.0) == Approx(2.0));
    CHECK(conjugate_exponent(1.0) == kInf);
    CHECK(conjugate_exponent(0.7) == kInf);
    CHECK(conjugate_exponent(4.0) == Approx(4.0 / 3.0));
    CHECK_THROWS_AS(conjugate_exponent(0.0), std::invalid_argument);

    CHECK(ExponentProfile(2, 2, 2, 2).case_tag() == ExponentProfile::Case::A);
    CHECK(ExponentProfile(4, 2, 2, 2).case_tag() == ExponentProfile::Case::B);
    CHECK(ExponentProfile(2, 4, 2, 2).case_tag() == ExponentProfile::Case::C);
    CHECK(ExponentProfile(4, 4, 2, 2).case_tag() == ExponentProfile::Case::D);

    const auto [u1, v1] = ExponentProfile(4, 6, 2, 3).multiplier_exponents();
    CHECK(u1 == Approx(4.0));
    CHECK(v1 == Approx(6.0));
    const auto [u2, v2] = ExponentProfile(2, 2, 2, 2).multiplier_exponents();
    CHECK(u2 == kInf);
    CHECK(v2 == kInf);
    const auto [u3, v3] = ExponentProfile(2, 2, 1, 1).multiplier_exponents();
    CHECK(u3 == Approx(2.0));
    CHECK(v3 == Approx(2.0));

    CHECK(ExponentProfile(2, 2, 2, 2).p_tilde() == kInf);
    CHECK(ExponentProfile(4, 4, 2, 2).p_tilde() == Approx(4.0));
    CHECK(ExponentProfile(4, 4, 2, 2).q_tilde() == Approx(4.0));
}

TEST_CASE("apq_norm: constants, monomials, polynomial oracle") {
    const auto lebesgue = RadialWeight::standard(0.0);
    CHECK(apq_norm(PowerSeries::constant(1.0), 3.0, 2.0, lebesgue) ==
          Approx(1.0).epsilon(1e-9));

    for (std::size_t n : {1u, 3u, 8u}) {
        CHECK(apq_norm(PowerSeries::monomial(n), 2.0, 2.0, lebesgue) ==
              Approx(std::sqrt(1.0 / (2.0 * n + 1.0))).epsilon(1e-8));
    }

    // f = 1+z, p=2, q=4, standard alpha=1:
    // M_2^4(r) = (1+r^2)^2 = 1 + 2r^2 + r^4; the closed-form radial oracle
    // evaluates the weighted integral to 7/10
    std::vector<double> m4 = {1.0, 0.0, 2.0, 0.0, 1.0};
    const double oracle = poly_weight_integral(m4, 1.0);
    CHECK(oracle == Approx(0.7).epsilon(1e-14));
    CHECK(apq_norm(PowerSeries({1.0, 1.0}), 2.0, 4.0,
                   RadialWeight::standard(1.0)) ==
          Approx(std::pow(oracle, 0.25)).epsilon(1e-7));

    CHECK_THROWS_AS(
        apq_norm(PowerSeries::constant(1.0), 2.0, kInf, lebesgue),
        std::invalid_argument);
    CHECK_THROWS_AS(
        apq_norm(PowerSeries::constant(1.0), 2.0, 2.0, lebesgue, 16),
        std::invalid_argument);
}

TEST_CASE("apq_norm against the high-resolution oracle across the corpus") {
    const auto corpus = build_corpus(21, 64);
    const auto w = RadialWeight::standard(1.0);
    for (const auto& e : corpus) {
        // p = q = 2: Parseval gives M_2^2 exactly as a polynomial in r
        std::vector<double> mono(2 * e.f.degree() + 1, 0.0);
        for (std::size_t m = 0; m <= e.f.degree(); ++m)
            mono[2 * m] += std::norm(e.f.coeff(m));
        const double oracle = std::sqrt(poly_weight_integral(mono, 1.0));
        CHECK(apq_norm(e.f, 2.0, 2.0, w) == Approx(oracle).epsilon(1e-6));
    }
}

TEST_CASE("hp_norm") {
    CHECK(hp_norm(PowerSeries::constant(1.0), 1.0) == Approx(1.0));
    CHECK(hp_norm(PowerSeries::monomial(9), 0.7) == Approx(1.0).epsilon(1e-9));
    const std::vector<cplx> unit(9, cplx{1.0});
    CHECK(hp_norm(lacunary_series(4, 9, unit), 2.0) ==
          Approx(3.0).epsilon(1e-10));
}

TEST_CASE("littlewood_paley_norm basics") {
    const auto lebesgue = RadialWeight::standard(0.0);
    CHECK(littlewood_paley_norm(PowerSeries::constant({3.0, 4.0}), 2.0, 2.0,
                                lebesgue) == Approx(5.0).epsilon(1e-9));
    // f = z: integral of (1-r)^2 is 1/3
    CHECK(littlewood_paley_norm(PowerSeries::monomial(1), 2.0, 2.0, lebesgue) ==
          Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-7));
}

TEST_CASE("littlewood_paley proxy brackets the direct norm corpus-wide") {
    const auto corpus = build_corpus(31, 64);
    for (double alpha : {0.0, 1.0}) {
        const auto w = RadialWeight::standard(alpha);
        for (auto [p, q] :
             {std::pair{2.0, 2.0}, std::pair{1.0, 2.0}, std::pair{2.0, 1.0}}) {
            double lo = kInf, hi = 0.0;
            for (const auto& e : corpus) {
                const double direct = apq_norm(e.f, p, q, w);
                const double proxy = littlewood_paley_norm(e.f, p, q, w);
                REQUIRE(direct > 0.0);
                lo = std::min(lo, proxy / direct);
                hi = std::max(hi, proxy / direct);
            }
            CHECK(hi / lo <= 25.0);
        }
    }
}

TEST_CASE("linf_q_norm") {
    const auto lebesgue = RadialWeight::standard(0.0);
    const LinfQResult one =
        linf_q_norm(PowerSeries::constant(1.0), 1.0, 2.0, lebesgue);
    CHECK(one.norm == Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-6));
    CHECK_FALSE(one.divergent);

    const LinfQResult zero =
        linf_q_norm(PowerSeries::constant(0.0), 1.0, 2.0, lebesgue);
    CHECK(zero.norm == 0.0);

    // g' = 1/(1-z) truncated at 512: (1-r) M_inf(r) = 1 - r^513, so the
    // closed form is sqrt(1 - 2/514 + 1/1027)
    const LinfQResult geom =
        linf_q_norm(geometric_kernel(1, 512), 1.0, 2.0, lebesgue);
    const double oracle = std::sqrt(1.0 - 2.0 / 514.0 + 1.0 / 1027.0);
    CHECK(geom.norm == Approx(oracle).epsilon(1e-3));
    CHECK_FALSE(geom.divergent);
}

TEST_CASE("block grid tiles rings exactly") {
    const BlockGrid g = BlockGrid::make(2, 5);
    for (int j = 1; j <= 5; ++j) {
        const double sum =
            static_cast<double>(g.arcs_in_ring(j)) * g.block_area(j);
        CHECK(sum == Approx(g.ring_area(j)).epsilon(1e-12));
    }
    CHECK(g.arcs_in_ring(3) == 32);
}

TEST_CASE("block_sup_norm: constants and derivative kill") {
    const auto w = RadialWeight::standard(0.0);
    const BlockGrid g = BlockGrid::make(2, 4);
    // every block sup is 1; the weighted row value is K^{2/p} what(r_j)^{1/q}
    const double p = 2.0, q = 2.0;
    double want_q = 0.0;
    for (int j = 1; j <= 4; ++j)
        want_q += std::pow(std::pow(2.0, 2.0 / p) *
                               std::pow(w.omega_hat(g.radii[j]), 1.0 / q),
                           q);
    CHECK(block_sup_norm(PowerSeries::constant(1.0), 0, g, p, q, w) ==
          Approx(std::pow(want_q, 1.0 / q)).epsilon(1e-12));

    CHECK(block_sup_norm(PowerSeries::constant(1.0), 1, g, p, q, w) == 0.0);
}

TEST_CASE("block_sup_norm is dominated by the mixed norm") {
    const auto corpus = build_corpus(17, 64);
    const auto w = RadialWeight::standard(0.0);
    const BlockGrid g = BlockGrid::make(2, 4);
    double worst = 0.0;
    for (const auto& e : corpus) {
        const double denom = apq_norm(e.f, 2.0, 2.0, w);
        if (denom == 0.0) continue;
        worst =
            std::max(worst, block_sup_norm(e.f, 0, g, 2.0, 2.0, w) / denom);
    }
    CHECK(worst <= 16.0);  // one constant for the whole corpus
}

TEST_SUITE_END();
