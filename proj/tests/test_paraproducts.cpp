#include <doctest.h>

#include <cmath>

#include "mnlab/corpus.hpp"
#include "mnlab/mixed_norm.hpp"
#include "mnlab/paraproducts.hpp"

using namespace mnlab;
using doctest::Approx;

TEST_SUITE_BEGIN("paraproducts");

TEST_CASE("apply_paraproduct: basic actions") {
    // T with g = z integrates: T_z(1) = z
    const PowerSeries t =
        apply_paraproduct(ParaproductKind::T, PowerSeries::monomial(1),
                          PowerSeries::constant(1.0), 16);
    CHECK(t.coeff(1) == cplx{1.0});
    CHECK(t.coeff(0) == cplx{0.0});

    // S with g = 1 strips the constant term
    PowerSeries f({cplx{2.0, 1.0}, cplx{3.0}, cplx{0.0, -1.0}});
    const PowerSeries s = apply_paraproduct(
        ParaproductKind::S, PowerSeries::constant(1.0), f, 16);
    CHECK(s.coeff(0) == cplx{0.0});
    for (std::size_t m = 1; m <= f.degree(); ++m)
        CHECK(std::abs(s.coeff(m) - f.coeff(m)) < 1e-15);
}

TEST_CASE("M = T + S + f(0)g(0) exactly on coefficients") {
    PowerSeries f({cplx{1.0}, cplx{2.0}});
    PowerSeries g({cplx{3.0}, cplx{-1.0}});
    const PowerSeries m = apply_paraproduct(ParaproductKind::M, g, f, 8);
    const PowerSeries t = apply_paraproduct(ParaproductKind::T, g, f, 8);
    const PowerSeries s = apply_paraproduct(ParaproductKind::S, g, f, 8);
    for (std::size_t k = 0; k <= 8; ++k) {
        const cplx extra = k == 0 ? f.at_zero() * g.at_zero() : cplx{0.0};
        CHECK(std::abs(m.coeff(k) - (t.coeff(k) + s.coeff(k) + extra)) == 0.0);
    }

    // 50 random pairs at degree <= 64
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const PowerSeries rf = random_polynomial(37 + seed % 28, 900 + seed);
        const PowerSeries rg = random_polynomial(64 - seed % 30, 1900 + seed);
        const PowerSeries mm = apply_paraproduct(ParaproductKind::M, rg, rf, 64);
        const PowerSeries tt = apply_paraproduct(ParaproductKind::T, rg, rf, 64);
        const PowerSeries ss = apply_paraproduct(ParaproductKind::S, rg, rf, 64);
        for (std::size_t k = 0; k <= 64; ++k) {
            const cplx extra = k == 0 ? rf.at_zero() * rg.at_zero() : cplx{0.0};
            CHECK(std::abs(mm.coeff(k) - (tt.coeff(k) + ss.coeff(k) + extra)) <
                  1e-13);
        }
    }
}

TEST_CASE("rho: Bloch collapse, constants, case (b) example") {
    const auto w = RadialWeight::standard(0.0);
    // case (a) with p=s, q=t: rho = sup |g'| (1-r); for g = z this is 1
    const RhoResult bloch =
        rho(PowerSeries::monomial(1), ExponentProfile(2, 2, 2, 2), w,
            ParaproductKind::T);
    CHECK(bloch.value == Approx(1.0).epsilon(1e-9));
    CHECK_FALSE(bloch.divergent);

    // constant symbols: zero in every case
    for (const ExponentProfile& pr :
         {ExponentProfile(2, 2, 2, 2), ExponentProfile(4, 2, 2, 2),
          ExponentProfile(2, 4, 2, 2), ExponentProfile(4, 4, 2, 2)}) {
        const RhoResult z =
            rho(PowerSeries::constant(7.0), pr, w, ParaproductKind::T);
        CHECK(z.value == 0.0);
    }

    // case (b): p=2, s=1 gives p~ = 2; with q=t and g' = 1 the sup of
    // (1-r) M_2(r, 1) is 1
    const RhoResult caseb =
        rho(PowerSeries::monomial(1), ExponentProfile(2, 3, 1, 3), w,
            ParaproductKind::T);
    CHECK(caseb.case_tag == ExponentProfile::Case::B);
    CHECK(caseb.value == Approx(1.0).epsilon(1e-9));
}

TEST_CASE("rho collapses to the Bloch seminorm for polynomial symbols") {
    const auto w = RadialWeight::standard(1.0);
    const ExponentProfile pr(2, 2, 2, 2);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const PowerSeries g = random_polynomial(6, 4242 + seed);
        const RhoResult r = rho(g, pr, w, ParaproductKind::T);
        // independent dense-grid Bloch seminorm
        const PowerSeries gp = derivative(g);
        double bloch = 0.0;
        for (int k = 0; k <= 4000; ++k) {
            const double rr = k / 4001.0;
            bloch = std::max(bloch,
                             (1.0 - rr) * integral_mean(gp, rr, kInf));
        }
        CHECK(r.value == Approx(bloch).epsilon(1e-3));
    }
}

TEST_CASE("operator lower bound: monomial oracle for T with g = z") {
    // closed form: ratio^2 at z^n is (2n+1)/((n+1)^2 (2n+3)), max at n = 0
    const auto w = RadialWeight::standard(0.0);
    FamilyCaps caps;
    caps.monomial_degrees = {0, 1, 2, 4, 8};
    caps.test_degree = 64;
    const NormEstimate est = operator_norm_lower_bound(
        ParaproductKind::T, PowerSeries::monomial(1),
        ExponentProfile(2, 2, 2, 2), w, TestFamily::Monomials, caps);
    CHECK(est.lower_bound == Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-6));
    CHECK(est.best_witness == "monomial:0");
}

TEST_CASE("operator lower bound: M with g = 1 is the identity") {
    const auto w = RadialWeight::standard(0.0);
    FamilyCaps caps;
    caps.monomial_degrees = {0, 1, 3, 9};
    caps.test_degree = 32;
    const NormEstimate est = operator_norm_lower_bound(
        ParaproductKind::M, PowerSeries::constant(1.0),
        ExponentProfile(2, 2, 2, 2), w, TestFamily::Monomials, caps);
    CHECK(est.lower_bound == Approx(1.0).epsilon(1e-9));

    // S with g = 1 on monomials of degree >= 1: f - f(0) = f
    const NormEstimate s = operator_norm_lower_bound(
        ParaproductKind::S, PowerSeries::constant(1.0),
        ExponentProfile(2, 2, 2, 2), w, TestFamily::Monomials, caps);
    CHECK(s.lower_bound == Approx(1.0).epsilon(1e-9));
}

TEST_CASE("degeneracy_check across the cases") {
    // T, case (a), alpha=0, p=s, q=t: factor (1-r) -> 0, nondegenerate
    CHECK(degeneracy_check(ExponentProfile(2, 2, 2, 2),
                           RadialWeight::standard(0.0), ParaproductKind::T)
              .verdict == DegeneracyVerdict::Nondegenerate);

    // T, case (b): what^{1/q~}(1-r) = (1-r)^{1+(alpha+1)/q~} -> 0 for any
    // standard weight: nondegenerate
    CHECK(degeneracy_check(ExponentProfile(4, 2, 2, 2),
                           RadialWeight::standard(1.0), ParaproductKind::T)
              .verdict == DegeneracyVerdict::Nondegenerate);

    // T, case (a) with a strong weight: alpha=2, q=1, t=2 makes
    // what^{1/q~}(1-r)^{1+1/p~} = (1-r)^{3(1/2-1)+1} = (1-r)^{-1/2} -> inf
    const DegeneracyReport dg =
        degeneracy_check(ExponentProfile(2, 1, 2, 2),
                         RadialWeight::standard(2.0), ParaproductKind::T);
    CHECK(dg.verdict == DegeneracyVerdict::OnlyConstants);
    CHECK(dg.diagnostic_divergent);

    // T, case (c) divergent configuration: p=1/3, q=2, s=1, t=1, alpha=0
    // gives (1+1/p~) q~ = -2 and a divergent integral
    const DegeneracyReport dc =
        degeneracy_check(ExponentProfile(1.0 / 3.0, 2, 1, 1),
                         RadialWeight::standard(0.0), ParaproductKind::T);
    CHECK(dc.case_tag == ExponentProfile::Case::C);
    CHECK(dc.verdict == DegeneracyVerdict::OnlyConstants);

    // same configuration for M: only the zero symbol survives
    CHECK(degeneracy_check(ExponentProfile(1.0 / 3.0, 2, 1, 1),
                           RadialWeight::standard(0.0), ParaproductKind::M)
              .verdict == DegeneracyVerdict::OnlyZero);

    // S/M case (a) with p=s, q=t: H^inf symbols
    const DegeneracyReport hs =
        degeneracy_check(ExponentProfile(2, 2, 2, 2),
                         RadialWeight::standard(0.0), ParaproductKind::S);
    CHECK(hs.verdict == DegeneracyVerdict::Nondegenerate);
    CHECK(hs.detail.find("H^inf") != std::string::npos);

    // S/M case (a) with p < s: only zero
    CHECK(degeneracy_check(ExponentProfile(1, 2, 2, 2),
                           RadialWeight::standard(0.0), ParaproductKind::M)
              .verdict == DegeneracyVerdict::OnlyZero);

    // M case (c), standard weight, convergent integral: nondegenerate
    CHECK(degeneracy_check(ExponentProfile(2, 4, 2, 2),
                           RadialWeight::standard(1.0), ParaproductKind::M)
              .verdict == DegeneracyVerdict::Nondegenerate);
}

TEST_CASE("unbounded symbol: ratios grow as the truncation scale grows") {
    // g' = (1-z)^{-2}, case (a) with p=s=q=t, omega = 1: rho(g) = infinity
    // for the full symbol, so the lower bounds must climb without plateau as
    // the truncation degree of g and the test budget grow together
    const auto w = RadialWeight::standard(0.0);
    const ExponentProfile pr(2, 2, 2, 2);

    double prev = 0.0;
    for (std::size_t D : {64u, 256u, 1024u}) {
        const PowerSeries g = primitive(geometric_kernel(2, D - 1));
        FamilyCaps caps;
        caps.monomial_degrees = {1, 4, 16};
        caps.test_degree = D + 32;
        caps.radial_nodes = 96;
        const NormEstimate est = operator_norm_lower_bound(
            ParaproductKind::T, g, pr, w, TestFamily::Monomials, caps);
        CHECK(est.lower_bound > prev * 1.1);
        prev = est.lower_bound;
    }
}

TEST_SUITE_END();
