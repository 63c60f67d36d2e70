#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "mnlab/power_series.hpp"

using namespace mnlab;
using doctest::Approx;

TEST_SUITE_BEGIN("power_series");

TEST_CASE("evaluate_on_circle: constants and monomials") {
    const auto s1 = evaluate_on_circle(PowerSeries::constant(1.0), 0.5, 8);
    for (std::size_t k = 0; k < 8; ++k) {
        CHECK(s1.re[k] == Approx(1.0).epsilon(1e-12));
        CHECK(s1.im[k] == Approx(0.0).epsilon(1e-12));
    }
    const auto s2 = evaluate_on_circle(PowerSeries::monomial(1), 0.5, 4);
    const std::vector<cplx> want = {{0.5, 0}, {0, 0.5}, {-0.5, 0}, {0, -0.5}};
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(s2.re[k] == Approx(want[k].real()).epsilon(1e-12));
        CHECK(s2.im[k] == Approx(want[k].imag()).epsilon(1e-12));
    }
}

TEST_CASE("evaluate_on_circle: geometric truncation against the sum formula") {
    PowerSeries f(std::vector<cplx>(65, cplx{1.0}));  // 1/(1-z) through z^64
    const auto s = evaluate_on_circle(f, 0.9, 256);
    const double want = (1.0 - std::pow(0.9, 65)) / 0.1;
    CHECK(s.re[0] == Approx(want).epsilon(1e-12));
    CHECK(s.im[0] == Approx(0.0).epsilon(1e-12));
}

TEST_CASE("evaluate_on_circle rejects bad radii") {
    CHECK_THROWS_AS(evaluate_on_circle(PowerSeries::constant(1.0), -0.1, 8),
                    std::invalid_argument);
    CHECK_THROWS_AS(evaluate_on_circle(PowerSeries::constant(1.0), 1.1, 8),
                    std::invalid_argument);
}

TEST_CASE("derivative follows the term-wise rule") {
    CHECK(derivative(PowerSeries::monomial(3)).coeffs() ==
          std::vector<cplx>{{0.0}, {0.0}, {3.0}});
    CHECK(derivative(PowerSeries::constant(1.0)).coeffs() ==
          std::vector<cplx>{{0.0}});
    PowerSeries f(std::vector<cplx>(11, cplx{1.0}));
    const PowerSeries d2 = derivative(f, 2);
    for (std::size_t m = 0; m <= 8; ++m)
        CHECK(d2.coeff(m) ==
              cplx{static_cast<double>((m + 2) * (m + 1)), 0.0});
}

TEST_CASE("primitive: examples and the calculus identity") {
    CHECK(primitive(PowerSeries::constant(1.0)).coeffs() ==
          std::vector<cplx>{{0.0}, {1.0}});
    const PowerSeries zn = primitive(PowerSeries::monomial(4));
    CHECK(zn.coeff(5) == cplx{0.2});
    PowerSeries f({cplx{0.0}, cplx{2.0}, cplx{3.0}});
    const PowerSeries p = primitive(f);
    CHECK(p.coeff(2) == cplx{1.0});
    CHECK(p.coeff(3) == cplx{1.0});

    // primitive then derivative is the identity minus the constant term
    PowerSeries g({cplx{2.0, 1.0}, cplx{-1.0}, cplx{0.5, 0.5}, cplx{3.0}});
    const PowerSeries back = derivative(primitive(g));
    for (std::size_t m = 0; m <= g.degree(); ++m)
        CHECK(back.coeff(m) == g.coeff(m));
    CHECK(primitive(g).at_zero() == cplx{0.0});
}

TEST_CASE("cauchy_product: convolution examples") {
    PowerSeries a({1.0, 1.0}), b({1.0, -1.0});
    CHECK(cauchy_product(a, b, 2).coeffs() ==
          std::vector<cplx>{{1.0}, {0.0}, {-1.0}});

    PowerSeries c(std::vector<cplx>(4, cplx{1.0}));
    const PowerSeries sq = cauchy_product(c, c, 2);
    CHECK(sq.coeffs() == std::vector<cplx>{{1.0}, {2.0}, {3.0}});

    PowerSeries geo(std::vector<cplx>(129, cplx{1.0}));
    const PowerSeries g2 = cauchy_product(geo, geo, 128);
    for (std::size_t m = 0; m <= 128; ++m)
        CHECK(g2.coeff(m) == cplx{static_cast<double>(m + 1)});
}

TEST_CASE("lacunary series layout and norms") {
    const std::vector<cplx> unit3(3, cplx{1.0});
    const PowerSeries f = lacunary_series(0, 3, unit3);
    CHECK(f.coeff(1) == cplx{1.0});
    CHECK(f.coeff(2) == cplx{1.0});
    CHECK(f.coeff(4) == cplx{1.0});
    CHECK(f.nnz() == 3);

    // gap ratio between consecutive exponents is exactly 2
    const std::vector<cplx> unit9(9, cplx{1.0});
    const PowerSeries g = lacunary_series(4, 9, unit9);
    std::vector<std::size_t> exps;
    for (std::size_t m = 0; m <= g.degree(); ++m)
        if (g.coeff(m) != cplx{0.0}) exps.push_back(m);
    REQUIRE(exps.size() == 9);
    for (std::size_t i = 1; i < exps.size(); ++i)
        CHECK(exps[i] == 2 * exps[i - 1]);

    // Parseval: H^2 norm of 9 unit coefficients is 3
    double sumsq = 0.0;
    for (std::size_t m = 0; m <= g.degree(); ++m)
        sumsq += std::norm(g.coeff(m));
    CHECK(std::sqrt(sumsq) == Approx(3.0));

    CHECK_THROWS_AS(lacunary_series(50, 20, std::vector<cplx>(20, cplx{1.0})),
                    std::invalid_argument);
}

TEST_CASE("atom_function: origin, binomial series, direct kernel oracle") {
    AtomSpec origin;
    origin.center = 0.0;
    origin.exponent_M = 3.0;
    origin.p = 2.0;
    origin.q = 2.0;
    origin.omega_hat_at_center = 0.25;  // what(0) of some weight
    origin.threshold = 2.0;
    const PowerSeries a0 = atom_function(origin, 8);
    CHECK(a0.coeff(0).real() == Approx(std::pow(0.25, -0.5)));
    for (std::size_t m = 1; m <= 8; ++m) CHECK(std::abs(a0.coeff(m)) == 0.0);

    AtomSpec half;
    half.center = 0.5;
    half.exponent_M = 3.0;
    half.p = 2.0;
    half.q = 2.0;
    half.omega_hat_at_center = 1.0;
    half.threshold = 2.0;
    PowerSeries ah = atom_function(half, 16);
    const double pref = std::pow(0.5, 3.0 - 0.5);
    for (std::size_t m = 0; m <= 16; ++m) {
        const double binom = 0.5 * (m + 2) * (m + 1);  // C(m+2, 2)
        CHECK(ah.coeff(m).real() ==
              Approx(pref * binom * std::pow(0.5, m)).epsilon(1e-12));
    }

    // far-center atom evaluated at z = 0.9 against the closed-form kernel
    AtomSpec far;
    far.center = 0.9;
    far.exponent_M = 5.0;
    far.p = 2.0;
    far.q = 2.0;
    far.omega_hat_at_center = 0.1;
    far.threshold = 3.0;
    const PowerSeries af = atom_function(far, 512);
    const double direct = std::pow(0.1, 5.0 - 0.5) * std::pow(0.1, -0.5) /
                          std::pow(1.0 - 0.81, 5.0);
    CHECK(af.evaluate(0.9).real() == Approx(direct).epsilon(1e-9));

    AtomSpec bad = far;
    bad.exponent_M = bad.threshold;
    CHECK_THROWS_AS(atom_function(bad, 16), std::invalid_argument);
}

TEST_CASE("rademacher_combination: cancellation and pointwise sums") {
    AtomSpec a;
    a.center = 0.5;
    a.exponent_M = 3.0;
    a.p = a.q = 2.0;
    a.omega_hat_at_center = 1.0;
    a.threshold = 2.0;

    const std::vector<AtomSpec> one = {a};
    const std::vector<double> w1 = {1.0};
    const std::vector<int> plus = {1};
    const PowerSeries single = rademacher_combination(one, w1, plus, 32);
    const PowerSeries direct = atom_function(a, 32);
    for (std::size_t m = 0; m <= 32; ++m)
        CHECK(single.coeff(m) == direct.coeff(m));

    const std::vector<AtomSpec> two = {a, a};
    const std::vector<double> w2 = {1.0, 1.0};
    const std::vector<int> pm = {1, -1};
    const PowerSeries zero = rademacher_combination(two, w2, pm, 32);
    for (std::size_t m = 0; m <= 32; ++m) CHECK(std::abs(zero.coeff(m)) == 0.0);

    // eight atoms on the j=2 ring (K=2) with seeded signs: value at 0 equals
    // the signed sum of the atom values at 0
    std::vector<AtomSpec> ring;
    std::vector<double> w8;
    std::vector<int> signs;
    SignPattern sp(7);
    for (int l = 0; l < 8; ++l) {
        AtomSpec s = a;
        s.center = std::polar(0.6875, 2.0 * M_PI * (l + 0.5) / 16.0);
        ring.push_back(s);
        w8.push_back(1.0);
        signs.push_back(sp.next());
    }
    const PowerSeries comb = rademacher_combination(ring, w8, signs, 64);
    cplx want{0.0};
    for (int l = 0; l < 8; ++l)
        want += static_cast<double>(signs[l]) *
                atom_function(ring[l], 64).evaluate(0.0);
    CHECK(std::abs(comb.evaluate(0.0) - want) < 1e-12);

    const std::vector<int> short_signs = {1};
    CHECK_THROWS_AS(rademacher_combination(two, w2, short_signs, 8),
                    std::invalid_argument);
}

TEST_CASE("sign patterns are reproducible and valued in {-1,+1}") {
    SignPattern a(42), b(42), c(43);
    bool all_same = true;
    for (int i = 0; i < 64; ++i) {
        const int x = a.next(), y = b.next(), z = c.next();
        CHECK((x == 1 || x == -1));
        CHECK(x == y);
        all_same = all_same && (x == z);
    }
    CHECK_FALSE(all_same);
}

TEST_CASE("atom center grid is uniformly separated") {
    double prev_min = 0.0;
    for (int jmax = 2; jmax <= 6; ++jmax) {
        const auto pts = atom_center_grid(2, jmax);
        double mn = 1.0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                mn = std::min(mn, pseudohyperbolic_distance(pts[i], pts[j]));
        CHECK(mn >= 0.19);
        if (jmax > 2) CHECK(mn >= prev_min - 1e-12);  // stabilizes immediately
        prev_min = mn;
    }
}

TEST_CASE("paper floor convention") {
    CHECK(paper_floor(2.0) == 2);
    CHECK(paper_floor(2.9) == 2);
    CHECK(paper_floor(1.0 / 0.5) == 2);
    CHECK(paper_floor(0.999) == 0);
}

TEST_SUITE_END();
