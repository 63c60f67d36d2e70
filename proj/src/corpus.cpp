#include "mnlab/corpus.hpp"

namespace mnlab {

namespace {

double splitmix_unit(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

}  // namespace

PowerSeries geometric_kernel(int power, std::size_t max_degree) {
    std::vector<cplx> c(max_degree + 1);
    // coefficients of (1-z)^{-power}: binom(m+power-1, power-1)
    double b = 1.0;
    for (std::size_t m = 0; m <= max_degree; ++m) {
        c[m] = b;
        b *= static_cast<double>(m + power) / static_cast<double>(m + 1);
    }
    return PowerSeries(std::move(c));
}

PowerSeries log_kernel(std::size_t max_degree) {
    std::vector<cplx> c(max_degree + 1, cplx{0.0});
    for (std::size_t m = 1; m <= max_degree; ++m)
        c[m] = 1.0 / static_cast<double>(m);
    return PowerSeries(std::move(c));
}

PowerSeries random_polynomial(std::size_t degree, std::uint64_t seed) {
    std::uint64_t st = seed;
    std::vector<cplx> c(degree + 1);
    for (auto& x : c) {
        const double re = 2.0 * splitmix_unit(st) - 1.0;
        const double im = 2.0 * splitmix_unit(st) - 1.0;
        x = {re, im};
    }
    return PowerSeries(std::move(c));
}

std::vector<CorpusEntry> build_corpus(std::uint64_t seed,
                                      std::size_t degree_cap) {
    std::vector<CorpusEntry> out;
    out.push_back({"const_1", PowerSeries::constant(1.0)});
    out.push_back({"const_c", PowerSeries::constant({0.7, 0.4})});
    for (std::size_t n : {1, 2, 4, 8, 16, 32, 64}) {
        out.push_back({"mono_" + std::to_string(n), PowerSeries::monomial(n)});
    }
    out.push_back({"geom_1", geometric_kernel(1, degree_cap)});
    out.push_back({"geom_2", geometric_kernel(2, degree_cap)});

    const std::vector<cplx> ones(6, cplx{1.0});
    out.push_back({"lac_a", lacunary_series(0, 6, ones)});
    const std::vector<cplx> ones8(8, cplx{1.0});
    out.push_back({"lac_b", lacunary_series(2, 8, ones8)});
    std::vector<cplx> decay(8);
    for (std::size_t k = 0; k < 8; ++k)
        decay[k] = std::pow(2.0, -0.5 * static_cast<double>(k));
    out.push_back({"lac_c", lacunary_series(0, 8, decay)});

    for (int i = 0; i < 6; ++i) {
        out.push_back({"rand_" + std::to_string(i),
                       random_polynomial(64, seed + static_cast<std::uint64_t>(i))});
    }
    return out;
}

}  // namespace mnlab
