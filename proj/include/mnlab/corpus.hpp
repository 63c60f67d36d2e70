#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mnlab/power_series.hpp"

namespace mnlab {

struct CorpusEntry {
    std::string id;
    PowerSeries f;
};

/// The 20-function test corpus: constants, monomials up to degree 64,
/// geometric-kernel truncations 1/(1-z) and 1/(1-z)^2, lacunary series, and
/// seed-fixed random polynomials. `degree_cap` bounds the kernel truncations;
/// `scale` multiplies grid-heavy degrees down for quick runs.
std::vector<CorpusEntry> build_corpus(std::uint64_t seed,
                                      std::size_t degree_cap = 512);

/// Geometric kernel 1/(1-z)^power truncated at max_degree.
PowerSeries geometric_kernel(int power, std::size_t max_degree);

/// log(1/(1-z)) truncated at max_degree.
PowerSeries log_kernel(std::size_t max_degree);

/// Random polynomial with splitmix-seeded complex coefficients in the unit
/// box, reproducible across builds.
PowerSeries random_polynomial(std::size_t degree, std::uint64_t seed);

}  // namespace mnlab
