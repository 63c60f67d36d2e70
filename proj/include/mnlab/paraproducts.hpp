#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mnlab/exponents.hpp"
#include "mnlab/power_series.hpp"
#include "mnlab/weights.hpp"

namespace mnlab {

enum class ParaproductKind { T, S, M };

const char* kind_name(ParaproductKind k);
ParaproductKind kind_from_name(const std::string& name);

/// T_g f = int_0^z f g', S_g f = int_0^z f' g, M_g f = g f.
/// Exact on coefficients below max_degree; M = T + S + f(0)g(0).
PowerSeries apply_paraproduct(ParaproductKind kind, const PowerSeries& g,
                              const PowerSeries& f, std::size_t max_degree);

struct RhoResult {
    double value = 0.0;
    bool divergent = false;
    ExponentProfile::Case case_tag = ExponentProfile::Case::A;
};

/// The four-case quantity rho_{p,q,s,t,w}(g); T-version uses g' with the
/// extra (1-r) factor, the S/M version uses g without it. Sup-form cases are
/// taken over the grid r_k = 1 - 2^{-k/4} with one golden refinement and are
/// declared divergent when the running sup still grows over the last octave.
RhoResult rho(const PowerSeries& g, const ExponentProfile& profile,
              const RadialWeight& w, ParaproductKind kind,
              int sup_grid_points = 64, int radial_nodes = 128);

enum class TestFamily { Monomials, Atoms, Rademacher, KernelLadder };

struct FamilyCaps {
    std::vector<std::size_t> monomial_degrees = {0, 1, 2, 4, 8, 16, 32,
                                                 64, 128, 256, 512};
    int atom_j_max = 4;
    int atoms_per_ring = 2;
    double atom_exponent_M = 5.0;
    int rademacher_draws = 8;
    int kernel_ladder_j_max = 6;
    std::size_t test_degree = 2048;
    int radial_nodes = 96;
    std::uint64_t seed = 1;
};

struct NormEstimate {
    double lower_bound = 0.0;
    std::string best_witness;
    ExponentProfile profile;
    std::string family;
};

/// Certified lower bound on ||L_g||: max over the family of
/// apq(L_g f, s, t) / apq(f, p, q). Families: monomials, single atoms on the
/// z_{j,l} grid, seeded Rademacher atom combinations, and the aligned kernel
/// ladder sum_k 2^{-k(M-3)} (1 - (1-2^{-k}) z)^{-M}.
NormEstimate operator_norm_lower_bound(ParaproductKind kind,
                                       const PowerSeries& g,
                                       const ExponentProfile& profile,
                                       const RadialWeight& w,
                                       TestFamily family,
                                       const FamilyCaps& caps = {});

enum class DegeneracyVerdict { Nondegenerate, OnlyConstants, OnlyZero };

struct DegeneracyReport {
    DegeneracyVerdict verdict = DegeneracyVerdict::Nondegenerate;
    ExponentProfile::Case case_tag = ExponentProfile::Case::A;
    double diagnostic = 0.0;  // limit value or integral estimate
    bool diagnostic_divergent = false;
    std::string detail;
};

/// Degeneracy classification (which symbols can be bounded at all): for the
/// T version constants survive, for S/M the degenerate verdicts are H^inf /
/// H^{p~} membership or g == 0 depending on the case.
DegeneracyReport degeneracy_check(const ExponentProfile& profile,
                                  const RadialWeight& w, ParaproductKind kind,
                                  int grid_depth = 96);

}  // namespace mnlab
