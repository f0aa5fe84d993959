#pragma once

#include <variant>

#include "brieskorn/floer.hpp"

namespace brieskorn {

// Number of multiples b = m T_i, m >= 1, with b < T_k and b not divisible by
// any of the strictly larger periods. By convention the principal period
// itself has frequency 1.
long long phi_frequency(long long t_i, const std::vector<long long>& larger, long long t_k);

// One row per distinct return-time stratum: the simple stratum of period T,
// its orbit frequency phi, its equivariant Euler characteristic, and the sign
// (-1)^{shift of the simple stratum}.
struct StratumRow {
    ExponentList stratum;
    long long period;
    long long phi;
    Int chi_eq;    // euler characteristic of H^{S^1}(stratum; Q)
    int sign;      // +1 or -1
};

struct StratumTable {
    std::vector<StratumRow> rows;  // periods strictly increasing
    long long principal_period;
    long long mu_principal;
};

StratumTable stratum_table(const ExponentList& a);

// Mean Euler characteristic via the stratum table:
//   chi_m = sum_i sign_i phi_i chi_i / |mu_P|.
// Undefined (validation error) when mu_P = 0.
Rat mec_general(const ExponentList& a);

// Closed coprime form; validation error for non-coprime lists.
Rat mec_coprime(const ExponentList& a);

// Mean Euler characteristic of a boundary connected sum, each summand given
// either as an exponent list of matching dimension or as an already-computed
// value: sum chi_i + (t - 1)(-1)^n / 2.
using MecSummand = std::variant<ExponentList, Rat>;
Rat mec_sum(const std::vector<MecSummand>& parts, long long n);

// Recipe for realizing a rational number as the mean Euler characteristic of a
// boundary connected sum of six-dimensional Brieskorn fillings, with
// five-dimensional Brieskorn manifolds as boundaries.
struct MecRecipe {
    std::vector<std::pair<ExponentList, long long>> parts;  // list, multiplicity
    long long total_summands() const;
    std::vector<MecSummand> expanded() const;
};

// Finds a recipe with mec_sum(recipe, 3) == x; verified before returning.
MecRecipe realize_mec(const Rat& x);

enum class MecInvariance {
    ContactInvariant,      // mu_P != 0 and n >= 3
    FillingLevelOnly,      // n < 3
    Undefined,             // mu_P = 0
};

MecInvariance mec_invariance_flag(const ExponentList& a);

// Alternating window sum (1/N) sum_{i=-N}^{N} (-1)^i sb_i of the degenerate
// sh+ first page, converging to mec_general at rate 1/N.
Rat mec_window_estimate(const ExponentList& a, long long n_window);

// Certificate that |mec_window_estimate(N) - mec_general| <= C/N at
// N = lcm, 5 lcm, 10 lcm, with C the exact bound fitted from one period of the
// page's boundary error.
struct WindowCertificate {
    Rat constant;
    std::vector<std::pair<long long, Rat>> checkpoints;  // N -> |estimate - mec|
    bool ok = false;
};

WindowCertificate mec_window_certificate(const ExponentList& a);

}  // namespace brieskorn
