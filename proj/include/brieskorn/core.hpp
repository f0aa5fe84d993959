#pragma once

#include <map>
#include <optional>

#include "brieskorn/exponents.hpp"

namespace brieskorn {

// mu = prod (a_i - 1), the rank of the middle homology of the Milnor fiber.
Int milnor_number(const ExponentList& a);

// kappa(I_s) = sum over subsets I_t of I_s of (-1)^{s-t} (prod a_i) / (lcm a_j),
// with the empty subset contributing (-1)^s. Arguments select positions of a.
// kappa of the empty selection is 1. Nonnegative for every selection.
Int kappa(const ExponentList& a, SubsetSelector sel);

// kappa of the full index set.
Int kappa_full(const ExponentList& a);

// chi_ell = 1 - prod over a_j dividing ell of (1 - a_j): Euler characteristic of
// the fixed set of the ell-th power of the monodromy on the Milnor fiber.
Int lefschetz_euler(const ExponentList& a, long long ell);

// Weights r_d of the divisor d of the period, from Moebius inversion of the
// Lefschetz numbers: s_i = sum_{d | i} moebius(d) chi_{i/d}, r_i = s_i / i.
struct DivisorWeights {
    long long period = 1;              // lcm of the exponents
    std::map<long long, Int> r;        // divisor -> weight (zero weights kept)
};

DivisorWeights divisor_weights(const ExponentList& a);

// Indices j with a_j | t: the exponents whose coordinates can be nonzero on the
// fixed locus of the time-t Reeb return map. The fixed stratum is itself a
// Brieskorn manifold when at least two positions survive.
SubsetSelector fixed_positions(const ExponentList& a, long long t);

struct FixedLocus {
    SubsetSelector positions;
    std::optional<ExponentList> stratum;  // present when >= 2 positions survive
};

FixedLocus fixed_locus(const ExponentList& a, long long t);

}  // namespace brieskorn
