#pragma once

#include <map>
#include <optional>

#include "brieskorn/core.hpp"
#include "brieskorn/groups.hpp"

namespace brieskorn {

// The C(I_s) of Randell's recursion:
//   C(empty) = gcd of all exponents,
//   C(I_s)   = gcd of the unselected exponents, divided by prod of C over all
//              proper sub-selections; C of the full index set is 1.
// Values are positive integers; a non-integral quotient is a consistency error.
Int randell_c(const ExponentList& a, SubsetSelector sel);

// H_{n-1}(Sigma(a)): free rank kappa of the full index set, torsion d_1, ..., d_r
// with d_j = prod of C(I_s) over selections with k(I_s) >= j, where
// k(I_s) = kappa(I_s) when n + 1 - |I_s| is odd and 0 otherwise (the empty
// selection counts like any other). Requires length >= 3.
AbelianGroup randell_homology(const ExponentList& a);

// All homology groups of Sigma(a) for length >= 4: Z in degrees 0 and 2n-1,
// randell_homology in degree n-1, Z^kappa in degree n, zero elsewhere.
std::map<long long, AbelianGroup> full_homology(const ExponentList& a);

// Ranks of H_*(Sigma(a); Q) for any length >= 2: 1 at degree 0, kappa at n-1
// and n, 1 at 2n-1, coinciding degrees summed.
GradedRanks rational_homology_ranks(const ExponentList& a);

// Ranks of H^{S^1}_*(Sigma(a); Q): 1 in each even degree 0..2n-2 plus kappa at n-1.
GradedRanks equivariant_homology(const ExponentList& a);

// Ranks of H_*(W, dW; Q) for the natural filling W: mu at degree n, 1 at degree 2n.
GradedRanks filling_relative_homology(const ExponentList& a);

// Exponent lists realizing Z^m + sum Z/q + Z/q (one pair per listed q) as the
// H_2 of a connected sum of 5-dimensional Brieskorn links: m copies of
// (2,2,2,2) and, per prime power q, (q,3,3,3) when gcd(q,3) = 1 and (q,4,4,2)
// otherwise. Empty input yields [(1,2,2,2)]. Non-prime-power torsion entries
// are rejected. Each output list is re-verified through randell_homology.
std::vector<ExponentList> realize_spin5(const Int& rank, const std::vector<long long>& torsion_primes);

}  // namespace brieskorn
