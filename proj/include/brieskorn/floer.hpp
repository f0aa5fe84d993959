#pragma once

#include <optional>

#include "brieskorn/homology.hpp"

namespace brieskorn {

// Maslov index of the principal orbit: mu_P = 2 lcm(a) (sum 1/a_j - 1),
// always an even integer.
long long maslov_principal(const ExponentList& a);

// Robbin-Salamon index of the time-t return of the Reeb flow on [0, t]:
// 2 sum_{a_j | t} t/a_j + 2 sum_{a_j not| t} floor(t/a_j) + #{j : a_j not| t} - 2t.
long long maslov_cover(const ExponentList& a, long long t);

enum class IndexSign { Positive, Zero, Negative };

// Sign of sum 1/a_j - 1, the sign of the mean index of every closed orbit.
IndexSign index_positivity(const ExponentList& a);

// Return-time stratum of period t with its degree shift
// shift = maslov_cover - (|I_t| - 2), defined when >= 2 positions survive.
struct OrbitStratum {
    long long t = 0;
    SubsetSelector positions;
    ExponentList stratum;
    long long dim = 0;     // dim of the stratum as a manifold, 2|I_t| - 3
    long long maslov = 0;  // Robbin-Salamon index of the return map
    long long shift = 0;
};

std::optional<OrbitStratum> orbit_stratum(const ExponentList& a, long long t);

enum class SsTheory { ShPlusEq, Sh };
enum class Degeneration { Degenerate, Undetermined };

// First page of the Morse-Bott spectral sequence. Column p > 0 carries the
// (equivariant for sh+, ordinary for sh) rational homology of the period-p
// stratum, shifted; for sh, column 0 carries H_{*+n}(W, dW). Entries are
// stored per column as total degree -> rank, restricted to |total| <= window.
struct E1Page {
    SsTheory theory = SsTheory::ShPlusEq;
    long long window = 0;
    long long mu_principal = 0;
    bool truncated = false;        // column range limited by an explicit cutoff
    long long column_cutoff = 0;   // last return time examined
    std::map<long long, GradedRanks> columns;  // p -> (total degree -> rank)

    GradedRanks totals() const;
};

// Builds the page out to the window M. When the principal Maslov index
// vanishes the page does not converge columnwise and an explicit column cutoff
// is required; otherwise iteration stops after lcm(a) consecutive columns fall
// outside the window.
E1Page e1_page(const ExponentList& a, SsTheory theory, long long window,
               std::optional<long long> cutoff = std::nullopt);

// Lacunarity check: degenerate when every nonzero entry sits in one total
// degree parity. Never claims a nonzero differential.
Degeneration degeneration_check(const E1Page& page);

struct ShBetti {
    bool unbounded = false;
    GradedRanks betti;
};

// Graded ranks of SH^+ (equivariant or not) in total degrees |*| <= window,
// valid when the page degenerates by parity. For mu_P = 0 the accumulation is
// compared at cutoffs lcm, 2 lcm, 3 lcm; strict growth raises the unbounded
// flag instead of reporting ranks.
ShBetti sh_betti(const ExponentList& a, SsTheory theory, long long window);

struct OrderabilityCertificate {
    bool orderable = false;
    std::string reason;
};

// All exponents >= 2 give a positive Milnor number and an orderable contact
// structure; a unit exponent yields the standard sphere, which is not orderable.
OrderabilityCertificate orderability_certificate(const ExponentList& a);

struct ShNonvanishing {
    bool nonvanishing = false;
    Rat mec;
    Rat half_euler;  // (-1)^{n-1} chi(W) / 2
};

// SH(W) != 0 certificate: mean Euler characteristic differs from
// (-1)^{n-1} chi(W)/2 with chi(W) = 1 + (-1)^n mu. Requires mu_P != 0.
ShNonvanishing sh_nonvanishing_by_mec(const ExponentList& a);

}  // namespace brieskorn
