#pragma once

#include "brieskorn/core.hpp"
#include "brieskorn/polynomial.hpp"

namespace brieskorn {

// zeta(t) = prod over divisors d of the period of (1 - t^d)^{-r_d}:
// the homological zeta function of the monodromy, returned as the exponent map
// d -> -r_d together with the period.
struct ZetaFactors {
    long long period = 1;
    std::map<long long, Int> exponent;  // d -> exponent of (1 - t^d)
};

ZetaFactors weil_zeta(const ExponentList& a);

// Characteristic polynomial Delta(t) of the monodromy, expanded and normalized
// monic with integer coefficients; degree equals the Milnor number.
IntPolynomial alexander_polynomial(const ExponentList& a);

struct DetMod8 {
    Int det_abs;    // |Delta(-1)|
    bool odd;       // parity of det_abs
    int residue;    // det_abs mod 8 when odd, else -1
};

// |Delta(-1)| with its residue mod 8. This is the determinant of the
// intersection form of the filling of the link with one extra exponent 2
// appended, the quantity entering the Kervaire sphere dichotomy in
// dimensions 4k+1.
DetMod8 det_mod8(const ExponentList& a);

}  // namespace brieskorn
