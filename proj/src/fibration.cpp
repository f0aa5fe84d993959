#include "brieskorn/fibration.hpp"

namespace brieskorn {

ZetaFactors weil_zeta(const ExponentList& a) {
    DivisorWeights w = divisor_weights(a);
    ZetaFactors z;
    z.period = w.period;
    for (const auto& [d, r] : w.r) z.exponent[d] = -r;
    return z;
}

IntPolynomial alexander_polynomial(const ExponentList& a) {
    Int mu = milnor_number(a);
    if (mu > 200000) throw validation_error("alexander_polynomial: Milnor number too large");
    DivisorWeights w = divisor_weights(a);
    long long n = a.n();

    // Delta(t) = (t - 1)^{e} prod_d (1 - t^d)^{s r_d} with (e, s) = (-1, +1)
    // for even n and (+1, -1) for odd n, then normalized monic.
    std::vector<std::pair<IntPolynomial, long long>> factors;
    IntPolynomial tm1(std::vector<Int>{-1, 1});
    long long sgn = (n % 2 == 0) ? 1 : -1;
    factors.emplace_back(tm1, -sgn);
    for (const auto& [d, r] : w.r) {
        long long e = sgn * to_ll(r, "alexander_polynomial: weight");
        if (e != 0) factors.emplace_back(IntPolynomial::one_minus_power(d), e);
    }
    IntPolynomial delta = formal_product_expand(factors);
    if (delta.leading() < 0) delta = -delta;
    if (delta.leading() != 1)
        throw consistency_error("alexander_polynomial: could not normalize monic");
    if (delta.degree() != to_ll(mu, "alexander_polynomial: degree"))
        throw consistency_error("alexander_polynomial: degree differs from Milnor number");
    return delta;
}

DetMod8 det_mod8(const ExponentList& a) {
    IntPolynomial delta = alexander_polynomial(a);
    Int v = delta.evaluate(Int(-1));
    if (v < 0) v = -v;
    DetMod8 d;
    d.det_abs = v;
    d.odd = (v % 2 != 0);
    d.residue = d.odd ? static_cast<int>(v % 8) : -1;
    return d;
}

}  // namespace brieskorn
