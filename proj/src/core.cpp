#include "brieskorn/core.hpp"

namespace brieskorn {

Int milnor_number(const ExponentList& a) {
    Int mu = 1;
    for (long long v : a.values()) mu *= Int(v - 1);
    return mu;
}

Int kappa(const ExponentList& a, SubsetSelector sel) {
    if (sel.empty()) return 1;
    auto pos = sel.positions();
    for (size_t i : pos)
        if (i >= a.size()) throw validation_error("kappa: selector out of range");
    size_t s = pos.size();
    Int acc = 0;
    for (uint64_t sub = 0;; sub = (sub - sel.mask()) & sel.mask()) {
        size_t t = static_cast<size_t>(__builtin_popcountll(sub));
        int sign = ((s - t) % 2) ? -1 : 1;
        if (sub == 0) {
            acc += sign;  // empty subset contributes (-1)^s
        } else {
            Int prod = 1;
            long long l = 1;
            for (size_t i : SubsetSelector(sub).positions()) {
                prod *= Int(a[i]);
                l = lcm_ll(l, a[i]);
            }
            if (prod % l != 0)
                throw consistency_error("kappa: product not divisible by lcm");
            acc += sign * (prod / l);
        }
        if (sub == sel.mask()) break;
    }
    if (acc < 0) throw consistency_error("kappa: negative value for " + a.str());
    return acc;
}

Int kappa_full(const ExponentList& a) {
    return kappa(a, SubsetSelector::full(a.size()));
}

Int lefschetz_euler(const ExponentList& a, long long ell) {
    if (ell < 1) throw validation_error("lefschetz_euler: power must be >= 1");
    Int prod = 1;
    for (long long v : a.values())
        if (ell % v == 0) prod *= Int(1 - v);
    return Int(1) - prod;
}

DivisorWeights divisor_weights(const ExponentList& a) {
    DivisorWeights w;
    w.period = a.lcm();
    for (long long i : divisors(w.period)) {
        Int s = 0;
        for (long long d : divisors(i))
            s += Int(moebius(d)) * lefschetz_euler(a, i / d);
        if (s % i != 0)
            throw consistency_error("divisor_weights: s_" + std::to_string(i) +
                                    " not divisible by " + std::to_string(i));
        w.r[i] = s / i;
    }
    return w;
}

SubsetSelector fixed_positions(const ExponentList& a, long long t) {
    if (t < 1) throw validation_error("fixed_positions: time must be >= 1");
    uint64_t mask = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (t % a[i] == 0) mask |= uint64_t(1) << i;
    return SubsetSelector(mask);
}

FixedLocus fixed_locus(const ExponentList& a, long long t) {
    FixedLocus f;
    f.positions = fixed_positions(a, t);
    if (f.positions.count() >= 2) f.stratum = subset_list(a, f.positions);
    return f;
}

}  // namespace brieskorn
