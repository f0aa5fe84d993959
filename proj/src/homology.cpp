#include "brieskorn/homology.hpp"

#include <algorithm>

namespace brieskorn {

namespace {

// C values for every selection mask, computed bottom-up by popcount.
std::vector<Int> all_randell_c(const ExponentList& a) {
    size_t m = a.size();
    uint64_t fullmask = SubsetSelector::full(m).mask();
    std::vector<Int> c(size_t(1) << m);
    std::vector<uint64_t> order(size_t(1) << m);
    for (uint64_t s = 0; s <= fullmask; ++s) order[s] = s;
    std::sort(order.begin(), order.end(), [](uint64_t x, uint64_t y) {
        int px = __builtin_popcountll(x), py = __builtin_popcountll(y);
        return px != py ? px < py : x < y;
    });
    for (uint64_t sel : order) {
        if (sel == fullmask) {
            c[sel] = 1;
            continue;
        }
        long long g = 0;
        for (size_t i = 0; i < m; ++i)
            if (!(sel & (uint64_t(1) << i))) g = gcd_ll(g, a[i]);
        Int numer = g;
        Int denom = 1;
        // proper sub-selections of sel
        for (uint64_t sub = 0; sub != sel; sub = (sub - sel) & sel) denom *= c[sub];
        if (denom == 0 || numer % denom != 0)
            throw consistency_error("randell_c: non-integral quotient at " + a.str());
        c[sel] = numer / denom;
        if (c[sel] < 1)
            throw consistency_error("randell_c: nonpositive value at " + a.str());
    }
    return c;
}

}  // namespace

Int randell_c(const ExponentList& a, SubsetSelector sel) {
    if (sel.mask() > SubsetSelector::full(a.size()).mask())
        throw validation_error("randell_c: selector out of range");
    return all_randell_c(a)[sel.mask()];
}

AbelianGroup randell_homology(const ExponentList& a) {
    if (a.size() < 3)
        throw validation_error("randell_homology requires at least 3 exponents");
    size_t m = a.size();
    uint64_t fullmask = SubsetSelector::full(m).mask();
    std::vector<Int> c = all_randell_c(a);

    std::vector<Int> k(size_t(1) << m);
    Int r = 0;
    for (uint64_t s = 0; s <= fullmask; ++s) {
        size_t sz = static_cast<size_t>(__builtin_popcountll(s));
        if ((m - sz) % 2 == 1) k[s] = kappa(a, SubsetSelector(s));
        r = std::max(r, k[s]);
    }

    std::vector<Int> d;
    for (Int j = 1; j <= r; ++j) {
        Int dj = 1;
        for (uint64_t s = 0; s <= fullmask; ++s)
            if (k[s] >= j) dj *= c[s];
        if (dj > 1) d.push_back(dj);
    }
    return AbelianGroup(kappa_full(a), std::move(d));
}

std::map<long long, AbelianGroup> full_homology(const ExponentList& a) {
    if (a.size() < 4)
        throw validation_error("full_homology requires at least 4 exponents");
    long long n = a.n();
    std::map<long long, AbelianGroup> h;
    h[0] = AbelianGroup(1, {});
    h[n - 1] = randell_homology(a);
    Int kap = kappa_full(a);
    if (kap > 0) h[n] = AbelianGroup(kap, {});
    h[2 * n - 1] = AbelianGroup(1, {});
    return h;
}

GradedRanks rational_homology_ranks(const ExponentList& a) {
    long long n = a.n();
    Int kap = kappa_full(a);
    GradedRanks g;
    add_rank(g, 0, 1);
    add_rank(g, n - 1, kap);
    add_rank(g, n, kap);
    add_rank(g, 2 * n - 1, 1);
    return g;
}

GradedRanks equivariant_homology(const ExponentList& a) {
    long long n = a.n();
    GradedRanks g;
    for (long long d = 0; d <= 2 * n - 2; d += 2) add_rank(g, d, 1);
    add_rank(g, n - 1, kappa_full(a));
    return g;
}

GradedRanks filling_relative_homology(const ExponentList& a) {
    long long n = a.n();
    GradedRanks g;
    add_rank(g, n, milnor_number(a));
    add_rank(g, 2 * n, 1);
    return g;
}

std::vector<ExponentList> realize_spin5(const Int& rank, const std::vector<long long>& torsion_primes) {
    if (rank < 0) throw validation_error("realize_spin5: rank must be >= 0");
    if (rank > 4096) throw validation_error("realize_spin5: rank too large");
    std::vector<ExponentList> out;
    for (Int i = 0; i < rank; ++i)
        out.push_back(ExponentList({2, 2, 2, 2}));
    for (long long q : torsion_primes) {
        if (!is_prime_power(q))
            throw validation_error("realize_spin5: torsion order " + std::to_string(q) +
                                   " is not a prime power");
        if (gcd_ll(q, 3) == 1)
            out.push_back(ExponentList({q, 3, 3, 3}));
        else
            out.push_back(ExponentList({q, 4, 4, 2}));
    }
    if (out.empty()) out.push_back(ExponentList({1, 2, 2, 2}));

    Int free_total = 0;
    std::vector<Int> torsion_total;
    for (const auto& piece : out) {
        AbelianGroup h = randell_homology(piece);
        free_total += h.free_rank;
        for (const Int& t : h.torsion) torsion_total.push_back(t);
    }
    std::vector<Int> expected;
    for (long long q : torsion_primes) {
        expected.push_back(q);
        expected.push_back(q);
    }
    AbelianGroup got(free_total, std::move(torsion_total));
    AbelianGroup want(rank, std::move(expected));
    if (got != want)
        throw consistency_error("realize_spin5: realized group " + got.str() +
                                " does not match requested " + want.str());
    return out;
}

}  // namespace brieskorn
