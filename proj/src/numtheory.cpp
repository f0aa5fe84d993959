#include "brieskorn/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace brieskorn {

int moebius(long long m) {
    if (m < 1) throw validation_error("moebius: argument must be >= 1");
    if (m == 1) return 1;
    int parity = 0;
    for (auto [p, e] : factorize(m)) {
        (void)p;
        if (e > 1) return 0;
        parity ^= 1;
    }
    return parity ? -1 : 1;
}

std::vector<long long> divisors(long long m) {
    if (m < 1) throw validation_error("divisors: argument must be >= 1");
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d != m / d) large.push_back(m / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return a / std::gcd(a, b) * b;
}

std::vector<std::pair<long long, int>> factorize(long long m) {
    if (m < 2) throw validation_error("factorize: argument must be >= 2");
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p) continue;
        int e = 0;
        while (m % p == 0) { m /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

std::vector<std::pair<Int, int>> factorize_int(const Int& v) {
    if (v < 2) throw validation_error("factorize_int: argument must be >= 2");
    std::vector<std::pair<Int, int>> out;
    Int m = v;
    for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) { m /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

bool is_prime_power(long long m) {
    return m >= 2 && factorize(m).size() == 1;
}

Rat bernoulli_abs(int k) {
    if (k < 1) throw validation_error("bernoulli_abs: index must be >= 1");
    // Signed B_0..B_{2k} by the defining recurrence
    // sum_{j=0}^{m} binom(m+1, j) B_j = 0, B_0 = 1; odd ones beyond B_1 vanish.
    int m = 2 * k;
    std::vector<Rat> b(m + 1);
    b[0] = 1;
    for (int i = 1; i <= m; ++i) {
        Rat acc = 0;
        Int binom = 1;  // binom(i+1, j) built incrementally
        for (int j = 0; j < i; ++j) {
            acc += Rat(binom) * b[j];
            binom = binom * (i + 1 - j) / (j + 1);
        }
        b[i] = -acc / Rat(i + 1);
    }
    Rat v = b[m];
    return v < 0 ? Rat(-v) : v;
}

}  // namespace brieskorn
