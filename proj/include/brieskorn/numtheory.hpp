#pragma once

#include <map>
#include <vector>

#include "brieskorn/arith.hpp"

namespace brieskorn {

// Moebius function; m >= 1.
int moebius(long long m);

// Divisors of m in increasing order; m >= 1.
std::vector<long long> divisors(long long m);

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

// Prime factorization of m >= 2 as (prime, exponent) pairs, primes increasing.
std::vector<std::pair<long long, int>> factorize(long long m);

// Prime factorization of v >= 2 (trial division; intended for small torsion orders).
std::vector<std::pair<Int, int>> factorize_int(const Int& v);

// True when m = p^e for a prime p and e >= 1.
bool is_prime_power(long long m);

// Unsigned Bernoulli number B_k of the classical even-index sequence:
// B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, ... (the absolute value of B_{2k}).
// k >= 1.
Rat bernoulli_abs(int k);

}  // namespace brieskorn
