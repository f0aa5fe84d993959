#pragma once

#include <vector>

#include "brieskorn/exponents.hpp"
#include "brieskorn/polynomial.hpp"

namespace brieskorn::test {

// Characteristic polynomial of the monodromy by numeric expansion of
// prod (t - zeta_{a_0}^{j_0} ... zeta_{a_n}^{j_n}) over 0 < j_k < a_k,
// rounded to integers. Aborts if any coefficient is further than 1e-6 from
// an integer. Intended for mu up to a few hundred.
IntPolynomial alexander_by_roots(const ExponentList& a);

// |Delta(-1)| by direct numeric evaluation of the same product.
long double det_by_roots(const ExponentList& a);

// Exponent lists from the bundled corpus (comment lines stripped).
std::vector<ExponentList> corpus_lists();

// Deterministic pseudo-random exponent lists with 3..max_len entries >= 2
// and Milnor number at most max_mu.
std::vector<ExponentList> random_lists(unsigned seed, int count, int max_len, long long max_mu);

}  // namespace brieskorn::test
