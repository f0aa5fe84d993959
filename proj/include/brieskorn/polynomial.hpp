#pragma once

#include <string>
#include <utility>
#include <vector>

#include "brieskorn/arith.hpp"

namespace brieskorn {

// Dense univariate polynomial with exact integer coefficients, lowest degree first.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPolynomial constant(Int v);
    // 1 - t^d
    static IntPolynomial one_minus_power(long long d);

    bool is_zero() const { return c_.empty(); }
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(long long i) const;
    Int leading() const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

    // Exact division; throws consistency_error when the remainder is nonzero.
    IntPolynomial divide_exact(const IntPolynomial& divisor) const;

    Int evaluate(const Int& x) const;
    Rat evaluate(const Rat& x) const;

    // t^deg * p(1/t)
    IntPolynomial reversed() const;

    std::string str() const;

  private:
    void trim();
    std::vector<Int> c_;
};

// Expands prod_i f_i(t)^{e_i} with integer exponents e_i (negative exponents mean
// exact division). Throws consistency_error when the result is not a polynomial.
IntPolynomial formal_product_expand(const std::vector<std::pair<IntPolynomial, long long>>& factors);

// Multiplicity of the root t = 1; zero when p(1) != 0. p must be nonzero.
long long multiplicity_at_one(const IntPolynomial& p);

}  // namespace brieskorn
