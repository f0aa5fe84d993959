#include "brieskorn/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace brieskorn {

IntPolynomial IntPolynomial::constant(Int v) {
    return IntPolynomial(std::vector<Int>{std::move(v)});
}

IntPolynomial IntPolynomial::one_minus_power(long long d) {
    if (d < 1) throw validation_error("one_minus_power: exponent must be >= 1");
    std::vector<Int> c(static_cast<size_t>(d) + 1, 0);
    c.front() = 1;
    c.back() = -1;
    return IntPolynomial(std::move(c));
}

Int IntPolynomial::coeff(long long i) const {
    if (i < 0 || i >= static_cast<long long>(c_.size())) return 0;
    return c_[static_cast<size_t>(i)];
}

Int IntPolynomial::leading() const {
    if (c_.empty()) throw validation_error("leading: zero polynomial");
    return c_.back();
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    return *this + (-o);
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> r = c_;
    for (auto& v : r) v = -v;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (c_.empty() || o.c_.empty()) return IntPolynomial();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw validation_error("divide_exact: division by zero polynomial");
    std::vector<Int> rem = c_;
    const auto& d = divisor.c_;
    long long qdeg = static_cast<long long>(rem.size()) - static_cast<long long>(d.size());
    if (rem.empty()) return IntPolynomial();
    if (qdeg < 0) throw consistency_error("divide_exact: nonzero remainder (degree too small)");
    std::vector<Int> q(static_cast<size_t>(qdeg) + 1, 0);
    for (long long k = qdeg; k >= 0; --k) {
        Int top = rem[static_cast<size_t>(k) + d.size() - 1];
        if (top == 0) continue;
        if (top % d.back() != 0)
            throw consistency_error("divide_exact: nonzero remainder (leading term not divisible)");
        Int f = top / d.back();
        q[static_cast<size_t>(k)] = f;
        for (size_t i = 0; i < d.size(); ++i)
            rem[static_cast<size_t>(k) + i] -= f * d[i];
    }
    for (const auto& v : rem)
        if (v != 0) throw consistency_error("divide_exact: nonzero remainder");
    return IntPolynomial(std::move(q));
}

Int IntPolynomial::evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPolynomial::evaluate(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

IntPolynomial IntPolynomial::reversed() const {
    std::vector<Int> r(c_.rbegin(), c_.rend());
    return IntPolynomial(std::move(r));
}

std::string IntPolynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long long i = degree(); i >= 0; --i) {
        const Int& v = c_[static_cast<size_t>(i)];
        if (v == 0) continue;
        Int a = v < 0 ? Int(-v) : v;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a.str();
        if (i > 0) {
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

IntPolynomial formal_product_expand(const std::vector<std::pair<IntPolynomial, long long>>& factors) {
    IntPolynomial numer = IntPolynomial::constant(1);
    IntPolynomial denom = IntPolynomial::constant(1);
    for (const auto& [f, e] : factors) {
        if (e == 0) continue;
        if (f.is_zero()) throw validation_error("formal_product_expand: zero factor");
        IntPolynomial& target = e > 0 ? numer : denom;
        long long reps = e > 0 ? e : -e;
        for (long long i = 0; i < reps; ++i) target = target * f;
    }
    return numer.divide_exact(denom);
}

long long multiplicity_at_one(const IntPolynomial& p) {
    if (p.is_zero()) throw validation_error("multiplicity_at_one: zero polynomial");
    IntPolynomial q = p;
    IntPolynomial linear(std::vector<Int>{-1, 1});  // t - 1
    long long mult = 0;
    while (q.evaluate(Int(1)) == 0) {
        q = q.divide_exact(linear);
        ++mult;
    }
    return mult;
}

}  // namespace brieskorn
