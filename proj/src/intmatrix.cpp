#include "brieskorn/intmatrix.hpp"

#include <algorithm>

#include "brieskorn/core.hpp"

namespace brieskorn {

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool IntMatrix::is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

IntMatrix pham_matrix(const ExponentList& a) {
    Int mu_big = milnor_number(a);
    if (mu_big > 4096) throw validation_error("pham_matrix: Milnor number too large");
    size_t mu = static_cast<size_t>(mu_big);
    size_t m = a.size();
    long long n = a.n();
    int eps = (((n * (n + 1) / 2) % 2) == 0) ? 1 : -1;
    int npar = (n % 2 == 0) ? 1 : -1;

    // Lexicographic tuples (i_0, ..., i_n) with 0 <= i_j <= a_j - 2.
    std::vector<std::vector<long long>> basis;
    basis.reserve(mu);
    std::vector<long long> cur(m, 0);
    if (mu > 0) {
        for (;;) {
            basis.push_back(cur);
            size_t k = m;
            while (k > 0) {
                --k;
                if (cur[k] < a[k] - 2) {
                    ++cur[k];
                    std::fill(cur.begin() + k + 1, cur.end(), 0);
                    break;
                }
                if (k == 0) goto done;
            }
        }
    }
done:
    if (basis.size() != mu) throw consistency_error("pham_matrix: basis size mismatch");

    IntMatrix s(mu, mu);
    for (size_t p = 0; p < mu; ++p) {
        for (size_t q = 0; q < mu; ++q) {
            const auto& i = basis[p];
            const auto& j = basis[q];
            bool up = true, down = true;
            long long diff = 0;
            for (size_t k = 0; k < m; ++k) {
                if (!(i[k] <= j[k] && j[k] <= i[k] + 1)) up = false;
                if (!(j[k] <= i[k] && i[k] <= j[k] + 1)) down = false;
                diff += j[k] - i[k];
            }
            Int v = 0;
            if (up) v += eps * ((diff % 2 == 0) ? 1 : -1);
            if (down) v += eps * npar * ((diff % 2 == 0) ? 1 : -1);
            s.at(p, q) = v;
        }
    }
    return s;
}

std::vector<Int> smith_normal_form(IntMatrix m) {
    size_t r = m.rows(), c = m.cols();
    size_t dim = std::min(r, c);
    std::vector<Int> diag(dim, 0);
    auto abs_of = [](const Int& v) { return v < 0 ? Int(-v) : v; };

    for (size_t t = 0; t < dim; ++t) {
        // Locate the smallest nonzero entry in the trailing submatrix.
        bool found = false;
        size_t pi = t, pj = t;
        Int best = 0;
        for (size_t i = t; i < r; ++i)
            for (size_t j = t; j < c; ++j)
                if (m.at(i, j) != 0 && (!found || abs_of(m.at(i, j)) < best)) {
                    found = true;
                    best = abs_of(m.at(i, j));
                    pi = i;
                    pj = j;
                }
        if (!found) break;

        for (;;) {
            // Move current minimal entry to the corner.
            if (pi != t)
                for (size_t j = 0; j < c; ++j) std::swap(m.at(t, j), m.at(pi, j));
            if (pj != t)
                for (size_t i = 0; i < r; ++i) std::swap(m.at(i, t), m.at(i, pj));

            bool clean = true;
            for (size_t i = t + 1; i < r; ++i) {
                if (m.at(i, t) == 0) continue;
                Int q = m.at(i, t) / m.at(t, t);
                if (q != 0)
                    for (size_t j = t; j < c; ++j) m.at(i, j) -= q * m.at(t, j);
                if (m.at(i, t) != 0) clean = false;
            }
            for (size_t j = t + 1; j < c; ++j) {
                if (m.at(t, j) == 0) continue;
                Int q = m.at(t, j) / m.at(t, t);
                if (q != 0)
                    for (size_t i = t; i < r; ++i) m.at(i, j) -= q * m.at(i, t);
                if (m.at(t, j) != 0) clean = false;
            }
            if (clean) {
                // Pivot must divide the rest of the submatrix.
                bool divides = true;
                for (size_t i = t + 1; i < r && divides; ++i)
                    for (size_t j = t + 1; j < c && divides; ++j)
                        if (m.at(i, j) % m.at(t, t) != 0) {
                            for (size_t jj = t; jj < c; ++jj) m.at(t, jj) += m.at(i, jj);
                            divides = false;
                        }
                if (divides) break;
            }
            // Re-locate the minimal nonzero entry in row/col t region.
            found = false;
            for (size_t i = t; i < r; ++i)
                for (size_t j = t; j < c; ++j)
                    if (m.at(i, j) != 0 && (!found || abs_of(m.at(i, j)) < best)) {
                        found = true;
                        best = abs_of(m.at(i, j));
                        pi = i;
                        pj = j;
                    }
            if (!found) throw consistency_error("smith_normal_form: lost pivot");
        }
        diag[t] = abs_of(m.at(t, t));
    }

    for (size_t t = 0; t + 1 < dim; ++t)
        if (diag[t] != 0 && diag[t + 1] != 0 && diag[t + 1] % diag[t] != 0)
            throw consistency_error("smith_normal_form: divisibility chain broken");
    return diag;
}

AbelianGroup cokernel(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw validation_error("cokernel: matrix must be square");
    std::vector<Int> d = smith_normal_form(m);
    Int free = 0;
    std::vector<Int> torsion;
    for (const Int& v : d) {
        if (v == 0)
            ++free;
        else if (v > 1)
            torsion.push_back(v);
    }
    return AbelianGroup(free, std::move(torsion));
}

long long signature_of(const IntMatrix& mat) {
    if (!mat.is_symmetric()) throw validation_error("signature_of: matrix must be symmetric");
    size_t nsz = mat.rows();
    std::vector<std::vector<Rat>> m(nsz, std::vector<Rat>(nsz));
    for (size_t i = 0; i < nsz; ++i)
        for (size_t j = 0; j < nsz; ++j)
            m[i][j] = Rat(mat.at(i, j));

    auto abs_of = [](const Rat& v) { return v < 0 ? Rat(-v) : v; };
    long long pos = 0, neg = 0;
    for (size_t t = 0; t < nsz; ++t) {
        // Pick the largest-modulus diagonal pivot.
        size_t p = t;
        Rat best = 0;
        for (size_t i = t; i < nsz; ++i)
            if (abs_of(m[i][i]) > best) {
                best = abs_of(m[i][i]);
                p = i;
            }
        if (best == 0) {
            // All trailing diagonal entries vanish: find an off-diagonal entry
            // and fold its hyperbolic pair onto the diagonal.
            bool found = false;
            for (size_t i = t; i < nsz && !found; ++i)
                for (size_t j = i + 1; j < nsz && !found; ++j)
                    if (m[i][j] != 0) {
                        for (size_t k = 0; k < nsz; ++k) m[i][k] += m[j][k];
                        for (size_t k = 0; k < nsz; ++k) m[k][i] += m[k][j];
                        found = true;
                    }
            if (!found) break;  // zero block, no further contribution
            --t;
            continue;
        }
        if (p != t) {
            std::swap(m[p], m[t]);
            for (size_t k = 0; k < nsz; ++k) std::swap(m[k][p], m[k][t]);
        }
        Rat d = m[t][t];
        if (d > 0) ++pos; else ++neg;
        for (size_t i = t + 1; i < nsz; ++i) {
            if (m[i][t] == 0) continue;
            Rat f = m[i][t] / d;
            for (size_t k = t; k < nsz; ++k) m[i][k] -= f * m[t][k];
            for (size_t k = t; k < nsz; ++k) m[k][i] -= f * m[k][t];
        }
    }
    return pos - neg;
}

long long signature(const ExponentList& a) {
    if (a.n() % 2 != 0)
        throw validation_error("signature requires even n (dimension 4k-1)");
    // Count lattice points x in prod (0, a_i): the intersection form has one
    // eigenvalue per point, positive when sum x_i/a_i mod 2 lies in (0,1),
    // negative when it lies in (1,2), null when the sum is an integer.  This
    // agrees with diagonalizing the pairing matrix but needs O(mu) work.
    if (milnor_number(a) > 10000000)
        throw validation_error("signature: Milnor number too large on " + a.str());
    const auto& v = a.values();
    for (long long ai : v)
        if (ai < 2) return 0;  // a unit entry kills the form
    long long L = a.lcm();
    std::vector<long long> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = L / v[i];
    std::vector<long long> x(v.size(), 1);
    long long pos = 0, neg = 0;
    while (true) {
        long long t = 0;
        for (size_t i = 0; i < v.size(); ++i) t += x[i] * w[i];
        long long r = t % (2 * L);
        if (r > 0 && r < L)
            ++pos;
        else if (r > L)
            ++neg;
        size_t k = 0;
        while (k < v.size() && x[k] == v[k] - 1) {
            x[k] = 1;
            ++k;
        }
        if (k == v.size()) break;
        ++x[k];
    }
    return pos - neg;
}

}  // namespace brieskorn
