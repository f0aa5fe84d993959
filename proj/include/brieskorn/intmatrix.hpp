#pragma once

#include <vector>

#include "brieskorn/exponents.hpp"
#include "brieskorn/groups.hpp"

namespace brieskorn {

// Dense square integer matrix, row-major.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Int& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Int& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    IntMatrix transposed() const;
    bool is_symmetric() const;
    bool is_skew_symmetric() const;

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

// Seifert pairing of the Pham join basis e_{i_0...i_n}, 0 <= i_j <= a_j - 2,
// ordered lexicographically. The entry for (i, j) is
// (-1)^{n(n+1)/2} (-1)^{sum (j_k - i_k)} when i_k <= j_k <= i_k + 1 for all k,
// its (-1)^n-symmetric reflection when j_k <= i_k <= j_k + 1 for all k, else 0.
// Size is the Milnor number; inputs with mu > 4096 are rejected.
IntMatrix pham_matrix(const ExponentList& a);

// Diagonal of the Smith normal form (nonnegative, each dividing the next,
// padded with zeros to min(rows, cols)).
std::vector<Int> smith_normal_form(IntMatrix m);

// Cokernel of the square matrix as an abelian group.
AbelianGroup cokernel(const IntMatrix& m);

// Signature of a symmetric matrix over Q by congruence diagonalization
// (largest-modulus diagonal pivot first, hyperbolic handling of zero diagonal).
// Throws validation_error if the matrix is not symmetric.
long long signature_of(const IntMatrix& m);

// Signature of the intersection form of the natural filling (the Pham matrix,
// symmetric for even n). Requires n even.
long long signature(const ExponentList& a);

}  // namespace brieskorn
