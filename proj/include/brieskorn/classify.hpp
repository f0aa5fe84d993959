#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brieskorn/fibration.hpp"
#include "brieskorn/intmatrix.hpp"

namespace brieskorn {

// Graph criterion for topological sphericity, n >= 3. Vertices are the
// exponents; edges join pairs with gcd > 1. The link is a topological sphere
// iff the graph has at least two isolated vertices, or exactly one isolated
// vertex together with a connected component of odd size >= 3 whose pairwise
// gcds all equal 2.
struct SphereGraphResult {
    bool sphere = false;
    std::string reason;  // "two-isolated-vertices", "odd-gcd2-component", "none"
};

SphereGraphResult sphere_graph_test(const ExponentList& a);

// Order of the cyclic group bP_{4k} of boundary-parallelizable homotopy
// (4k-1)-spheres, k >= 2.
Int bp_order(int k);

enum class SmoothClass { Standard, Kervaire, BpClass, Unknown };

struct SphereVerdict {
    bool homeomorphic_sphere = false;
    std::string reason;
    SmoothClass smooth = SmoothClass::Unknown;
    // dim = 4k+1 route
    std::optional<Int> det_abs;
    std::optional<int> det_residue;
    // dim = 4k-1 route
    std::optional<long long> sig;      // signature of the filling
    std::optional<Int> bp_group_order;
    std::optional<Int> bp_class;       // |sig|/8 mod bp_group_order
    std::optional<int> bp_sign;        // sign of the signature
};

// Full classification: topological sphere test, then the smooth class by
// dimension. Dimensions 2n-1 with n in {1, 3, 7} are standard; in dimension
// 4k+1 the determinant residue mod 8 decides standard (+-1) versus Kervaire
// (+-3); in dimension 4k-1 the bP class is signature/8 mod |bP_{4k}|.
// Requires n >= 3 unless the list contains a unit exponent.
SphereVerdict classify_sphere(const ExponentList& a);

// pi_{2n-1}(SO(2n)/U(n)), classifying almost contact structures on a
// (4k+1)-sphere by n mod 4: Z+Z_2, Z_{(n-1)!}, Z, Z_{(n-1)!/2}.
struct MasseyGroup {
    enum class Shape { ZPlusZ2, Finite, Z, FiniteHalf } shape;
    Int order = 0;  // order of the finite (part of the) group; 0 for Z itself
    std::string str() const;
};

MasseyGroup massey_group(long long n);

struct AlmostContactClass {
    MasseyGroup group;
    Int value = 0;               // canonical representative (mod order if finite)
    std::optional<Int> second;   // Z_2 component when present
    std::optional<long long> sig;  // signature of the filling, even n only
    bool scope_warning = false;  // set when the link is not a certified sphere
};

// The class of the natural almost contact structure in massey_group(n); uses
// the signature of the filling for even n and mu/2 for odd n. Values that fail
// the integrality required by the formula raise a consistency error.
AlmostContactClass almost_contact_class(const ExponentList& a);

// Human-readable structural tags: standard spheres, unit cotangent bundles,
// torus links, lens spaces, Kervaire spheres, open books.
std::vector<std::string> recognize(const ExponentList& a);

}  // namespace brieskorn
