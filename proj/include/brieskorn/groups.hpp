#pragma once

#include <map>
#include <string>
#include <vector>

#include "brieskorn/numtheory.hpp"

namespace brieskorn {

// Finitely generated abelian group Z^free + Z/t_1 + ... + Z/t_k.
// Torsion orders are kept as produced (not normalized); equality compares the
// primary decomposition, so Z/2 + Z/3 equals Z/6.
struct AbelianGroup {
    Int free_rank = 0;
    std::vector<Int> torsion;  // entries > 1

    AbelianGroup() = default;
    AbelianGroup(Int free, std::vector<Int> tors);

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    Int torsion_order() const;

    // Multiset of prime powers p^e appearing in the primary decomposition.
    std::vector<Int> primary_decomposition() const;

    bool operator==(const AbelianGroup& o) const;
    bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

    // "Z^2 + Z/4 + Z/2", "0" for the trivial group.
    std::string str() const;
};

// Degree -> rank of a graded vector space; absent degrees mean rank zero.
using GradedRanks = std::map<long long, Int>;

void add_rank(GradedRanks& g, long long degree, const Int& rank);
std::string graded_str(const GradedRanks& g);

}  // namespace brieskorn
