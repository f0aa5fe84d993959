#include "brieskorn/groups.hpp"

#include <algorithm>
#include <sstream>

namespace brieskorn {

AbelianGroup::AbelianGroup(Int free, std::vector<Int> tors)
    : free_rank(std::move(free)), torsion(std::move(tors)) {
    if (free_rank < 0) throw validation_error("abelian group with negative rank");
    for (const Int& t : torsion)
        if (t < 2) throw validation_error("torsion orders must be >= 2");
}

Int AbelianGroup::torsion_order() const {
    Int acc = 1;
    for (const Int& t : torsion) acc *= t;
    return acc;
}

std::vector<Int> AbelianGroup::primary_decomposition() const {
    std::vector<Int> parts;
    for (const Int& t : torsion) {
        for (auto [p, e] : factorize_int(t)) {
            Int q = 1;
            for (int i = 0; i < e; ++i) q *= p;
            parts.push_back(q);
        }
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

bool AbelianGroup::operator==(const AbelianGroup& o) const {
    return free_rank == o.free_rank && primary_decomposition() == o.primary_decomposition();
}

std::string AbelianGroup::str() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " + ";
        first = false;
    };
    if (free_rank == 1) {
        sep();
        os << "Z";
    } else if (free_rank > 1) {
        sep();
        os << "Z^" << free_rank.str();
    }
    for (const Int& t : torsion) {
        sep();
        os << "Z/" << t.str();
    }
    if (first) return "0";
    return os.str();
}

void add_rank(GradedRanks& g, long long degree, const Int& rank) {
    if (rank == 0) return;
    auto it = g.find(degree);
    if (it == g.end()) {
        g.emplace(degree, rank);
    } else {
        it->second += rank;
        if (it->second == 0) g.erase(it);
    }
}

std::string graded_str(const GradedRanks& g) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [d, r] : g) {
        if (!first) os << ", ";
        first = false;
        os << d << ": " << r.str();
    }
    os << "}";
    return os.str();
}

}  // namespace brieskorn
