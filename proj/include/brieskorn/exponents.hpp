#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "brieskorn/numtheory.hpp"

namespace brieskorn {

// Exponent list (a_0, ..., a_n) of a Brieskorn manifold Sigma(a), n + 1 entries.
// Entries are >= 1; the link has dimension 2n - 1.
class ExponentList {
  public:
    static constexpr size_t kMaxLength = 16;

    explicit ExponentList(std::vector<long long> exps);
    static ExponentList parse(const std::vector<std::string>& tokens);

    size_t size() const { return a_.size(); }
    // The "n" with dim Sigma = 2n - 1.
    long long n() const { return static_cast<long long>(a_.size()) - 1; }
    long long dimension() const { return 2 * n() - 1; }
    long long operator[](size_t i) const { return a_[i]; }
    const std::vector<long long>& values() const { return a_; }

    long long lcm() const;
    long long gcd() const;
    bool pairwise_coprime() const;
    bool has_unit() const {
        for (long long v : a_) if (v == 1) return true;
        return false;
    }
    std::vector<long long> sorted_desc() const;
    std::string str() const;

    bool operator==(const ExponentList& o) const { return a_ == o.a_; }
    bool operator<(const ExponentList& o) const { return a_ < o.a_; }

  private:
    std::vector<long long> a_;
};

// Subset of index positions {0, ..., n}, encoded as a bitmask.
class SubsetSelector {
  public:
    SubsetSelector() : mask_(0) {}
    explicit SubsetSelector(uint64_t mask) : mask_(mask) {}
    static SubsetSelector full(size_t n);

    uint64_t mask() const { return mask_; }
    size_t count() const { return static_cast<size_t>(__builtin_popcountll(mask_)); }
    bool empty() const { return mask_ == 0; }
    bool contains(size_t i) const { return mask_ & (uint64_t(1) << i); }
    bool subset_of(SubsetSelector o) const { return (mask_ & ~o.mask_) == 0; }
    std::vector<size_t> positions() const;

    bool operator==(const SubsetSelector& o) const { return mask_ == o.mask_; }

  private:
    uint64_t mask_;
};

// The exponents selected by sel, as a list (requires >= 2 selected positions).
ExponentList subset_list(const ExponentList& a, SubsetSelector sel);

}  // namespace brieskorn
