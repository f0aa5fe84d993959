#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brieskorn/core.hpp"
#include "oracles.hpp"

using namespace brieskorn;

namespace {
ExponentList L(std::vector<long long> v) { return ExponentList(std::move(v)); }
}

TEST_CASE("exponent list validation") {
    CHECK_THROWS_AS(L({5}), validation_error);
    CHECK_THROWS_AS(L({0, 2}), validation_error);
    CHECK_THROWS_AS(L({-3, 2, 2}), validation_error);
    CHECK_THROWS_AS(ExponentList::parse({"2", "x"}), validation_error);
    CHECK(ExponentList::parse({"2", "3", "5"}) == L({2, 3, 5}));
    CHECK(L({2, 3, 5}).dimension() == 3);
    CHECK(L({2, 3, 5, 7}).n() == 3);
    CHECK(L({4, 6, 10}).lcm() == 60);
    CHECK(L({4, 6, 10}).gcd() == 2);
    CHECK(L({2, 3, 5}).pairwise_coprime());
    CHECK(!L({2, 3, 6}).pairwise_coprime());
    CHECK(L({1, 7, 9}).has_unit());
    CHECK(L({3, 7, 2}).sorted_desc() == std::vector<long long>{7, 3, 2});
    CHECK(L({2, 3, 5}).str() == "(2,3,5)");
}

TEST_CASE("subset selectors") {
    SubsetSelector full = SubsetSelector::full(4);
    CHECK(full.count() == 4);
    SubsetSelector s(0b0101);
    CHECK(s.count() == 2);
    CHECK(s.contains(0));
    CHECK(!s.contains(1));
    CHECK(s.subset_of(full));
    CHECK(!full.subset_of(s));
    CHECK(s.positions() == std::vector<size_t>{0, 2});
    ExponentList a({2, 3, 5, 7});
    CHECK(subset_list(a, s) == L({2, 5}));
    CHECK_THROWS_AS(subset_list(a, SubsetSelector(0b0010)), validation_error);
}

TEST_CASE("milnor numbers") {
    CHECK(milnor_number(L({2, 3, 5})) == 8);
    CHECK(milnor_number(L({2, 2, 2, 3, 5})) == 8);
    CHECK(milnor_number(L({1, 9, 11})) == 0);
    CHECK(milnor_number(L({4, 4, 4, 4})) == 81);
}

TEST_CASE("kappa known values") {
    CHECK(kappa_full(L({2, 3, 5})) == 0);
    CHECK(kappa_full(L({2, 3, 6})) == 2);
    CHECK(kappa_full(L({3, 3, 3})) == 2);
    CHECK(kappa_full(L({2, 2, 2, 2})) == 1);
    CHECK(kappa_full(L({4, 4, 4, 4})) == 21);
    CHECK(kappa_full(L({2, 2, 4})) == 0);
    CHECK(kappa_full(L({4, 2, 2, 2})) == 1);
    CHECK(kappa(L({2, 3, 5}), SubsetSelector()) == 1);
}

TEST_CASE("kappa inverts the subset product formula") {
    // Summing kappa over all subsets of a selection recovers prod/lcm.
    for (const auto& a : test::random_lists(11, 25, 5, 400)) {
        uint64_t fullmask = SubsetSelector::full(a.size()).mask();
        for (uint64_t m = 0; m <= fullmask; m += 3) {
            uint64_t mask = m & fullmask;
            Int sum = 0;
            for (uint64_t sub = 0;; sub = (sub - mask) & mask) {
                sum += kappa(a, SubsetSelector(sub));
                if (sub == mask) break;
            }
            Int prod = 1;
            long long l = 1;
            for (size_t i = 0; i < a.size(); ++i) {
                if (mask & (uint64_t(1) << i)) {
                    prod *= a[i];
                    l = lcm_ll(l, a[i]);
                }
            }
            CHECK(sum * l == prod);
        }
    }
}

TEST_CASE("kappa is permutation invariant") {
    CHECK(kappa_full(L({2, 3, 6})) == kappa_full(L({6, 2, 3})));
    CHECK(kappa_full(L({2, 2, 3, 5})) == kappa_full(L({5, 3, 2, 2})));
    CHECK(kappa_full(L({4, 4, 2, 6})) == kappa_full(L({2, 4, 6, 4})));
}

TEST_CASE("lefschetz euler characteristics") {
    ExponentList a({2, 3, 5});
    CHECK(lefschetz_euler(a, 1) == 0);
    CHECK(lefschetz_euler(a, 2) == 2);
    CHECK(lefschetz_euler(a, 3) == 3);
    CHECK(lefschetz_euler(a, 6) == -1);
    CHECK(lefschetz_euler(a, 7) == 0);
    CHECK(lefschetz_euler(a, 30) == 9);
    // At the full period this is the euler characteristic of the fiber.
    for (const auto& b : test::random_lists(5, 20, 5, 1000)) {
        long long n = b.n();
        Int chi = 1 + (n % 2 == 0 ? milnor_number(b) : -milnor_number(b));
        CHECK(lefschetz_euler(b, b.lcm()) == chi);
    }
}

TEST_CASE("divisor weights invert the lefschetz numbers") {
    for (const auto& a : test::random_lists(7, 20, 5, 2000)) {
        DivisorWeights w = divisor_weights(a);
        CHECK(w.period == a.lcm());
        for (long long i : divisors(w.period)) {
            Int sum = 0;
            for (long long d : divisors(i)) sum += Int(d) * w.r.at(d);
            CHECK(sum == lefschetz_euler(a, i));
        }
    }
}

TEST_CASE("fixed loci") {
    ExponentList a({2, 2, 3, 5});
    CHECK(fixed_positions(a, 2).count() == 2);
    CHECK(fixed_positions(a, 6).count() == 3);
    CHECK(fixed_positions(a, 5).count() == 1);
    CHECK(fixed_positions(a, 7).count() == 0);
    CHECK(fixed_positions(a, 30).count() == 4);
    FixedLocus f = fixed_locus(a, 6);
    REQUIRE(f.stratum.has_value());
    CHECK(*f.stratum == L({2, 2, 3}));
    CHECK(!fixed_locus(a, 5).stratum.has_value());
    CHECK(*fixed_locus(a, 30).stratum == a);
}
