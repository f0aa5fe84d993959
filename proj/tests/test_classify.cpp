#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brieskorn/classify.hpp"
#include "brieskorn/core.hpp"
#include "brieskorn/homology.hpp"
#include "brieskorn/intmatrix.hpp"
#include "oracles.hpp"

using namespace brieskorn;

namespace {
ExponentList L(std::vector<long long> v) { return ExponentList(std::move(v)); }
}

TEST_CASE("graph sphere criterion") {
    CHECK(sphere_graph_test(L({2, 2, 2, 3, 5})).sphere);
    CHECK(sphere_graph_test(L({2, 2, 2, 3, 5})).reason == "two-isolated-vertices");
    CHECK(sphere_graph_test(L({3, 2, 2, 2, 2, 2})).sphere);
    CHECK(sphere_graph_test(L({3, 2, 2, 2, 2, 2})).reason == "odd-gcd2-component");
    CHECK(sphere_graph_test(L({2, 3, 5, 7})).sphere);
    CHECK(!sphere_graph_test(L({2, 2, 2, 2})).sphere);
    CHECK(!sphere_graph_test(L({3, 2, 2, 2, 2})).sphere);
    CHECK(!sphere_graph_test(L({5, 3, 3, 3})).sphere);
    CHECK(!sphere_graph_test(L({4, 4, 4, 4})).sphere);
    // One isolated vertex and no odd gcd-2 component fails.
    CHECK(!sphere_graph_test(L({3, 2, 2, 11, 11})).sphere);
    CHECK_THROWS_AS(sphere_graph_test(L({2, 3, 5})), validation_error);
}

TEST_CASE("graph criterion matches vanishing reduced homology") {
    for (const auto& a : test::random_lists(43, 40, 6, 60)) {
        if (a.n() < 3) continue;
        bool graph = sphere_graph_test(a).sphere;
        AbelianGroup h = randell_homology(a);
        bool trivial = h.free_rank == 0 && h.torsion.empty() && kappa_full(a) == 0;
        CHECK(graph == trivial);
    }
}

TEST_CASE("bP group orders") {
    CHECK(bp_order(2) == 28);
    CHECK(bp_order(3) == 992);
    CHECK(bp_order(4) == 8128);
    CHECK(bp_order(5) == 261632);
    CHECK_THROWS_AS(bp_order(1), validation_error);
}

TEST_CASE("smooth classification in dimension 4k+1") {
    SphereVerdict v3 = classify_sphere(L({3, 2, 2, 2, 2, 2}));
    CHECK(v3.homeomorphic_sphere);
    CHECK(v3.smooth == SmoothClass::Kervaire);
    CHECK(*v3.det_abs == 3);

    SphereVerdict v7 = classify_sphere(L({7, 2, 2, 2, 2, 2}));
    CHECK(v7.smooth == SmoothClass::Standard);
    CHECK(*v7.det_residue == 7);

    SphereVerdict v9 = classify_sphere(L({9, 2, 2, 2, 2, 2}));
    CHECK(v9.smooth == SmoothClass::Standard);

    SphereVerdict v13 = classify_sphere(L({13, 2, 2, 2, 2, 2}));
    CHECK(v13.smooth == SmoothClass::Kervaire);
}

TEST_CASE("smooth classification in dimension 4k-1") {
    SphereVerdict milnor = classify_sphere(L({2, 2, 2, 3, 5}));
    CHECK(milnor.homeomorphic_sphere);
    CHECK(milnor.smooth == SmoothClass::BpClass);
    CHECK(*milnor.sig == 8);
    CHECK(*milnor.bp_group_order == 28);
    CHECK(*milnor.bp_class == 1);

    // 28 copies of the generator signature give the standard sphere class.
    SphereVerdict unit = classify_sphere(L({1, 5, 8}));
    CHECK(unit.homeomorphic_sphere);
    CHECK(unit.smooth == SmoothClass::Standard);
}

TEST_CASE("dimensions 1 3 7 are standard") {
    SphereVerdict v = classify_sphere(L({2, 3, 5, 7}));
    CHECK(v.homeomorphic_sphere);
    CHECK(v.smooth == SmoothClass::Standard);
}

TEST_CASE("non spheres report the failing criterion") {
    SphereVerdict v = classify_sphere(L({5, 3, 3, 3}));
    CHECK(!v.homeomorphic_sphere);
    CHECK(v.smooth == SmoothClass::Unknown);
}

TEST_CASE("massey groups by residue") {
    CHECK(massey_group(4).str() == "Z + Z/2");
    CHECK(massey_group(5).str() == "Z/24");
    CHECK(massey_group(5).order == 24);
    CHECK(massey_group(6).str() == "Z");
    CHECK(massey_group(7).str() == "Z/360");
    CHECK(massey_group(8).str() == "Z + Z/2");
    CHECK(massey_group(9).str() == "Z/40320");
    CHECK_THROWS_AS(massey_group(1), validation_error);
}

TEST_CASE("almost contact classes") {
    AlmostContactClass odd = almost_contact_class(L({3, 5, 2, 2, 2, 2}));
    CHECK(odd.value == 4);
    CHECK(!odd.scope_warning);

    AlmostContactClass unit = almost_contact_class(L({1, 2, 2, 2, 2}));
    CHECK(unit.value == 0);
    REQUIRE(unit.second.has_value());
    CHECK(*unit.second == 0);
    CHECK(!unit.scope_warning);
    CHECK(*unit.sig == 0);

    // The formula leaves its stated range on exotic spheres and non-spheres,
    // where it need not produce an integer.
    CHECK_THROWS_AS(almost_contact_class(L({2, 2, 2, 3, 5})), consistency_error);
    CHECK_THROWS_AS(almost_contact_class(L({2, 2, 2, 2, 2, 2})), consistency_error);
}

TEST_CASE("standard spheres always get integral classes") {
    for (long long k : {7LL, 11LL, 13LL, 17LL, 19LL, 23LL}) {
        ExponentList a({2, 3, 5, k});
        SphereVerdict v = classify_sphere(a);
        REQUIRE(v.homeomorphic_sphere);
        if (v.smooth != SmoothClass::Standard) continue;
        AlmostContactClass ac = almost_contact_class(a);
        CHECK(!ac.scope_warning);
    }
}

TEST_CASE("structural recognition") {
    auto has = [](const std::vector<std::string>& tags, const std::string& t) {
        for (const auto& s : tags)
            if (s == t) return true;
        return false;
    };
    CHECK(has(recognize(L({2, 2, 2, 2})), "unit cotangent bundle ST*S^3"));
    CHECK(has(recognize(L({2, 2, 2, 2})), "open book OB(T*S^2, tau^2)"));
    CHECK(has(recognize(L({4, 2, 2})), "lens space L(4,3)"));
    CHECK(has(recognize(L({3, 2, 2, 2, 2, 2})), "Kervaire sphere in dimension 9"));
    CHECK(has(recognize(L({1, 5, 3})), "standard sphere S^3"));
    CHECK(has(recognize(L({2, 3})), "torus knot T(2,3)"));
    CHECK(has(recognize(L({4, 6})), "torus link T(4,6) with 2 components"));
    CHECK(has(recognize(L({2, 2, 2, 5})), "open book OB(T*S^2, tau^5)"));
    CHECK(recognize(L({3, 4, 7, 17})).empty());
}

TEST_CASE("signature agrees with the diagonalized pairing and scales past it") {
    // The lattice-point count must reproduce the eigenvalue signs of the
    // explicit pairing matrix wherever the matrix is small enough to build.
    for (const auto& a : {L({2, 3, 5}), L({2, 3, 11}), L({4, 4, 5}), L({2, 2, 2, 3, 5}),
                          L({3, 4, 5, 7, 2}), L({2, 2, 2, 2, 4})}) {
        CHECK(signature(a) == signature_of(pham_matrix(a)));
    }
    CHECK(signature(L({2, 3, 5})) == -8);   // negative-definite E8 plumbing
    CHECK(signature(L({1, 7, 9})) == 0);    // unit entry: empty form
    // Milnor numbers beyond the matrix builder's range still classify.
    CHECK(classify_sphere(L({4, 9, 5, 7, 11})).homeomorphic_sphere);
    CHECK(classify_sphere(L({8, 9, 5, 7, 11})).homeomorphic_sphere);
    CHECK_THROWS_AS(signature(L({3, 2, 2, 2})), validation_error);
}
