#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "helpers.hpp"
#include "latrep/oracle.hpp"
#include "latrep/represent.hpp"
#include "latrep/set_family.hpp"
#include "latrep/stone.hpp"

using namespace latrep;
using namespace latrep::testing;

TEST_CASE("point space and images of the chain") {
    finite_lattice L = load_lattice("CHAIN3");
    set_representation R = stone_map(L);
    REQUIRE(R.points.size() == 2);
    CHECK(R.points[0] == mask_of({2}));     // {b}
    CHECK(R.points[1] == mask_of({1, 2}));  // {a,b}
    CHECK(R.image[0] == 0);                 // bottom -> empty
    CHECK(R.image[1] == mask_of({1}));      // a in the second point only
    CHECK(R.image[2] == mask_of({0, 1}));   // b in both
    CHECK(verify_stone(L, R).ok);
}

TEST_CASE("point space and images of the diamond") {
    finite_lattice L = load_lattice("B2");
    set_representation R = stone_map(L);
    REQUIRE(R.points.size() == 2);
    CHECK(R.points[0] == mask_of({2, 3}));  // {b,1} reads lexicographically first
    CHECK(R.points[1] == mask_of({1, 3}));  // {a,1}
    CHECK(R.image[1] == mask_of({1}));      // a
    CHECK(R.image[2] == mask_of({0}));      // b
    CHECK(R.image[3] == mask_of({0, 1}));   // top
    CHECK(verify_stone(L, R).ok);
}

TEST_CASE("point space of the pentagon") {
    finite_lattice L = load_lattice("N5");  // 0 < a < c < 1, 0 < b < 1
    set_representation R = stone_map(L);
    REQUIRE(R.points.size() == 3);
    CHECK(R.points[0] == mask_of({3, 4}));     // {c,1}
    CHECK(R.points[1] == mask_of({2, 4}));     // {b,1}
    CHECK(R.points[2] == mask_of({1, 3, 4}));  // {a,c,1}
    CHECK(R.image[1] == mask_of({2}));         // a
    CHECK(R.image[2] == mask_of({1}));         // b
    CHECK(R.image[3] == mask_of({0, 2}));      // c
    CHECK(R.image[4] == mask_of({0, 1, 2}));   // top
    CHECK(verify_stone(L, R).ok);
}

TEST_CASE("representation laws hold across the enumerated corpus") {
    for (int n = 1; n <= 5; ++n)
        for (const finite_lattice& L : enumerate_lattices(n)) {
            set_representation R = stone_map(L);
            CAPTURE(n);
            CHECK(verify_stone(L, R).ok);
        }
}

TEST_CASE("verification notices corrupted images") {
    finite_lattice L = load_lattice("B2");
    set_representation R = stone_map(L);
    SUBCASE("broken embedding") {
        R.image[1] = R.image[3];  // a now looks like the top
        representation_verdict v = verify_stone(L, R);
        CHECK_FALSE(v.ok);
        CHECK_FALSE(v.failures.empty());
    }
    SUBCASE("broken bottom") {
        R.image[0] = mask_of({0});
        CHECK_FALSE(verify_stone(L, R).ok);
    }
    SUBCASE("collapsed points lose separation") {
        set_representation S;
        S.points = {R.points[0], R.points[0]};
        S.image.assign(L.n, 0);
        for (int x = 0; x < L.n; ++x)
            for (int p = 0; p < 2; ++p)
                if (has_bit(S.points[p], x)) S.image[x] |= bit(p);
        CHECK_FALSE(verify_stone(L, S).ok);
    }
}

TEST_CASE("the image family of a local lattice is a local set family") {
    for (int n = 1; n <= 5; ++n)
        for (const finite_lattice& L : enumerate_lattices(n)) {
            if (!is_loc_lattice(L).ok) continue;
            set_family F = stone_family(L);
            CAPTURE(n);
            CHECK(F.lattice_ok);
            CHECK(is_loc_setfamily(F).ok);
        }
}

TEST_CASE("well-separated lattices yield well-separating image families") {
    for (int n = 1; n <= 5; ++n)
        for (const finite_lattice& L : enumerate_lattices(n)) {
            if (!is_loc_lattice(L).ok) continue;
            if (!is_well_separated(L, separation_direction::upper).ok) continue;
            set_family F = stone_family(L);
            if (F.n == 0) continue;  // one-element lattice: empty space
            separation_profile p = separation(F);
            CAPTURE(n);
            CHECK(p.separates);
            CHECK(p.well);
        }
}

TEST_CASE("image of an element's filter membership matches by definition") {
    // Cross-check stone_map against a from-scratch recomputation.
    for (const char* name : {"CHAIN3", "B2", "N5", "M3"}) {
        finite_lattice L = load_lattice(name);
        set_representation R = stone_map(L);
        std::vector<mask_t> space = semiprime_space(L);
        REQUIRE(R.points == space);
        for (int x = 0; x < L.n; ++x) {
            mask_t im = 0;
            for (std::size_t p = 0; p < space.size(); ++p)
                if (has_bit(space[p], x)) im |= bit(static_cast<int>(p));
            CHECK(R.image[x] == im);
        }
    }
}
