#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "helpers.hpp"
#include "latrep/filters.hpp"
#include "latrep/oracle.hpp"

using namespace latrep;
using namespace latrep::testing;

TEST_CASE("filter and ideal predicates on the chain") {
    finite_lattice L = load_lattice("CHAIN3");  // 0 < a < b
    CHECK(is_filter(L, mask_of({2})));          // {b}
    CHECK(is_filter(L, mask_of({1, 2})));       // {a,b}
    CHECK_FALSE(is_filter(L, mask_of({0, 1, 2})));  // improper
    CHECK_FALSE(is_filter(L, mask_of({1})));        // not up-closed
    CHECK_FALSE(is_filter(L, 0));                   // empty
    CHECK(is_ideal(L, mask_of({0})));
    CHECK(is_ideal(L, mask_of({0, 1})));
    CHECK_FALSE(is_ideal(L, mask_of({1})));
}

TEST_CASE("filter enumeration is ascending by characteristic mask") {
    SUBCASE("chain") {
        finite_lattice L = load_lattice("CHAIN3");
        CHECK(enumerate_filters(L) ==
              std::vector<mask_t>{mask_of({2}), mask_of({1, 2})});
        CHECK(enumerate_ideals(L) ==
              std::vector<mask_t>{mask_of({0}), mask_of({0, 1})});
    }
    SUBCASE("diamond") {
        finite_lattice L = load_lattice("B2");  // 0,a,b,1
        CHECK(enumerate_filters(L) ==
              std::vector<mask_t>{mask_of({3}), mask_of({1, 3}),
                                  mask_of({2, 3})});
    }
    SUBCASE("five-element modular fixture") {
        finite_lattice L = load_lattice("M3");  // 0,a,b,c,1
        CHECK(enumerate_filters(L) ==
              std::vector<mask_t>{mask_of({4}), mask_of({1, 4}),
                                  mask_of({2, 4}), mask_of({3, 4})});
    }
}

TEST_CASE("filter_generated_by is the up-closure of finite meets") {
    finite_lattice L = load_lattice("B2");
    CHECK(filter_generated_by(L, mask_of({1})) == mask_of({1, 3}));
    CHECK(filter_generated_by(L, mask_of({1, 2})) ==
          mask_of({0, 1, 2, 3}));  // a ^ b = 0: not proper
    CHECK(filter_generated_by(L, mask_of({3})) == mask_of({3}));
}

TEST_CASE("split filters on the fixtures") {
    SUBCASE("M3: the top filter splits no join of atoms") {
        finite_lattice L = load_lattice("M3");
        split_verdict v = is_semi_prime(L, mask_of({4}));
        REQUIRE_FALSE(v.ok);
        REQUIRE(v.witness.has_value());
        CHECK(*v.witness == std::pair<int, int>{1, 2});  // (a, b)
        // Every atom filter splits: the third atom is internal.
        CHECK(semiprime_filters(L) ==
              std::vector<mask_t>{mask_of({1, 4}), mask_of({2, 4}),
                                  mask_of({3, 4})});
    }
    SUBCASE("diamond: the top filter fails, atom filters pass") {
        finite_lattice L = load_lattice("B2");
        CHECK_FALSE(is_semi_prime(L, mask_of({3})).ok);
        CHECK(semiprime_filters(L) ==
              std::vector<mask_t>{mask_of({1, 3}), mask_of({2, 3})});
    }
    SUBCASE("chain: every filter splits") {
        finite_lattice L = load_lattice("CHAIN3");
        CHECK(semiprime_filters(L) == enumerate_filters(L));
    }
}

TEST_CASE("the two split-filter implementations agree everywhere") {
    for (int n = 1; n <= 5; ++n)
        for (const finite_lattice& L : enumerate_lattices(n))
            for (mask_t F : enumerate_filters(L)) {
                split_verdict a = is_semi_prime(L, F);
                split_verdict b = is_semi_prime_direct(L, F);
                CAPTURE(n);
                CAPTURE(F);
                CHECK(a.ok == b.ok);
            }
}

TEST_CASE("prime filters split") {
    for (int n = 1; n <= 5; ++n)
        for (const finite_lattice& L : enumerate_lattices(n))
            for (mask_t F : enumerate_filters(L))
                if (is_prime_filter(L, F)) CHECK(is_semi_prime(L, F).ok);
}

TEST_CASE("point space ordering: lexicographic characteristic vectors") {
    finite_lattice L = load_lattice("B2");
    // chi over (0,a,b,1): {b,1} = 0011 reads before {a,1} = 0101.
    CHECK(semiprime_space(L) ==
          std::vector<mask_t>{mask_of({2, 3}), mask_of({1, 3})});
    finite_lattice C = load_lattice("CHAIN3");
    CHECK(semiprime_space(C) ==
          std::vector<mask_t>{mask_of({2}), mask_of({1, 2})});
}

TEST_CASE("extending a filter away from an ideal") {
    finite_lattice L = load_lattice("M3");
    SUBCASE("grows to a maximal split filter") {
        mask_t F = extend_disjoint_filter(L, mask_of({4}), mask_of({0}));
        CHECK(F == mask_of({1, 4}));  // smallest-index growth: a first
        CHECK(is_semi_prime(L, F).ok);
    }
    SUBCASE("avoids the ideal") {
        mask_t F = extend_disjoint_filter(L, mask_of({4}), mask_of({0, 1}));
        CHECK(F == mask_of({2, 4}));  // a blocked, b next
        CHECK((F & mask_of({0, 1})) == 0);
    }
    SUBCASE("overlap is rejected") {
        CHECK(thrown_code([&] {
                  extend_disjoint_filter(L, mask_of({1, 4}), mask_of({0, 1}));
              }) == "Overlap");
    }
    SUBCASE("non-filter and non-ideal arguments are rejected") {
        CHECK(thrown_code([&] {
                  extend_disjoint_filter(L, mask_of({1}), mask_of({0}));
              }) == "InvalidInput");
        CHECK(thrown_code([&] {
                  extend_disjoint_filter(L, mask_of({4}), mask_of({1}));
              }) == "InvalidInput");
    }
}

TEST_CASE("extension postconditions across the small corpus") {
    for (int n = 2; n <= 4; ++n)
        for (const finite_lattice& L : enumerate_lattices(n))
            for (mask_t F : enumerate_filters(L))
                for (mask_t I : enumerate_ideals(L)) {
                    if (F & I) continue;
                    mask_t G = extend_disjoint_filter(L, F, I);
                    CAPTURE(n);
                    CAPTURE(F);
                    CAPTURE(I);
                    CHECK((G & F) == F);
                    CHECK((G & I) == 0);
                    CHECK(is_filter(L, G));
                    // Maximal: no element can be adjoined and stay disjoint.
                    for (int x = 0; x < L.n; ++x) {
                        if (has_bit(G, x)) continue;
                        mask_t H = filter_generated_by(L, G | bit(x));
                        CHECK((H & I) != 0);
                    }
                }
}

TEST_CASE("separation grades of the fixtures") {
    SUBCASE("chain: upper separation only, never completely") {
        finite_lattice L = load_lattice("CHAIN3");
        CHECK(is_well_separated(L, separation_direction::upper).ok);
        // Lower fails: a sits below every member of the filter {top}.
        well_separated_verdict lo =
            is_well_separated(L, separation_direction::lower);
        REQUIRE_FALSE(lo.ok);
        CHECK(lo.witness->first == mask_of({2}));
        CHECK(lo.witness->second == 1);
        completely_separated_verdict c = is_completely_separated(L);
        REQUIRE_FALSE(c.ok);
        CHECK(c.witness->first == mask_of({2}));
        CHECK(c.witness->second == mask_of({1, 2}));
    }
    SUBCASE("diamond: everything separates") {
        finite_lattice L = load_lattice("B2");
        CHECK(is_well_separated(L, separation_direction::upper).ok);
        CHECK(is_completely_separated(L).ok);
        CHECK(is_totally_separated(L).ok);
    }
    SUBCASE("M3: atoms separate totally") {
        finite_lattice L = load_lattice("M3");
        CHECK(is_completely_separated(L).ok);
        CHECK(is_totally_separated(L).ok);
    }
    SUBCASE("N5: nested side filters break complete separation") {
        finite_lattice L = load_lattice("N5");
        completely_separated_verdict c = is_completely_separated(L);
        CHECK_FALSE(c.ok);
        CHECK_FALSE(is_totally_separated(L).ok);
        CHECK(is_well_separated(L, separation_direction::upper).ok);
    }
}

TEST_CASE("totally separated implies completely separated on the corpus") {
    for (int n = 1; n <= 5; ++n)
        for (const finite_lattice& L : enumerate_lattices(n)) {
            if (is_totally_separated(L).ok)
                CHECK(is_completely_separated(L).ok);
        }
}
