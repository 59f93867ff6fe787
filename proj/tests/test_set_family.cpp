#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <vector>

#include "helpers.hpp"
#include "latrep/oracle.hpp"
#include "latrep/set_family.hpp"

using namespace latrep;
using namespace latrep::testing;

TEST_CASE("families are canonicalized: deduplicated, mask-sorted") {
    set_family F = make_family({"1", "2", "3"},
                               {{"3"}, {"1", "2"}, {"3"}, {}, {"2", "1"}});
    CHECK(F.n == 3);
    CHECK(F.members == std::vector<mask_t>{0, mask_of({0, 1}), mask_of({2})});
    CHECK(F.member_index(mask_of({2})) == 2);
    CHECK(F.member_index(mask_of({0})) == -1);
    CHECK(F.point_index("2") == 1);
    CHECK_THROWS_AS(F.point_index("9"), const error&);
    CHECK_THROWS_AS(make_family({"1", "1"}, {}), const error&);
    CHECK_THROWS_AS(make_family({"1"}, {{"7"}}), const error&);
}

TEST_CASE("inclusion lattice structure of the fixtures") {
    SUBCASE("interval family is a lattice") {
        set_family F = load_family("FAM-INT");
        REQUIRE(F.lattice_ok);
        int whole = F.member_index(mask_of({0, 1, 2}));
        int left = F.member_index(mask_of({0, 1}));
        int right = F.member_index(mask_of({1, 2}));
        int mid = F.member_index(mask_of({1}));
        CHECK(F.join[left][right] == whole);
        CHECK(F.meet[left][right] == mid);
    }
    SUBCASE("triangle family has no meets") {
        set_family F = load_family("FAM-TRIANGLE");
        REQUIRE_FALSE(F.lattice_ok);
        REQUIRE(F.lattice_witness.has_value());
        auto [i, j, is_meet] = *F.lattice_witness;
        CHECK(i == 0);
        CHECK(j == 1);
        CHECK(is_meet);
    }
}

TEST_CASE("local set-family conditions") {
    SUBCASE("fixtures satisfying all four") {
        for (const char* name :
             {"FAM-CHAIN", "FAM-INT", "FAM-FIVE", "FAM-CENTER"}) {
            set_family F = load_family(name);
            CAPTURE(name);
            CHECK(is_loc_setfamily(F).ok);
        }
    }
    SUBCASE("missing lattice structure is its own failure code") {
        set_family F = load_family("FAM-TRIANGLE");
        loc_family_verdict v = is_loc_setfamily(F);
        REQUIRE_FALSE(v.ok);
        CHECK(v.error_code == "NotASetLattice");
    }
    SUBCASE("meets must be intersections") {
        // {1,2} ^ {2,3} = {2} in the inclusion order, but their
        // intersection {2} is absent: bottom {} is the family meet.
        set_family F = make_family({"1", "2", "3"},
                                   {{}, {"1", "2"}, {"2", "3"},
                                    {"1", "2", "3"}});
        loc_family_verdict v = is_loc_setfamily(F);
        REQUIRE_FALSE(v.ok);
        CHECK(v.condition == 1);
    }
    SUBCASE("overlapping joins must be unions") {
        // {1,2} v {2,3} jumps to {1,2,3,4}, past the union {1,2,3}.
        set_family F = make_family({"1", "2", "3", "4"},
                                   {{}, {"2"}, {"1", "2"}, {"2", "3"},
                                    {"1", "2", "3", "4"}});
        loc_family_verdict v = is_loc_setfamily(F);
        REQUIRE_FALSE(v.ok);
        CHECK(v.condition == 2);
    }
    SUBCASE("some member of a triple lies under the join of the others") {
        set_family F = load_family("FAM-CENTER");
        CHECK(is_loc_setfamily(F).ok);  // {2} under {1,2} v {2,3}
    }
}

TEST_CASE("betweenness relation on the interval family") {
    set_family F = load_family("FAM-INT");
    int p1 = F.point_index("1"), p2 = F.point_index("2"),
        p3 = F.point_index("3");
    CHECK(ternary(F, p1, p2, p3));
    CHECK(ternary(F, p3, p2, p1));  // symmetric in the outer pair
    CHECK_FALSE(ternary(F, p2, p1, p3));
    CHECK_FALSE(ternary(F, p1, p3, p2));
    CHECK(ternary(F, p1, p1, p3));       // degenerate: endpoint between
    CHECK_FALSE(ternary(F, p1, p2, p1));  // {1} contains 1 but not 2
}

TEST_CASE("ternary truth table matches the definition") {
    for (const char* name :
         {"FAM-CHAIN", "FAM-INT", "FAM-FIVE", "FAM-CENTER", "FAM-TRIANGLE"}) {
        set_family F = load_family(name);
        ternary_table T = make_ternary_table(F);
        for (int a = 0; a < F.n; ++a)
            for (int b = 0; b < F.n; ++b)
                for (int c = 0; c < F.n; ++c) {
                    CAPTURE(name);
                    CHECK(T.holds(a, b, c) == ternary(F, a, b, c));
                }
    }
}

TEST_CASE("leader preorder and independence") {
    SUBCASE("chain family: a leader tower") {
        set_family F = load_family("FAM-CHAIN");
        leader_relation R = leader_preorder(F);
        int p1 = F.point_index("1"), p2 = F.point_index("2"),
            p3 = F.point_index("3");
        CHECK(R.leads_to(p3, p2));
        CHECK(R.leads_to(p3, p1));
        CHECK(R.leads_to(p2, p1));
        CHECK_FALSE(R.leads_to(p1, p2));
        CHECK_FALSE(R.independent(p1, p2));
        CHECK(maximal_independent_set(F) == std::vector<int>{p1});
    }
    SUBCASE("interval family: all points independent") {
        set_family F = load_family("FAM-INT");
        leader_relation R = leader_preorder(F);
        CHECK(R.independent(0, 1));
        CHECK(R.independent(1, 2));
        CHECK(R.independent(0, 2));
        CHECK(maximal_independent_set(F) == std::vector<int>{0, 1, 2});
    }
    SUBCASE("five points: the independent triple skips the seconds") {
        set_family F = load_family("FAM-FIVE");
        CHECK(maximal_independent_set(F) ==
              std::vector<int>{F.point_index("1"), F.point_index("3"),
                               F.point_index("5")});
    }
}

TEST_CASE("complete and total separation of point pairs") {
    set_family F = load_family("FAM-FIVE");
    int p1 = F.point_index("1"), p2 = F.point_index("2"),
        p4 = F.point_index("4");
    CHECK(completely_separated_pair(F, p2, p4));
    CHECK_FALSE(completely_separated_pair(F, p1, p2));  // 2 leads 1
    CHECK(totally_separated_pair(F, p1, p4));           // {1} vs {3,4,5}
    CHECK_FALSE(totally_separated_pair(F, p2, p4));     // every pair meets
}

TEST_CASE("separation profile of the fixtures") {
    SUBCASE("chain family separates but not completely") {
        separation_profile p = separation(load_family("FAM-CHAIN"));
        CHECK(p.separates);
        CHECK_FALSE(p.completely);
        REQUIRE(p.completely_witness.has_value());
    }
    SUBCASE("interval family: every grade") {
        separation_profile p = separation(load_family("FAM-INT"));
        CHECK(p.separates);
        CHECK(p.completely);
        CHECK(p.totally);
        CHECK(p.well);
    }
    SUBCASE("a non-separating family") {
        set_family F = make_family({"1", "2"}, {{"1", "2"}});
        separation_profile p = separation(F);
        CHECK_FALSE(p.separates);
        REQUIRE(p.separates_witness.has_value());
        CHECK(*p.separates_witness == std::pair<int, int>{0, 1});
    }
    SUBCASE("totally implies completely on the fixtures") {
        for (const char* name :
             {"FAM-CHAIN", "FAM-INT", "FAM-FIVE", "FAM-CENTER"}) {
            separation_profile p = separation(load_family(name));
            if (p.totally) CHECK(p.completely);
        }
    }
}

TEST_CASE("representative members for the pipeline") {
    SUBCASE("independent points get their singletons") {
        set_family F = load_family("FAM-INT");
        auto reps = representative_family(F, {0, 1, 2});
        REQUIRE(reps.has_value());
        CHECK(F.members[(*reps)[0]] == mask_of({0}));
        CHECK(F.members[(*reps)[1]] == mask_of({1}));
        CHECK(F.members[(*reps)[2]] == mask_of({2}));
    }
    SUBCASE("a led point has no representative") {
        set_family F = load_family("FAM-CHAIN");
        int p1 = F.point_index("1"), p2 = F.point_index("2");
        // every member with 2 contains 1: no member isolates 2 from 1.
        CHECK_FALSE(representative_family(F, {p1, p2}).has_value());
    }
    SUBCASE("five points, outer triple") {
        set_family F = load_family("FAM-FIVE");
        std::vector<int> pts = {F.point_index("1"), F.point_index("3"),
                                F.point_index("5")};
        auto reps = representative_family(F, pts);
        REQUIRE(reps.has_value());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            mask_t m = F.members[(*reps)[i]];
            CHECK(has_bit(m, pts[i]));
            for (std::size_t j = 0; j < pts.size(); ++j)
                if (j != i) CHECK_FALSE(has_bit(m, pts[j]));
        }
    }
}

TEST_CASE("random families are deterministic and within bounds") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        set_family a = random_separating_loc_family(6, seed);
        set_family b = random_separating_loc_family(6, seed);
        CHECK(a.ground == b.ground);
        CHECK(a.members == b.members);
        CHECK(a.n <= 6);
        CHECK(a.n >= 2);
        CHECK(separation(a).separates);
        CHECK(is_loc_setfamily(a).ok);
    }
    set_family x = random_separating_loc_family(6, 1);
    set_family y = random_separating_loc_family(6, 2);
    CHECK((x.n != y.n || x.members != y.members));  // streams differ
}
