#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "latrep/bits.hpp"
#include "latrep/error.hpp"

namespace latrep {

// A finite family of subsets of a labelled ground set, canonically stored
// with members deduplicated and sorted by ascending characteristic bitmask.
// The empty set is an admissible member. Lattice structure under inclusion
// (when it exists) is tabulated: meet/join give member indices, -1 if the
// bound is missing in the family.
struct set_family {
    std::vector<std::string> ground;
    int n = 0;  // ground size
    std::vector<mask_t> members;

    bool lattice_ok = false;
    std::optional<std::tuple<int, int, bool>> lattice_witness;  // (i, j, meet?)
    std::vector<std::vector<int>> meet;  // member-index tables
    std::vector<std::vector<int>> join;

    int member_count() const { return static_cast<int>(members.size()); }
    int member_index(mask_t m) const;  // -1 if absent
    int point_index(const std::string& label) const;  // throws InvalidInput
};

set_family make_family(const std::vector<std::string>& ground,
                       const std::vector<std::vector<std::string>>& members);
set_family make_family_masks(const std::vector<std::string>& ground,
                             std::vector<mask_t> members);

// Local set-family check. Requires lattice structure first (error
// NotASetLattice with the witness pair). Conditions, scanned in order:
//   1: meets are intersections            (pairs, lexicographic)
//   2: overlapping joins are unions       (pairs, lexicographic)
//   3: of any three members, one lies under the join of the other two
//   4: pairwise incomparable B <= A v C implies B = (A v B) ^ (C v B)
struct loc_family_verdict {
    bool ok = true;
    std::string error_code;  // "NotASetLattice" when lattice structure fails
    int condition = 0;       // 1..4 when a condition fails
    std::vector<int> witness;  // member indices (2 or 3 of them)
};

loc_family_verdict is_loc_setfamily(const set_family& F);

// Point separation notions, each with its first witness:
//   separates: distinct points have distinct member sets (some member
//              contains exactly one of them)
//   completely: both orders — a member with x not y, and one with y not x
//   totally: disjoint members around x and y
//   well: separates, and for every member M and point x outside M some
//         member containing x is not contained in M
struct separation_profile {
    bool separates = true;
    std::optional<std::pair<int, int>> separates_witness;
    bool completely = true;
    std::optional<std::pair<int, int>> completely_witness;
    bool totally = true;
    std::optional<std::pair<int, int>> totally_witness;
    bool well = true;
    std::optional<std::pair<int, int>> well_witness;  // (member, point)
};

separation_profile separation(const set_family& F);

// Ternary betweenness: (a b c) holds when every member containing a and c
// also contains b. Symmetric in a and c.
bool ternary(const set_family& F, int a, int b, int c);

// Leader preorder: x leads y when every member containing x contains y.
// Rows are point masks: leads[x] = { y : x leads y }. Always reflexive.
struct leader_relation {
    int n = 0;
    std::vector<mask_t> leads;

    bool leads_to(int x, int y) const { return has_bit(leads[x], y); }
    bool independent(int x, int y) const {
        return x != y && !leads_to(x, y) && !leads_to(y, x);
    }
};

leader_relation leader_preorder(const set_family& F);

// Two points are completely separated exactly when neither leads the other.
bool completely_separated_pair(const set_family& F, int x, int y);
bool totally_separated_pair(const set_family& F, int x, int y);

// Greedy-by-index maximal independent subset of the covered points.
std::vector<int> maximal_independent_set(const set_family& F);

// One member per point containing it and excluding the others, preferring
// inclusion-minimal members and breaking ties by smallest member index.
// When no single member qualifies for some point, the intersection of the
// per-excluded-point minimal choices is looked up in the family. Returns
// nothing if a point cannot be represented.
std::optional<std::vector<int>> representative_family(
    const set_family& F, const std::vector<int>& points);

// Precomputed ternary table for the ordering pipeline.
struct ternary_table {
    int n = 0;
    std::vector<mask_t> rows;  // rows[a * n + b] = { c : (a b c) }
    bool holds(int a, int b, int c) const { return has_bit(rows[a * n + b], c); }
};

ternary_table make_ternary_table(const set_family& F);

}  // namespace latrep
