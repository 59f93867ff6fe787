#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "latrep/set_family.hpp"

namespace latrep {

struct linear_order {
    std::vector<int> points;
};

// --- betweenness realization -------------------------------------------

// Failure to realize a ternary betweenness relation as a linear order,
// with the postulate number (1..3) and a witnessing triple.
struct realization_failure {
    int postulate = 0;
    std::array<int, 3> witness{-1, -1, -1};
};

using ternary_fn = std::function<bool(int, int, int)>;

// Realizes a symmetric betweenness relation on the given points as a linear
// order with exactly that betweenness, when one exists. Validates the
// classical postulates first:
//   1:  (a b a) only when a = b  (with the degenerate laws (a a b), (a b b))
//   2:  (a b c) and (b d e) imply (c b d) or (e b a)
//   3:  for all a,b,c: (a b c) or (b c a) or (c a b)
// then inserts points in index order, each at the first position keeping
// every placed triple exact. Of the two realizations the one whose first
// point has the smaller index is returned.
std::variant<linear_order, realization_failure> realize_betweenness(
    const std::vector<int>& points, const ternary_fn& T);

// Realizes the member-betweenness of a completely separated point set.
struct not_completely_separated {
    std::pair<int, int> witness;
};

std::variant<linear_order, realization_failure, not_completely_separated>
order_completely_separated(const set_family& F, const std::vector<int>& points);

// --- point classification over a base order ----------------------------

enum class point_type {
    interior_leader,      // leaders on both flanks of L(x)
    left_edge_leader,     // L(x) starts the base order
    right_edge_leader,    // L(x) ends the base order
    full_leader,          // L(x) is the whole base (deferred placement logic)
    follower_pair,        // two base points lead x
    follower_interior,    // one interior base point leads x
    follower_first,       // the first base point leads x
    follower_last         // the last base point leads x
};

// Where a point x outside the base order Y belongs relative to Y. The
// section is a cut of Y (0..|Y|): x lies between Y[cut-1] and Y[cut].
// Exceptional points cannot be placed this round; their cut is where the
// next round's insertion happens.
struct point_classification {
    int point = -1;
    point_type type = point_type::full_leader;
    std::vector<int> L;       // base points x leads, in base order
    std::vector<int> M;       // base points leading x, in base order
    std::vector<int> L1, L2;  // flank-visible parts of L
    int cut = 0;
    bool exceptional = false;
    bool ambiguous = false;
    std::string note;
};

point_classification classify_point(const set_family& F,
                                    const std::vector<int>& base, int x);

// --- staged construction ------------------------------------------------

// A partial solution: an ordered subset of the ground set plus a cut
// assignment for every point not yet placed.
struct consistent_triple {
    std::vector<int> order;
    std::vector<std::pair<int, int>> pending;  // (point, cut into order)
};

consistent_triple initial_triple(const set_family& F);

// Builds the triple over a caller-supplied base order (each remaining point
// classified against it).
consistent_triple triple_from_base(const set_family& F,
                                   const std::vector<int>& base);

struct ambiguous_case {
    std::string reason;
};

// One refinement round: every pending point group is ordered by the
// classification machinery and merged at its cut; points whose placement
// the theory defers get new cuts into the refined order.
std::variant<consistent_triple, ambiguous_case> extend_step(
    const set_family& F, const consistent_triple& t);

// --- full pipeline ------------------------------------------------------

// A linear order is consistent with the family when every member is convex
// in it. The witness is the first (by position triple, then member index)
// member with a hole.
struct consistency_verdict {
    bool ok = true;
    std::array<int, 3> witness{-1, -1, -1};  // points at positions i < j < k
    int member = -1;
};

consistency_verdict is_consistent(const set_family& F, const linear_order& o);

struct order_result {
    std::optional<linear_order> order;
    std::string error_code;  // "", "NotLoc", "NotSeparating"
    std::string error_detail;
    bool fallback_used = false;
    std::string fallback_reason;
    int rounds = 0;
    std::vector<std::string> construction_notes;  // lemma violations observed
};

// Synthesizes a member-convex linear order for a separating loc family by
// staged refinement, falling back to a pruned exhaustive search whenever the
// constructive theory is violated or leaves a case open. The result, when
// ok, always satisfies is_consistent.
order_result build_consistent_order(const set_family& F);

// Exhaustive baseline: first member-convex order in lexicographic position
// order, via depth-first insertion with convexity pruning. Works on any
// family; used as the fallback and the differential oracle.
std::optional<linear_order> search_consistent_order(const set_family& F);

// Extends a fixed prefix arrangement by the remaining points (ascending
// index, first workable position). Returns nothing if un-extendable.
std::optional<linear_order> search_order_extending(
    const set_family& F, const std::vector<int>& base);

}  // namespace latrep
