#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "latrep/bits.hpp"
#include "latrep/error.hpp"

namespace latrep {

// A finite lattice with a bottom element. Elements are indexed 0..n-1 in the
// order their labels were supplied; the partial order is stored as closed
// up-sets / down-sets (mask per element) plus full meet / join tables.
struct finite_lattice {
    std::vector<std::string> labels;
    int n = 0;
    std::vector<mask_t> up;    // up[i]   = { j : i <= j }
    std::vector<mask_t> down;  // down[i] = { j : j <= i }
    std::vector<std::vector<int>> meet;
    std::vector<std::vector<int>> join;
    int bottom = -1;
    std::optional<int> top;

    bool leq(int a, int b) const { return has_bit(up[a], b); }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
    int meet_of(int a, int b) const { return meet[a][b]; }
    int join_of(int a, int b) const { return join[a][b]; }
    int index_of(const std::string& label) const;  // throws InvalidInput
};

using cover_list = std::vector<std::pair<std::string, std::string>>;

struct lattice_input {
    std::vector<std::string> elements;
    cover_list covers;
};

// Builds and fully validates a finite lattice from labels + cover pairs.
// Validation order: label sanity (InvalidInput), acyclicity (CyclicCovers),
// unique bottom (NoBottom), totality of meets and joins (NotALattice, with a
// witness pair in the message).
finite_lattice build_lattice(const lattice_input& in);

// Adds a fresh bottom element below everything and returns the modified
// input (used by the CLI's --adjoin-bottom flag). The new label is "0" when
// free, otherwise "bot", otherwise "bot_" + k.
lattice_input adjoin_bottom(const lattice_input& in);

// Internal elements of the pair (a,b): I(a,b) = { x : x <= a v b and
// (a ^ x) v (b ^ x) != x }. The closed variant adds a and b themselves.
struct internal_element_set {
    int a = -1;
    int b = -1;
    mask_t internal = 0;  // I(a,b)
    mask_t closed = 0;    // I(a,b) together with a and b
};

internal_element_set internal_elements(const finite_lattice& L, int a, int b);

// Local-structure check. Scans element triples (a,b,x) in lexicographic
// index order, testing for each triple condition 1, then 2, then 3:
//   1:  a <= b v x  or  b <= a v x  or  x <= a v b
//   2:  a,b,x pairwise incomparable and x <= a v b
//         implies (a v x) ^ (b v x) = x
//   3:  x <= a v b, a ^ x != 0, b ^ x != 0
//         implies (a ^ x) v (b ^ x) = x
// The first violated (triple, condition) is the witness.
struct loc_verdict {
    bool ok = true;
    int condition = 0;                   // 1..3 when !ok
    std::tuple<int, int, int> witness{-1, -1, -1};  // (a, b, x)
};

loc_verdict is_loc_lattice(const finite_lattice& L);

// Accessibility of an element from below/above by joins/meets of other
// elements. The empty witness set is not admitted by default; with
// allow_empty, join(∅)=bottom and meet(∅)=top count as witnesses.
struct accessibility {
    bool from_below = false;
    bool from_above = false;
};

accessibility element_accessibility(const finite_lattice& L, int a,
                                    bool allow_empty = false);

// A lattice interlocks when every element is either inaccessible from above
// or accessible from both sides.
struct interlock_verdict {
    bool ok = true;
    int witness = -1;
};

interlock_verdict is_interlocking(const finite_lattice& L,
                                  bool allow_empty = false);

}  // namespace latrep
