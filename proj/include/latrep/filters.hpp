#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "latrep/lattice.hpp"

namespace latrep {

// Filters and ideals are element masks. A filter is a nonempty, proper,
// up-closed, meet-closed subset; an ideal is the dual.

bool is_filter(const finite_lattice& L, mask_t F);
bool is_ideal(const finite_lattice& L, mask_t I);
bool is_prime_filter(const finite_lattice& L, mask_t F);

// All proper filters, listed by ascending characteristic bitmask. Every
// filter of a finite lattice is the principal up-set of its minimum (meet
// closure forces one), so enumeration is quadratic, not exponential
// (SizeGuard only defends the mask width).
std::vector<mask_t> enumerate_filters(const finite_lattice& L);
std::vector<mask_t> enumerate_ideals(const finite_lattice& L);

// Least filter containing the given nonempty set of elements, i.e. the
// up-closure of all finite meets. Never proper by construction alone; the
// caller checks properness if it matters (in a bounded lattice the closure
// is proper iff it misses the bottom).
mask_t filter_generated_by(const finite_lattice& L, mask_t seed);

// A filter F splits joins when a v b in F forces F to meet the closed
// internal-element set of (a,b). The verdict's witness is the first
// (a,b) pair (lexicographic) whose join lies in F while the closed
// internal set avoids F.
struct split_verdict {
    bool ok = true;
    std::optional<std::pair<int, int>> witness;
};

split_verdict is_semi_prime(const finite_lattice& L, mask_t F);

// Same predicate phrased element-wise (a in F, or b in F, or some internal
// element of (a,b) in F). Kept as an independent implementation; the two
// agree on every filter of every lattice.
split_verdict is_semi_prime_direct(const finite_lattice& L, mask_t F);

// Filters of enumerate_filters that are semi-prime, same listing order.
std::vector<mask_t> semiprime_filters(const finite_lattice& L);

// The Stone point space: semi-prime filters sorted by ascending
// lexicographic characteristic vector (chi_F(x0), chi_F(x1), ...).
std::vector<mask_t> semiprime_space(const finite_lattice& L);

// Extends a filter F disjoint from an ideal I to a maximal filter still
// disjoint from I (throws Overlap if F meets I, InvalidInput if F is not a
// filter or I not an ideal). Growth is deterministic: repeatedly adjoin the
// smallest-index element whose generated extension stays disjoint from I.
// The result is maximal disjoint, and in a loc lattice semi-prime.
mask_t extend_disjoint_filter(const finite_lattice& L, mask_t F, mask_t I);

enum class separation_direction { lower, upper };

// Well separated relative to its semi-prime filters: for every semi-prime F
// and x outside F (x != bottom in the lower reading), some y in F is not
// related to x in the chosen direction (lower: not x <= y; upper: not y <= x).
struct well_separated_verdict {
    bool ok = true;
    std::optional<std::pair<mask_t, int>> witness;  // (filter, element)
};

well_separated_verdict is_well_separated(const finite_lattice& L,
                                         separation_direction dir);

// Completely separated: distinct semi-prime filters are incomparable under
// inclusion. The witness is the first comparable pair.
struct completely_separated_verdict {
    bool ok = true;
    std::optional<std::pair<mask_t, mask_t>> witness;
};

completely_separated_verdict is_completely_separated(const finite_lattice& L);

// Totally separated: distinct semi-prime filters contain disjoint elements
// (some a in F, b in G with a ^ b = bottom). On loc lattices this coincides
// with complete separation.
completely_separated_verdict is_totally_separated(const finite_lattice& L);

}  // namespace latrep
