#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latrep/lattice.hpp"
#include "latrep/ordering.hpp"
#include "latrep/set_family.hpp"

namespace latrep {

// Bounds for exhaustive searches; exceeding one throws BudgetExceeded.
struct search_budget {
    std::uint64_t max_nodes = 50'000'000;
};

// First member-convex order in lexicographic sequence order (permutations of
// point indices enumerated ascending), or nothing.
std::optional<linear_order> brute_force_order(const set_family& F,
                                              search_budget budget = {});

// Number of member-convex linear orders.
std::uint64_t count_consistent_orders(const set_family& F,
                                      search_budget budget = {});

// Backtracking search for a representation of L by intervals of an abstract
// npts-point chain: images are assigned in element-index order, candidates
// empty-first then intervals [i, j] in lexicographic order, pruned by the
// embedding, meet, and internal-join laws (plus the hull law when faithful).
// Returns per-element interval masks over chain positions 0..npts-1.
std::optional<std::vector<mask_t>> brute_force_representation(
    const finite_lattice& L, int npts, bool faithful,
    search_budget budget = {});

// All lattices with n elements (n <= 7), one per isomorphism class, in a
// deterministic canonical order. Element labels are "x0".."x{n-1}" with
// x0 the bottom.
std::vector<finite_lattice> enumerate_lattices(int n);

// A random sublattice of the intervals of a chain with at most max_points
// points: random intervals plus the empty set, closed under intersection
// and hull-join, returned as an abstract lattice plus its realization.
struct sampled_lattice {
    finite_lattice lattice;
    std::vector<mask_t> realization;  // per element, interval over the chain
    int points = 0;
};

sampled_lattice sample_interval_sublattice(int max_points, std::uint64_t seed);

// A random separating loc family: an interval family of a hidden chain with
// at most max_points points, scrambled by a hidden permutation. Resamples
// deterministically from the same stream until the family separates.
set_family random_separating_loc_family(int max_points, std::uint64_t seed);

}  // namespace latrep
