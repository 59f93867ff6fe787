#include "latrep/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

namespace latrep {

namespace {

void spend(search_budget& b, std::uint64_t cost = 1) {
    if (b.max_nodes < cost)
        throw error("BudgetExceeded", "search budget exhausted");
    b.max_nodes -= cost;
}

}  // namespace

std::optional<linear_order> brute_force_order(const set_family& F,
                                              search_budget budget) {
    std::vector<int> perm(F.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        spend(budget);
        if (is_consistent(F, linear_order{perm}).ok) return linear_order{perm};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::uint64_t count_consistent_orders(const set_family& F,
                                      search_budget budget) {
    if (F.n == 0) return 1;
    std::vector<int> perm(F.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        spend(budget);
        if (is_consistent(F, linear_order{perm}).ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// --- representation search -------------------------------------------------

namespace {

struct rep_search {
    const finite_lattice& L;
    int npts;
    bool faithful;
    search_budget* budget;
    std::vector<mask_t> image;
    std::vector<mask_t> closed_internal;  // per pair (a*n+b)

    bool laws_hold(int e) {
        for (int a = 0; a <= e; ++a) {
            if (L.leq(a, e) != subset(image[a], image[e])) return false;
            if (L.leq(e, a) != subset(image[e], image[a])) return false;
            for (int b = a; b <= e; ++b) {
                int m = L.meet[a][b];
                if (m <= e && image[m] != (image[a] & image[b])) return false;
                int j = L.join[a][b];
                if (j <= e) {
                    mask_t ci = closed_internal[a * L.n + b];
                    if (subset(ci, full_mask(e + 1))) {
                        mask_t u = 0;
                        for (int x : mask_to_indices(ci)) u |= image[x];
                        if (image[j] != u) return false;
                        if (faithful) {
                            mask_t both = image[a] | image[b];
                            mask_t hull = 0;
                            if (both) {
                                int lo = lowest_bit(both), hi = highest_bit(both);
                                for (int i = lo; i <= hi; ++i) hull |= bit(i);
                            }
                            if (image[j] != hull) return false;
                        }
                    }
                }
            }
        }
        return true;
    }

    bool assign(int e) {
        if (e == L.n) return true;
        spend(*budget);
        auto try_mask = [&](mask_t m) {
            image[e] = m;
            return laws_hold(e) && assign(e + 1);
        };
        if (try_mask(0)) return true;
        for (int i = 0; i < npts; ++i)
            for (int j = i; j < npts; ++j) {
                mask_t m = 0;
                for (int q = i; q <= j; ++q) m |= bit(q);
                if (try_mask(m)) return true;
            }
        image[e] = 0;
        return false;
    }
};

}  // namespace

std::optional<std::vector<mask_t>> brute_force_representation(
    const finite_lattice& L, int npts, bool faithful, search_budget budget) {
    rep_search s{L, npts, faithful, &budget, std::vector<mask_t>(L.n, 0), {}};
    s.closed_internal.assign(static_cast<size_t>(L.n) * L.n, 0);
    for (int a = 0; a < L.n; ++a)
        for (int b = 0; b < L.n; ++b)
            s.closed_internal[a * L.n + b] = internal_elements(L, a, b).closed;
    if (s.assign(0)) return s.image;
    return std::nullopt;
}

// --- lattice enumeration ----------------------------------------------------

namespace {

// Down-sets (strict) per element over the elements placed so far.
struct poset_builder {
    int n;
    std::vector<mask_t> down;  // strict down-set masks
    std::vector<std::vector<mask_t>> results;  // canonical leq matrices

    bool leq(int a, int b) const { return a == b || has_bit(down[b], a); }

    // Meet of every pair involving the newest element must exist, and no
    // pair may acquire two incomparable minimal common upper bounds.
    bool consistent_after(int i) {
        for (int a = 0; a < i; ++a) {
            // Common lower bounds of i and a; i is never below a, so the
            // bound set lives entirely among earlier elements.
            mask_t lower = down[i] & (down[a] | bit(a));
            bool has_max = false;
            for (int c : mask_to_indices(lower))
                if (subset(lower, down[c] | bit(c))) has_max = true;
            if (!has_max) return false;  // the bottom always belongs, so
                                         // lower is nonempty and needs a max
        }
        int placed = i + 1;
        for (int a = 0; a < placed; ++a)
            for (int b = a + 1; b < placed; ++b) {
                std::vector<int> uppers;
                for (int c = 0; c < placed; ++c)
                    if (leq(a, c) && leq(b, c)) uppers.push_back(c);
                int minimal = 0;
                for (int c : uppers) {
                    bool min = true;
                    for (int d : uppers)
                        if (d != c && leq(d, c)) {
                            min = false;
                            break;
                        }
                    if (min) ++minimal;
                }
                // Two incomparable minimal upper bounds can never be fixed
                // later: new elements are never below existing ones.
                if (minimal > 1) return false;
            }
        return true;
    }

    void emit_if_complete() {
        std::vector<int> maximal;
        for (int a = 0; a < n; ++a) {
            bool max = true;
            for (int b = 0; b < n; ++b)
                if (b != a && leq(a, b)) max = false;
            if (max) maximal.push_back(a);
        }
        if (maximal.size() != 1) return;
        results.push_back(canonical_matrix());
    }

    // Lexicographically smallest row-major leq matrix over relabellings,
    // searched within (|down|, |up|) signature classes.
    std::vector<mask_t> canonical_matrix() {
        std::vector<std::pair<int, int>> sig(n);
        for (int a = 0; a < n; ++a) {
            int u = 0;
            for (int b = 0; b < n; ++b)
                if (leq(a, b)) ++u;
            sig[a] = {popcount(down[a]), u};
        }
        std::vector<mask_t> best;
        std::vector<int> perm(n, -1);
        std::vector<bool> used(n, false);
        auto matrix_for = [&]() {
            std::vector<mask_t> rows(n, 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (leq(perm[i], perm[j])) rows[i] |= bit(j);
            return rows;
        };
        // Search only relabellings that list elements in ascending signature
        // order: isomorphisms preserve signatures, so the minimum over these
        // is the same for isomorphic lattices.
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return sig[a] < sig[b]; });
        std::function<void(int)> rec = [&](int d) {
            if (d == n) {
                std::vector<mask_t> rows = matrix_for();
                if (best.empty() || rows < best) best = rows;
                return;
            }
            for (int a = 0; a < n; ++a) {
                if (used[a]) continue;
                if (sig[a] != sig[order[d]]) continue;
                perm[d] = a;
                used[a] = true;
                rec(d + 1);
                used[a] = false;
            }
        };
        rec(0);
        return best;
    }

    void grow(int i) {
        if (i == n) {
            emit_if_complete();
            return;
        }
        // Choose the strict down-set of element i: any down-closed subset of
        // the placed elements containing the bottom.
        mask_t limit = full_mask(i);
        for (mask_t D = 1; D <= limit; ++D) {
            if (!has_bit(D, 0)) continue;
            bool closed = true;
            for (int a : mask_to_indices(D))
                if (!subset(down[a], D)) closed = false;
            if (!closed) continue;
            down[i] = D;
            if (consistent_after(i)) grow(i + 1);
        }
        down[i] = 0;
    }
};

finite_lattice lattice_from_matrix(const std::vector<mask_t>& rows) {
    int n = static_cast<int>(rows.size());
    lattice_input in;
    for (int i = 0; i < n; ++i) in.elements.push_back("x" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !has_bit(rows[i], j)) continue;
            bool cover = true;
            for (int k = 0; k < n; ++k)
                if (k != i && k != j && has_bit(rows[i], k) && has_bit(rows[k], j))
                    cover = false;
            if (cover) in.covers.emplace_back(in.elements[i], in.elements[j]);
        }
    // The canonical order puts the unique minimum-signature element — the
    // bottom — in slot 0, so x0 is always the bottom here.
    return build_lattice(in);
}

}  // namespace

std::vector<finite_lattice> enumerate_lattices(int n) {
    if (n < 1 || n > 7)
        throw error("InvalidInput", "lattice enumeration supports 1..7 elements");
    if (n == 1) {
        lattice_input in;
        in.elements = {"x0"};
        return {build_lattice(in)};
    }
    poset_builder pb;
    pb.n = n;
    pb.down.assign(n, 0);
    pb.grow(1);  // element 0 is the bottom with empty strict down-set

    std::sort(pb.results.begin(), pb.results.end());
    pb.results.erase(std::unique(pb.results.begin(), pb.results.end()),
                     pb.results.end());

    std::vector<finite_lattice> out;
    out.reserve(pb.results.size());
    for (const auto& rows : pb.results) out.push_back(lattice_from_matrix(rows));
    return out;
}

// --- random generators ------------------------------------------------------

namespace {

mask_t interval_mask(int lo, int hi) {
    mask_t m = 0;
    for (int i = lo; i <= hi; ++i) m |= bit(i);
    return m;
}

// Intervals plus the empty set, closed under intersection and hull-join.
std::set<mask_t> close_intervals(std::set<mask_t> members, int npts) {
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<mask_t> cur(members.begin(), members.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j) {
                mask_t inter = cur[i] & cur[j];
                if (!members.count(inter)) {
                    members.insert(inter);
                    grew = true;
                }
                mask_t both = cur[i] | cur[j];
                mask_t hull =
                    both ? interval_mask(lowest_bit(both), highest_bit(both)) : 0;
                if (!members.count(hull)) {
                    members.insert(hull);
                    grew = true;
                }
            }
    }
    (void)npts;
    return members;
}

}  // namespace

sampled_lattice sample_interval_sublattice(int max_points, std::uint64_t seed) {
    if (max_points < 1 || max_points > 16)
        throw error("InvalidInput", "chain size must be 1..16");
    std::mt19937_64 rng(seed);
    int npts = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_points));
    int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(2 * npts));
    std::set<mask_t> members = {0};
    for (int t = 0; t < k; ++t) {
        int lo = static_cast<int>(rng() % static_cast<std::uint64_t>(npts));
        int hi = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(npts - lo));
        members.insert(interval_mask(lo, hi));
    }
    members = close_intervals(std::move(members), npts);

    std::vector<mask_t> sorted(members.begin(), members.end());
    lattice_input in;
    for (size_t i = 0; i < sorted.size(); ++i)
        in.elements.push_back("m" + std::to_string(i));
    for (size_t i = 0; i < sorted.size(); ++i)
        for (size_t j = 0; j < sorted.size(); ++j) {
            if (i == j || !subset(sorted[i], sorted[j])) continue;
            bool cover = true;
            for (size_t l = 0; l < sorted.size(); ++l)
                if (l != i && l != j && subset(sorted[i], sorted[l]) &&
                    subset(sorted[l], sorted[j]) && sorted[l] != sorted[i] &&
                    sorted[l] != sorted[j])
                    cover = false;
            if (cover) in.covers.emplace_back(in.elements[i], in.elements[j]);
        }

    sampled_lattice out;
    out.lattice = build_lattice(in);
    out.realization = sorted;
    out.points = npts;
    return out;
}

set_family random_separating_loc_family(int max_points, std::uint64_t seed) {
    if (max_points < 2 || max_points > 16)
        throw error("InvalidInput", "ground size must be 2..16");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        int n = 2 + static_cast<int>(rng() %
                                     static_cast<std::uint64_t>(max_points - 1));
        std::vector<int> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 0);
        for (int i = n - 1; i > 0; --i) {
            int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
            std::swap(sigma[i], sigma[j]);
        }
        int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(2 * n));
        std::set<mask_t> members;
        for (int t = 0; t < k; ++t) {
            int lo = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            int hi = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(n - lo));
            members.insert(interval_mask(lo, hi));
        }
        if (rng() % 2) members.insert(0);
        members = close_intervals(std::move(members), n);

        std::vector<mask_t> scrambled;
        for (mask_t m : members) {
            mask_t s = 0;
            for (int i : mask_to_indices(m)) s |= bit(sigma[i]);
            scrambled.push_back(s);
        }
        std::vector<std::string> ground;
        for (int i = 0; i < n; ++i) ground.push_back(std::to_string(i + 1));
        set_family F = make_family_masks(ground, std::move(scrambled));
        if (!separation(F).separates) continue;
        if (!is_loc_setfamily(F).ok) continue;  // defensive; holds by design
        return F;
    }
    throw error("InvalidInput", "failed to sample a separating family");
}

}  // namespace latrep
