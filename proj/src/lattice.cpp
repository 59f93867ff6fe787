#include "latrep/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace latrep {

int finite_lattice::index_of(const std::string& label) const {
    for (int i = 0; i < n; ++i)
        if (labels[i] == label) return i;
    throw error("InvalidInput", "unknown element label: " + label);
}

namespace {

// Reflexive-transitive closure of the cover relation, as up-set masks.
std::vector<mask_t> close_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    std::vector<mask_t> up(n);
    for (int i = 0; i < n; ++i) up[i] = bit(i);
    for (auto [lo, hi] : covers) up[lo] |= bit(hi);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            mask_t m = up[i];
            for (mask_t rest = m; rest;) {
                int j = lowest_bit(rest);
                rest &= rest - 1;
                m |= up[j];
            }
            if (m != up[i]) {
                up[i] = m;
                changed = true;
            }
        }
    }
    return up;
}

}  // namespace

finite_lattice build_lattice(const lattice_input& in) {
    const auto& labels = in.elements;
    int n = static_cast<int>(labels.size());
    if (n == 0) throw error("InvalidInput", "element list is empty");
    if (n > max_mask_bits)
        throw error("InvalidInput", "more than 64 elements are not supported");
    {
        std::set<std::string> seen;
        for (const auto& l : labels) {
            if (l.empty()) throw error("InvalidInput", "empty element label");
            if (!seen.insert(l).second)
                throw error("InvalidInput", "duplicate element label: " + l);
        }
    }

    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) index[labels[i]] = i;

    std::vector<std::pair<int, int>> covers;
    covers.reserve(in.covers.size());
    for (const auto& [lo, hi] : in.covers) {
        auto a = index.find(lo), b = index.find(hi);
        if (a == index.end())
            throw error("InvalidInput", "cover references unknown label: " + lo);
        if (b == index.end())
            throw error("InvalidInput", "cover references unknown label: " + hi);
        if (a->second == b->second)
            throw error("CyclicCovers", "cover pair relates " + lo + " to itself");
        covers.emplace_back(a->second, b->second);
    }

    finite_lattice L;
    L.labels = labels;
    L.n = n;
    L.up = close_covers(n, covers);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && has_bit(L.up[i], j) && has_bit(L.up[j], i))
                throw error("CyclicCovers", "cover cycle through " + labels[i] +
                                                " and " + labels[j]);

    L.down.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (has_bit(L.up[j], i)) L.down[i] |= bit(j);

    int bottom = -1;
    for (int i = 0; i < n; ++i)
        if (L.down[i] == bit(i)) {
            if (bottom != -1)
                throw error("NoBottom", "no least element: " + labels[bottom] +
                                            " and " + labels[i] + " are both minimal");
            bottom = i;
        }
    assert(bottom != -1);  // an acyclic finite order always has a minimal element
    if (L.up[bottom] != full_mask(n))
        throw error("NoBottom", "minimal element " + labels[bottom] +
                                    " is not below every element");
    L.bottom = bottom;

    for (int i = 0; i < n; ++i)
        if (L.up[i] == bit(i)) {
            if (L.down[i] == full_mask(n)) L.top = i;
        }

    L.meet.assign(n, std::vector<int>(n, -1));
    L.join.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            mask_t lower = L.down[a] & L.down[b];
            int glb = -1;
            for (mask_t rest = lower; rest;) {
                int c = lowest_bit(rest);
                rest &= rest - 1;
                if (subset(lower, L.down[c])) {
                    glb = c;
                    break;
                }
            }
            if (glb == -1)
                throw error("NotALattice", "elements " + labels[a] + " and " +
                                               labels[b] + " have no meet");
            mask_t upper = L.up[a] & L.up[b];
            int lub = -1;
            for (mask_t rest = upper; rest;) {
                int c = lowest_bit(rest);
                rest &= rest - 1;
                if (subset(upper, L.up[c])) {
                    lub = c;
                    break;
                }
            }
            if (lub == -1)
                throw error("NotALattice", "elements " + labels[a] + " and " +
                                               labels[b] + " have no join");
            L.meet[a][b] = L.meet[b][a] = glb;
            L.join[a][b] = L.join[b][a] = lub;
        }
    }
    return L;
}

lattice_input adjoin_bottom(const lattice_input& in) {
    std::set<std::string> used(in.elements.begin(), in.elements.end());
    std::string fresh = "0";
    if (used.count(fresh)) fresh = "bot";
    for (int k = 0; used.count(fresh); ++k) fresh = "bot_" + std::to_string(k);

    lattice_input out;
    out.elements.push_back(fresh);
    out.elements.insert(out.elements.end(), in.elements.begin(), in.elements.end());
    out.covers = in.covers;

    // Cover exactly the minimal elements of the given order.
    std::map<std::string, int> index;
    int n = static_cast<int>(in.elements.size());
    for (int i = 0; i < n; ++i) index[in.elements[i]] = i;
    std::vector<bool> has_lower(n, false);
    for (const auto& [lo, hi] : in.covers) {
        auto it = index.find(hi);
        if (it != index.end()) has_lower[it->second] = true;
    }
    for (int i = 0; i < n; ++i)
        if (!has_lower[i]) out.covers.emplace_back(fresh, in.elements[i]);
    return out;
}

internal_element_set internal_elements(const finite_lattice& L, int a, int b) {
    internal_element_set out;
    out.a = a;
    out.b = b;
    int ab = L.join_of(a, b);
    for (int x = 0; x < L.n; ++x) {
        if (!L.leq(x, ab)) continue;
        int rebuilt = L.join_of(L.meet_of(a, x), L.meet_of(b, x));
        if (rebuilt != x) out.internal |= bit(x);
    }
    out.closed = out.internal | bit(a) | bit(b);
    return out;
}

loc_verdict is_loc_lattice(const finite_lattice& L) {
    loc_verdict v;
    for (int a = 0; a < L.n; ++a) {
        for (int b = 0; b < L.n; ++b) {
            for (int x = 0; x < L.n; ++x) {
                if (!L.leq(a, L.join_of(b, x)) && !L.leq(b, L.join_of(a, x)) &&
                    !L.leq(x, L.join_of(a, b))) {
                    v.ok = false;
                    v.condition = 1;
                    v.witness = {a, b, x};
                    return v;
                }
                if (!L.comparable(a, b) && !L.comparable(a, x) &&
                    !L.comparable(b, x) && L.leq(x, L.join_of(a, b))) {
                    if (L.meet_of(L.join_of(a, x), L.join_of(b, x)) != x) {
                        v.ok = false;
                        v.condition = 2;
                        v.witness = {a, b, x};
                        return v;
                    }
                }
                if (L.leq(x, L.join_of(a, b)) && L.meet_of(a, x) != L.bottom &&
                    L.meet_of(b, x) != L.bottom) {
                    if (L.join_of(L.meet_of(a, x), L.meet_of(b, x)) != x) {
                        v.ok = false;
                        v.condition = 3;
                        v.witness = {a, b, x};
                        return v;
                    }
                }
            }
        }
    }
    return v;
}

accessibility element_accessibility(const finite_lattice& L, int a,
                                    bool allow_empty) {
    accessibility acc;

    mask_t strictly_below = L.down[a] & ~bit(a);
    if (strictly_below) {
        int j = L.bottom;
        for (mask_t rest = strictly_below; rest;) {
            int x = lowest_bit(rest);
            rest &= rest - 1;
            j = L.join_of(j, x);
        }
        acc.from_below = (j == a);
    } else if (allow_empty) {
        acc.from_below = (a == L.bottom);
    }

    mask_t strictly_above = L.up[a] & ~bit(a);
    if (strictly_above) {
        int m = -1;
        for (mask_t rest = strictly_above; rest;) {
            int x = lowest_bit(rest);
            rest &= rest - 1;
            m = (m == -1) ? x : L.meet_of(m, x);
        }
        acc.from_above = (m == a);
    } else if (allow_empty) {
        acc.from_above = L.top && *L.top == a;
    }

    return acc;
}

interlock_verdict is_interlocking(const finite_lattice& L, bool allow_empty) {
    interlock_verdict v;
    for (int a = 0; a < L.n; ++a) {
        accessibility acc = element_accessibility(L, a, allow_empty);
        if (acc.from_above && !acc.from_below) {
            v.ok = false;
            v.witness = a;
            return v;
        }
    }
    return v;
}

}  // namespace latrep
