#include "latrep/filters.hpp"

#include <algorithm>
#include <cassert>

namespace latrep {

namespace {

void guard_enumeration(const finite_lattice& L) {
    // Unreachable through build_lattice, which already caps the element
    // count at the mask width; kept as a defensive bound.
    if (L.n > 64)
        throw error("SizeGuard", "enumeration over " + std::to_string(L.n) +
                                     " elements refused");
}

std::vector<bool> characteristic_vector(const finite_lattice& L, mask_t F) {
    std::vector<bool> v(L.n);
    for (int i = 0; i < L.n; ++i) v[i] = has_bit(F, i);
    return v;
}

}  // namespace

bool is_filter(const finite_lattice& L, mask_t F) {
    if (F == 0 || F == full_mask(L.n)) return false;
    for (mask_t rest = F; rest;) {
        int a = lowest_bit(rest);
        rest &= rest - 1;
        if (!subset(L.up[a], F)) return false;
        for (mask_t rest2 = F; rest2;) {
            int b = lowest_bit(rest2);
            rest2 &= rest2 - 1;
            if (!has_bit(F, L.meet_of(a, b))) return false;
        }
    }
    return true;
}

bool is_ideal(const finite_lattice& L, mask_t I) {
    if (I == 0 || I == full_mask(L.n)) return false;
    for (mask_t rest = I; rest;) {
        int a = lowest_bit(rest);
        rest &= rest - 1;
        if (!subset(L.down[a], I)) return false;
        for (mask_t rest2 = I; rest2;) {
            int b = lowest_bit(rest2);
            rest2 &= rest2 - 1;
            if (!has_bit(I, L.join_of(a, b))) return false;
        }
    }
    return true;
}

bool is_prime_filter(const finite_lattice& L, mask_t F) {
    if (!is_filter(L, F)) return false;
    for (int a = 0; a < L.n; ++a)
        for (int b = a; b < L.n; ++b)
            if (has_bit(F, L.join_of(a, b)) && !has_bit(F, a) && !has_bit(F, b))
                return false;
    return true;
}

std::vector<mask_t> enumerate_filters(const finite_lattice& L) {
    guard_enumeration(L);
    // A nonempty meet-closed subset of a finite lattice contains the meet
    // of all its elements, so every filter is the principal up-set of its
    // minimum. Proper excludes the bottom's up-set (the whole lattice).
    std::vector<mask_t> out;
    for (int x = 0; x < L.n; ++x)
        if (x != L.bottom) out.push_back(L.up[x]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<mask_t> enumerate_ideals(const finite_lattice& L) {
    guard_enumeration(L);
    // Dually, every ideal is the principal down-set of its maximum.
    std::vector<mask_t> out;
    for (int x = 0; x < L.n; ++x)
        if (!L.top || x != *L.top) out.push_back(L.down[x]);
    std::sort(out.begin(), out.end());
    return out;
}

mask_t filter_generated_by(const finite_lattice& L, mask_t seed) {
    assert(seed != 0);
    mask_t F = seed;
    bool changed = true;
    while (changed) {
        changed = false;
        mask_t next = F;
        for (mask_t rest = F; rest;) {
            int a = lowest_bit(rest);
            rest &= rest - 1;
            next |= L.up[a];
            for (mask_t rest2 = F; rest2;) {
                int b = lowest_bit(rest2);
                rest2 &= rest2 - 1;
                next |= bit(L.meet_of(a, b));
            }
        }
        if (next != F) {
            F = next;
            changed = true;
        }
    }
    return F;
}

split_verdict is_semi_prime(const finite_lattice& L, mask_t F) {
    split_verdict v;
    for (int a = 0; a < L.n; ++a) {
        for (int b = 0; b < L.n; ++b) {
            if (!has_bit(F, L.join_of(a, b))) continue;
            if ((internal_elements(L, a, b).closed & F) == 0) {
                v.ok = false;
                v.witness = {a, b};
                return v;
            }
        }
    }
    return v;
}

split_verdict is_semi_prime_direct(const finite_lattice& L, mask_t F) {
    split_verdict v;
    for (int a = 0; a < L.n; ++a) {
        for (int b = 0; b < L.n; ++b) {
            if (!has_bit(F, L.join_of(a, b))) continue;
            if (has_bit(F, a) || has_bit(F, b)) continue;
            bool found = false;
            int ab = L.join_of(a, b);
            for (mask_t rest = F; rest && !found;) {
                int x = lowest_bit(rest);
                rest &= rest - 1;
                if (L.leq(x, ab) &&
                    L.join_of(L.meet_of(a, x), L.meet_of(b, x)) != x)
                    found = true;
            }
            if (!found) {
                v.ok = false;
                v.witness = {a, b};
                return v;
            }
        }
    }
    return v;
}

std::vector<mask_t> semiprime_filters(const finite_lattice& L) {
    std::vector<mask_t> out;
    for (mask_t F : enumerate_filters(L))
        if (is_semi_prime(L, F).ok) out.push_back(F);
    return out;
}

std::vector<mask_t> semiprime_space(const finite_lattice& L) {
    std::vector<mask_t> out = semiprime_filters(L);
    std::sort(out.begin(), out.end(), [&](mask_t A, mask_t B) {
        return characteristic_vector(L, A) < characteristic_vector(L, B);
    });
    return out;
}

mask_t extend_disjoint_filter(const finite_lattice& L, mask_t F, mask_t I) {
    if (!is_filter(L, F))
        throw error("InvalidInput", "extension base is not a filter");
    if (!is_ideal(L, I))
        throw error("InvalidInput", "extension bound is not an ideal");
    if (F & I) throw error("Overlap", "filter and ideal intersect");

    mask_t G = F;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < L.n; ++x) {
            if (has_bit(G, x)) continue;
            mask_t H = filter_generated_by(L, G | bit(x));
            if ((H & I) == 0) {
                G = H;
                grew = true;
                break;
            }
        }
    }
    for (int x = 0; x < L.n; ++x) {
        if (has_bit(G, x)) continue;
        assert(filter_generated_by(L, G | bit(x)) & I);
    }
    assert(is_filter(L, G));
    return G;
}

well_separated_verdict is_well_separated(const finite_lattice& L,
                                         separation_direction dir) {
    well_separated_verdict v;
    for (mask_t F : semiprime_filters(L)) {
        for (int x = 0; x < L.n; ++x) {
            if (has_bit(F, x)) continue;
            if (dir == separation_direction::lower && x == L.bottom) continue;
            bool found = false;
            for (mask_t rest = F; rest && !found;) {
                int y = lowest_bit(rest);
                rest &= rest - 1;
                bool related = dir == separation_direction::lower ? L.leq(x, y)
                                                                  : L.leq(y, x);
                if (!related) found = true;
            }
            if (!found) {
                v.ok = false;
                v.witness = {F, x};
                return v;
            }
        }
    }
    return v;
}

completely_separated_verdict is_completely_separated(const finite_lattice& L) {
    completely_separated_verdict v;
    auto sp = semiprime_filters(L);
    for (size_t i = 0; i < sp.size(); ++i) {
        for (size_t j = i + 1; j < sp.size(); ++j) {
            if (subset(sp[i], sp[j]) || subset(sp[j], sp[i])) {
                v.ok = false;
                v.witness = {sp[i], sp[j]};
                return v;
            }
        }
    }
    return v;
}

completely_separated_verdict is_totally_separated(const finite_lattice& L) {
    completely_separated_verdict v;
    auto sp = semiprime_filters(L);
    for (size_t i = 0; i < sp.size(); ++i) {
        for (size_t j = i + 1; j < sp.size(); ++j) {
            bool found = false;
            for (mask_t ra = sp[i]; ra && !found;) {
                int a = lowest_bit(ra);
                ra &= ra - 1;
                for (mask_t rb = sp[j]; rb && !found;) {
                    int b = lowest_bit(rb);
                    rb &= rb - 1;
                    if (L.meet_of(a, b) == L.bottom) found = true;
                }
            }
            if (!found) {
                v.ok = false;
                v.witness = {sp[i], sp[j]};
                return v;
            }
        }
    }
    return v;
}

}  // namespace latrep
