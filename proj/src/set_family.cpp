#include "latrep/set_family.hpp"

#include <algorithm>
#include <set>

namespace latrep {

int set_family::member_index(mask_t m) const {
    auto it = std::lower_bound(members.begin(), members.end(), m);
    if (it != members.end() && *it == m)
        return static_cast<int>(it - members.begin());
    return -1;
}

int set_family::point_index(const std::string& label) const {
    for (int i = 0; i < n; ++i)
        if (ground[i] == label) return i;
    throw error("InvalidInput", "unknown ground point label: " + label);
}

namespace {

void tabulate_lattice(set_family& F) {
    int m = F.member_count();
    F.lattice_ok = true;
    F.meet.assign(m, std::vector<int>(m, -1));
    F.join.assign(m, std::vector<int>(m, -1));
    for (int i = 0; i < m && F.lattice_ok; ++i) {
        for (int j = i; j < m; ++j) {
            mask_t lower_all = 0;
            int glb = -1;
            for (int k = 0; k < m; ++k)
                if (subset(F.members[k], F.members[i] & F.members[j]))
                    lower_all |= F.members[k];
            for (int k = 0; k < m; ++k)
                if (subset(F.members[k], F.members[i] & F.members[j]) &&
                    subset(lower_all, F.members[k]))
                    glb = k;
            if (glb == -1) {
                F.lattice_ok = false;
                F.lattice_witness = {i, j, true};
                break;
            }
            mask_t upper_common = full_mask(F.n);
            int lub = -1;
            for (int k = 0; k < m; ++k)
                if (subset(F.members[i] | F.members[j], F.members[k]))
                    upper_common &= F.members[k];
            for (int k = 0; k < m; ++k)
                if (subset(F.members[i] | F.members[j], F.members[k]) &&
                    subset(F.members[k], upper_common))
                    lub = k;
            if (lub == -1) {
                F.lattice_ok = false;
                F.lattice_witness = {i, j, false};
                break;
            }
            F.meet[i][j] = F.meet[j][i] = glb;
            F.join[i][j] = F.join[j][i] = lub;
        }
    }
    if (!F.lattice_ok) {
        F.meet.clear();
        F.join.clear();
    }
}

}  // namespace

set_family make_family_masks(const std::vector<std::string>& ground,
                             std::vector<mask_t> members) {
    int n = static_cast<int>(ground.size());
    if (n > max_mask_bits)
        throw error("InvalidInput", "more than 64 ground points are not supported");
    {
        std::set<std::string> seen;
        for (const auto& g : ground) {
            if (g.empty()) throw error("InvalidInput", "empty ground point label");
            if (!seen.insert(g).second)
                throw error("InvalidInput", "duplicate ground point label: " + g);
        }
    }
    for (mask_t m : members)
        if (!subset(m, full_mask(n)))
            throw error("InvalidInput", "member contains points outside the ground set");

    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) throw error("InvalidInput", "family has no members");

    set_family F;
    F.ground = ground;
    F.n = n;
    F.members = std::move(members);
    tabulate_lattice(F);
    return F;
}

set_family make_family(const std::vector<std::string>& ground,
                       const std::vector<std::vector<std::string>>& members) {
    std::vector<std::string> g = ground;
    std::vector<mask_t> ms;
    ms.reserve(members.size());
    for (const auto& member : members) {
        mask_t m = 0;
        for (const auto& label : member) {
            int idx = -1;
            for (int i = 0; i < static_cast<int>(g.size()); ++i)
                if (g[i] == label) idx = i;
            if (idx == -1)
                throw error("InvalidInput", "member uses unknown point label: " + label);
            m |= bit(idx);
        }
        ms.push_back(m);
    }
    return make_family_masks(g, std::move(ms));
}

loc_family_verdict is_loc_setfamily(const set_family& F) {
    loc_family_verdict v;
    if (!F.lattice_ok) {
        v.ok = false;
        v.error_code = "NotASetLattice";
        auto [i, j, is_meet] = *F.lattice_witness;
        v.witness = {i, j};
        v.condition = is_meet ? 1 : 2;
        return v;
    }
    int m = F.member_count();

    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
            if (F.members[F.meet[i][j]] != (F.members[i] & F.members[j])) {
                v.ok = false;
                v.condition = 1;
                v.witness = {i, j};
                return v;
            }

    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
            if ((F.members[i] & F.members[j]) &&
                F.members[F.join[i][j]] != (F.members[i] | F.members[j])) {
                v.ok = false;
                v.condition = 2;
                v.witness = {i, j};
                return v;
            }

    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                mask_t A = F.members[i], B = F.members[j], C = F.members[k];
                if (!subset(A, F.members[F.join[j][k]]) &&
                    !subset(B, F.members[F.join[i][k]]) &&
                    !subset(C, F.members[F.join[i][j]])) {
                    v.ok = false;
                    v.condition = 3;
                    v.witness = {i, j, k};
                    return v;
                }
            }

    auto incomparable = [&](int i, int j) {
        return !subset(F.members[i], F.members[j]) &&
               !subset(F.members[j], F.members[i]);
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                if (i == j || i == k || j == k) continue;
                if (!incomparable(i, j) || !incomparable(i, k) || !incomparable(j, k))
                    continue;
                if (!subset(F.members[j], F.members[F.join[i][k]])) continue;
                if (F.members[j] !=
                    (F.members[F.join[i][j]] & F.members[F.join[k][j]])) {
                    v.ok = false;
                    v.condition = 4;
                    v.witness = {i, j, k};
                    return v;
                }
            }
    return v;
}

separation_profile separation(const set_family& F) {
    separation_profile p;
    int m = F.member_count();

    for (int x = 0; x < F.n && p.separates; ++x)
        for (int y = x + 1; y < F.n && p.separates; ++y) {
            bool split = false;
            for (int i = 0; i < m && !split; ++i)
                if (has_bit(F.members[i], x) != has_bit(F.members[i], y)) split = true;
            if (!split) {
                p.separates = false;
                p.separates_witness = {x, y};
            }
        }

    for (int x = 0; x < F.n && p.completely; ++x)
        for (int y = x + 1; y < F.n && p.completely; ++y)
            if (!completely_separated_pair(F, x, y)) {
                p.completely = false;
                p.completely_witness = {x, y};
            }

    for (int x = 0; x < F.n && p.totally; ++x)
        for (int y = x + 1; y < F.n && p.totally; ++y)
            if (!totally_separated_pair(F, x, y)) {
                p.totally = false;
                p.totally_witness = {x, y};
            }

    if (!p.separates) {
        p.well = false;
        p.well_witness = p.separates_witness;
    } else {
        for (int i = 0; i < m && p.well; ++i)
            for (int x = 0; x < F.n && p.well; ++x) {
                if (has_bit(F.members[i], x)) continue;
                bool found = false;
                for (int j = 0; j < m && !found; ++j)
                    if (has_bit(F.members[j], x) &&
                        !subset(F.members[j], F.members[i]))
                        found = true;
                if (!found) {
                    p.well = false;
                    p.well_witness = {i, x};
                }
            }
    }
    return p;
}

bool ternary(const set_family& F, int a, int b, int c) {
    for (mask_t m : F.members)
        if (has_bit(m, a) && has_bit(m, c) && !has_bit(m, b)) return false;
    return true;
}

leader_relation leader_preorder(const set_family& F) {
    leader_relation R;
    R.n = F.n;
    R.leads.assign(F.n, 0);
    for (int x = 0; x < F.n; ++x) {
        // Vacuously full when no member covers x.
        mask_t common = full_mask(F.n);
        for (mask_t m : F.members)
            if (has_bit(m, x)) common &= m;
        R.leads[x] = common | bit(x);
    }
    return R;
}

bool completely_separated_pair(const set_family& F, int x, int y) {
    if (x == y) return false;
    bool x_not_y = false, y_not_x = false;
    for (mask_t m : F.members) {
        if (has_bit(m, x) && !has_bit(m, y)) x_not_y = true;
        if (has_bit(m, y) && !has_bit(m, x)) y_not_x = true;
    }
    return x_not_y && y_not_x;
}

bool totally_separated_pair(const set_family& F, int x, int y) {
    if (x == y) return false;
    for (mask_t a : F.members) {
        if (!has_bit(a, x) || has_bit(a, y)) continue;
        for (mask_t b : F.members)
            if (has_bit(b, y) && !has_bit(b, x) && (a & b) == 0) return true;
    }
    return false;
}

std::vector<int> maximal_independent_set(const set_family& F) {
    leader_relation R = leader_preorder(F);
    std::vector<int> Y;
    for (int x = 0; x < F.n; ++x) {
        bool ok = true;
        for (int y : Y)
            if (!R.independent(x, y)) ok = false;
        if (ok) Y.push_back(x);
    }
    return Y;
}

std::optional<std::vector<int>> representative_family(
    const set_family& F, const std::vector<int>& points) {
    int m = F.member_count();
    std::vector<int> out;
    out.reserve(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        mask_t exclude = 0;
        for (size_t j = 0; j < points.size(); ++j)
            if (j != i) exclude |= bit(points[j]);

        // Smallest-index inclusion-minimal member among those satisfying the
        // predicate "contains the point, avoids the excluded mask".
        auto minimal_choice = [&](int point, mask_t avoid) {
            std::vector<int> qualifiers;
            for (int k = 0; k < m; ++k)
                if (has_bit(F.members[k], point) && (F.members[k] & avoid) == 0)
                    qualifiers.push_back(k);
            for (int k : qualifiers) {
                bool minimal = true;
                for (int k2 : qualifiers)
                    if (k2 != k && subset(F.members[k2], F.members[k])) {
                        minimal = false;
                        break;
                    }
                if (minimal) return k;
            }
            return -1;
        };

        int best = minimal_choice(points[i], exclude);
        if (best == -1 && popcount(exclude) > 0) {
            // Intersect per-excluded-point minimal choices; a member equal to
            // the intersection exists in intersection-closed families.
            mask_t inter = full_mask(F.n);
            bool feasible = true;
            for (size_t j = 0; j < points.size() && feasible; ++j) {
                if (j == i) continue;
                int pick = minimal_choice(points[i], bit(points[j]));
                if (pick == -1)
                    feasible = false;
                else
                    inter &= F.members[pick];
            }
            if (feasible) {
                int k = F.member_index(inter);
                if (k != -1 && has_bit(F.members[k], points[i]) &&
                    (F.members[k] & exclude) == 0)
                    best = k;
            }
        }
        if (best == -1) return std::nullopt;
        out.push_back(best);
    }
    return out;
}

ternary_table make_ternary_table(const set_family& F) {
    ternary_table T;
    T.n = F.n;
    T.rows.assign(static_cast<size_t>(F.n) * F.n, 0);
    for (int a = 0; a < F.n; ++a) {
        for (int c = a; c < F.n; ++c) {
            mask_t common = full_mask(F.n);
            for (mask_t m : F.members)
                if (has_bit(m, a) && has_bit(m, c)) common &= m;
            // If no member holds both a and c, betweenness is vacuous.
            for (int b = 0; b < F.n; ++b)
                if (has_bit(common, b)) {
                    T.rows[a * F.n + b] |= bit(c);
                    T.rows[c * F.n + b] |= bit(a);
                }
        }
    }
    return T;
}

}  // namespace latrep
