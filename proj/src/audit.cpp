#include "latrep/audit.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "latrep/ordering.hpp"

namespace latrep {

namespace {

bool incomparable(mask_t a, mask_t b) { return !subset(a, b) && !subset(b, a); }

}  // namespace

audit_report& audit_report::merge(audit_report other) {
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    return *this;
}

audit_report audit_member_laws(const set_family& F) {
    audit_report R;
    if (!F.lattice_ok) {
        R.failures.push_back({"not-a-set-lattice", {}});
        return R;
    }
    int m = F.member_count();
    auto jm = [&](int i, int j) { return F.members[F.join[i][j]]; };

    // join-cover-uniqueness, over unordered triples.
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                mask_t A = F.members[i], B = F.members[j], C = F.members[k];
                if (!A || !B || !C) continue;
                if (!incomparable(A, B) || !incomparable(A, C) ||
                    !incomparable(B, C))
                    continue;
                ++R.checks;
                int holds = (subset(A, jm(j, k)) ? 1 : 0) +
                            (subset(B, jm(i, k)) ? 1 : 0) +
                            (subset(C, jm(i, j)) ? 1 : 0);
                if (holds > 1)
                    R.failures.push_back({"join-cover-uniqueness", {i, j, k}});
            }

    // The remaining three laws have positional roles; scan ordered triples.
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                mask_t A = F.members[i], B = F.members[j], C = F.members[k];
                if (!A || !B || !C) continue;

                if (!(A & B) && !(A & C) && !(B & C) && (B & jm(i, k))) {
                    ++R.checks;
                    if (!subset(B, jm(i, k)))
                        R.failures.push_back(
                            {"disjoint-join-absorption", {i, j, k}});
                }
                if ((A & C) && (B & C)) {
                    ++R.checks;
                    if (!subset(jm(i, j) & ~(A | B), C))
                        R.failures.push_back({"join-surplus", {i, j, k}});
                }
                if ((C & (A & ~B)) && (C & (B & ~A))) {
                    ++R.checks;
                    if (!subset(A & B, C))
                        R.failures.push_back(
                            {"crossing-intersection", {i, j, k}});
                }
            }
    return R;
}

audit_report audit_betweenness_laws(const set_family& F) {
    audit_report R;
    if (!F.lattice_ok) {
        R.failures.push_back({"not-a-set-lattice", {}});
        return R;
    }
    int m = F.member_count();
    auto jm = [&](int i, int j) { return F.members[F.join[i][j]]; };

    // betweenness-totality over unordered point triples.
    for (int a = 0; a < F.n; ++a)
        for (int b = a + 1; b < F.n; ++b)
            for (int c = b + 1; c < F.n; ++c) {
                ++R.checks;
                if (!ternary(F, a, b, c) && !ternary(F, a, c, b) &&
                    !ternary(F, b, a, c))
                    R.failures.push_back({"betweenness-totality", {a, b, c}});
            }

    // representative-match over ordered triples of pairwise completely
    // separated points and every representative member triple.
    leader_relation lead = leader_preorder(F);
    for (int a = 0; a < F.n; ++a)
        for (int b = 0; b < F.n; ++b)
            for (int c = 0; c < F.n; ++c) {
                if (a == b || a == c || b == c) continue;
                if (!lead.independent(a, b) || !lead.independent(a, c) ||
                    !lead.independent(b, c))
                    continue;
                bool between = ternary(F, a, b, c);
                auto represents = [&](mask_t M, int inside, int out1,
                                      int out2) {
                    return has_bit(M, inside) && !has_bit(M, out1) &&
                           !has_bit(M, out2);
                };
                for (int i = 0; i < m; ++i) {
                    if (!represents(F.members[i], a, b, c)) continue;
                    for (int j = 0; j < m; ++j) {
                        if (!represents(F.members[j], b, a, c)) continue;
                        for (int k = 0; k < m; ++k) {
                            if (!represents(F.members[k], c, a, b)) continue;
                            ++R.checks;
                            if (subset(F.members[j], jm(i, k)) != between)
                                R.failures.push_back(
                                    {"representative-match",
                                     {a, b, c, i, j, k}});
                        }
                    }
                }
            }

    // separation-promotion: one family-level implication.
    if (is_loc_setfamily(F).ok) {
        separation_profile sep = separation(F);
        if (sep.completely) {
            ++R.checks;
            if (!sep.totally) {
                audit_failure f{"separation-promotion", {}};
                if (sep.totally_witness) {
                    f.witness.push_back(sep.totally_witness->first);
                    f.witness.push_back(sep.totally_witness->second);
                }
                R.failures.push_back(std::move(f));
            }
        }
    }
    return R;
}

audit_report audit_coherence_laws(const set_family& F) {
    audit_report R;
    if (!F.lattice_ok) {
        R.failures.push_back({"not-a-set-lattice", {}});
        return R;
    }
    if (F.n < 5) return R;
    auto jm = [&](int i, int j) { return F.members[F.join[i][j]]; };
    leader_relation lead = leader_preorder(F);

    // Unordered 5-subsets first; the canonical representative of a point
    // depends only on the point and its co-members, so one lookup serves
    // every arrangement of the subset.
    std::vector<int> sel;
    std::function<void(int)> choose = [&](int from) {
        if (sel.size() == 5) {
            for (size_t u = 0; u < 5; ++u)
                for (size_t v = u + 1; v < 5; ++v)
                    if (!lead.independent(sel[u], sel[v])) return;
            auto reps = representative_family(F, sel);
            if (!reps) return;

            std::array<int, 5> idx{0, 1, 2, 3, 4};
            std::sort(idx.begin(), idx.end());
            do {
                // Points (a,b,c,d,e) = sel[idx[0..4]], members likewise.
                int ia = (*reps)[idx[0]], ib = (*reps)[idx[1]],
                    ic = (*reps)[idx[2]], id = (*reps)[idx[3]],
                    ie = (*reps)[idx[4]];
                mask_t B = F.members[ib];
                mask_t C = F.members[ic];
                mask_t D = F.members[id];
                std::vector<int> pts = {sel[idx[0]], sel[idx[1]], sel[idx[2]],
                                        sel[idx[3]], sel[idx[4]]};

                ++R.checks;
                bool ex_l = subset(B, jm(ia, ic)) && subset(C, jm(ia, id));
                bool ex_r = subset(B, jm(ia, id)) && subset(C, jm(ib, id));
                if (ex_l != ex_r)
                    R.failures.push_back({"betweenness-exchange", pts});

                ++R.checks;
                bool sw_l = subset(B, jm(ia, ic)) && subset(D, jm(ib, ic));
                bool sw_r = subset(B, jm(ia, id)) && subset(D, jm(ia, ic));
                if (sw_l != sw_r)
                    R.failures.push_back({"betweenness-swap", pts});

                if (subset(B, jm(ia, ic)) && subset(D, jm(ib, ie))) {
                    ++R.checks;
                    if (!subset(B, jm(ic, id)) && !subset(B, jm(ia, ie)))
                        R.failures.push_back({"betweenness-fork", pts});
                }
            } while (std::next_permutation(idx.begin(), idx.end()));
            return;
        }
        for (int x = from; x < F.n; ++x) {
            sel.push_back(x);
            choose(x + 1);
            sel.pop_back();
        }
    };
    choose(0);
    return R;
}

audit_report audit_pipeline_laws(const set_family& F) {
    audit_report R;
    order_result res = build_consistent_order(F);
    R.checks += 2;
    for (const std::string& note : res.construction_notes) {
        if (note == "classified point not between its section sides")
            R.failures.push_back({"section-betweenness", {}});
        if (note == "two points straddle the same section")
            R.failures.push_back({"single-straddler", {}});
    }
    return R;
}

audit_report audit_family(const set_family& F) {
    audit_report R = audit_member_laws(F);
    R.merge(audit_betweenness_laws(F));
    R.merge(audit_coherence_laws(F));
    R.merge(audit_pipeline_laws(F));
    return R;
}

}  // namespace latrep
